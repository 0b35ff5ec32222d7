import pytest

from terracini.grammar import build_spec
from terracini.poly import Poly
from terracini.sampling import SampleConfig, SamplingError
from terracini.secant import (
    defect_profile,
    drop_sequence_direct,
    first_differences,
    frame_points,
    identity_substitution,
    join_dimension,
    point_substitution,
    relative_dimensions,
    second_differences,
    secant_dimension,
    secant_dimension_by_join,
    tangent_frame,
    tangent_variety_dimension,
    tangential_projection,
    vertex_dimension,
)
from terracini.varieties import (
    ambient_span_dim,
    cone_over,
    is_linear,
    linear_space,
    pluecker_lines,
    point_spec,
    project_from_point,
    projective_dimension,
    scroll,
    segre,
    veronese,
)

from sym_oracle import scroll_exprs, secant_dims, veronese_exprs


def test_secant_dimension_examples(cfg):
    assert secant_dimension(veronese(2, 2), 1, cfg) == 4
    assert secant_dimension(segre(1, 1), 1, cfg) == 3
    assert secant_dimension(pluecker_lines(5), 2, cfg) == 14
    assert secant_dimension(veronese(3, 2), 0, cfg) == 3


def test_secant_dimension_negative_k(cfg):
    with pytest.raises(ValueError):
        secant_dimension(veronese(2, 2), -1, cfg)


def test_defect_profile_veronese_3fold(cfg):
    p = defect_profile(veronese(3, 2), cfg)
    assert (p.n, p.N, p.k0, p.delta, p.zeta) == (3, 9, 3, (1, 3, 6), (1, 1, 1))
    assert p.fiber_dims == p.entry_locus_dims == (1, 2, 3)
    assert (p.prime, p.samples, p.seed) == (cfg.prime, cfg.samples, cfg.seed)


def test_defect_profile_segre(cfg):
    p = defect_profile(segre(2, 2), cfg)
    assert (p.n, p.N, p.k0, p.delta, p.zeta) == (4, 8, 2, (2, 6), (2, 2))


def test_scroll_profile_against_char0_oracle(cfg):
    # sympy ranks over Q at integer points; shares no code with the package
    exprs, vs = scroll_exprs(1, 4)
    dims = secant_dims(exprs, vs, span=6)
    assert dims == [2, 5, 6]
    p = defect_profile(scroll(1, 4), cfg)
    assert list(p.secant_dims) == dims
    assert (p.n, p.N, p.k0, p.delta, p.zeta) == (2, 6, 2, (0, 2), (0, 2))


def test_veronese_profile_against_char0_oracle(cfg):
    exprs, vs = veronese_exprs(2, 2)
    assert secant_dims(exprs, vs, span=5) == list(defect_profile(veronese(2, 2), cfg).secant_dims)


def test_linear_variety_profile(cfg):
    p = defect_profile(veronese(3, 1), cfg)
    assert (p.n, p.N, p.k0, p.delta, p.zeta) == (3, 3, 0, (), ())


def test_degenerate_input_is_reduced(cfg):
    x = veronese(2, 2)
    dup = type(x)(type(x.map)(x.map.coords + (x.map.coords[1],), x.map.groups), "dup", "explicit:dup")
    p = defect_profile(dup, cfg)
    assert p.reduced and (p.N, p.delta) == (5, (1, 3))


def test_sequence_helpers():
    assert second_differences((1, 3, 6)) == (1, 1, 1)
    assert second_differences((0, 2)) == (0, 2)
    assert first_differences((1, 3, 6)) == (1, 2, 3)


def test_tangential_projection_veronese(cfg):
    x1 = tangential_projection(veronese(3, 2), 1, cfg)
    assert ambient_span_dim(x1, cfg) == 5 and projective_dimension(x1, cfg) == 2
    p, q = defect_profile(x1, cfg), defect_profile(veronese(2, 2), cfg)
    assert (p.n, p.N, p.k0, p.delta, p.zeta) == (q.n, q.N, q.k0, q.delta, q.zeta)


def test_tangential_projection_scroll_is_a_cone(cfg):
    x1 = tangential_projection(scroll(1, 4), 1, cfg)
    assert x1.ncoords == 4
    assert projective_dimension(x1, cfg) == 2
    assert vertex_dimension(x1, cfg) == 0


def test_tangential_projection_at_k0_is_linear(cfg):
    assert is_linear(tangential_projection(segre(2, 2), 2, cfg), cfg)


def test_tangential_projection_coordinate_count(cfg):
    x = pluecker_lines(5)
    p = defect_profile(x, cfg)
    for k in (1, 2):
        assert tangential_projection(x, k, cfg).ncoords == p.N + 1 - (p.secant_dims[k - 1] + 1)


def test_tangential_projection_range(cfg):
    with pytest.raises(ValueError):
        tangential_projection(segre(2, 2), 3, cfg)
    with pytest.raises(ValueError):
        tangential_projection(segre(2, 2), 0, cfg)


def test_tangential_projection_reuses_profile_points(cfg):
    x = veronese(3, 2)
    frame = tangent_frame(x, frame_points(x, cfg, 2))
    p = defect_profile(x, cfg)
    assert frame.rank - 1 == p.secant_dims[1]
    assert tangential_projection(x, 2, cfg).ncoords == x.ncoords - frame.rank


def test_tangent_frame_rank_monotone(cfg):
    x = segre(2, 3)
    pts = frame_points(x, cfg, 4)
    ranks = [tangent_frame(x, pts[:i]).rank for i in range(1, 5)]
    assert ranks == sorted(ranks)


def test_drop_sequence_examples(cfg):
    assert drop_sequence_direct(veronese(4, 2), cfg) == (1, 1, 1, 1)
    assert drop_sequence_direct(pluecker_lines(5), cfg) == (4, 4)
    assert drop_sequence_direct(project_from_point(veronese(3, 2), "general", cfg), cfg) == (1, 1)
    assert drop_sequence_direct(veronese(2, 1), cfg) == ()


def test_join_dimension_examples(cfg):
    v = veronese(2, 2)
    assert join_dimension(v, v, cfg) == secant_dimension(v, 1, cfg)
    pt = point_spec(v.map.value_at([3, 5, 7]))
    assert join_dimension(pt, v, cfg) == 3
    e = [[int(i == j) for j in range(6)] for i in range(6)]
    assert join_dimension(linear_space(e[:3]), linear_space(e[3:]), cfg) == 5


def test_join_ambient_mismatch(cfg):
    with pytest.raises(ValueError):
        join_dimension(veronese(2, 2), veronese(1, 2), cfg)


def test_tangent_variety_dimension(cfg):
    assert tangent_variety_dimension(veronese(2, 2), cfg) == 4 == secant_dimension(veronese(2, 2), 1, cfg)
    assert tangent_variety_dimension(veronese(1, 3), cfg) == 2
    assert secant_dimension(veronese(1, 3), 1, cfg) == 3
    assert tangent_variety_dimension(segre(2, 2), cfg) == 7 == secant_dimension(segre(2, 2), 1, cfg)


def test_relative_dimensions_point(cfg):
    v = veronese(2, 2)
    r = relative_dimensions(v, *point_substitution(v, cfg), cfg=cfg)
    assert (r.dim_t, r.dim_s, r.case) == (2, 3, "a")


def test_relative_dimensions_whole_variety(cfg):
    v = veronese(2, 2)
    r = relative_dimensions(v, *identity_substitution(v), cfg=cfg)
    assert (r.dim_t, r.dim_s, r.case) == (4, 4, "b")
    c = veronese(1, 3)
    r = relative_dimensions(c, *identity_substitution(c), cfg=cfg)
    assert (r.dim_t, r.dim_s, r.case) == (2, 3, "a")


def test_relative_dimensions_conic_in_veronese(cfg):
    # Y = v2(line) ⊂ v2(P^2), a conic: the secant join fills P^4 or is the tangent union
    v = veronese(2, 2)
    p = v.prime
    s, t = Poly.var(0, 2, p), Poly.var(1, 2, p)
    r = relative_dimensions(v, [s, t, s + t], ((0, 1),), cfg=cfg)
    assert r.dim_y == 1
    assert r.case in ("a", "b")


def test_relative_dimensions_wrong_arity(cfg):
    v = veronese(2, 2)
    with pytest.raises(ValueError):
        relative_dimensions(v, [Poly.var(0, 1, v.prime)], ((0,),), cfg=cfg)


def test_vertex_dimension_examples(cfg):
    assert vertex_dimension(veronese(2, 2), cfg) == -1
    assert vertex_dimension(cone_over(veronese(2, 2)), cfg) == 0
    assert vertex_dimension(tangential_projection(scroll(1, 5), 1, cfg), cfg) == 0
    assert vertex_dimension(cone_over(cone_over(veronese(1, 3))), cfg) == 1


CATALOG = [
    "veronese:n=2,d=2",
    "veronese:n=3,d=2",
    "veronese:n=3,d=2|project:inner",
    "segre:1x2",
    "segre:2x2",
    "pluecker:r=4",
    "pluecker:r=5",
    "scroll:1,4",
    "scroll:1,5",
    "veronese:n=1,d=5|cone",
]


@pytest.mark.parametrize("text", CATALOG)
def test_profile_invariants(text, cfg):
    x = build_spec(text, cfg)
    p = defect_profile(x, cfg)
    assert all(p.delta[k - 1] == (k + 1) * p.n + k - p.secant_dims[k] for k in range(1, p.k0 + 1))
    assert p.secant_dims[-1] == p.N
    assert all(b > a for a, b in zip(p.secant_dims, p.secant_dims[1:]))
    assert p.zeta == second_differences(p.delta)
    assert all(z >= 0 for z in p.zeta)
    assert list(p.fiber_dims) == sorted(p.fiber_dims)


@pytest.mark.parametrize("text", CATALOG)
def test_terracini_consistency_with_join_map(text, cfg):
    x = build_spec(text, cfg)
    p = defect_profile(x, cfg)
    for k in range(p.k0 + 1):
        assert secant_dimension_by_join(x, k, cfg) == p.secant_dims[k]


@pytest.mark.parametrize("text", CATALOG)
def test_drop_sequence_is_second_difference(text, cfg):
    x = build_spec(text, cfg)
    assert drop_sequence_direct(x, cfg) == second_differences(defect_profile(x, cfg).delta)


@pytest.mark.parametrize("text", CATALOG)
def test_fiber_identity(text, cfg):
    x = build_spec(text, cfg)
    p = defect_profile(x, cfg)
    for k in range(1, p.k0 + 1):
        assert p.n - projective_dimension(tangential_projection(x, k, cfg), cfg) == p.fiber_dims[k - 1]


SMOOTH = ["veronese:n=2,d=2", "veronese:n=3,d=2", "segre:2x2", "segre:1x3", "pluecker:r=4", "pluecker:r=5"]


@pytest.mark.parametrize("text", SMOOTH)
@pytest.mark.parametrize("mode", ["general", "inner"])
def test_projection_monotonicity_smooth(text, mode, cfg):
    x = build_spec(text, cfg)
    z = project_from_point(x, mode, cfg)
    if not is_linear(z, cfg):
        assert defect_profile(z, cfg).delta1 >= defect_profile(x, cfg).delta1


def test_projection_monotonicity_fails_for_cone(cfg):
    x = cone_over(veronese(1, 5))
    z = tangential_projection(x, 1, cfg)
    assert not is_linear(z, cfg)
    assert defect_profile(z, cfg).delta1 < defect_profile(x, cfg).delta1


@pytest.mark.parametrize("base", ["veronese:n=2,d=2", "veronese:n=1,d=5"])
def test_cone_defect_formula(base, cfg):
    x = build_spec(base, cfg)
    c = cone_over(x)
    assert vertex_dimension(c, cfg) == 0
    assert defect_profile(c, cfg).delta1 == defect_profile(x, cfg).delta1 + 1


def test_seed_independence():
    a = defect_profile(pluecker_lines(5), SampleConfig(seed=1))
    b = defect_profile(pluecker_lines(5), SampleConfig(seed=987654321))
    assert a.delta == b.delta and a.secant_dims == b.secant_dims


def test_small_prime_still_deterministic():
    cfg = SampleConfig(prime=10007, seed=3)
    x = build_spec("veronese:n=3,d=2", cfg)
    assert defect_profile(x, cfg) == defect_profile(x, cfg)


def test_pathology_reported(monkeypatch, cfg):
    # a frame that never grows must be flagged, not looped on
    import terracini.secant as S

    monkeypatch.setattr(S, "sample_point", lambda x, c, *k: [1] * x.nvars)
    with pytest.raises(SamplingError):
        S.defect_profile(veronese(2, 2), cfg)
