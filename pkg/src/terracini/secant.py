"""Secant, join and tangent-variety dimensions via Terracini's lemma.

The tangent space to the k-th secant variety at a general point is the span
of the tangent spaces at k+1 general points of X, so every dimension here is
the rank of stacked Jacobians evaluated at random points over F_p.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Sequence

from .linalg import EchelonBasis, Matrix, nullspace_basis, rank, rowspace_intersection
from .poly import Poly, PolyMap, jacobian_at, linear_transform
from .sampling import SampleConfig, SamplingError
from .varieties import (
    VarietySpec,
    ambient_span_dim,
    generic_jacobian_rank,
    is_linear,
    projective_dimension,
    reduce_to_span,
    resolve_config,
    sample_point,
)

VERTEX_WINDOW = 3


@dataclass(frozen=True)
class TangentFrame:
    """Stacked Jacobians at ``points``; the row space is the span of their tangent spaces."""

    points: tuple[tuple[int, ...], ...]
    matrix: Matrix

    @property
    def rank(self) -> int:
        return rank(self.matrix)


def tangent_frame(x: VarietySpec, points: Sequence[Sequence[int]]) -> TangentFrame:
    rows: list[tuple[int, ...]] = []
    for pt in points:
        rows.extend(tuple(r) for r in x.map.jacobian_rows(pt))
    return TangentFrame(tuple(tuple(pt) for pt in points), Matrix(tuple(rows), x.ncoords, x.prime))


def frame_points(x: VarietySpec, cfg: SampleConfig, count: int, rep: int = 0) -> list[list[int]]:
    """The first ``count`` general points of repetition ``rep``; prefixes are stable."""
    return [sample_point(x, cfg, "frame", rep, i) for i in range(count)]


@dataclass(frozen=True)
class DefectProfile:
    n: int
    N: int
    k0: int
    delta: tuple[int, ...]
    zeta: tuple[int, ...]
    fiber_dims: tuple[int, ...]
    entry_locus_dims: tuple[int, ...]
    secant_dims: tuple[int, ...]
    prime: int
    samples: int
    seed: int
    spec: str = ""
    reduced: bool = field(default=False, compare=False)

    @property
    def delta1(self) -> int:
        return self.delta[0] if self.delta else 0


def second_differences(delta: Sequence[int]) -> tuple[int, ...]:
    padded = [0, 0] + list(delta)
    return tuple(padded[i] - 2 * padded[i - 1] + padded[i - 2] for i in range(2, len(padded)))


def first_differences(delta: Sequence[int]) -> tuple[int, ...]:
    padded = [0] + list(delta)
    return tuple(padded[i] - padded[i - 1] for i in range(1, len(padded)))


def secant_dimension(x: VarietySpec, k: int, cfg: SampleConfig | None = None) -> int:
    """dim S^k X, the max over ``cfg.samples`` frames of k+1 general points."""
    cfg = resolve_config(x, cfg)
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if k == 0:
        return projective_dimension(x, cfg)
    return max(tangent_frame(x, frame_points(x, cfg, k + 1, rep)).rank for rep in range(cfg.samples)) - 1


def defect_profile(x: VarietySpec, cfg: SampleConfig | None = None) -> DefectProfile:
    """Secant dimensions up to k0 and the derived defect, drop and fiber sequences."""
    cfg = resolve_config(x, cfg)
    reduced = False
    N = ambient_span_dim(x, cfg)
    if N < x.ncoords - 1:
        x = reduce_to_span(x, cfg)
        reduced = True
    n = projective_dimension(x, cfg)
    cap = n + 2
    bases = [EchelonBasis(x.ncoords, x.prime) for _ in range(cfg.samples)]
    dims: list[int] = []
    k = 0
    while True:
        for rep, basis in enumerate(bases):
            basis.extend(x.map.jacobian_rows(sample_point(x, cfg, "frame", rep, k)))
        dims.append(max(len(b) for b in bases) - 1)
        if dims[-1] == N:
            break
        k += 1
        if k > cap:
            raise SamplingError(
                f"{x.provenance}: secant dimensions {dims} never reached the span P^{N} within {cap} steps"
            )
    if dims[0] != n:
        raise SamplingError(f"{x.provenance}: frame rank {dims[0]} disagrees with dimension {n}")
    if any(b <= a for a, b in zip(dims, dims[1:])):
        raise SamplingError(f"{x.provenance}: secant dimensions {dims} are not strictly increasing")
    k0 = len(dims) - 1
    delta = tuple((j + 1) * n + j - dims[j] for j in range(1, k0 + 1))
    zeta = second_differences(delta)
    fibers = first_differences(delta)
    if any(z < 0 for z in zeta):
        raise SamplingError(f"{x.provenance}: negative drop in {zeta}")
    return DefectProfile(
        n=n,
        N=N,
        k0=k0,
        delta=delta,
        zeta=zeta,
        fiber_dims=fibers,
        entry_locus_dims=fibers,
        secant_dims=tuple(dims),
        prime=cfg.prime,
        samples=cfg.samples,
        seed=cfg.seed,
        spec=x.provenance,
        reduced=reduced,
    )


def tangential_projection(x: VarietySpec, k: int, cfg: SampleConfig | None = None) -> VarietySpec:
    """Project X from the span of its tangent spaces at k general points.

    The points are the same ones :func:`defect_profile` uses for repetition 0.
    """
    cfg = resolve_config(x, cfg)
    if k < 1:
        raise ValueError(f"tangential projection needs k >= 1, got {k}")
    frame = tangent_frame(x, frame_points(x, cfg, k))
    if frame.rank - 1 >= ambient_span_dim(x, cfg):
        raise ValueError(f"k={k} exceeds k0 for {x.provenance}: S^{k - 1}X already fills the span")
    t = nullspace_basis(frame.matrix)
    return x.derived(linear_transform(x.map, t), f"tangent:{k}")


def drop_sequence_direct(x: VarietySpec, cfg: SampleConfig | None = None) -> tuple[int, ...]:
    """Coranks of successive single tangential projections, until the image is linear."""
    cfg = resolve_config(x, cfg)
    if ambient_span_dim(x, cfg) < x.ncoords - 1:
        x = reduce_to_span(x, cfg)
    dims = [projective_dimension(x, cfg)]
    cap = dims[0] + 2
    cur = x
    while not is_linear(cur, cfg):
        if len(dims) > cap:
            raise SamplingError(f"{x.provenance}: tangential projections never became linear")
        cur = tangential_projection(cur, 1, cfg)
        dims.append(projective_dimension(cur, cfg))
    return tuple(a - b for a, b in zip(dims, dims[1:]))


def join_dimension(a: VarietySpec, b: VarietySpec, cfg: SampleConfig | None = None) -> int:
    """dim of the join S(A, B), from tangent spaces at one general point of each."""
    cfg = resolve_config(a, cfg)
    if a.ncoords != b.ncoords:
        raise ValueError(f"ambient mismatch: {a.ncoords} vs {b.ncoords} coordinates")
    best = 0
    for rep in range(cfg.samples):
        ja = jacobian_at(a.map, sample_point(a, cfg, "join-a", rep))
        jb = jacobian_at(b.map, sample_point(b, cfg, "join-b", rep))
        best = max(best, rank(ja.stack(jb)))
    return best - 1


def _directional_map(x: PolyMap, subs: Sequence[Poly] | None, groups) -> PolyMap:
    """(u, v) -> sum_i v_i * (df/dt_i)(h(u)); the image is the cone over the tangent spaces along h."""
    m = x.nvars
    nu = subs[0].nvars if subs else m
    total = nu + m
    coords = []
    for j in range(x.ncoords):
        acc = Poly.zero(total, x.p)
        for i in range(m):
            d = x.partials[i][j]
            if d.is_zero():
                continue
            if subs is not None:
                d = d.compose(subs)
            acc = acc + d.embed(total, range(nu)) * Poly.var(nu + i, total, x.p)
        coords.append(acc)
    return PolyMap(tuple(coords), tuple(groups) + (tuple(range(nu, total)),))


def tangent_variety_dimension(x: VarietySpec, cfg: SampleConfig | None = None) -> int:
    """dim T(X, X), the union of all tangent spaces."""
    cfg = resolve_config(x, cfg)
    aux = _directional_map(x.map, None, x.map.groups)
    return generic_jacobian_rank(aux, cfg, x.provenance + "|tangent-variety") - 1


def identity_substitution(x: VarietySpec) -> tuple[list[Poly], tuple[tuple[int, ...], ...]]:
    """Y = X itself."""
    return [Poly.var(i, x.nvars, x.prime) for i in range(x.nvars)], x.map.groups


def point_substitution(
    x: VarietySpec, cfg: SampleConfig | None = None, index: int = 0
) -> tuple[list[Poly], tuple[tuple[int, ...], ...]]:
    """Y = one general point of X, parameterized as t = lambda * t0."""
    cfg = resolve_config(x, cfg)
    t0 = sample_point(x, cfg, "subvariety-point", index)
    lam = Poly.var(0, 1, x.prime)
    return [lam.scale(c) for c in t0], ((0,),)


@dataclass(frozen=True)
class RelativeDimensions:
    dim_t: int
    dim_s: int
    case: Literal["a", "b"]
    dim_y: int
    dim_x: int


def relative_dimensions(
    x: VarietySpec,
    subs: Sequence[Poly],
    groups: Sequence[Sequence[int]],
    cfg: SampleConfig | None = None,
) -> RelativeDimensions:
    """Relative tangent and secant dimensions of Y ⊂ X, Y given by ``t = subs(u)``.

    Fulton-Hansen forces either dim T = dim Y + dim X = dim S - 1 (case a)
    or T = S (case b); anything else is reported as a sampling failure.
    """
    cfg = resolve_config(x, cfg)
    if len(subs) != x.nvars:
        raise ValueError(f"substitution has {len(subs)} entries, X has {x.nvars} parameters")
    groups = tuple(tuple(g) for g in groups)
    ymap = PolyMap(tuple(f.compose(subs) for f in x.map.coords), groups)
    y = VarietySpec(ymap, f"{x.name} | subvariety", f"{x.provenance}|subvariety:{hash_subs(subs)}")
    dim_y = projective_dimension(y, cfg)
    dim_x = projective_dimension(x, cfg)
    dim_s = join_dimension(y, x, cfg)
    aux = _directional_map(x.map, subs, groups)
    dim_t = generic_jacobian_rank(aux, cfg, y.provenance + "|relative-tangent") - 1
    if dim_t == dim_s:
        case = "b"
    elif dim_t == dim_y + dim_x and dim_s == dim_t + 1:
        case = "a"
    else:
        raise SamplingError(
            f"dimensions T={dim_t}, S={dim_s}, Y={dim_y}, X={dim_x} fit neither case of the dichotomy"
        )
    return RelativeDimensions(dim_t, dim_s, case, dim_y, dim_x)


def hash_subs(subs: Sequence[Poly]) -> str:
    import hashlib

    blob = repr([sorted(f.terms.items()) for f in subs]).encode()
    return hashlib.sha256(blob).hexdigest()[:12]


def vertex_dimension(x: VarietySpec, cfg: SampleConfig | None = None) -> int:
    """Projective dimension of the common part of all tangent spaces (-1 if empty).

    Intersects tangent spaces at fresh points until the dimension has held
    for ``VERTEX_WINDOW`` consecutive points.
    """
    cfg = resolve_config(x, cfg)
    cur = jacobian_at(x.map, sample_point(x, cfg, "vertex", 0))
    cur_dim = rank(cur)
    stable, i = 0, 1
    while stable < VERTEX_WINDOW:
        nxt = rowspace_intersection(cur, jacobian_at(x.map, sample_point(x, cfg, "vertex", i)))
        stable = stable + 1 if nxt.nrows == cur_dim else 0
        cur, cur_dim = nxt, nxt.nrows
        i += 1
    return cur_dim - 1


def join_parameterization(x: VarietySpec, k: int) -> PolyMap:
    """Explicit map (s^0..s^k, lambda) -> sum_i lambda_i f(s^i), whose image is the cone over S^k X."""
    m = x.map
    nv = m.nvars
    total = (k + 1) * (nv + 1)
    lam0 = (k + 1) * nv
    coords = []
    for f in m.coords:
        acc = Poly.zero(total, m.p)
        for i in range(k + 1):
            acc = acc + f.embed(total, range(i * nv, (i + 1) * nv)) * Poly.var(lam0 + i, total, m.p)
        coords.append(acc)
    groups = [tuple(range(lam0, total))]
    for i in range(k + 1):
        groups.extend(tuple(j + i * nv for j in g) for g in m.groups)
    return PolyMap(tuple(coords), tuple(groups))


def secant_dimension_by_join(x: VarietySpec, k: int, cfg: SampleConfig | None = None) -> int:
    """dim S^k X from the Jacobian of the explicit join map; independent of the frame route."""
    cfg = resolve_config(x, cfg)
    h = join_parameterization(x, k)
    return generic_jacobian_rank(h, cfg, f"{x.provenance}|join-oracle:{k}") - 1
