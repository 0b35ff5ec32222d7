"""Built-in parameterized varieties and the constructions applied to them."""

from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import dataclass
from math import comb
from typing import Literal, Sequence

from .linalg import DEFAULT_PRIME, EchelonBasis, Matrix, nullspace_basis, rank
from .poly import Poly, PolyMap, jacobian_at, linear_transform
from .sampling import SampleConfig, SamplingError, random_point, random_vector


@dataclass(frozen=True)
class VarietySpec:
    """A parameterization of the affine cone over ``X ⊂ P^N`` plus its history.

    ``provenance`` is a spec-grammar string (``"veronese:n=3,d=2|project:inner"``)
    and doubles as the sampling namespace of the variety.
    """

    map: PolyMap
    name: str
    provenance: str

    def __post_init__(self):
        if self.map.ncoords < 1:
            raise ValueError("a variety needs at least one ambient coordinate")

    @property
    def prime(self) -> int:
        return self.map.p

    @property
    def ncoords(self) -> int:
        return self.map.ncoords

    @property
    def nvars(self) -> int:
        return self.map.nvars

    def derived(self, m: PolyMap, modifier: str) -> VarietySpec:
        return VarietySpec(m, f"{self.name} | {modifier}", f"{self.provenance}|{modifier}")


def resolve_config(x: VarietySpec, cfg: SampleConfig | None) -> SampleConfig:
    if cfg is None:
        return SampleConfig(prime=x.prime)
    if cfg.prime != x.prime:
        raise ValueError(
            f"variety is defined over p={x.prime} but sampling asks for p={cfg.prime}; "
            "rebuild the variety over the requested prime"
        )
    return cfg


def sample_point(x: VarietySpec, cfg: SampleConfig, *key: object) -> list[int]:
    rng = cfg.rng(*key, x.provenance)
    return random_point(rng, x.map.groups, x.nvars, x.prime)


def _monomials(nvars: int, d: int) -> list[tuple[int, ...]]:
    exps = [
        e for e in itertools.product(range(d + 1), repeat=nvars) if sum(e) == d
    ]
    return sorted(exps, reverse=True)


def veronese(n: int, d: int, prime: int = DEFAULT_PRIME) -> VarietySpec:
    """Degree-``d`` Veronese embedding of P^n: every degree-``d`` monomial."""
    if n < 1 or d < 1:
        raise ValueError(f"veronese needs n >= 1 and d >= 1, got n={n}, d={d}")
    coords = tuple(Poly.monomial(e, prime) for e in _monomials(n + 1, d))
    m = PolyMap(coords, (tuple(range(n + 1)),))
    return VarietySpec(m, f"veronese({n},{d})", f"veronese:n={n},d={d}")


def segre(a: int, b: int, prime: int = DEFAULT_PRIME) -> VarietySpec:
    """Segre embedding of P^a × P^b by the products x_i y_j."""
    if a < 1 or b < 1:
        raise ValueError(f"segre needs a, b >= 1, got {a}x{b}")
    nv = a + b + 2
    xs = [Poly.var(i, nv, prime) for i in range(a + 1)]
    ys = [Poly.var(a + 1 + j, nv, prime) for j in range(b + 1)]
    coords = tuple(x * y for x in xs for y in ys)
    groups = (tuple(range(a + 1)), tuple(range(a + 1, nv)))
    return VarietySpec(PolyMap(coords, groups), f"segre({a},{b})", f"segre:{a}x{b}")


def pluecker_lines(r: int, prime: int = DEFAULT_PRIME) -> VarietySpec:
    """Grassmannian G(1, r) of lines in P^r by the 2x2 minors of a 2 x (r+1) matrix."""
    if r < 3:
        raise ValueError(f"pluecker_lines needs r >= 3, got {r}")
    cols = r + 1
    nv = 2 * cols
    top = [Poly.var(j, nv, prime) for j in range(cols)]
    bottom = [Poly.var(cols + j, nv, prime) for j in range(cols)]
    coords = tuple(
        top[i] * bottom[j] - top[j] * bottom[i] for i, j in itertools.combinations(range(cols), 2)
    )
    m = PolyMap(coords, (tuple(range(nv)),))
    return VarietySpec(m, f"pluecker_lines({r})", f"pluecker:r={r}")


def scroll(a: int, b: int, prime: int = DEFAULT_PRIME) -> VarietySpec:
    """Rational normal scroll S(a, b) ⊂ P^{a+b+1}, parameters (s, t | u, v)."""
    if not (0 <= a <= b and b >= 1):
        raise ValueError(f"scroll needs 0 <= a <= b and b >= 1, got ({a},{b})")
    s, t, u, v = (Poly.var(i, 4, prime) for i in range(4))
    coords = [s ** (a - i) * t**i * u for i in range(a + 1)]
    coords += [s ** (b - i) * t**i * v for i in range(b + 1)]
    m = PolyMap(tuple(coords), ((2, 3), (0, 1)))
    return VarietySpec(m, f"scroll({a},{b})", f"scroll:{a},{b}")


def cone_over(x: VarietySpec) -> VarietySpec:
    """Cone over ``x`` with vertex the new last coordinate point."""
    nv = x.nvars + 2
    p = x.prime
    lam = Poly.var(nv - 2, nv, p)
    mu = Poly.var(nv - 1, nv, p)
    lifted = [f.embed(nv, range(x.nvars)) * lam for f in x.map.coords]
    m = PolyMap(tuple(lifted) + (mu,), x.map.groups + ((nv - 2, nv - 1),))
    return x.derived(m, "cone")


def point_spec(vec: Sequence[int], prime: int = DEFAULT_PRIME, label: str = "point") -> VarietySpec:
    """A single point of P^N, parameterized as lambda * vec."""
    lam = Poly.var(0, 1, prime)
    m = PolyMap(tuple(lam.scale(c) for c in vec), ((0,),))
    return VarietySpec(m, label, explicit_provenance(m))


def linear_space(rows: Sequence[Sequence[int]], prime: int = DEFAULT_PRIME, label: str = "linear") -> VarietySpec:
    """The projective linear space spanned by ``rows``."""
    nv = len(rows)
    ncoords = len(rows[0])
    coords = []
    for j in range(ncoords):
        f = Poly.zero(nv, prime)
        for i, row in enumerate(rows):
            if row[j] % prime:
                f = f + Poly.var(i, nv, prime).scale(row[j])
        coords.append(f)
    m = PolyMap(tuple(coords), (tuple(range(nv)),))
    return VarietySpec(m, label, explicit_provenance(m))


def _value_basis(x: VarietySpec, cfg: SampleConfig, tag: str) -> EchelonBasis:
    npoints = max(x.ncoords + 1, 2 * x.ncoords)
    basis = EchelonBasis(x.ncoords, x.prime)
    for i in range(npoints):
        basis.add(x.map.value_at(sample_point(x, cfg, tag, i)))
        if len(basis) == x.ncoords:
            break
    return basis


def ambient_span_dim(x: VarietySpec, cfg: SampleConfig | None = None) -> int:
    """Dimension of the linear span of X in P^N."""
    cfg = resolve_config(x, cfg)
    return len(_value_basis(x, cfg, "span")) - 1


def generic_jacobian_rank(m: PolyMap, cfg: SampleConfig, namespace: str) -> int:
    best = 0
    for i in range(cfg.samples):
        pt = random_point(cfg.rng("jacobian", namespace, i), m.groups, m.nvars, m.p)
        best = max(best, rank(jacobian_at(m, pt)))
    return best


def projective_dimension(x: VarietySpec, cfg: SampleConfig | None = None) -> int:
    cfg = resolve_config(x, cfg)
    return generic_jacobian_rank(x.map, cfg, x.provenance) - 1


def is_linear(x: VarietySpec, cfg: SampleConfig | None = None) -> bool:
    cfg = resolve_config(x, cfg)
    return projective_dimension(x, cfg) == ambient_span_dim(x, cfg)


def reduce_to_span(x: VarietySpec, cfg: SampleConfig | None = None) -> VarietySpec:
    """Drop redundant coordinates so that X spans its ambient space."""
    cfg = resolve_config(x, cfg)
    basis = _value_basis(x, cfg, "span")
    if len(basis) == x.ncoords:
        return x
    keep = sorted(basis.pivots)
    t = Matrix.from_rows(
        [[int(j == c) for j in range(x.ncoords)] for c in keep], x.prime, x.ncoords
    )
    return x.derived(linear_transform(x.map, t), "reduce")


def project_from_point(
    x: VarietySpec, mode: Literal["general", "inner"] = "general", cfg: SampleConfig | None = None
) -> VarietySpec:
    """Linear projection of X from a general point of its span, or from a point of X."""
    cfg = resolve_config(x, cfg)
    if mode not in ("general", "inner"):
        raise ValueError(f"unknown projection mode {mode!r}")
    span = ambient_span_dim(x, cfg)
    if span < 2:
        raise ValueError(f"projection needs a span of dimension >= 2, got {span}")
    basis = _value_basis(x, cfg, "span")
    p = x.prime
    for attempt in range(cfg.max_retries):
        if mode == "inner":
            center = x.map.value_at(sample_point(x, cfg, "center", mode, attempt))
        else:
            rng = cfg.rng("center", mode, attempt, x.provenance)
            coeffs = random_vector(rng, len(basis), p)
            center = [sum(c * row[j] for c, row in zip(coeffs, basis.rows)) % p for j in range(x.ncoords)]
        if not any(center):
            continue
        t = nullspace_basis(Matrix.from_rows([center], p))
        out = x.derived(linear_transform(x.map, t), f"project:{mode}")
        if ambient_span_dim(out, cfg) == span - 1:
            return out
    raise SamplingError(f"no admissible projection center for {x.provenance} after {cfg.max_retries} tries")


def expected_counts(family: str, *params: int) -> dict[str, int]:
    """Closed-form coordinate count, dimension and span for the built-in families."""
    if family == "veronese":
        n, d = params
        c = comb(n + d, d)
        return {"ncoords": c, "n": n, "N": c - 1}
    if family == "segre":
        a, b = params
        return {"ncoords": (a + 1) * (b + 1), "n": a + b, "N": (a + 1) * (b + 1) - 1}
    if family == "pluecker":
        (r,) = params
        c = comb(r + 1, 2)
        return {"ncoords": c, "n": 2 * r - 2, "N": c - 1}
    if family == "scroll":
        a, b = params
        return {"ncoords": a + b + 2, "n": 2, "N": a + b + 1}
    raise ValueError(f"unknown family {family!r}")


def map_to_json(m: PolyMap) -> dict:
    """Explicit JSON form; coefficients are decimal strings, terms sorted."""
    names = [f"t{i}" for i in range(m.nvars)]
    return {
        "groups": [[names[i] for i in g] for g in m.groups],
        "coords": [
            [[str(c), list(e)] for e, c in sorted(f.terms.items(), reverse=True)]
            for f in m.coords
        ],
    }


def explicit_provenance(m: PolyMap) -> str:
    blob = json.dumps(map_to_json(m), sort_keys=True, separators=(",", ":"))
    return "explicit:" + hashlib.sha256(blob.encode()).hexdigest()[:16]


def from_json(obj: dict | str, prime: int = DEFAULT_PRIME, label: str = "explicit") -> VarietySpec:
    """Build a variety from ``{"groups": [[names...]...], "coords": [[[coeff, exps]...]...]}``.

    Exponent vectors index the variables in the order they appear in ``groups``.
    """
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        names = [v for g in obj["groups"] for v in g]
        if len(set(names)) != len(names):
            raise ValueError("variable names repeat across groups")
        nv = len(names)
        groups, k = [], 0
        for g in obj["groups"]:
            groups.append(tuple(range(k, k + len(g))))
            k += len(g)
        coords = []
        for terms in obj["coords"]:
            acc: dict[tuple[int, ...], int] = {}
            for coeff, exps in terms:
                exps = tuple(int(e) for e in exps)
                if len(exps) != nv or min(exps, default=0) < 0:
                    raise ValueError(f"bad exponent vector {list(exps)}")
                acc[exps] = acc.get(exps, 0) + int(coeff)
            coords.append(Poly(acc, nv, prime))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed explicit variety: {exc}") from exc
    if not coords:
        raise ValueError("explicit variety has no coordinates")
    m = PolyMap(tuple(coords), tuple(groups))
    return VarietySpec(m, label, explicit_provenance(m))
