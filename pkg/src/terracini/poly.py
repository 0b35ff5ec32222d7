"""Sparse multivariate polynomials over F_p and polynomial maps.

A :class:`PolyMap` is a tuple of coordinate polynomials over a set of
parameter variables partitioned into groups.  Its image is the affine cone
over a projective variety as long as some group scales every coordinate
homogeneously; that group is found (and enforced) at construction time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .linalg import Matrix

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class Poly:
    """Polynomial in ``nvars`` variables with coefficients in F_p.

    ``terms`` maps exponent vectors to nonzero residues.
    """

    terms: Mapping[Exponent, int]
    nvars: int
    p: int

    def __post_init__(self):
        clean = {}
        for exp, c in self.terms.items():
            if len(exp) != self.nvars:
                raise ValueError(f"exponent {exp} has wrong length for {self.nvars} variables")
            c %= self.p
            if c:
                clean[tuple(exp)] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls, nvars: int, p: int) -> Poly:
        return cls({}, nvars, p)

    @classmethod
    def constant(cls, c: int, nvars: int, p: int) -> Poly:
        return cls({(0,) * nvars: c}, nvars, p)

    @classmethod
    def var(cls, i: int, nvars: int, p: int) -> Poly:
        exp = [0] * nvars
        exp[i] = 1
        return cls({tuple(exp): 1}, nvars, p)

    @classmethod
    def monomial(cls, exp: Sequence[int], p: int, coeff: int = 1) -> Poly:
        return cls({tuple(exp): coeff}, len(exp), p)

    def __hash__(self):
        return hash((frozenset(self.terms.items()), self.nvars, self.p))

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return (self.nvars, self.p) == (other.nvars, other.p) and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: Poly):
        if (self.nvars, self.p) != (other.nvars, other.p):
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out.get(exp, 0) + c
        return Poly(out, self.nvars, self.p)

    def __neg__(self) -> Poly:
        return Poly({e: -c for e, c in self.terms.items()}, self.nvars, self.p)

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def scale(self, c: int) -> Poly:
        return Poly({e: c * v for e, v in self.terms.items()}, self.nvars, self.p)

    def __mul__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(out, self.nvars, self.p)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        result = Poly.constant(1, self.nvars, self.p)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def degree_in(self, group: Iterable[int]) -> set[int]:
        """Set of degrees in the variables of ``group`` over all terms."""
        group = tuple(group)
        return {sum(exp[i] for i in group) for exp in self.terms}

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def embed(self, nvars: int, positions: Sequence[int]) -> Poly:
        """Rename variable ``i`` to ``positions[i]`` in a ring of ``nvars`` variables."""
        out = {}
        for exp, c in self.terms.items():
            new = [0] * nvars
            for i, e in enumerate(exp):
                new[positions[i]] += e
            out[tuple(new)] = c
        return Poly(out, nvars, self.p)

    def compose(self, subs: Sequence[Poly]) -> Poly:
        """Substitute ``subs[i]`` for variable ``i``."""
        if len(subs) != self.nvars:
            raise ValueError(f"need {self.nvars} substitutions, got {len(subs)}")
        if not subs:
            return self
        target = subs[0]
        powers: dict[tuple[int, int], Poly] = {}

        def power(i: int, e: int) -> Poly:
            if (i, e) not in powers:
                powers[(i, e)] = subs[i] ** e
            return powers[(i, e)]

        out = Poly.zero(target.nvars, self.p)
        for exp, c in self.terms.items():
            term = Poly.constant(c, target.nvars, self.p)
            for i, e in enumerate(exp):
                if e:
                    term = term * power(i, e)
            out = out + term
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"x{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exp) if e)
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)


def evaluate(f: Poly, point: Sequence[int]) -> int:
    if len(point) != f.nvars:
        raise ValueError(f"point has {len(point)} entries, polynomial has {f.nvars} variables")
    p = f.p
    total = 0
    for exp, c in f.terms.items():
        v = c
        for x, e in zip(point, exp):
            if e:
                v = v * pow(x, e, p) % p
        total += v
    return total % p


def partial_derivative(f: Poly, var: int) -> Poly:
    if not 0 <= var < f.nvars:
        return Poly.zero(f.nvars, f.p)
    out = {}
    for exp, c in f.terms.items():
        e = exp[var]
        if e:
            new = list(exp)
            new[var] = e - 1
            out[tuple(new)] = c * e
    return Poly(out, f.nvars, f.p)


@dataclass(frozen=True)
class PolyMap:
    """Homogeneous coordinates ``coords`` as polynomials in grouped parameters.

    ``groups`` partitions ``range(nvars)``.  Construction fails unless some
    group makes every nonzero coordinate homogeneous of one positive degree.
    """

    coords: tuple[Poly, ...]
    groups: tuple[tuple[int, ...], ...]
    scaling_group: int = field(init=False)
    scaling_degree: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        object.__setattr__(self, "groups", tuple(tuple(g) for g in self.groups))
        if not self.coords:
            raise ValueError("a polynomial map needs at least one coordinate")
        nvars, p = self.coords[0].nvars, self.coords[0].p
        for f in self.coords:
            if (f.nvars, f.p) != (nvars, p):
                raise ValueError("coordinates live in different rings")
        flat = sorted(i for g in self.groups for i in g)
        if flat != list(range(nvars)):
            raise ValueError(f"groups {self.groups} do not partition {nvars} variables")
        found = _find_scaling_group(self.coords, self.groups)
        if found is None:
            raise ValueError("no variable group scales all coordinates homogeneously")
        object.__setattr__(self, "scaling_group", found[0])
        object.__setattr__(self, "scaling_degree", found[1])

    @property
    def nvars(self) -> int:
        return self.coords[0].nvars

    @property
    def p(self) -> int:
        return self.coords[0].p

    @property
    def ncoords(self) -> int:
        return len(self.coords)

    @cached_property
    def partials(self) -> tuple[tuple[Poly, ...], ...]:
        """``partials[i][j]`` is d coords[j] / d var_i."""
        return tuple(
            tuple(partial_derivative(f, i) for f in self.coords) for i in range(self.nvars)
        )

    def value_at(self, point: Sequence[int]) -> list[int]:
        return [evaluate(f, point) for f in self.coords]

    def jacobian_rows(self, point: Sequence[int]) -> list[list[int]]:
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} entries, map has {self.nvars} variables")
        return [[evaluate(f, point) for f in row] for row in self.partials]


def _find_scaling_group(coords, groups):
    for gi, g in enumerate(groups):
        degrees: set[int] = set()
        for f in coords:
            degrees |= f.degree_in(g)
        if len(degrees) == 1:
            (d,) = degrees
            if d >= 1:
                return gi, d
    return None


def jacobian_at(m: PolyMap, point: Sequence[int]) -> Matrix:
    """One row per parameter, one column per coordinate, at ``point``."""
    return Matrix(tuple(tuple(r) for r in m.jacobian_rows(point)), m.ncoords, m.p)


def linear_transform(m: PolyMap, t: Matrix) -> PolyMap:
    """Coordinates ``t @ m.coords``; groups are kept."""
    if t.ncols != m.ncoords:
        raise ValueError(f"transform has {t.ncols} columns, map has {m.ncoords} coordinates")
    if t.p != m.p:
        raise ValueError("transform and map live over different primes")
    new = []
    for row in t.entries:
        acc: dict[Exponent, int] = {}
        for c, f in zip(row, m.coords):
            if c:
                for exp, v in f.terms.items():
                    acc[exp] = acc.get(exp, 0) + c * v
        new.append(Poly(acc, m.nvars, m.p))
    return PolyMap(tuple(new), m.groups)
