"""Exact linear algebra over a prime field F_p.

Matrices are small (a few hundred rows at most) and dense, so everything
here is plain Python integers; products of two residues below 2**62 are
exact in Python's arbitrary precision ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

MERSENNE_61 = 2**61 - 1
FALLBACK_PRIME = 2**59 - 55
DEFAULT_PRIME = MERSENNE_61


def is_prime(p: int) -> bool:
    """Deterministic Miller-Rabin, valid for p < 3.3e24."""
    if p < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


def check_prime(p: int) -> int:
    if not (2 <= p < 2**62) or not is_prime(p):
        raise ValueError(f"modulus must be a prime below 2**62, got {p}")
    return p


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix over F_p, stored row-major as tuples."""

    entries: tuple[tuple[int, ...], ...]
    ncols: int
    p: int

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], p: int, ncols: int | None = None) -> Matrix:
        data = tuple(tuple(int(v) % p for v in row) for row in rows)
        if ncols is None:
            if not data:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(data[0])
        for row in data:
            if len(row) != ncols:
                raise ValueError(f"ragged row of length {len(row)}, expected {ncols}")
        return cls(data, ncols, p)

    @classmethod
    def identity(cls, n: int, p: int) -> Matrix:
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], p, n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, p: int) -> Matrix:
        return cls(tuple((0,) * ncols for _ in range(nrows)), ncols, p)

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self.entries[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def stack(self, other: Matrix) -> Matrix:
        if other.ncols != self.ncols:
            raise ValueError(f"column mismatch: {self.ncols} vs {other.ncols}")
        if other.p != self.p:
            raise ValueError("matrices live over different primes")
        return Matrix(self.entries + other.entries, self.ncols, self.p)

    def transpose(self) -> Matrix:
        cols = [tuple(row[j] for row in self.entries) for j in range(self.ncols)]
        return Matrix(tuple(cols), self.nrows, self.p)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        p = self.p
        cols = other.transpose().entries
        out = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) % p for col in cols)
            for row in self.entries
        )
        return Matrix(out, other.ncols, p)

    def apply(self, vec: Sequence[int]) -> list[int]:
        """Return ``self @ vec`` for a plain vector."""
        if len(vec) != self.ncols:
            raise ValueError(f"vector length {len(vec)} != {self.ncols}")
        p = self.p
        return [sum(a * b for a, b in zip(row, vec)) % p for row in self.entries]


class EchelonBasis:
    """Incrementally maintained reduced row echelon basis of a row space.

    Rows are kept fully reduced against each other, so membership tests
    and rank updates cost one pass over the current basis.
    """

    def __init__(self, ncols: int, p: int):
        self.ncols = ncols
        self.p = p
        self.pivots: list[int] = []
        self.rows: list[list[int]] = []

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Sequence[int]) -> list[int]:
        p = self.p
        v = [x % p for x in vec]
        for piv, row in zip(self.pivots, self.rows):
            c = v[piv]
            if c:
                v = [(a - c * b) % p for a, b in zip(v, row)]
        return v

    def add(self, vec: Sequence[int]) -> bool:
        """Insert ``vec``; return True when it enlarged the span."""
        if len(vec) != self.ncols:
            raise ValueError(f"row length {len(vec)} != {self.ncols}")
        v = self.reduce(vec)
        piv = next((j for j, a in enumerate(v) if a), None)
        if piv is None:
            return False
        p = self.p
        inv = pow(v[piv], -1, p)
        v = [a * inv % p for a in v]
        for i, row in enumerate(self.rows):
            c = row[piv]
            if c:
                self.rows[i] = [(a - c * b) % p for a, b in zip(row, v)]
        self.pivots.append(piv)
        self.rows.append(v)
        return True

    def extend(self, rows: Iterable[Sequence[int]]) -> int:
        return sum(self.add(r) for r in rows)

    def contains(self, vec: Sequence[int]) -> bool:
        return not any(self.reduce(vec))

    def copy(self) -> EchelonBasis:
        other = EchelonBasis(self.ncols, self.p)
        other.pivots = list(self.pivots)
        other.rows = [list(r) for r in self.rows]
        return other

    def matrix(self) -> Matrix:
        order = sorted(range(len(self.rows)), key=lambda i: self.pivots[i])
        return Matrix(tuple(tuple(self.rows[i]) for i in order), self.ncols, self.p)


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form (nonzero rows only) and its pivot columns."""
    basis = EchelonBasis(m.ncols, m.p)
    basis.extend(m.entries)
    out = basis.matrix()
    return out, sorted(basis.pivots)


def rank(m: Matrix) -> int:
    basis = EchelonBasis(m.ncols, m.p)
    return basis.extend(m.entries)


def nullspace_basis(m: Matrix) -> Matrix:
    """Rows spanning ``{v : m @ v = 0}``; there are ``m.ncols - rank(m)`` of them."""
    r, pivots = rref(m)
    p = m.p
    pivot_set = set(pivots)
    free = [j for j in range(m.ncols) if j not in pivot_set]
    out = []
    for f in free:
        v = [0] * m.ncols
        v[f] = 1
        for row, piv in zip(r.entries, pivots):
            v[piv] = -row[f] % p
        out.append(tuple(v))
    return Matrix(tuple(out), m.ncols, p)


def rowspace_intersection(a: Matrix, b: Matrix) -> Matrix:
    """Basis of rowspace(a) ∩ rowspace(b), by the Zassenhaus sum/intersection trick."""
    if a.ncols != b.ncols:
        raise ValueError(f"column mismatch: {a.ncols} vs {b.ncols}")
    n, p = a.ncols, a.p
    zassenhaus = EchelonBasis(2 * n, p)
    zassenhaus.extend(row + row for row in a.entries)
    zassenhaus.extend(row + (0,) * n for row in b.entries)
    out = EchelonBasis(n, p)
    for row in zassenhaus.rows:
        if not any(row[:n]):
            out.add(row[n:])
    if not len(out):
        return Matrix((), n, p)
    return out.matrix()
