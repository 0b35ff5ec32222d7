import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from terracini.linalg import (
    DEFAULT_PRIME,
    EchelonBasis,
    Matrix,
    check_prime,
    is_prime,
    nullspace_basis,
    rank,
    rowspace_intersection,
)

P = DEFAULT_PRIME


def M(rows, p=P, ncols=None):
    return Matrix.from_rows(rows, p, ncols)


def det_cofactor(rows, p):
    """Laplace expansion along the first row; no elimination involved."""
    if not rows:
        return 1
    total = 0
    for j, a in enumerate(rows[0]):
        if a:
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            total += (-1) ** j * a * det_cofactor(minor, p)
    return total % p


def minor_rank(rows, p):
    m, n = len(rows), len(rows[0]) if rows else 0
    for r in range(min(m, n), 0, -1):
        for ri in itertools.combinations(range(m), r):
            for ci in itertools.combinations(range(n), r):
                if det_cofactor([[rows[i][j] for j in ci] for i in ri], p):
                    return r
    return 0


def test_rank_examples():
    assert rank(Matrix.identity(3, P)) == 3
    assert rank(M([[1, 2], [2, 4]])) == 1
    assert rank(M([[2, 1, 0], [0, 1, 2]])) == 2


def test_nullspace_examples():
    ns = nullspace_basis(M([[1, 1, 1]]))
    assert ns.nrows == 2
    assert all(sum(v) % P == 0 for v in ns.entries)
    assert nullspace_basis(Matrix.identity(4, P)).nrows == 0
    full = nullspace_basis(Matrix.zeros(2, 3, P))
    assert full.nrows == 3 and rank(full) == 3


def e(i, n=3):
    return [int(i == j) for j in range(n)]


def test_intersection_examples():
    inter = rowspace_intersection(M([e(0), e(1)]), M([e(1), e(2)]))
    assert inter.nrows == 1
    assert rank(inter.stack(M([e(1)]))) == 1
    assert rowspace_intersection(M([e(0)]), M([e(1)])).nrows == 0
    a = M([[1, 2, 3], [0, 1, 5]])
    same = rowspace_intersection(a, a)
    assert same.nrows == 2 and rank(same.stack(a)) == 2


def test_intersection_dimension_mismatch():
    with pytest.raises(ValueError):
        rowspace_intersection(M([[1, 0]]), M([[1, 0, 0]]))


def test_prime_checks():
    assert is_prime(2**61 - 1) and is_prime(2**59 - 55)
    assert not is_prime(2**61 + 1)
    with pytest.raises(ValueError):
        check_prime(2**62 + 135)
    with pytest.raises(ValueError):
        check_prime(91)


small_primes = st.sampled_from([2, 3, 5, 7, 101, DEFAULT_PRIME])


@st.composite
def matrices(draw, max_rows=6, max_cols=6):
    p = draw(small_primes)
    m = draw(st.integers(1, max_rows))
    n = draw(st.integers(1, max_cols))
    # small entries make rank deficiency common even over large primes
    rows = draw(st.lists(st.lists(st.integers(0, 3), min_size=n, max_size=n), min_size=m, max_size=m))
    return rows, p


@settings(max_examples=60, deadline=None)
@given(matrices(max_rows=5, max_cols=5))
def test_rank_matches_minor_oracle(data):
    rows, p = data
    assert rank(M(rows, p)) == minor_rank([[v % p for v in r] for r in rows], p)


def test_rank_minor_oracle_6x6():
    rows = [[(i * j + i + 2 * j) % 5 for j in range(6)] for i in range(6)]
    for p in (7, 11, DEFAULT_PRIME):
        assert rank(M(rows, p)) == minor_rank([[v % p for v in r] for r in rows], p)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_nullspace_annihilated_and_counted(data):
    rows, p = data
    m = M(rows, p)
    ns = nullspace_basis(m)
    assert ns.nrows == m.ncols - rank(m)
    for v in ns.entries:
        assert not any(m.apply(v))
    if ns.nrows:
        assert rank(ns) == ns.nrows


@settings(max_examples=60, deadline=None)
@given(matrices(), st.data())
def test_intersection_dimension_formula(data, draw):
    rows, p = data
    n = len(rows[0])
    other = draw.draw(st.lists(st.lists(st.integers(0, 3), min_size=n, max_size=n), min_size=1, max_size=5))
    a, b = M(rows, p), M(other, p)
    inter = rowspace_intersection(a, b)
    assert inter.nrows == rank(a) + rank(b) - rank(a.stack(b))
    for v in inter.entries:
        for space in (a, b):
            basis = EchelonBasis(n, p)
            basis.extend(space.entries)
            assert basis.contains(v)


@settings(max_examples=40, deadline=None)
@given(matrices(), st.data())
def test_rank_monotone_under_stacking(data, draw):
    rows, p = data
    n = len(rows[0])
    other = draw.draw(st.lists(st.lists(st.integers(0, 3), min_size=n, max_size=n), min_size=1, max_size=4))
    a, b = M(rows, p), M(other, p)
    assert rank(a.stack(b)) >= max(rank(a), rank(b))


@settings(max_examples=40, deadline=None)
@given(matrices(), st.randoms())
def test_rank_invariant_under_permutation_and_scaling(data, rnd):
    rows, p = data
    base = rank(M(rows, p))
    perm = list(rows)
    rnd.shuffle(perm)
    cols = list(range(len(rows[0])))
    rnd.shuffle(cols)
    row_scale = [rnd.randrange(1, p) for _ in perm]
    col_scale = [rnd.randrange(1, p) for _ in cols]
    scaled = [[r[c] * rs * col_scale[c] for c in cols] for r, rs in zip(perm, row_scale)]
    assert rank(M(scaled, p)) == base


def test_matmul_and_transpose():
    a = M([[1, 2], [3, 4]])
    assert (a @ Matrix.identity(2, P)).tolist() == a.tolist()
    assert a.transpose().tolist() == [[1, 3], [2, 4]]
    assert (a @ a).tolist() == [[7, 10], [15, 22]]
