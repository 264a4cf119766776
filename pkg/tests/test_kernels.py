import random
from fractions import Fraction

import pytest

from fpoly import _modp_py
from fpoly import kernels

try:
    from fpoly import _modp_c
except ImportError:
    _modp_c = None

PRIMES = (2, 3, 5, 101)


def random_matrix(rng, rows, cols, p):
    return tuple(tuple(rng.randrange(p) for _ in range(cols))
                 for _ in range(rows))


def rank_fraction_oracle(mat):
    rows = [[Fraction(x) for x in r] for r in mat]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    while rank < len(rows) and col < ncols:
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def test_rref_shape_and_pivots():
    rng = random.Random(1)
    for p in PRIMES:
        for _ in range(25):
            m = random_matrix(rng, rng.randrange(5), rng.randrange(5), p)
            ncols = len(m[0]) if m else 0
            basis, pivots = _modp_py.rref(m, ncols, p)
            assert len(basis) == len(pivots)
            for i, (row, c) in enumerate(zip(basis, pivots)):
                assert row[c] == 1
                assert all(row[j] == 0 for j in range(c))
                # pivot column is zero elsewhere
                assert all(basis[k][c] == 0 for k in range(len(basis)) if k != i)
            assert list(pivots) == sorted(pivots)


def test_rref_idempotent_and_rank():
    rng = random.Random(2)
    for p in (2, 3, 5):
        for _ in range(40):
            m = random_matrix(rng, rng.randrange(1, 6), rng.randrange(1, 6), p)
            ncols = len(m[0])
            basis, pivots = _modp_py.rref(m, ncols, p)
            again, pivots2 = _modp_py.rref(basis, ncols, p)
            assert again == basis and pivots2 == pivots
            assert _modp_py.rank(m, ncols, p) == len(basis)


def test_rank_matches_fraction_oracle_at_large_prime():
    # over p=101, random small integer matrices almost surely have the
    # same rank as over Q; use entries < 10 so no accidental divisibility
    rng = random.Random(3)
    for _ in range(30):
        m = tuple(tuple(rng.randrange(10) for _ in range(4)) for _ in range(4))
        assert _modp_py.rank(m, 4, 101) == rank_fraction_oracle(m)


def test_matmul_oracle():
    rng = random.Random(4)
    for p in PRIMES:
        a = random_matrix(rng, 3, 4, p)
        b = random_matrix(rng, 4, 2, p)
        c = _modp_py.matmul(a, b, p)
        for i in range(3):
            for j in range(2):
                assert c[i][j] == sum(a[i][k] * b[k][j] for k in range(4)) % p


def test_nullspace_annihilates():
    rng = random.Random(5)
    for p in (2, 3, 5):
        for _ in range(30):
            m = random_matrix(rng, 3, 5, p)
            null = _modp_py.nullspace(m, 5, p)
            assert len(null) == 5 - _modp_py.rank(m, 5, p)
            for v in null:
                for row in m:
                    assert sum(a * b for a, b in zip(row, v)) % p == 0


def test_residual_and_membership():
    rng = random.Random(6)
    p = 5
    basis, pivots = _modp_py.rref(random_matrix(rng, 3, 6, p), 6, p)
    for row in basis:
        assert _modp_py.in_rowspace(row, basis, pivots, p)
        assert not any(_modp_py.residual(row, basis, pivots, p))
    outside = tuple(rng.randrange(p) for _ in range(6))
    res = _modp_py.residual(outside, basis, pivots, p)
    # residual is zero on pivot columns
    assert all(res[c] == 0 for c in pivots)


@pytest.mark.skipif(_modp_c is None, reason="compiled backend not built")
def test_backends_agree():
    rng = random.Random(7)
    for p in PRIMES:
        for _ in range(30):
            m = random_matrix(rng, rng.randrange(6), rng.randrange(6), p)
            ncols = len(m[0]) if m else 0
            assert _modp_c.rref(m, ncols, p) == _modp_py.rref(m, ncols, p)
            assert _modp_c.rank(m, ncols, p) == _modp_py.rank(m, ncols, p)
            assert _modp_c.nullspace(m, ncols, p) == _modp_py.nullspace(m, ncols, p)
        a = random_matrix(rng, 4, 5, p)
        b = random_matrix(rng, 5, 3, p)
        assert _modp_c.matmul(a, b, p) == _modp_py.matmul(a, b, p)


def test_gauss_binom_values():
    # [n choose k]_q counts k-subspaces of F_q^n
    assert kernels.gauss_binom(4, 2, 2) == 35
    assert kernels.gauss_binom(3, 1, 3) == 13
    assert kernels.gauss_binom(5, 0, 7) == 1
    assert kernels.gauss_binom(2, 3, 5) == 0
    for n in range(5):
        for k in range(n + 1):
            assert kernels.gauss_binom(n, k, 2) == kernels.gauss_binom(n, n - k, 2)


def test_subspace_enumeration_count():
    for p in (2, 3):
        for n in range(4):
            for k in range(n + 1):
                subs = list(kernels.subspaces(n, k, p))
                assert len(subs) == kernels.gauss_binom(n, k, p)
                assert len(set(subs)) == len(subs)
                for basis in subs:
                    assert len(basis) == k


def test_subspaces_containing():
    p = 2
    n, k = 4, 2
    fixed, piv = _modp_py.rref(((1, 0, 1, 0),), n, p)
    subs = list(kernels.subspaces_containing(n, k, p, fixed, piv))
    assert len(subs) == kernels.count_subspaces_containing(n, k, p, 1)
    for basis in subs:
        bpiv = tuple(next(j for j, x in enumerate(row) if x) for row in basis)
        assert kernels.in_rowspace(fixed[0], basis, bpiv, p)


def test_subspace_sum_and_intersection():
    rng = random.Random(8)
    p = 3
    n = 4
    for _ in range(30):
        b1, p1 = _modp_py.rref(random_matrix(rng, 2, n, p), n, p)
        b2, p2 = _modp_py.rref(random_matrix(rng, 2, n, p), n, p)
        from fpoly.rep import Subrep
        s, _ = kernels.subspace_sum(b1, b2, n, p)
        i, ipiv = kernels.subspace_intersection(b1, b2, n, p)
        assert len(s) + len(i) == len(b1) + len(b2)   # modular law on dims
        for row in i:
            assert kernels.in_rowspace(row, b1, p1, p)
            assert kernels.in_rowspace(row, b2, p2, p)
