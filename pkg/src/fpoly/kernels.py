"""Finite-field kernel dispatch and subspace combinatorics.

The numeric primitives (rref, matmul, nullspace, ...) come from the
compiled extension when available; set FPOLY_PURE_PYTHON=1 to force the
pure-Python twin.  Everything downstream imports from here only.
"""

import itertools
import os

if os.environ.get("FPOLY_PURE_PYTHON"):
    from . import _modp_py as _impl
else:
    try:
        from . import _modp_c as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _modp_py as _impl  # type: ignore[no-redef]

BACKEND = _impl.BACKEND
rref = _impl.rref
rank = _impl.rank
matmul = _impl.matmul
residual = _impl.residual
in_rowspace = _impl.in_rowspace
nullspace = _impl.nullspace


def transpose(mat, ncols):
    if not mat:
        return tuple(() for _ in range(ncols))
    return tuple(zip(*mat))


def gauss_binom(n, k, q):
    """Number of k-dimensional subspaces of F_q^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def subspaces(n, k, p):
    """Iterate over all k-dim subspaces of F_p^n as rref row bases.

    Enumeration is by pivot pattern, then by the free entries; each
    subspace appears exactly once.
    """
    if k == 0:
        yield ()
        return
    if k > n:
        return
    for pivots in itertools.combinations(range(n), k):
        pivset = set(pivots)
        # Free slots: (row i, col j) with j > pivots[i] and j not a pivot.
        slots = [
            (i, j)
            for i in range(k)
            for j in range(pivots[i] + 1, n)
            if j not in pivset
        ]
        for vals in itertools.product(range(p), repeat=len(slots)):
            rows = [[0] * n for _ in range(k)]
            for i in range(k):
                rows[i][pivots[i]] = 1
            for (i, j), v in zip(slots, vals):
                rows[i][j] = v
            yield tuple(tuple(r) for r in rows)


def subspaces_containing(n, k, p, sub_basis, sub_pivots):
    """All k-dim subspaces of F_p^n containing the given rref subspace.

    Works in the quotient by the subspace: non-pivot coordinates index
    the quotient, complements are lifted and re-reduced.
    """
    w = len(sub_basis)
    if k < w:
        return
    if k == w:
        yield sub_basis
        return
    pivset = set(sub_pivots)
    coords = [j for j in range(n) if j not in pivset]
    m = len(coords)
    for qbasis in subspaces(m, k - w, p):
        rows = list(sub_basis)
        for qrow in qbasis:
            lift = [0] * n
            for c, v in zip(coords, qrow):
                lift[c] = v
            rows.append(tuple(lift))
        basis, _ = rref(rows, n, p)
        yield basis


def count_subspaces_containing(n, k, p, sub_dim):
    return gauss_binom(n - sub_dim, k - sub_dim, p)


def subspace_sum(b1, b2, ncols, p):
    return rref(tuple(b1) + tuple(b2), ncols, p)


def subspace_intersection(b1, b2, ncols, p):
    """RREF basis of the intersection of two row spaces."""
    if not b1 or not b2:
        return (), ()
    # x*b1 = y*b2  <=>  (x, y) in the null space of [b1^T | -b2^T].
    k1, k2 = len(b1), len(b2)
    stacked = []
    for j in range(ncols):
        row = [b1[i][j] for i in range(k1)] + [(-b2[i][j]) % p for i in range(k2)]
        stacked.append(tuple(row))
    combos = nullspace(tuple(stacked), k1 + k2, p)
    vecs = [matmul((c[:k1],), b1, p)[0] for c in combos]
    return rref(vecs, ncols, p)
