# cython: language_level=3
"""Compiled mod-p linear algebra kernels (hot path).

Same interface as ``_modp_py``; selected preferentially in ``kernels``.
"""

from libc.stdlib cimport malloc, free

BACKEND = "cython"


cdef long long inv_mod(long long a, long long p):
    # Fermat inverse; p prime, a != 0 mod p.
    cdef long long result = 1
    cdef long long base = a % p
    cdef long long e = p - 2
    while e > 0:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


cdef long long* to_buf(mat, Py_ssize_t nrows, Py_ssize_t ncols) except NULL:
    cdef long long* buf = <long long*> malloc(nrows * ncols * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j
    for i in range(nrows):
        row = mat[i]
        for j in range(ncols):
            buf[i * ncols + j] = row[j]
    return buf


cdef _rref_buf(long long* a, Py_ssize_t nrows, Py_ssize_t ncols, long long p, list pivots):
    # In-place rref; returns number of pivot rows, pivot columns appended to `pivots`.
    cdef Py_ssize_t r = 0, col = 0, i, j, piv
    cdef long long f, inv
    while r < nrows and col < ncols:
        piv = -1
        for i in range(r, nrows):
            if a[i * ncols + col] != 0:
                piv = i
                break
        if piv < 0:
            col += 1
            continue
        if piv != r:
            for j in range(ncols):
                f = a[r * ncols + j]
                a[r * ncols + j] = a[piv * ncols + j]
                a[piv * ncols + j] = f
        inv = inv_mod(a[r * ncols + col], p)
        if inv != 1:
            for j in range(col, ncols):
                a[r * ncols + j] = a[r * ncols + j] * inv % p
        for i in range(nrows):
            if i != r and a[i * ncols + col] != 0:
                f = a[i * ncols + col]
                for j in range(col, ncols):
                    a[i * ncols + j] = (a[i * ncols + j] - f * a[r * ncols + j]) % p
                    if a[i * ncols + j] < 0:
                        a[i * ncols + j] += p
        pivots.append(col)
        r += 1
        col += 1
    return r


def rref(mat, ncols, p):
    cdef Py_ssize_t nrows = len(mat)
    cdef Py_ssize_t nc = ncols
    cdef long long pp = p
    if nrows == 0:
        return (), ()
    cdef long long* a = to_buf(mat, nrows, nc)
    cdef list pivots = []
    cdef Py_ssize_t nr, i
    try:
        nr = _rref_buf(a, nrows, nc, pp, pivots)
        rows = tuple(tuple(a[i * nc + j] for j in range(nc)) for i in range(nr))
    finally:
        free(a)
    return rows, tuple(pivots)


def rank(mat, ncols, p):
    cdef Py_ssize_t nrows = len(mat)
    cdef Py_ssize_t nc = ncols
    if nrows == 0:
        return 0
    cdef long long* a = to_buf(mat, nrows, nc)
    cdef list pivots = []
    cdef Py_ssize_t nr
    try:
        nr = _rref_buf(a, nrows, nc, p, pivots)
    finally:
        free(a)
    return nr


def matmul(a, b, p):
    cdef Py_ssize_t r = len(a)
    if r == 0:
        return ()
    cdef Py_ssize_t m = len(b)
    cdef Py_ssize_t c = len(b[0]) if m else 0
    cdef long long pp = p
    cdef long long* ab = to_buf(a, r, m) if m else NULL
    cdef long long* bb = to_buf(b, m, c) if m else NULL
    cdef long long* ob = <long long*> malloc(r * c * sizeof(long long)) if c else NULL
    cdef Py_ssize_t i, j, k
    cdef long long acc, x
    try:
        for i in range(r):
            for j in range(c):
                acc = 0
                for k in range(m):
                    x = ab[i * m + k]
                    if x:
                        acc = (acc + x * bb[k * c + j]) % pp
                ob[i * c + j] = acc
        out = tuple(tuple(ob[i * c + j] for j in range(c)) for i in range(r))
    finally:
        if ab != NULL:
            free(ab)
        if bb != NULL:
            free(bb)
        if ob != NULL:
            free(ob)
    return out


def residual(row, basis, pivots, p):
    cdef Py_ssize_t n = len(row)
    cdef long long pp = p
    cdef long long* v = <long long*> malloc(n * sizeof(long long))
    if v == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, c
    cdef long long f
    try:
        for i in range(n):
            v[i] = row[i]
        for i in range(len(basis)):
            c = pivots[i]
            f = v[c]
            if f:
                brow = basis[i]
                for j in range(c, n):
                    v[j] = (v[j] - f * <long long> brow[j]) % pp
                    if v[j] < 0:
                        v[j] += pp
        out = tuple(v[j] for j in range(n))
    finally:
        free(v)
    return out


def in_rowspace(row, basis, pivots, p):
    cdef Py_ssize_t n = len(row)
    cdef long long pp = p
    cdef long long* v = <long long*> malloc(n * sizeof(long long))
    if v == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, c
    cdef long long f
    cdef bint ok = True
    try:
        for i in range(n):
            v[i] = row[i]
        for i in range(len(basis)):
            c = pivots[i]
            f = v[c]
            if f:
                brow = basis[i]
                for j in range(c, n):
                    v[j] = (v[j] - f * <long long> brow[j]) % pp
                    if v[j] < 0:
                        v[j] += pp
        for j in range(n):
            if v[j] != 0:
                ok = False
                break
    finally:
        free(v)
    return ok


def nullspace(mat, ncols, p):
    basis, pivots = rref(mat, ncols, p)
    pivset = set(pivots)
    free_cols = [j for j in range(ncols) if j not in pivset]
    out = []
    for f in free_cols:
        v = [0] * ncols
        v[f] = 1
        for brow, c in zip(basis, pivots):
            v[c] = (-brow[f]) % p
        out.append(tuple(v))
    return tuple(out)
