"""Representations over prime fields: hom/ext computations and recipes.

A representation assigns an F_p vector space to each vertex and a matrix
to each arrow (shape dims[target] x dims[source], acting on column
vectors).  Subrepresentations are stored as per-vertex reduced row
echelon bases, which makes them canonical and cheap to compare.
"""

import random
from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .errors import InvalidSubrepresentation
from .quiver import Quiver, euler_form, vec_add

DEFAULT_GENERIC_PRIMES = (101, 103, 107)


def stable_rng(*parts):
    """Deterministic RNG keyed by integers, stable across processes."""
    return random.Random(":".join(str(x) for x in parts))


@dataclass(frozen=True)
class Representation:
    quiver: Quiver
    p: int
    dims: tuple
    matrices: tuple

    def __post_init__(self):
        self.quiver.check_dim_vector(self.dims)
        if len(self.matrices) != len(self.quiver.arrows):
            raise ValueError("one matrix per arrow required")
        for (s, t), mat in zip(self.quiver.arrows, self.matrices):
            if len(mat) != self.dims[t] or any(len(r) != self.dims[s] for r in mat):
                raise ValueError(f"matrix shape mismatch on arrow {(s, t)}")
            if any(not (0 <= x < self.p) for r in mat for x in r):
                raise ValueError("matrix entries must be reduced mod p")

    @property
    def total_dim(self):
        return sum(self.dims)

    def matrix_t(self, arrow_index):
        """Transpose of the arrow matrix, for acting on row vectors."""
        s, _ = self.quiver.arrows[arrow_index]
        return kernels.transpose(self.matrices[arrow_index], self.dims[s])


@dataclass(frozen=True)
class Subrep:
    """Arrow-stable tuple of subspaces, one rref row basis per vertex."""

    bases: tuple
    pivots: tuple

    @property
    def dims(self):
        return tuple(len(b) for b in self.bases)

    @property
    def total_dim(self):
        return sum(self.dims)


def zero_matrix(nrows, ncols):
    return tuple((0,) * ncols for _ in range(nrows))


def zero_representation(quiver, p):
    dims = (0,) * quiver.n
    return Representation(quiver, p, dims, tuple(zero_matrix(0, 0) for _ in quiver.arrows))


def simple_representation(quiver, i, p):
    dims = tuple(1 if j == i else 0 for j in range(quiver.n))
    mats = tuple(zero_matrix(dims[t], dims[s]) for s, t in quiver.arrows)
    return Representation(quiver, p, dims, mats)


def random_representation(quiver, dims, p, rng):
    quiver.check_dim_vector(dims)
    mats = []
    for s, t in quiver.arrows:
        mats.append(tuple(tuple(rng.randrange(p) for _ in range(dims[s]))
                          for _ in range(dims[t])))
    return Representation(quiver, p, dims, tuple(mats))


def _check_compatible(m, n):
    if m.quiver != n.quiver or m.p != n.p:
        raise ValueError("representations live over different quivers or fields")


def is_arrow_stable(rep, bases, pivots):
    for a, (s, t) in enumerate(rep.quiver.arrows):
        if not bases[s]:
            continue
        images = kernels.matmul(bases[s], rep.matrix_t(a), rep.p)
        for row in images:
            if not kernels.in_rowspace(row, bases[t], pivots[t], rep.p):
                return False
    return True


def make_subrep(rep, raw_bases, check=True):
    """Canonicalize per-vertex spanning sets into a Subrep of `rep`."""
    bases = []
    pivots = []
    for v in range(rep.quiver.n):
        b, piv = kernels.rref(tuple(raw_bases[v]), rep.dims[v], rep.p)
        bases.append(b)
        pivots.append(piv)
    sub = Subrep(tuple(bases), tuple(pivots))
    if check and not is_arrow_stable(rep, sub.bases, sub.pivots):
        raise InvalidSubrepresentation("subspaces are not stable under the arrows")
    return sub


def zero_subrep(rep):
    return Subrep(tuple(() for _ in range(rep.quiver.n)),
                  tuple(() for _ in range(rep.quiver.n)))


def full_subrep(rep):
    bases = []
    pivots = []
    for n in rep.dims:
        bases.append(tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n)))
        pivots.append(tuple(range(n)))
    return Subrep(tuple(bases), tuple(pivots))


def _coords_in_basis(row, basis, pivots, p):
    if any(kernels.residual(row, basis, pivots, p)):
        raise InvalidSubrepresentation("vector not in the subspace")
    return tuple(row[c] for c in pivots)


def restrict_to_sub(rep, sub):
    """The subrepresentation as a representation on the basis rows."""
    dims = sub.dims
    mats = []
    for a, (s, t) in enumerate(rep.quiver.arrows):
        images = kernels.matmul(sub.bases[s], rep.matrix_t(a), rep.p)
        cols = [_coords_in_basis(row, sub.bases[t], sub.pivots[t], rep.p)
                for row in images]
        mats.append(tuple(tuple(col[i] for col in cols) for i in range(dims[t])))
    return Representation(rep.quiver, rep.p, dims, tuple(mats))


def quotient(rep, sub):
    """Quotient representation on the non-pivot coordinates."""
    p = rep.p
    comp = [tuple(j for j in range(rep.dims[v]) if j not in set(sub.pivots[v]))
            for v in range(rep.quiver.n)]
    dims = tuple(len(c) for c in comp)

    def project(v, row):
        res = kernels.residual(row, sub.bases[v], sub.pivots[v], p)
        return tuple(res[j] for j in comp[v])

    mats = []
    for a, (s, t) in enumerate(rep.quiver.arrows):
        at = rep.matrix_t(a)
        cols = []
        for j in comp[s]:
            lift = tuple(1 if i == j else 0 for i in range(rep.dims[s]))
            image = kernels.matmul((lift,), at, p)[0]
            cols.append(project(t, image))
        mats.append(tuple(tuple(col[i] for col in cols) for i in range(dims[t])))
    return Representation(rep.quiver, p, dims, tuple(mats))


def direct_sum(m, n):
    _check_compatible(m, n)
    dims = vec_add(m.dims, n.dims)
    mats = []
    for a, (s, t) in enumerate(m.quiver.arrows):
        rows = []
        for r in m.matrices[a]:
            rows.append(tuple(r) + (0,) * n.dims[s])
        for r in n.matrices[a]:
            rows.append((0,) * m.dims[s] + tuple(r))
        mats.append(tuple(rows))
    return Representation(m.quiver, m.p, dims, tuple(mats))


def _hom_system(m, n):
    """Constraint matrix whose null space is Hom(M, N)."""
    nv = m.quiver.n
    offsets = []
    total = 0
    for v in range(nv):
        offsets.append(total)
        total += n.dims[v] * m.dims[v]
    rows = []
    for a, (s, t) in enumerate(m.quiver.arrows):
        ma = m.matrices[a]
        na = n.matrices[a]
        for r in range(n.dims[t]):
            for c in range(m.dims[s]):
                row = [0] * total
                # (phi_t @ M(a))[r, c] - (N(a) @ phi_s)[r, c] = 0
                for k in range(m.dims[t]):
                    row[offsets[t] + r * m.dims[t] + k] += ma[k][c]
                for k in range(n.dims[s]):
                    row[offsets[s] + k * m.dims[s] + c] -= na[r][k]
                rows.append(tuple(x % m.p for x in row))
    return tuple(rows), total, offsets


def hom_dim(m, n):
    """dim Hom_Q(M, N) over F_p."""
    _check_compatible(m, n)
    rows, total, _ = _hom_system(m, n)
    if total == 0:
        return 0
    return total - kernels.rank(rows, total, m.p)


def hom_basis(m, n):
    """Basis of Hom(M, N) as tuples of per-vertex matrices."""
    _check_compatible(m, n)
    rows, total, offsets = _hom_system(m, n)
    if total == 0:
        return ()
    null = kernels.nullspace(rows, total, m.p)
    out = []
    for vec in null:
        mats = []
        for v in range(m.quiver.n):
            o = offsets[v]
            mats.append(tuple(tuple(vec[o + r * m.dims[v] + c] for c in range(m.dims[v]))
                              for r in range(n.dims[v])))
        out.append(tuple(mats))
    return tuple(out)


def ext_dim_hereditary(m, n):
    """dim Ext^1 via hom - Euler form; valid for acyclic quivers only."""
    if not m.quiver.acyclic:
        raise ValueError("hereditary ext formula requires an acyclic quiver")
    e = hom_dim(m, n) - euler_form(m.quiver, m.dims, n.dims)
    if e < 0:
        raise AssertionError("negative ext: hereditary identity violated")
    return e


@dataclass(frozen=True)
class UniversalHom:
    """The canonical map h*C -> M built from a basis of Hom(C, M)."""

    maps: tuple
    domain: Representation
    image: Subrep
    kernel: Subrep

    @property
    def hom(self):
        return len(self.maps)


def universal_hom(c, m):
    _check_compatible(c, m)
    maps = hom_basis(c, m)
    h = len(maps)
    domain = c
    for _ in range(h - 1):
        domain = direct_sum(domain, c)
    if h == 0:
        domain = zero_representation(c.quiver, c.p)
    image_rows = []
    kernel_bases = []
    for v in range(c.quiver.n):
        stacked = []
        for phi in maps:
            stacked.extend(kernels.transpose(phi[v], c.dims[v]))
        image_rows.append(stacked)
        # Map h*C(v) -> M(v): columns grouped per hom-basis element.
        big = tuple(
            tuple(x for phi in maps for x in phi[v][r])
            for r in range(m.dims[v])
        )
        kernel_bases.append(kernels.nullspace(big, h * c.dims[v], c.p))
    image = make_subrep(m, image_rows)
    kernel = make_subrep(domain, kernel_bases) if h else zero_subrep(domain)
    return UniversalHom(maps, domain, image, kernel)


@dataclass(frozen=True)
class RepRecipe:
    """One integral or seeded model of a representation across primes.

    With explicit integer matrices, reduction mod p always returns the
    same object.  In seeded mode a fresh random representation is drawn
    per prime and certified generic by matching the generic
    endomorphism dimension sampled at large primes.
    """

    quiver: Quiver
    dims: tuple
    int_matrices: tuple = None
    seed: int = 0

    def __post_init__(self):
        self.quiver.check_dim_vector(self.dims)
        if any(d < 0 for d in self.dims):
            raise ValueError("dimension vector must be nonnegative")

    def at_prime(self, p, max_attempts=500):
        if self.int_matrices is not None:
            mats = tuple(tuple(tuple(x % p for x in row) for row in mat)
                         for mat in self.int_matrices)
            return Representation(self.quiver, p, self.dims, mats)
        target = _generic_end_dim(self)
        for attempt in range(max_attempts):
            rng = stable_rng(self.seed, p, attempt)
            rep = random_representation(self.quiver, self.dims, p, rng)
            if hom_dim(rep, rep) == target:
                return rep
        raise RuntimeError(f"no generic representation found mod {p} "
                           f"after {max_attempts} attempts")

    @classmethod
    def from_json(cls, data):
        quiver = Quiver.from_json(data)
        dims = tuple(int(d) for d in data["dims"])
        mats = None
        if "matrices" in data and data["matrices"]:
            raw = data["matrices"]
            mats = tuple(tuple(tuple(int(x) for x in row) for row in raw[str(i)])
                         for i in range(len(quiver.arrows)))
        return cls(quiver, dims, mats, int(data.get("seed", 0)))

    def to_json(self):
        out = self.quiver.to_json()
        out["dims"] = list(self.dims)
        out["seed"] = self.seed
        if self.int_matrices is not None:
            out["matrices"] = {
                str(i): [list(row) for row in mat]
                for i, mat in enumerate(self.int_matrices)
            }
        return out


@lru_cache(maxsize=None)
def _generic_end_dim(recipe, primes=DEFAULT_GENERIC_PRIMES, trials=6):
    best = None
    for p in primes:
        for i in range(trials):
            rng = stable_rng(recipe.seed, p, 1_000_000 + i)
            rep = random_representation(recipe.quiver, recipe.dims, p, rng)
            d = hom_dim(rep, rep)
            best = d if best is None else min(best, d)
    return best


def generic_hom_ext(quiver, a, b, trials=8, primes=DEFAULT_GENERIC_PRIMES, seed=0):
    """Generic (hom, ext) of dimension vectors by large-prime sampling.

    The generic hom is the minimum over the representation space, so the
    minimum over independent samples converges from above; ext follows
    from the Euler form.
    """
    if not quiver.acyclic:
        raise ValueError("generic hom/ext sampling requires an acyclic quiver")
    best = None
    for p in primes:
        for i in range(trials):
            rng = stable_rng(seed, p, i)
            m = random_representation(quiver, a, p, rng)
            n = random_representation(quiver, b, p, rng)
            h = hom_dim(m, n)
            best = h if best is None else min(best, h)
            if best == max(0, euler_form(quiver, a, b)):
                break
    ext = best - euler_form(quiver, a, b)
    return best, ext
