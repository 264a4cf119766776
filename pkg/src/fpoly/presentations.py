"""Projective presentations over acyclic path algebras.

A weight vector delta splits as delta = delta_plus - delta_minus and a
presentation is a map d: P(delta_minus) -> P(delta_plus) between
projectives, stored by path coefficients.  From d we derive its
cokernel, the invariants (hom, e) against any representation (kernel
and cokernel dimensions of Hom(P_plus, N) -> Hom(P_minus, N)), and the
kernel of the Nakayama translate (which computes tau of the cokernel).
"""

from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .quiver import pos_neg_parts, vec_dot
from .rep import (Representation, make_subrep, quotient, restrict_to_sub,
                  stable_rng, zero_representation)


class PathBasis:
    """All directed paths of an acyclic quiver, as arrow-index tuples."""

    def __init__(self, quiver):
        if not quiver.acyclic:
            raise ValueError("path enumeration requires an acyclic quiver")
        self.quiver = quiver
        # between[i][j]: sorted paths from i to j (trivial path = ()).
        self.between = [[[] for _ in range(quiver.n)] for _ in range(quiver.n)]
        for i in range(quiver.n):
            stack = [((), i)]
            while stack:
                path, v = stack.pop()
                self.between[i][v].append(path)
                for a in quiver.arrows_from(v):
                    stack.append((path + (a,), quiver.arrows[a][1]))
        for row in self.between:
            for cell in row:
                cell.sort(key=lambda p: (len(p), p))

    def paths_between(self, i, j):
        return self.between[i][j]

    def proj_dims(self, i):
        """Dimension vector of the projective at vertex i."""
        return tuple(len(self.between[i][w]) for w in range(self.quiver.n))

    def inj_dims(self, i):
        """Dimension vector of the injective at vertex i."""
        return tuple(len(self.between[w][i]) for w in range(self.quiver.n))


@lru_cache(maxsize=None)
def path_basis(quiver):
    return PathBasis(quiver)


def projective_representation(quiver, i, p):
    """P_i on the basis of paths starting at i."""
    pb = path_basis(quiver)
    dims = pb.proj_dims(i)
    mats = []
    for a, (s, t) in enumerate(quiver.arrows):
        src = pb.paths_between(i, s)
        tgt = {path: r for r, path in enumerate(pb.paths_between(i, t))}
        mat = [[0] * len(src) for _ in range(len(tgt))]
        for c, path in enumerate(src):
            mat[tgt[path + (a,)]][c] = 1
        mats.append(tuple(tuple(r) for r in mat))
    return Representation(quiver, p, dims, tuple(mats))


def injective_representation(quiver, i, p):
    """I_i on the basis of paths ending at i; arrows strip their first step."""
    pb = path_basis(quiver)
    dims = pb.inj_dims(i)
    mats = []
    for a, (s, t) in enumerate(quiver.arrows):
        src = pb.paths_between(s, i)
        tgt = {path: r for r, path in enumerate(pb.paths_between(t, i))}
        mat = [[0] * len(src) for _ in range(len(tgt))]
        for c, path in enumerate(src):
            if path and path[0] == a:
                mat[tgt[path[1:]]][c] = 1
        mats.append(tuple(tuple(r) for r in mat))
    return Representation(quiver, p, dims, tuple(mats))


def _summands(quiver, beta):
    return tuple(i for i in range(quiver.n) for _ in range(beta[i]))


@dataclass(frozen=True)
class Presentation:
    """Map P(delta_minus) -> P(delta_plus) given by path coefficients.

    coeffs[u][v] lists (path, coefficient) pairs, where path runs from
    the vertex of the u-th plus-summand to the vertex of the v-th
    minus-summand.
    """

    quiver: object
    p: int
    delta: tuple
    coeffs: tuple

    @property
    def plus_summands(self):
        return _summands(self.quiver, pos_neg_parts(self.delta)[0])

    @property
    def minus_summands(self):
        return _summands(self.quiver, pos_neg_parts(self.delta)[1])


def random_presentation(quiver, delta, p, rng):
    """Presentation of weight delta with uniform path coefficients."""
    plus, minus = pos_neg_parts(delta)
    pb = path_basis(quiver)
    coeffs = []
    for i in _summands(quiver, plus):
        row = []
        for j in _summands(quiver, minus):
            row.append(tuple((path, rng.randrange(p))
                             for path in pb.paths_between(i, j)))
        coeffs.append(tuple(row))
    return Presentation(quiver, p, tuple(delta), tuple(coeffs))


def _sum_representation(quiver, p, summands, builder):
    reps = [builder(quiver, i, p) for i in summands]
    if not reps:
        return zero_representation(quiver, p)
    dims = tuple(sum(r.dims[w] for r in reps) for w in range(quiver.n))
    mats = []
    for a, (s, t) in enumerate(quiver.arrows):
        mat = [[0] * dims[s] for _ in range(dims[t])]
        ro = co = 0
        for r in reps:
            for i, row in enumerate(r.matrices[a]):
                for j, x in enumerate(row):
                    mat[ro + i][co + j] = x
            ro += r.dims[t]
            co += r.dims[s]
        mats.append(tuple(tuple(row) for row in mat))
    return Representation(quiver, p, dims, tuple(mats))


def _realize(pres):
    """Per-vertex matrices of d: P(minus) -> P(plus), plus the target rep."""
    quiver, p = pres.quiver, pres.p
    pb = path_basis(quiver)
    plus_s = pres.plus_summands
    minus_s = pres.minus_summands
    target = _sum_representation(quiver, p, plus_s, projective_representation)
    row_index = {}
    for w in range(quiver.n):
        idx = {}
        r = 0
        for u, i in enumerate(plus_s):
            for path in pb.paths_between(i, w):
                idx[(u, path)] = r
                r += 1
        row_index[w] = idx
    mats = []
    for w in range(quiver.n):
        ncols = sum(len(pb.paths_between(j, w)) for j in minus_s)
        mat = [[0] * ncols for _ in range(len(row_index[w]))]
        c = 0
        for v, j in enumerate(minus_s):
            for path in pb.paths_between(j, w):
                for u in range(len(plus_s)):
                    for q, coef in pres.coeffs[u][v]:
                        if coef:
                            r = row_index[w][(u, q + path)]
                            mat[r][c] = (mat[r][c] + coef) % p
                c += 1
        mats.append(tuple(tuple(row) for row in mat))
    return target, mats


def cokernel(pres):
    """Cokernel representation of the presentation."""
    target, mats = _realize(pres)
    image_rows = [kernels.transpose(mats[w], target.dims[w])
                  for w in range(pres.quiver.n)]
    image = make_subrep(target, image_rows)
    return quotient(target, image)


def _path_action(rep, path, start):
    """Matrix of the representation along a path (identity if trivial)."""
    n = rep.dims[start]
    mat = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    for a in path:
        mat = kernels.matmul(rep.matrices[a], mat, rep.p)
    return mat


def hom_e(pres, n_rep):
    """(dim kernel, dim cokernel) of Hom(P_plus, N) -> Hom(P_minus, N).

    Always satisfies hom - e = delta(dim N).
    """
    if n_rep.quiver != pres.quiver or n_rep.p != pres.p:
        raise ValueError("presentation and representation are incompatible")
    p = pres.p
    plus_s = pres.plus_summands
    minus_s = pres.minus_summands
    src_dim = sum(n_rep.dims[i] for i in plus_s)
    tgt_dim = sum(n_rep.dims[j] for j in minus_s)
    if src_dim == 0:
        return 0, tgt_dim
    mat = [[0] * src_dim for _ in range(tgt_dim)]
    co = 0
    for u, i in enumerate(plus_s):
        ro = 0
        for v, j in enumerate(minus_s):
            for path, coef in pres.coeffs[u][v]:
                if coef:
                    block = _path_action(n_rep, path, i)
                    for r in range(n_rep.dims[j]):
                        for c in range(n_rep.dims[i]):
                            mat[ro + r][co + c] = (
                                mat[ro + r][co + c] + coef * block[r][c]) % p
            ro += n_rep.dims[j]
        co += n_rep.dims[i]
    rank = kernels.rank(tuple(tuple(r) for r in mat), src_dim, p)
    return src_dim - rank, tgt_dim - rank


def nakayama_kernel(pres):
    """Kernel of the Nakayama translate nu(d): I(minus) -> I(plus).

    For a presentation with no negative summand this is tau of the
    cokernel of d.
    """
    quiver, p = pres.quiver, pres.p
    pb = path_basis(quiver)
    plus_s = pres.plus_summands
    minus_s = pres.minus_summands
    for v in range(len(minus_s)):
        if all(coef == 0 for u in range(len(plus_s))
               for _, coef in pres.coeffs[u][v]):
            raise ValueError("presentation has a negative summand P -> 0")
    source = _sum_representation(quiver, p, minus_s, injective_representation)
    kernel_rows = []
    for w in range(quiver.n):
        row_index = {}
        r = 0
        for u, i in enumerate(plus_s):
            for path in pb.paths_between(w, i):
                row_index[(u, path)] = r
                r += 1
        mat = [[0] * source.dims[w] for _ in range(r)]
        c = 0
        for v, j in enumerate(minus_s):
            for path in pb.paths_between(w, j):
                for u in range(len(plus_s)):
                    for q, coef in pres.coeffs[u][v]:
                        # nu strips the hom-path q off the end of `path`.
                        if coef and len(path) >= len(q) and path[len(path) - len(q):] == q:
                            rr = row_index[(u, path[:len(path) - len(q)])]
                            mat[rr][c] = (mat[rr][c] + coef) % p
                c += 1
        kernel_rows.append(kernels.nullspace(tuple(tuple(row) for row in mat),
                                             source.dims[w], p))
    sub = make_subrep(source, kernel_rows)
    return restrict_to_sub(source, sub)


def generic_hom_e(quiver, delta, recipe, trials=8,
                  primes=(101, 103, 107), seed=0):
    """Generic (hom(delta, M), e(delta, M)) by sampling presentations."""
    best = None
    for p in primes:
        n_rep = recipe.at_prime(p)
        for i in range(trials):
            rng = stable_rng(seed, p, i)
            d = random_presentation(quiver, delta, p, rng)
            h, _ = hom_e(d, n_rep)
            best = h if best is None else min(best, h)
            if best == max(0, vec_dot(delta, recipe.dims)):
                break
    return best, best - vec_dot(delta, recipe.dims)


def generic_cokernel(quiver, delta, p, trials=8, seed=0):
    """Cokernel of a rigidity-checked random presentation of weight delta.

    A sample d is accepted when e(d, Coker d) = 0 twice in a row; the
    orbit of rigid presentations is dense whenever one exists.
    """
    last = None
    for i in range(trials):
        rng = stable_rng(seed, p, i)
        d = random_presentation(quiver, delta, p, rng)
        coker = cokernel(d)
        last = (d, coker)
        if hom_e(d, coker)[1] == 0:
            rng2 = stable_rng(seed, p, i, 1)
            d2 = random_presentation(quiver, delta, p, rng2)
            if hom_e(d2, cokernel(d2))[1] == 0:
                return d, coker, True
    d, coker = last
    return d, coker, False
