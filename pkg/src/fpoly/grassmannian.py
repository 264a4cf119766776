"""Quiver Grassmannians over F_p: enumeration, point counts, tropical values.

Subrepresentations are enumerated vertex by vertex.  For acyclic quivers
the topological order guarantees that when a vertex is processed, the
images of the already-chosen subspaces along incoming arrows are known,
so only subspaces containing that span need to be considered.  At sinks
the choice constrains nothing downstream and enumeration collapses to a
Gaussian-binomial count when only cardinalities are needed.
"""

import itertools

from . import kernels
from .errors import CostCapExceeded
from .quiver import vec_dot
from .rep import Subrep

MAX_VERTEX_DIM = 8
MAX_TOTAL_DIM = 16


def check_cost(rep, allow_large=False):
    """Refuse enumerations whose subspace lattice is clearly too large."""
    if allow_large:
        return
    if max(rep.dims, default=0) > MAX_VERTEX_DIM or rep.total_dim > MAX_TOTAL_DIM:
        estimate = 1
        for n in rep.dims:
            estimate *= sum(kernels.gauss_binom(n, k, rep.p) for k in range(n + 1))
        raise CostCapExceeded(
            f"dimension vector {rep.dims} exceeds the enumeration cap "
            f"({MAX_VERTEX_DIM} per vertex, {MAX_TOTAL_DIM} total); "
            f"pass allow_large=True to override",
            estimate=estimate,
        )


def _vertex_plan(quiver):
    """Processing order plus per-vertex constraining and deferred arrows.

    Constraining arrows into a vertex come from already-processed sources;
    for acyclic quivers that is all of them.  Deferred arrows (only on
    quivers with cycles) are stability-checked once all choices are made.
    """
    order = quiver.topo_order if quiver.acyclic else tuple(range(quiver.n))
    pos = {v: i for i, v in enumerate(order)}
    constraining = {v: [] for v in order}
    deferred = []
    for a, (s, t) in enumerate(quiver.arrows):
        if pos[s] < pos[t]:
            constraining[t].append(a)
        else:
            deferred.append(a)
    return order, constraining, deferred


def _forced_subspace(rep, bases, arrows_in):
    """Span of the images of chosen source subspaces along given arrows."""
    stacked = []
    for a in arrows_in:
        s, _ = rep.quiver.arrows[a]
        if bases[s]:
            stacked.extend(kernels.matmul(bases[s], rep.matrix_t(a), rep.p))
    t = rep.quiver.arrows[arrows_in[0]][1] if arrows_in else None
    ncols = rep.dims[t] if t is not None else 0
    return kernels.rref(tuple(stacked), ncols, rep.p)


def _deferred_ok(rep, bases, pivots, deferred):
    for a in deferred:
        s, t = rep.quiver.arrows[a]
        if not bases[s]:
            continue
        for row in kernels.matmul(bases[s], rep.matrix_t(a), rep.p):
            if not kernels.in_rowspace(row, bases[t], pivots[t], rep.p):
                return False
    return True


def enumerate_subreps(rep, gamma, allow_large=False):
    """Yield every subrepresentation with dimension vector ``gamma``."""
    rep.quiver.check_dim_vector(gamma)
    check_cost(rep, allow_large)
    if any(g < 0 or g > d for g, d in zip(gamma, rep.dims)):
        return
    order, constraining, deferred = _vertex_plan(rep.quiver)
    p = rep.p
    bases = [None] * rep.quiver.n
    pivots = [None] * rep.quiver.n

    def recurse(i):
        if i == len(order):
            if _deferred_ok(rep, bases, pivots, deferred):
                yield Subrep(tuple(bases), tuple(pivots))
            return
        v = order[i]
        if constraining[v]:
            forced, forced_piv = _forced_subspace(rep, bases, constraining[v])
            if len(forced) > gamma[v]:
                return
            candidates = kernels.subspaces_containing(
                rep.dims[v], gamma[v], p, forced, forced_piv)
        else:
            candidates = kernels.subspaces(rep.dims[v], gamma[v], p)
        for basis in candidates:
            bases[v] = basis
            pivots[v] = tuple(_pivots_of(basis))
            yield from recurse(i + 1)
        bases[v] = None
        pivots[v] = None

    yield from recurse(0)


def _pivots_of(rref_basis):
    for row in rref_basis:
        for j, x in enumerate(row):
            if x:
                yield j
                break


def count_points(rep, gamma, allow_large=False):
    """|Gr_gamma(M)(F_p)|, with a closed-form shortcut at sinks."""
    rep.quiver.check_dim_vector(gamma)
    check_cost(rep, allow_large)
    if any(g < 0 or g > d for g, d in zip(gamma, rep.dims)):
        return 0
    order, constraining, deferred = _vertex_plan(rep.quiver)
    p = rep.p
    deferred_vertices = {rep.quiver.arrows[a][s_or_t]
                         for a in deferred for s_or_t in (0, 1)}
    bases = [None] * rep.quiver.n
    pivots = [None] * rep.quiver.n

    def is_free(v):
        # The choice at v matters later only through outgoing or deferred arrows.
        return not rep.quiver.arrows_from(v) and v not in deferred_vertices

    def recurse(i):
        if i == len(order):
            return 1 if _deferred_ok(rep, bases, pivots, deferred) else 0
        v = order[i]
        if constraining[v]:
            forced, forced_piv = _forced_subspace(rep, bases, constraining[v])
            w = len(forced)
            if w > gamma[v]:
                return 0
            if is_free(v):
                rest = recurse_skipping(i)
                return kernels.count_subspaces_containing(
                    rep.dims[v], gamma[v], p, w) * rest
            candidates = kernels.subspaces_containing(
                rep.dims[v], gamma[v], p, forced, forced_piv)
        else:
            if is_free(v):
                rest = recurse_skipping(i)
                return kernels.gauss_binom(rep.dims[v], gamma[v], p) * rest
            candidates = kernels.subspaces(rep.dims[v], gamma[v], p)
        total = 0
        for basis in candidates:
            bases[v] = basis
            pivots[v] = tuple(_pivots_of(basis))
            total += recurse(i + 1)
        bases[v] = None
        pivots[v] = None
        return total

    def recurse_skipping(i):
        # Continue past a free vertex without fixing its subspace.
        v = order[i]
        bases[v] = ()
        pivots[v] = ()
        result = recurse(i + 1)
        bases[v] = None
        pivots[v] = None
        return result

    return recurse(0)


def has_subrep(rep, gamma, allow_large=False):
    return count_points(rep, gamma, allow_large) > 0


def subrep_dim_vectors(rep, allow_large=False):
    """All dimension vectors of subrepresentations of one representation."""
    check_cost(rep, allow_large)
    found = set()
    for gamma in itertools.product(*(range(d + 1) for d in rep.dims)):
        if count_points(rep, gamma, allow_large) > 0:
            found.add(gamma)
    return frozenset(found)


def sub_dim_vectors(recipe, primes=(2, 3), allow_large=False):
    """Sub-dimension vectors of a recipe, certified across two primes."""
    results = [subrep_dim_vectors(recipe.at_prime(p), allow_large) for p in primes]
    if any(r != results[0] for r in results[1:]):
        raise RuntimeError(
            f"sub-dimension sets disagree across primes {primes}; "
            f"the recipe is not certified generic")
    return results[0]


def tropical_f(rep, delta, allow_large=False):
    """max over subrepresentations L of <delta, dim L>."""
    return max(vec_dot(delta, g) for g in subrep_dim_vectors(rep, allow_large))


def dual_tropical_f(rep, delta, allow_large=False):
    """Dual tropical value, via f^(delta) = f(-delta) + <delta, dim M>."""
    neg = tuple(-x for x in delta)
    return tropical_f(rep, neg, allow_large) + vec_dot(delta, rep.dims)


def maximizer_dims(rep, delta, allow_large=False):
    """Dimension vectors of subrepresentations attaining the tropical max."""
    dims = subrep_dim_vectors(rep, allow_large)
    best = max(vec_dot(delta, g) for g in dims)
    return frozenset(g for g in dims if vec_dot(delta, g) == best)


def unique_subrep(rep, gamma, allow_large=False):
    """The unique subrepresentation of dimension ``gamma``, or None."""
    found = None
    for sub in enumerate_subreps(rep, gamma, allow_large):
        if found is not None:
            return None
        found = sub
    return found
