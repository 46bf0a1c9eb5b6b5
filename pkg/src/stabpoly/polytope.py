"""Exact facet enumeration of STAB(G), full facets, certificates, and the
structural predicates on facet-inducing graphs.

STAB(G) is full-dimensional and down-monotone, so its nontrivial facets
(all coefficients nonnegative, positive right-hand side) correspond to the
componentwise-maximal vertices of the antiblocker
{y >= 0 : y . s <= 1 for every maximal stable incidence vector s}.
``stab_facets`` therefore runs the double description cone engine on the
homogenized antiblocker, keeps the maximal vertices, and prepends the
nonnegativity rows.  A direct lift of all stable-set incidence vectors is
kept as ``stab_facets_reference`` for cross-validation at small sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .dd import DEFAULT_RAY_CAP, extreme_rays
from .errors import BudgetError, DomainError, StabpolyError
from .exactla import RankTracker
from .graphs import bits
from .linsys import FACET, Inequality, LinearSystem
from .stable import all_stable_sets, maximal_cliques, maximal_stable_sets

HULL_BUDGET = 18


def _antiblocker_rays(g, ray_cap):
    n = g.n
    stable = maximal_stable_sets(g)
    rows = [tuple(-1 if j == v else 0 for j in range(n + 1)) for v in range(n)]
    # strongest cuts first keeps the intermediate ray count down; the order is
    # still a pure function of the graph
    rows += sorted(
        (tuple((s >> j & 1) for j in range(n)) + (-1,) for s in stable),
        key=lambda r: (-sum(r[:n]), r),
    )
    rays = extreme_rays(rows, ray_cap=ray_cap)
    return stable, rays


def _maximal_vertices(n, stable, rays):
    """Rays (y, t) whose antiblocker point y/t is componentwise maximal:
    every coordinate lies in some tight maximal-stable row."""
    ray_np = np.array(rays, dtype=np.int64)
    srows = np.zeros((len(stable), n + 1), dtype=np.int64)
    for i, s in enumerate(stable):
        for v in bits(s):
            srows[i, v] = 1
        srows[i, n] = -1
    tight = ray_np @ srows.T == 0  # rays x stable rows
    contains = np.zeros((len(stable), n), dtype=bool)
    for i, s in enumerate(stable):
        for v in bits(s):
            contains[i, v] = True
    covered = tight @ contains  # boolean matrix product: any tight row with v
    keep = covered.all(axis=1)
    return [rays[i] for i in np.nonzero(keep)[0]]


@lru_cache(maxsize=64)
def _stab_facets_cached(g, budget_vertices, ray_cap):
    if g.n > budget_vertices:
        raise BudgetError(
            f"facet enumeration budget is {budget_vertices} vertices, got {g.n}"
        )
    cached = _disk_cache_load(g, ray_cap)
    if cached is not None:
        return cached
    n = g.n
    stable, rays = _antiblocker_rays(g, ray_cap)
    if any(r[n] <= 0 for r in rays):
        raise StabpolyError("antiblocker produced a recession ray; polytope bug")
    facets = _maximal_vertices(n, stable, rays)
    rows = [Inequality.nonnegativity(n, v) for v in range(n)]
    for r in facets:
        coeffs, rhs = r[:n], r[n]
        if rhs <= 0 or any(c < 0 for c in coeffs):
            raise StabpolyError("facet row with nonpositive rhs; polytope bug")
        rows.append(Inequality(tuple(coeffs), rhs, FACET))
    out = LinearSystem(n, tuple(rows))
    _disk_cache_store(g, ray_cap, out)
    return out


def _disk_cache_path(g, ray_cap):
    import os

    cache_dir = os.environ.get("STABPOLY_CACHE_DIR")
    if not cache_dir or g.n < 13:
        return None
    from .graphs import to_graph6
    import hashlib

    key = hashlib.sha256(f"{to_graph6(g)}|{ray_cap}".encode()).hexdigest()[:24]
    return os.path.join(cache_dir, f"hull-{key}.json")


def _disk_cache_load(g, ray_cap):
    import os

    path = _disk_cache_path(g, ray_cap)
    if path is None or not os.path.exists(path):
        return None
    with open(path, encoding="utf-8") as f:
        return LinearSystem.from_json(f.read())


def _disk_cache_store(g, ray_cap, sys_):
    import os

    path = _disk_cache_path(g, ray_cap)
    if path is None:
        return
    os.makedirs(os.path.dirname(path), exist_ok=True)
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as f:
        f.write(sys_.to_json())
    os.replace(tmp, path)


def stab_facets(g, budget_vertices=HULL_BUDGET, ray_cap=DEFAULT_RAY_CAP):
    """The unique minimal defining system of STAB(g), nonnegativity included.

    Facet rows are primitive-integer and sorted by coefficient vector; the
    result is deterministic and cached.
    """
    return _stab_facets_cached(g, budget_vertices, ray_cap)


def stab_facets_reference(g):
    """Same system computed from the polar cone over all stable sets;
    exponential in n, for cross-validation on small graphs only."""
    n = g.n
    rows = [
        tuple([1] + [(s >> j) & 1 for j in range(n)]) for s in all_stable_sets(g)
    ]
    rays = extreme_rays(rows)
    out = []
    for r in rays:
        rhs, coeffs = r[0], r[1:]
        # polar rays are (-b, c) with c . x <= b valid
        out.append(Inequality.from_rational(coeffs, -rhs))
    nn = []
    facet = []
    for ineq in out:
        if ineq.rhs == 0 and sum(ineq.coeffs) == -1 and min(ineq.coeffs) == -1:
            nn.append(Inequality.nonnegativity(n, ineq.coeffs.index(-1)))
        else:
            facet.append(ineq)
    nn.sort(key=lambda i: i.coeffs.index(-1))
    facet.sort(key=lambda i: (i.coeffs, i.rhs))
    return LinearSystem(n, tuple(nn + facet))


def full_facets(g, budget_vertices=HULL_BUDGET, ray_cap=DEFAULT_RAY_CAP):
    """Phi(g): the facet rows with full support, in primitive integer form
    (use .normalized() for the rhs = 1 rational view)."""
    sys_ = stab_facets(g, budget_vertices, ray_cap)
    full = sys_.full_rows()
    for row in full:
        if row.rhs <= 0:
            raise StabpolyError("full facet with nonpositive rhs; polytope bug")
    return full


# -- facet verification and certificates ------------------------------------


def is_valid_inequality(g, ineq, stable=None):
    if stable is None:
        stable = all_stable_sets(g)
    return all(ineq.evaluate_mask(s) <= ineq.rhs for s in stable)


def is_facet_row(g, ineq, stable=None):
    """Exact facet test: valid, and the tight stable sets span affine
    dimension n-1 (rank n of homogenized tight vectors)."""
    if stable is None:
        stable = all_stable_sets(g)
    if not is_valid_inequality(g, ineq, stable):
        return False
    tracker = RankTracker(g.n + 1)
    for s in stable:
        if ineq.is_tight_mask(s):
            tracker.try_add([1] + [(s >> j) & 1 for j in range(g.n)])
            if tracker.rank == g.n:
                return True
    return False


@dataclass(frozen=True)
class FacetCertificate:
    """Nonsingular 0/1 matrix of maximal stable incidence rows with
    M . coeffs = rhs . ones (the facet-inducing witness)."""

    row_masks: tuple  # n maximal stable sets, as masks
    coeffs: tuple  # primitive integer facet coefficients
    rhs: int

    def matrix(self, n):
        return [[(m >> j) & 1 for j in range(n)] for m in self.row_masks]

    def verify(self, g):
        n = g.n
        if len(self.row_masks) != n:
            return False
        maximal = set(maximal_stable_sets(g))
        if any(m not in maximal for m in self.row_masks):
            return False
        if any(c == 0 for c in self.coeffs):
            return False
        rows = self.matrix(n)
        tracker = RankTracker(n)
        for r in rows:
            tracker.try_add(r)
        if tracker.rank != n:
            return False
        return all(
            sum(r[j] * self.coeffs[j] for j in range(n)) == self.rhs for r in rows
        )


def certificate_for_full_facet(g, ineq):
    """Certificate rows: lexicographically smallest n tight maximal stable
    sets of the full facet achieving full rank (greedy with rank updates).

    Every tight stable set of a full facet is maximal, since all
    coefficients are positive and extending a tight set would violate
    validity.
    """
    n = g.n
    tight = [s for s in all_stable_sets(g) if ineq.is_tight_mask(s)]
    tight.sort()
    tracker = RankTracker(n)
    chosen = []
    for s in tight:
        if tracker.try_add([(s >> j) & 1 for j in range(n)]):
            chosen.append(s)
            if len(chosen) == n:
                break
    if len(chosen) != n:
        raise StabpolyError("full facet without full-rank tight family; polytope bug")
    return FacetCertificate(tuple(chosen), ineq.coeffs, ineq.rhs)


def is_facet_inducing(g, budget_vertices=HULL_BUDGET, ray_cap=DEFAULT_RAY_CAP):
    """A FacetCertificate for the first full facet, or None when Phi(g) is
    empty."""
    full = full_facets(g, budget_vertices, ray_cap)
    if not full:
        return None
    return certificate_for_full_facet(g, full[0])


def critical_vertices(g, cert):
    """Vertices whose certificate matrix column has exactly one 1; relative
    to the given certificate."""
    if not cert.verify(g):
        raise DomainError("invalid facet certificate for this graph")
    out = []
    for v in range(g.n):
        if sum((m >> v) & 1 for m in cert.row_masks) == 1:
            out.append(v)
    return out


# -- structural predicates ---------------------------------------------------


def has_clique_cutset(g):
    """A clique whose removal disconnects the graph (smallest, then lexicographic),
    or None."""
    base = len(g.connected_components())
    cliques = set()
    for q in maximal_cliques(g):
        stack = [q]
        while stack:
            c = stack.pop()
            if c in cliques:
                continue
            cliques.add(c)
            m = c
            while m:
                b = m & -m
                m ^= b
                if c ^ b:
                    stack.append(c ^ b)
    for q in sorted(cliques, key=lambda c: (c.bit_count(), c)):
        if q == 0 or q == g.full_mask:
            continue
        if len(g.connected_components(within=g.full_mask & ~q)) > base:
            return q
    return None


def _degree2_pairs(g):
    for v in range(g.n):
        if g.degree(v) == 2:
            a, b = bits(g.adj[v])
            if not g.has_edge(a, b):
                yield v, a, b


def check_mahjoub(g, phi, stable=None):
    """Degree-2 vertices with nonadjacent neighbors have coefficients at
    most either neighbor's, on a full facet."""
    if stable is None:
        stable = all_stable_sets(g)
    if not (phi.is_full() and is_facet_row(g, phi, stable)):
        raise DomainError("inequality is not a full facet of this polytope")
    for v, a, b in _degree2_pairs(g):
        if phi.coeffs[v] > phi.coeffs[a] or phi.coeffs[v] > phi.coeffs[b]:
            return False
    return True


def check_degree2_tightset(g, phi, stable=None):
    """Every degree-2 vertex with nonadjacent neighbors a,b admits a tight
    maximal stable set containing both a and b."""
    if stable is None:
        stable = all_stable_sets(g)
    if not (phi.is_full() and is_facet_row(g, phi, stable)):
        raise DomainError("inequality is not a full facet of this polytope")
    tight = [s for s in stable if phi.is_tight_mask(s)]
    for v, a, b in _degree2_pairs(g):
        want = (1 << a) | (1 << b)
        if not any(s & want == want for s in tight):
            return False
    return True


def check_repeating_rank(g, h):
    """g[h] holds |h| maximal stable sets with linearly independent
    incidence vectors."""
    if h == 0:
        raise DomainError("empty vertex set")
    sub = g.induced(h)
    tracker = RankTracker(sub.n)
    for s in maximal_stable_sets(sub):
        tracker.try_add([(s >> j) & 1 for j in range(sub.n)])
        if tracker.rank == sub.n:
            return True
    return False
