"""Substitution products of defining systems and clique-join facet families.

The substitution product keeps the classical shape: nonnegativity for all
surviving variables plus one row per pair of nontrivial rows of the two
systems.  The raw product can carry redundant rows, so the minimal system
is recovered exactly by converting to vertices and back.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainError
from .graphs import Graph, bits, mask_of
from .linsys import FACET, Inequality, LinearSystem
from .dd import extreme_rays
from .stable import maximal_cliques
from .recognition import find_paw, find_induced_path


def vertices_of_system(sys_):
    """Vertices of the (bounded, full-dimensional) polyhedron of the system,
    as tuples of Fractions."""
    rows = [tuple(r.coeffs) + (-r.rhs,) for r in sys_.rows]
    rows.append(tuple([0] * sys_.n + [-1]))
    rays = extreme_rays(rows)
    out = []
    for r in rays:
        if r[-1] <= 0:
            raise DomainError("system is unbounded; vertex conversion needs a polytope")
        t = r[-1]
        out.append(tuple(Fraction(x, t) for x in r[:-1]))
    return sorted(out)


def minimal_system_from_vertices(n, points):
    """The unique minimal defining system of conv(points), a full-dimensional
    polytope; nonnegativity rows are recognized and tagged."""
    den = 1
    for p in points:
        for x in p:
            f = Fraction(x)
            den = den * f.denominator // gcd(den, f.denominator)
    rows = []
    for p in points:
        rows.append(tuple([den] + [int(Fraction(x) * den) for x in p]))
    rays = extreme_rays(rows)
    nn = []
    facet = []
    for r in rays:
        rhs, coeffs = -r[0], r[1:]
        ineq = Inequality.from_rational(coeffs, rhs)
        cs = ineq.coeffs
        if ineq.rhs == 0 and sum(cs) == -1 and min(cs) == -1:
            nn.append(Inequality.nonnegativity(n, cs.index(-1)))
        else:
            facet.append(ineq)
    nn.sort(key=lambda i: i.coeffs.index(-1))
    facet.sort(key=lambda i: (i.coeffs, i.rhs))
    return LinearSystem(n, tuple(nn + facet))


def chvatal_substitute(sys1, v, sys2):
    """Defining system of the polytope obtained by substituting sys2's graph
    for vertex v of sys1's graph, reduced to the minimal system.

    Variable order of the result: sys1's variables except v (in order),
    then sys2's variables.
    """
    n1, n2 = sys1.n, sys2.n
    if not 0 <= v < n1:
        raise DomainError(f"substitution vertex {v} out of range")
    keep = [u for u in range(n1) if u != v]
    n = n1 - 1 + n2
    raw = [Inequality.nonnegativity(n, u) for u in range(n)]
    seen = set()
    for r1 in sys1.facet_rows():
        apos = max(r1.coeffs[v], 0)
        left = [r1.coeffs[u] for u in keep]
        for r2 in sys2.facet_rows():
            coeffs = [r2.rhs * c for c in left] + [apos * c for c in r2.coeffs]
            rhs = r1.rhs * r2.rhs
            ineq = Inequality.from_rational(coeffs, rhs)
            key = (ineq.coeffs, ineq.rhs)
            if key not in seen:
                seen.add(key)
                raw.append(ineq)
    pts = vertices_of_system(LinearSystem(n, tuple(raw)))
    return minimal_system_from_vertices(n, pts)


@dataclass(frozen=True)
class CliqueJoinExtension:
    """An induced copy of a catalog graph plus a clique fully joined to it."""

    core: int  # image vertex mask of the embedded copy
    embedding: tuple  # embedding[i] = host vertex of pattern vertex i
    clique: int  # clique mask, possibly empty
    maximal: bool


def induced_embeddings(g, f):
    """Induced embeddings of f into g, one per image vertex set.

    Full facets of the pattern are closed under its automorphisms, so one
    witness embedding per image suffices for facet generation.
    """
    if f.n > g.n:
        return []
    order = sorted(range(f.n), key=lambda v: -f.degree(v))
    images = {}
    assign = [-1] * f.n
    used = 0

    def rec(pos):
        nonlocal used
        if pos == f.n:
            img = mask_of(assign)
            if img not in images:
                images[img] = tuple(assign)
            return
        p = order[pos]
        for h in range(g.n):
            if used >> h & 1:
                continue
            ok = True
            for q in order[:pos]:
                if f.has_edge(p, q) != g.has_edge(h, assign[q]):
                    ok = False
                    break
            if ok:
                assign[p] = h
                used |= 1 << h
                rec(pos + 1)
                used &= ~(1 << h)
                assign[p] = -1

    rec(0)
    return [(img, emb) for img, emb in sorted(images.items())]


def enumerate_clique_join_extensions(g, f):
    """C(F,G) candidates with maximal join-cliques, flagged for membership
    in C*(F,G) (the set-maximal elements)."""
    if g.n > 30:
        raise DomainError("clique-join enumeration limited to hosts with <= 30 vertices")
    cands = []
    for img, emb in induced_embeddings(g, f):
        joint = g.full_mask & ~img
        for w in bits(img):
            joint &= g.adj[w]
        if joint == 0:
            cands.append((img, emb, 0))
        else:
            sub = g.induced(joint)
            lift = bits(joint)
            for q in maximal_cliques(sub):
                cands.append((img, emb, mask_of(lift[i] for i in bits(q))))
    out = []
    for img, emb, q in cands:
        h = img | q
        maximal = not any(
            h != (i2 | q2) and h | i2 | q2 == i2 | q2 for i2, _, q2 in cands
        )
        out.append(CliqueJoinExtension(img, emb, q, maximal))
    return out


def lifted_rows(g, f, phi_rows, extensions=None):
    """Facet rows of STAB(g) from full facets of the pattern f composed onto
    each maximal clique-join extension: pattern coefficients on the image,
    the pattern rhs on each clique vertex."""
    if extensions is None:
        extensions = enumerate_clique_join_extensions(g, f)
    rows = set()
    for ext in extensions:
        if not ext.maximal:
            continue
        for phi in phi_rows:
            coeffs = [0] * g.n
            for i, hv in enumerate(ext.embedding):
                coeffs[hv] = phi.coeffs[i]
            for v in bits(ext.clique):
                coeffs[v] = phi.rhs
            rows.add((tuple(coeffs), phi.rhs))
    return [Inequality(c, r, FACET) for c, r in sorted(rows)]


def defining_system_p6paw(g, catalog):
    """Minimal defining system of STAB(g) for (P6,paw)-free g, assembled from
    maximal cliques and the catalog's full-facet families."""
    paw = find_paw(g)
    if paw is not None:
        raise DomainError(f"graph is not paw-free: paw on vertices {bits(paw)}")
    p6 = find_induced_path(g, 6) if g.n >= 6 else None
    if p6 is not None:
        raise DomainError(f"graph is not P6-free: induced path on vertices {bits(p6)}")
    rows = [Inequality.nonnegativity(g.n, v) for v in range(g.n)]
    facet = set()
    for q in maximal_cliques(g):
        coeffs = tuple(1 if q >> j & 1 else 0 for j in range(g.n))
        facet.add((coeffs, 1))
    for entry in catalog:
        if entry.graph.n <= 2 or entry.graph.n > g.n:
            continue
        for ineq in lifted_rows(g, entry.graph, entry.phi):
            facet.add((ineq.coeffs, ineq.rhs))
    rows.extend(Inequality(c, r, FACET) for c, r in sorted(facet))
    return LinearSystem(g.n, tuple(rows))


def closure_check(catalog, budget_vertices=18):
    """Every prime facet-support class of every catalog member must itself be
    a catalog class (the closure property behind constant-catalog separation)."""
    from .polytope import stab_facets
    from .modular import is_prime
    from .canon import canonical_form

    keys = {entry.canonical for entry in catalog}
    for entry in catalog:
        sys_ = stab_facets(entry.graph, budget_vertices=budget_vertices)
        supports = {r.support() for r in sys_.facet_rows()}
        for w in supports:
            if w.bit_count() < 2:
                continue
            sub = entry.graph.induced(w)
            if not is_prime(sub):
                continue
            if canonical_form(sub) not in keys:
                return False
    return True
