"""Canonical forms and isomorphism for small graphs.

Individualization-refinement search over equitable ordered partitions.
The canonical form is the lexicographically smallest relabeled adjacency
matrix over the leaves of the search tree; automorphisms discovered from
equal leaf certificates prune sibling branches, which keeps the search
shallow on the very symmetric graphs this package cares about.

Two graphs have equal canonical forms iff they are isomorphic, for every
pair of graphs on up to 32 vertices.
"""

from __future__ import annotations

from .errors import BudgetError
from .graphs import Graph, bits, to_graph6

_LEAF_CAP = 2_000_000


def _refine(adj, cells):
    """Equitable refinement of an ordered partition (list of cell masks)."""
    work = list(cells)
    queue = list(work)
    while queue:
        splitter = queue.pop()
        out = []
        for c in work:
            if c.bit_count() == 1:
                out.append(c)
                continue
            groups = {}
            for v in bits(c):
                k = (adj[v] & splitter).bit_count()
                groups[k] = groups.get(k, 0) | (1 << v)
            if len(groups) == 1:
                out.append(c)
            else:
                parts = [groups[k] for k in sorted(groups)]
                out.extend(parts)
                queue.extend(parts)
        work = out
    return work


def _leaf_certificate(adj, cells):
    n = len(adj)
    perm = [0] * n
    for pos, c in enumerate(cells):
        perm[c.bit_length() - 1] = pos
    rows = [0] * n
    for v in range(n):
        m = 0
        a = adj[v]
        while a:
            b = a & -a
            m |= 1 << perm[b.bit_length() - 1]
            a ^= b
        rows[perm[v]] = m
    return tuple(rows), perm


class _CanonSearch:
    def __init__(self, g):
        self.adj = g.adj
        self.n = g.n
        self.best = None
        self.best_perm = None
        self.autos = []
        self.leaves = 0

    def run(self):
        cells = _refine(self.adj, [(1 << self.n) - 1])
        self._search(cells, [])
        return self.best, self.best_perm

    def _in_orbit_of_tried(self, prefix, tried, v):
        """Is v reachable from an explored sibling via automorphisms fixing prefix?

        self.autos stores each discovered automorphism together with its
        inverse, so forward closure realizes the generated group's orbits.
        """
        gens = [a for a in self.autos if all(a[p] == p for p in prefix)]
        if not gens:
            return False
        closure = set(tried)
        frontier = list(tried)
        while frontier:
            x = frontier.pop()
            for a in gens:
                y = a[x]
                if y == v:
                    return True
                if y not in closure:
                    closure.add(y)
                    frontier.append(y)
        return False

    def _search(self, cells, prefix):
        target = None
        for i, c in enumerate(cells):
            k = c.bit_count()
            if k > 1 and (target is None or k < cells[target].bit_count()):
                target = i
        if target is None:
            self.leaves += 1
            if self.leaves > _LEAF_CAP:
                raise BudgetError("canonical form search exceeded leaf budget")
            cert, perm = _leaf_certificate(self.adj, cells)
            if self.best is None or cert < self.best:
                self.best = cert
                self.best_perm = perm
            elif cert == self.best:
                # perm and best_perm reach the same labeling: an automorphism
                inv = [0] * self.n
                for v, p in enumerate(self.best_perm):
                    inv[p] = v
                auto = tuple(inv[perm[v]] for v in range(self.n))
                if any(auto[v] != v for v in range(self.n)) and auto not in self.autos:
                    ainv = [0] * self.n
                    for v, w in enumerate(auto):
                        ainv[w] = v
                    self.autos.append(auto)
                    self.autos.append(tuple(ainv))
            return
        cell = cells[target]
        tried = []
        for v in bits(cell):
            if tried and self._in_orbit_of_tried(prefix, tried, v):
                continue
            rest = cell & ~(1 << v)
            sub = cells[:target] + [1 << v, rest] + cells[target + 1 :]
            self._search(_refine(self.adj, sub), prefix + [v])
            tried.append(v)


def canonical_form(g):
    """Total-order key of the isomorphism class of ``g``."""
    cert, _ = _CanonSearch(g).run()
    return (g.n, cert)


def canonical_permutation(g):
    """A relabeling realizing the canonical form (v of g -> perm[v])."""
    _, perm = _CanonSearch(g).run()
    return perm


def canonical_graph(g):
    """The canonically relabeled copy of ``g`` (labels dropped)."""
    n, cert = canonical_form(g)
    return Graph(n, _adj=cert)


def canonical_key(g):
    """Compact string key (graph6 of the canonical relabeling)."""
    return to_graph6(canonical_graph(g))


def is_isomorphic(g1, g2):
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    if sorted(map(g1.degree, range(g1.n))) != sorted(map(g2.degree, range(g2.n))):
        return False
    return canonical_form(g1) == canonical_form(g2)
