"""Homogeneous sets, primality, bi-modules, and vertex substitution.

Module search is brute force over pair closures, exact and fast at
n <= 32; the full modular decomposition tree is deliberately not built.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetError, DomainError
from .graphs import Graph, bits

BIMODULE_BUDGET = 16


def is_module(g, m):
    """No vertex outside m distinguishes two vertices of m."""
    outside = g.full_mask & ~m
    for v in bits(outside):
        inter = g.adj[v] & m
        if inter != 0 and inter != m:
            return False
    return True


def _closure(g, seed):
    """Smallest module containing the seed set: repeatedly absorb splitters."""
    m = seed
    changed = True
    while changed:
        changed = False
        for v in bits(g.full_mask & ~m):
            inter = g.adj[v] & m
            if inter != 0 and inter != m:
                m |= 1 << v
                changed = True
    return m


@dataclass(frozen=True)
class ModuleReport:
    maximal_homogeneous_sets: tuple
    is_prime: bool


def find_modules(g):
    """All maximal homogeneous sets (nontrivial modules), and primality.

    Disconnected graphs and graphs with disconnected complement have the
    complements of single (co-)components as their maximal homogeneous sets.
    With graph and complement both connected the maximal homogeneous sets
    are pairwise disjoint, so the one through a vertex u is the union of
    all proper pair closures through u.
    """
    full = g.full_mask
    comps = g.connected_components()
    if len(comps) == 1:
        comps = g.complement().connected_components()
    if len(comps) > 1:
        maximal = sorted(
            full & ~c for c in comps if (full & ~c).bit_count() >= 2
        )
        return ModuleReport(tuple(maximal), is_prime=not maximal)
    found = set()
    for u in range(g.n):
        m = 0
        for w in range(g.n):
            if w == u:
                continue
            c = _closure(g, (1 << u) | (1 << w))
            if c != full:
                m |= c
        if m.bit_count() >= 2:
            found.add(m)
    maximal = sorted(found)
    return ModuleReport(tuple(maximal), is_prime=not maximal)


def is_prime(g):
    if g.n <= 2:
        return True
    for v in range(g.n):
        for u in range(v + 1, g.n):
            if _closure(g, (1 << v) | (1 << u)) != g.full_mask:
                return False
    return True


@dataclass(frozen=True)
class BiModulePair:
    h1: int
    h2: int


def is_bimodule(g, h1, h2):
    """h1, h2 disjoint stable sides of a bipartite induced subgraph with no
    isolated vertices, each a module of the graph minus the other side."""
    if h1 == 0 or h2 == 0 or h1 & h2:
        return False
    for v in bits(h1):
        if g.adj[v] & h1:
            return False
        if not g.adj[v] & h2:
            return False
    for v in bits(h2):
        if g.adj[v] & h2:
            return False
        if not g.adj[v] & h1:
            return False
    outside = g.full_mask & ~(h1 | h2)
    for v in bits(outside):
        a = g.adj[v] & h1
        if a != 0 and a != h1:
            return False
        b = g.adj[v] & h2
        if b != 0 and b != h2:
            return False
    return True


def enumerate_bimodules(g):
    """All bi-modules, as BiModulePair with h1 < h2 numerically.

    Exhaustive over pairs of disjoint stable sets; exponential, so gated.
    """
    if g.n > BIMODULE_BUDGET:
        raise BudgetError(
            f"bi-module enumeration limited to {BIMODULE_BUDGET} vertices, got {g.n}"
        )
    from .stable import all_stable_sets

    stables = [s for s in all_stable_sets(g) if s]
    out = []
    for i, h1 in enumerate(stables):
        for h2 in stables:
            if h2 <= h1 or h1 & h2:
                continue
            if is_bimodule(g, h1, h2):
                out.append(BiModulePair(h1, h2))
    return out


def substitute(g1, v, g2):
    """Replace vertex v of g1 by the whole of g2 (the copy becomes a module).

    Vertex order of the result: g1's vertices except v, in order, then g2's.
    """
    if not 0 <= v < g1.n:
        raise DomainError(f"substitution vertex {v} out of range")
    keep = [u for u in range(g1.n) if u != v]
    pos = {u: i for i, u in enumerate(keep)}
    k = len(keep)
    n = k + g2.n
    adj = [0] * n
    for u in keep:
        for w in bits(g1.adj[u] & ~(1 << v)):
            adj[pos[u]] |= 1 << pos[w]
    for a in range(g2.n):
        adj[k + a] = g2.adj[a] << k
    attach = [pos[u] for u in bits(g1.adj[v])]
    for a in range(g2.n):
        for p in attach:
            adj[k + a] |= 1 << p
            adj[p] |= 1 << (k + a)
    return Graph(n, _adj=adj)
