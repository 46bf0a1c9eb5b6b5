"""Exhaustive generation of small graphs up to isomorphism.

Vertex-addition generation: level n is built by attaching a new vertex to
every graph of level n-1 with every admissible neighborhood, deduplicating
canonically.  Works for any hereditary family whose membership survives
vertex deletion; the neighborhood filter only prunes.
"""

from __future__ import annotations

from functools import lru_cache

from .canon import canonical_form, canonical_graph
from .graphs import Graph, bits
from .stable import _all_stable

_SINGLE = Graph(1)


def _extend(level, neighborhoods):
    """All canonical graphs obtained by adding one vertex; neighborhoods(g)
    yields admissible neighbor masks for the new vertex."""
    out = {}
    for g in level:
        n = g.n
        for m in neighborhoods(g):
            adj = list(g.adj) + [m]
            for v in bits(m):
                adj[v] |= 1 << n
            h = Graph(n + 1, _adj=adj)
            cf = canonical_form(h)
            if cf not in out:
                out[cf] = canonical_graph(h)
    return sorted(out.values(), key=canonical_form)


def _all_masks(g):
    return range(1 << g.n)


@lru_cache(maxsize=None)
def all_graphs(n):
    """Every graph on n vertices up to isomorphism (canonical representatives)."""
    if n == 1:
        return [_SINGLE]
    return _extend(all_graphs(n - 1), _all_masks)


@lru_cache(maxsize=None)
def triangle_free_graphs(n):
    """Triangle-free graphs up to isomorphism: the new vertex may only see a
    stable set."""
    if n == 1:
        return [_SINGLE]

    def stable_masks(g):
        return _all_stable(g.adj, g.full_mask)

    return _extend(triangle_free_graphs(n - 1), stable_masks)


@lru_cache(maxsize=None)
def bipartite_graphs(n):
    if n == 1:
        return [_SINGLE]
    level = _extend(bipartite_graphs(n - 1), _all_masks)
    from .recognition import bipartition

    return [g for g in level if bipartition(g) is not None]


def connected(graphs):
    return [g for g in graphs if g.is_connected()]


def connected_graphs(n):
    return connected(all_graphs(n))


def connected_bipartite_p6_free_graphs(n):
    from .recognition import contains_induced_path

    return [
        g
        for g in connected(bipartite_graphs(n))
        if not contains_induced_path(g, 6)
    ]
