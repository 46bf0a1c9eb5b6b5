"""Forbidden-induced-subgraph tests and the special graph families.

Witness sets are returned alongside failed "free" tests so callers can
surface readable errors.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import DomainError
from .graphs import Graph, bits, mask_of

TRIANGLE_FREE = "triangle-free"
COMPLETE_MULTIPARTITE = "complete-multipartite"


def find_induced_path(g, k):
    """A vertex mask inducing a path on k vertices, or None.

    Depth-first extension of induced paths: a new endpoint must be adjacent
    to the current endpoint and to no earlier path vertex.
    """
    if not 2 <= k <= g.n:
        raise DomainError(f"induced path length must be in 2..{g.n}, got {k}")
    adj = g.adj

    def extend(path_mask, closed, last, length):
        # closed: vertices adjacent to an interior vertex, forbidden forever
        if length == k:
            return path_mask
        cand = adj[last] & ~closed & ~path_mask
        while cand:
            b = cand & -cand
            v = b.bit_length() - 1
            cand ^= b
            got = extend(path_mask | b, closed | adj[last], v, length + 1)
            if got:
                return got
        return None

    for v in range(g.n):
        got = extend(1 << v, 0, v, 1)
        if got:
            return got
    return None


def contains_induced_path(g, k):
    if k > g.n:
        return False
    return find_induced_path(g, k) is not None


def find_triangle(g):
    """A vertex mask of an induced K3, or None."""
    for v in range(g.n):
        for u in bits(g.adj[v]):
            if u <= v:
                continue
            common = g.adj[v] & g.adj[u]
            if common:
                w = (common & -common).bit_length() - 1
                return (1 << v) | (1 << u) | (1 << w)
    return None


def is_triangle_free(g):
    return find_triangle(g) is None


def find_paw(g):
    """A vertex mask of an induced paw (triangle plus a pendant), or None."""
    for v in range(g.n):
        for u in bits(g.adj[v]):
            if u <= v:
                continue
            for w in bits(g.adj[v] & g.adj[u]):
                if w <= u:
                    continue
                tri = (1 << v) | (1 << u) | (1 << w)
                outside = g.full_mask & ~tri
                for d in bits(outside):
                    if (g.adj[d] & tri).bit_count() == 1:
                        return tri | (1 << d)
    return None


def is_paw_free(g):
    return find_paw(g) is None


def is_p6_triangle_free(g):
    return is_triangle_free(g) and not contains_induced_path(g, 6)


def is_p6_paw_free(g):
    return is_paw_free(g) and not contains_induced_path(g, 6)


def complete_multipartite_parts(g):
    """The stable-set parts if g is complete multipartite, else None.

    g is complete multipartite iff the complement is a disjoint union of
    cliques; the parts are the complement's components.
    """
    co = g.complement()
    parts = []
    for comp in co.connected_components():
        for v in bits(comp):
            if co.adj[v] & comp != comp & ~(1 << v):
                return None
        parts.append(comp)
    return parts


def is_complete_multipartite(g):
    return complete_multipartite_parts(g) is not None


def olariu_decompose(g):
    """Tag every connected component as triangle-free or complete multipartite.

    Returns a list of (component mask, tag, parts) with parts None for the
    triangle-free tag.  Raises DomainError naming a paw witness when g is
    not paw-free (the dichotomy is exactly the paw-free case).
    """
    out = []
    for comp in g.connected_components():
        sub = g.induced(comp)
        verts = bits(comp)
        if is_triangle_free(sub):
            out.append((comp, TRIANGLE_FREE, None))
            continue
        parts = complete_multipartite_parts(sub)
        if parts is None:
            paw = find_paw(g)
            if paw is None:
                paw = find_paw(sub)
                paw = mask_of(verts[i] for i in bits(paw)) if paw else 0
            raise DomainError(
                f"graph is not paw-free: induced paw on vertices {bits(paw)}"
            )
        lifted = [mask_of(verts[i] for i in bits(p)) for p in parts]
        out.append((comp, COMPLETE_MULTIPARTITE, lifted))
    return out


def bipartition(g):
    """A 2-coloring (side1 mask, side2 mask), or None if an odd cycle exists."""
    color = [-1] * g.n
    s1 = s2 = 0
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for u in bits(g.adj[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    for v in range(g.n):
        if color[v] == 0:
            s1 |= 1 << v
        else:
            s2 |= 1 << v
    return s1, s2


def is_matched_cobipartite(g):
    """Partitionable into two cliques of sizes k,k or k,k+1 whose crossing
    edges form a matching covering all but at most one vertex per side."""
    co = g.complement()
    two = bipartition(co)
    if two is None:
        return False
    # each co-component can flip sides independently; sizes are constrained
    comps = co.connected_components()
    sides = []
    for comp in comps:
        inside = bipartition(co.induced(comp))
        a = mask_of(bits(comp)[i] for i in bits(inside[0]))
        sides.append((a, comp & ~a))

    def ok(c1, c2):
        if abs(c1.bit_count() - c2.bit_count()) > 1:
            return False
        unmatched1 = unmatched2 = 0
        for v in bits(c1):
            deg = (g.adj[v] & c2).bit_count()
            if deg > 1:
                return False
            if deg == 0:
                unmatched1 += 1
        for v in bits(c2):
            deg = (g.adj[v] & c1).bit_count()
            if deg > 1:
                return False
            if deg == 0:
                unmatched2 += 1
        return unmatched1 <= 1 and unmatched2 <= 1

    for pick in range(1 << len(sides)):
        c1 = c2 = 0
        for i, (a, b) in enumerate(sides):
            if pick >> i & 1:
                c1 |= a
                c2 |= b
            else:
                c1 |= b
                c2 |= a
        if c1.bit_count() > c2.bit_count():
            c1, c2 = c2, c1
        if ok(c1, c2):
            return True
    return False


def is_co_matched_bipartite(g):
    return is_matched_cobipartite(g.complement())


@dataclass(frozen=True)
class FerrySpec:
    """Three-layer ferry shape: m matched X/Y indices, l degree-2 Z vertices,
    optional dominating x0/y0.  x0 and y0 are nonadjacent by default; the
    definition leaves their adjacency open, so it is an explicit flag."""

    m: int
    l: int
    has_x0: bool = False
    has_y0: bool = False
    x0y0_adjacent: bool = False

    def __post_init__(self):
        if self.m < 1:
            raise DomainError("ferry needs m >= 1")
        if not 0 <= self.l <= self.m:
            raise DomainError("ferry needs 0 <= l <= m")
        if self.x0y0_adjacent and not (self.has_x0 and self.has_y0):
            raise DomainError("x0y0_adjacent needs both x0 and y0")


class DisconnectedFerryWarning(UserWarning):
    pass


def build_ferry(spec):
    """Realize the ferry edge rules.

    Vertex order: x1..xm, y1..ym, z1..zl, then x0, then y0 (when present).
    x_i ~ y_j iff i != j; z_i ~ x_i,y_i only; x0 joined to Y, y0 joined to X.
    The m=1, l=0, flagless case is a 2-vertex edgeless graph; it is returned
    with a warning since the definition does not exclude it.
    """
    m, l = spec.m, spec.l
    n = 2 * m + l + int(spec.has_x0) + int(spec.has_y0)
    x = list(range(m))
    y = list(range(m, 2 * m))
    z = list(range(2 * m, 2 * m + l))
    edges = []
    for i in range(m):
        for j in range(m):
            if i != j:
                edges.append((x[i], y[j]))
    for i in range(l):
        edges.append((z[i], x[i]))
        edges.append((z[i], y[i]))
    nxt = 2 * m + l
    if spec.has_x0:
        x0 = nxt
        nxt += 1
        edges.extend((x0, y[j]) for j in range(m))
    if spec.has_y0:
        y0 = nxt
        edges.extend((y0, x[j]) for j in range(m))
        if spec.x0y0_adjacent:
            edges.append((x0, y0))
    g = Graph(n, edges)
    if not g.is_connected():
        warnings.warn(
            f"ferry m={m} l={l} is disconnected (degenerate shape)",
            DisconnectedFerryWarning,
            stacklevel=2,
        )
    return g
