"""Exhaustive audit of the structure space of prime facet-inducing
(P6,triangle)-free graphs.

The decomposition theory pins every non-bipartite member to: a base 5-cycle
v1..v5; at most one pendant y_i per base vertex, the y's joined at cyclic
distance two; per far pair {v_i, v_i+2} at most one two-sided 2-vertex
(adjacent to every occupant of both neighboring far-pair classes) and at
most one one-sided 2-vertex (some neighboring-class occupant missing);
2-vertex classes join fixed pairs of y's; at most one exterior vertex,
attached either to all one-sided 2-vertices or in one of the two small
exterior-on-two-sided shapes.  Everything else is forced, so enumerating
the free choices and filtering (connected, (P6,triangle)-free, prime,
facet-inducing) yields the complete catalog of such graphs up to
isomorphism; the bipartite member is the single edge.

This is independent of any drawing, so it serves as the completeness
audit for the catalog derived from the three container graphs.
"""

from __future__ import annotations

from itertools import combinations, product

from .canon import canonical_form, canonical_graph
from .graphs import Graph
from .modular import is_prime
from .polytope import full_facets
from .recognition import is_p6_triangle_free

NONE, ZERO, ONE, BOTH = 0, 1, 2, 3


def _candidate_configs():
    """Yield (y_bits, class_config, zero_edge_bits, x_mode) descriptors.

    class_config[i] says which 2-vertices the far-pair class anchored at
    {v_i-1, v_i+1} carries; zero-edge bits choose the free one-sided /
    one-sided adjacencies between consecutive classes; x_mode is None,
    ("x0",) for the all-one-sided attachment, or ("xt", j, shape, extra)
    for the exterior-on-two-sided shapes.
    """
    for classes in product((NONE, ZERO, ONE, BOTH), repeat=5):
        zero_pairs = [
            (i, (i + 1) % 5)
            for i in range(5)
            if classes[i] in (ZERO, BOTH) and classes[(i + 1) % 5] in (ZERO, BOTH)
        ]
        for ybits in range(32):
            for ebits in range(1 << len(zero_pairs)):
                edges = [zero_pairs[t] for t in range(len(zero_pairs)) if ebits >> t & 1]
                yield ybits, classes, edges, None
                if any(c in (ZERO, BOTH) for c in classes):
                    yield ybits, classes, edges, ("x0",)


def _xt_configs():
    """The exterior-vertex-on-a-two-sided shapes: the 2-vertex set is pinned
    to {z, zbar} or {z, zbar, ztilde} on classes j, j+2(, j+3)."""
    for j in range(5):
        for ybits in range(32):
            for xbar in (False, True):  # attachment to zbar is not forced
                classes = [NONE] * 5
                classes[j] = ONE
                classes[(j + 2) % 5] = ONE
                yield ybits, tuple(classes), [], ("xt2", j, xbar)
            classes = [NONE] * 5
            classes[j] = ONE
            classes[(j + 2) % 5] = ZERO
            classes[(j + 3) % 5] = ZERO
            yield ybits, tuple(classes), [], ("xt3", j)


def _build(ybits, classes, zero_edges, x_mode):
    """Realize a configuration; returns None when the labels are inconsistent
    (a one-sided 2-vertex must actually miss a neighboring-class occupant)."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    pos = 5
    ys = {}
    for i in range(5):
        if ybits >> i & 1:
            ys[i] = pos
            edges.append((pos, i))
            pos += 1
    for i in ys:
        for j in ys:
            if j == (i + 2) % 5:
                edges.append((ys[i], ys[j]))
    zero_v = {}
    one_v = {}
    for i in range(5):
        if classes[i] in (ZERO, BOTH):
            zero_v[i] = pos
            pos += 1
        if classes[i] in (ONE, BOTH):
            one_v[i] = pos
            pos += 1
    n = pos + (1 if x_mode else 0)
    if n > 32:
        return None
    for i, zv in list(zero_v.items()) + list(one_v.items()):
        edges.append((zv, (i - 1) % 5))
        edges.append((zv, (i + 1) % 5))
        # class anchored {v_i-1, v_i+1} joins the y's at v_i+2, v_i+3
        for k in ((i + 2) % 5, (i + 3) % 5):
            if k in ys:
                edges.append((zv, ys[k]))
    # two-sided vertices dominate both neighboring classes
    for i, ov in one_v.items():
        for j in ((i - 1) % 5, (i + 1) % 5):
            for d in (zero_v, one_v):
                if j in d:
                    edges.append((ov, d[j]))
    for i, j in zero_edges:
        edges.append((zero_v[i], zero_v[j]))
    # a one-sided label needs a missing neighbor in a neighboring class
    chosen = set()
    for i, j in zero_edges:
        chosen.add((i, j))
        chosen.add((j, i))
    for i in zero_v:
        missing = any(
            j in zero_v and (i, j) not in chosen
            for j in ((i - 1) % 5, (i + 1) % 5)
        )
        if not missing:
            return None
    if x_mode:
        x = pos
        if x_mode[0] == "x0":
            for zv in zero_v.values():
                edges.append((x, zv))
        elif x_mode[0] == "xt2":
            j = x_mode[1]
            edges.append((x, one_v[j]))
            if x_mode[2]:
                edges.append((x, one_v[(j + 2) % 5]))
        else:
            j = x_mode[1]
            edges.append((x, one_v[j]))
            edges.append((x, zero_v[(j + 2) % 5]))
            edges.append((x, zero_v[(j + 3) % 5]))
    return Graph(n, edges)


def enumerate_structure_space(progress=None):
    """All prime facet-inducing (P6,triangle)-free graphs up to isomorphism:
    {canonical form: representative}.  Includes the single edge."""
    k2 = Graph(2, [(0, 1)])
    found = {canonical_form(k2): k2}
    seen_cheap = set()
    candidates = {}
    count = 0
    for cfg in list(_candidate_configs()) + list(_xt_configs()):
        count += 1
        if progress and count % 50000 == 0:
            progress(count)
        g = _build(*cfg)
        if g is None or g.n < 5:
            continue
        if min(g.degree(v) for v in range(g.n)) < 2:
            continue
        if not g.is_connected():
            continue
        key = (g.n, g.adj)
        if key in seen_cheap:
            continue
        seen_cheap.add(key)
        if not is_p6_triangle_free(g):
            continue
        if not is_prime(g):
            continue
        cf = canonical_form(g)
        if cf not in candidates:
            candidates[cf] = canonical_graph(g)
    for cf, g in candidates.items():
        # the audit space reaches 21 vertices, beyond the public hull default
        if full_facets(g, budget_vertices=22):
            found[cf] = g
    return found
