"""Stable set and clique enumeration, exact max-weight queries.

Stable sets are vertex bit-masks.  Maximal stable sets come from a pivoting
Bron-Kerbosch recursion on the complement; output order is sorted by mask
value but callers should not rely on it.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BudgetError, DomainError
from .graphs import bits

ALL_STABLE_BUDGET = 24


def _all_stable(adj, cand):
    if cand == 0:
        return [0]
    b = cand & -cand
    v = b.bit_length() - 1
    out = _all_stable(adj, cand ^ b)
    out.extend(s | b for s in _all_stable(adj, cand & ~adj[v] & ~b))
    return out


def all_stable_sets(g, within=None):
    """Every stable set of g (the empty set included), as masks."""
    cand = g.full_mask if within is None else within
    if cand.bit_count() > ALL_STABLE_BUDGET:
        raise BudgetError(
            f"all_stable_sets limited to {ALL_STABLE_BUDGET} vertices, got {cand.bit_count()}"
        )
    return sorted(_all_stable(g.adj, cand))


def maximal_cliques(g, within=None):
    """Inclusion-maximal cliques of g (Bron-Kerbosch with pivoting)."""
    adj = g.adj
    out = []

    def bk(r, p, x):
        if p == 0 and x == 0:
            out.append(r)
            return
        px = p | x
        pivot, best = -1, -1
        m = px
        while m:
            b = m & -m
            u = b.bit_length() - 1
            m ^= b
            c = (p & adj[u]).bit_count()
            if c > best:
                best, pivot = c, u
        cand = p & ~adj[pivot]
        while cand:
            b = cand & -cand
            v = b.bit_length() - 1
            cand ^= b
            bk(r | b, p & adj[v], x & adj[v])
            p &= ~b
            x |= b

    start = g.full_mask if within is None else within
    bk(0, start, 0)
    return sorted(out)


def maximal_stable_sets(g, within=None):
    """Inclusion-maximal stable sets of g, as masks."""
    return maximal_cliques(g.complement(), within=within)


def count_maximal_stable_sets(g):
    return len(maximal_stable_sets(g))


def _best_of(sets, weights):
    best_mask, best_val = 0, Fraction(0)
    for s in sets:
        val = sum((weights[v] for v in bits(s)), Fraction(0))
        if val > best_val or (val == best_val and s < best_mask):
            best_mask, best_val = s, val
    return best_mask, best_val


def max_weight_stable_set(g, weights):
    """Exact maximum-weight stable set; negative-weight vertices never help
    and are excluded up front.  Returns (mask, value); the empty set and
    value 0 when no weight is positive."""
    if len(weights) != g.n:
        raise DomainError("weight vector length mismatch")
    pos = 0
    for v in range(g.n):
        if weights[v] > 0:
            pos |= 1 << v
    if pos == 0:
        return 0, Fraction(0)
    return _best_of(maximal_stable_sets(g, within=pos), weights)


def max_weight_clique(g, weights):
    return max_weight_stable_set(g.complement(), weights)


def max_weight_clique_pawfree(g, weights):
    """Maximum-weight clique through the paw-free decomposition: triangle-free
    components scan vertices and edges, complete multipartite components take
    the best vertex of each part."""
    from .recognition import olariu_decompose, TRIANGLE_FREE

    if len(weights) != g.n:
        raise DomainError("weight vector length mismatch")
    tags = olariu_decompose(g)
    best_mask, best_val = 0, Fraction(0)
    for comp, kind, parts in tags:
        if kind == TRIANGLE_FREE:
            for v in bits(comp):
                cands = [(1 << v, Fraction(weights[v]))]
                for u in bits(g.adj[v] & comp):
                    if u > v:
                        cands.append(((1 << v) | (1 << u), Fraction(weights[v] + weights[u])))
                for m, val in cands:
                    if val > best_val or (val == best_val and 0 < m < best_mask):
                        best_mask, best_val = m, val
        else:
            m, val = 0, Fraction(0)
            for part in parts:
                pv, pw = -1, Fraction(0)
                for v in bits(part):
                    if weights[v] > pw or (weights[v] == pw and pw > 0 and v < pv):
                        pv, pw = v, Fraction(weights[v])
                if pv >= 0 and pw > 0:
                    m |= 1 << pv
                    val += pw
            if val > best_val or (val == best_val and 0 < m < best_mask):
                best_mask, best_val = m, val
    return best_mask, best_val


def is_repeating_subgraph(g, h):
    """True iff every maximal stable set of g meeting h restricts to a
    maximal stable set of g[h] (h given as a vertex mask)."""
    if h == 0:
        raise DomainError("repeating test needs a nonempty vertex set")
    sub = g.induced(h)
    verts = bits(h)
    sub_maximal = set(maximal_stable_sets(sub))
    for s in maximal_stable_sets(g):
        inter = s & h
        if inter == 0:
            continue
        packed = 0
        for i, v in enumerate(verts):
            if inter >> v & 1:
                packed |= 1 << i
        if packed not in sub_maximal:
            return False
    return True
