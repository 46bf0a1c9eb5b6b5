"""Small labeled undirected graphs on bit-mask adjacency rows.

Vertices are always 0..n-1 with n <= 32.  A set of vertices is an int
bit-mask; ``adj[v]`` is the mask of neighbors of v.  Graphs are immutable
and hashable, so they can be shared freely between workers.

Optional ``labels`` carry external vertex names (a bijection onto 1..n);
all algorithms ignore them.
"""

from __future__ import annotations

import json
from itertools import combinations

from .errors import DomainError

MAX_VERTICES = 32


def bits(mask):
    """Vertices of a bit-mask, ascending."""
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def mask_of(vertices):
    """Bit-mask of an iterable of vertices."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask):
    return mask.bit_count()


class Graph:
    """Immutable undirected graph with bit-mask adjacency rows."""

    __slots__ = ("n", "adj", "labels", "_hash")

    def __init__(self, n, edges=(), labels=None, _adj=None):
        if not 1 <= n <= MAX_VERTICES:
            raise DomainError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        if _adj is not None:
            adj = list(_adj)
        else:
            adj = [0] * n
            for u, v in edges:
                if u == v or not (0 <= u < n and 0 <= v < n):
                    raise DomainError(f"bad edge ({u},{v}) for n={n}")
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        full = (1 << n) - 1
        for v in range(n):
            if self.adj[v] & ~full or self.adj[v] >> v & 1:
                raise DomainError(f"adjacency row {v} out of range or reflexive")
            for u in bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise DomainError(f"adjacency not symmetric at ({u},{v})")
        if labels is not None:
            labels = tuple(labels)
            if sorted(labels) != list(range(1, n + 1)):
                raise DomainError("labels must be a bijection onto 1..n")
        self.labels = labels
        self._hash = hash((self.n, self.adj))

    # -- basic accessors ------------------------------------------------

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    def vertices(self):
        return range(self.n)

    def degree(self, v):
        return self.adj[v].bit_count()

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def edges(self):
        out = []
        for v in range(self.n):
            m = self.adj[v] >> (v + 1) << (v + 1)
            for u in bits(m):
                out.append((v, u))
        return out

    def edge_count(self):
        return sum(a.bit_count() for a in self.adj) // 2

    def neighborhood(self, mask):
        """Neighbors of a vertex set, excluding the set itself."""
        m = 0
        for v in bits(mask):
            m |= self.adj[v]
        return m & ~mask

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    # -- derived graphs -------------------------------------------------

    def complement(self):
        full = self.full_mask
        adj = [full & ~self.adj[v] & ~(1 << v) for v in range(self.n)]
        return Graph(self.n, _adj=adj, labels=self.labels)

    def induced(self, mask):
        """Subgraph induced by the vertex set ``mask``; labels are retained."""
        if mask == 0:
            raise DomainError("induced subgraph of the empty vertex set")
        if mask & ~self.full_mask:
            raise DomainError("vertex set not within the graph")
        verts = bits(mask)
        pos = {v: i for i, v in enumerate(verts)}
        adj = [0] * len(verts)
        for v in verts:
            for u in bits(self.adj[v] & mask):
                adj[pos[v]] |= 1 << pos[u]
        labels = None
        if self.labels is not None:
            labels = [self.labels[v] for v in verts]
            if sorted(labels) != list(range(1, len(verts) + 1)):
                labels = None
        return Graph(len(verts), _adj=adj, labels=labels)

    def delete(self, vertices):
        """Graph minus the given vertices (iterable or mask)."""
        mask = vertices if isinstance(vertices, int) else mask_of(vertices)
        keep = self.full_mask & ~mask
        return self.induced(keep)

    def permute(self, perm):
        """Relabel: vertex v of self becomes perm[v] of the result."""
        adj = [0] * self.n
        for v in range(self.n):
            m = 0
            for u in bits(self.adj[v]):
                m |= 1 << perm[u]
            adj[perm[v]] = m
        return Graph(self.n, _adj=adj)

    def by_labels(self, names):
        """Vertex mask for external label names (requires labels)."""
        if self.labels is None:
            raise DomainError("graph carries no labels")
        inv = {lab: v for v, lab in enumerate(self.labels)}
        return mask_of(inv[x] for x in names)

    # -- connectivity ----------------------------------------------------

    def component_of(self, v, within=None):
        mask = self.full_mask if within is None else within
        seen = 1 << v
        frontier = seen
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= self.adj[u]
            nxt &= mask & ~seen
            seen |= nxt
            frontier = nxt
        return seen

    def connected_components(self, within=None):
        mask = self.full_mask if within is None else within
        comps = []
        rest = mask
        while rest:
            v = (rest & -rest).bit_length() - 1
            c = self.component_of(v, within=mask)
            comps.append(c)
            rest &= ~c
        return comps

    def is_connected(self, within=None):
        mask = self.full_mask if within is None else within
        if mask == 0:
            return False
        v = (mask & -mask).bit_length() - 1
        return self.component_of(v, within=mask) == mask


# -- constructors ---------------------------------------------------------


def empty_graph(n):
    return Graph(n)


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise DomainError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph(n, list(combinations(range(n), 2)))


def complete_multipartite(*sizes):
    n = sum(sizes)
    edges = []
    start = 0
    blocks = []
    for s in sizes:
        blocks.append(range(start, start + s))
        start += s
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            edges.extend((u, v) for u in blocks[i] for v in blocks[j])
    return Graph(n, edges)


def disjoint_union(g1, g2):
    adj = list(g1.adj) + [a << g1.n for a in g2.adj]
    return Graph(g1.n + g2.n, _adj=adj)


def join(g1, g2):
    """All edges between the two graphs added to their disjoint union."""
    g = disjoint_union(g1, g2)
    left = (1 << g1.n) - 1
    right = g.full_mask & ~left
    adj = list(g.adj)
    for v in bits(left):
        adj[v] |= right
    for v in bits(right):
        adj[v] |= left
    return Graph(g.n, _adj=adj)


# -- graph6 and JSON I/O ---------------------------------------------------


def to_graph6(g):
    """graph6 string of the adjacency matrix (standard encoding, n <= 32)."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        raise DomainError("graph6 writer limited to n <= 62 here")
    bitstream = []
    for v in range(1, n):
        for u in range(v):
            bitstream.append(g.adj[u] >> v & 1)
    while len(bitstream) % 6:
        bitstream.append(0)
    chars = []
    for i in range(0, len(bitstream), 6):
        val = 0
        for b in bitstream[i : i + 6]:
            val = val << 1 | b
        chars.append(chr(val + 63))
    return head + "".join(chars)


def from_graph6(text):
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise DomainError("empty graph6 string")
    first = ord(s[0]) - 63
    if first == 63:
        raise DomainError("graph6 n > 62 not supported")
    n = first
    if not 1 <= n <= MAX_VERTICES:
        raise DomainError(f"graph6 vertex count {n} outside 1..{MAX_VERTICES}")
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise DomainError(f"graph6 body length {len(body)}, expected {need}")
    stream = []
    for ch in body:
        vals = ord(ch) - 63
        if not 0 <= vals < 64:
            raise DomainError(f"invalid graph6 character {ch!r}")
        stream.extend(vals >> k & 1 for k in range(5, -1, -1))
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if stream[idx]:
                edges.append((u, v))
            idx += 1
    return Graph(n, edges)


def to_json_dict(g):
    d = {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}
    if g.labels is not None:
        d["labels"] = list(g.labels)
    return d


def from_json_dict(d):
    try:
        n = d["n"]
        edges = [tuple(e) for e in d.get("edges", [])]
    except (KeyError, TypeError) as exc:
        raise DomainError(f"malformed graph JSON: {exc}") from exc
    return Graph(n, edges, labels=d.get("labels"))


def load_graph(text):
    """Parse a graph from JSON edge-list or graph6 (auto-detected by first byte)."""
    t = text.strip()
    if not t:
        raise DomainError("empty graph input")
    if t[0] == "{":
        try:
            return from_json_dict(json.loads(t))
        except json.JSONDecodeError as exc:
            raise DomainError(f"bad JSON graph: {exc}") from exc
    return from_graph6(t)
