"""The three mother graphs, the prime facet-inducing catalog, and its
persistence.

All index arithmetic on the base 5-cycle is modulo 5.  The mother graphs
realize this adjacency scheme (classes as singletons where bounded):

* v1..v5 induce a C5; y_i is pendant on v_i; the y's carry the pentagram
  edges (y_i ~ y_{i+2}); z_i sits on the "far" pair v_{i-1}, v_{i+1} and is
  joined to y_{i+2}, y_{i+3}; consecutive z's are adjacent when forced by
  the two-sided-join class rule; an exterior center x attaches to z's only.

H1 takes every y and every two-sided z plus a center joined to all five
z's; it is the superposition shape and is itself not (P6,triangle)-free.
H2 is the 16-vertex expansion of a C4 into four C4s, with homologous edges
between adjacent squares and opposite edges between the two nonadjacent
square pairs; its labels follow the published bijection.  H3 keeps four
y's, three two-sided z's, two one-sided z's forming the single nonedge,
and a center on those two.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

from .canon import canonical_form, canonical_graph, canonical_key
from .errors import DomainError, StabpolyError
from .graphs import Graph, bits, from_graph6, to_graph6
from .linsys import Inequality
from .polytope import HULL_BUDGET, full_facets, stab_facets
from .recognition import is_p6_triangle_free
from .modular import is_prime

CATALOG_FORMAT = "stabpoly-catalog/1"

H2_LABEL_BIJECTION = (16, 11, 9, 12, 14, 5, 4, 3, 6, 1, 15, 8, 13, 2, 7, 10)


def build_h2():
    """16 vertices a1..a4,b1..b4,c1..c4,d1..d4 in that order; paper labels
    attached via the published bijection."""
    pos = {(x, i): 4 * k + i for k, x in enumerate("abcd") for i in range(4)}
    edges = set()
    for x in "abcd":
        for i in range(4):
            edges.add(frozenset((pos[(x, i)], pos[(x, (i + 1) % 4)])))
    for i in range(4):
        for x, y in (("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")):
            edges.add(frozenset((pos[(x, i)], pos[(y, i)])))
        edges.add(frozenset((pos[("a", i)], pos[("c", (i + 2) % 4)])))
        edges.add(frozenset((pos[("b", i)], pos[("d", (i + 2) % 4)])))
    return Graph(16, [tuple(e) for e in edges], labels=H2_LABEL_BIJECTION)


def build_h1():
    """16 vertices: v1..v5 (0..4), y1..y5 (5..9), z1..z5 (10..14), x (15),
    where z_i spans the pair v_{i-1}, v_{i+1} and x is joined to all z's."""
    v = list(range(5))
    y = list(range(5, 10))
    z = list(range(10, 15))
    x = 15
    edges = []
    for i in range(5):
        edges.append((v[i], v[(i + 1) % 5]))
        edges.append((v[i], y[i]))
        edges.append((y[i], y[(i + 2) % 5]))
        edges.append((z[i], v[(i - 1) % 5]))
        edges.append((z[i], v[(i + 1) % 5]))
        edges.append((z[i], z[(i + 1) % 5]))
        edges.append((z[i], y[(i + 2) % 5]))
        edges.append((z[i], y[(i + 3) % 5]))
        edges.append((x, z[i]))
    return Graph(16, edges)


H1_CENTER = 15


def build_h3():
    """15 vertices: v1..v5 (0..4), y2..y5 (5..8), z24 (9), z35 (10), z52 (11),
    z024 (12), z035 (13), x (14).  The two one-sided z's form the unique
    z-nonedge and carry the center."""
    v = {i: i - 1 for i in range(1, 6)}
    y = {2: 5, 3: 6, 4: 7, 5: 8}
    z24, z35, z52, z024, z035, x = 9, 10, 11, 12, 13, 14
    edges = [(v[1], v[2]), (v[2], v[3]), (v[3], v[4]), (v[4], v[5]), (v[5], v[1])]
    edges += [(y[i], v[i]) for i in (2, 3, 4, 5)]
    edges += [(y[2], y[4]), (y[2], y[5]), (y[3], y[5])]
    edges += [(z24, v[2]), (z24, v[4]), (z024, v[2]), (z024, v[4])]
    edges += [(z35, v[3]), (z35, v[5]), (z035, v[3]), (z035, v[5])]
    edges += [(z52, v[5]), (z52, v[2])]
    edges += [(z24, y[5]), (z024, y[5]), (z35, y[2]), (z035, y[2])]
    edges += [(z52, y[3]), (z52, y[4])]
    edges += [(z24, z35), (z24, z035), (z35, z024)]
    edges += [(x, z024), (x, z035)]
    return Graph(15, edges)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Graph
    canonical: tuple
    phi: tuple  # full facets of STAB(graph)
    source: str

    def validate(self):
        if self.graph.n > 2 and not is_prime(self.graph):
            raise StabpolyError(f"catalog entry {self.name} is not prime")
        if not is_p6_triangle_free(self.graph):
            raise StabpolyError(f"catalog entry {self.name} is not (P6,triangle)-free")
        if not self.phi:
            raise StabpolyError(f"catalog entry {self.name} has empty full-facet set")


def derive_support_classes(h, budget_vertices=HULL_BUDGET, ray_cap=None):
    """Distinct canonical classes of prime, (P6,triangle)-free facet supports
    of STAB(h).  Each class maps to its canonically relabeled representative.

    Every support graph is facet-inducing by the restriction property, so no
    per-class facet test is needed here.
    """
    kwargs = {"budget_vertices": budget_vertices}
    if ray_cap is not None:
        kwargs["ray_cap"] = ray_cap
    sys_ = stab_facets(h, **kwargs)
    supports = sorted({r.support() for r in sys_.facet_rows()})
    host_free = is_p6_triangle_free(h)  # hereditary: then every support is, too
    classes = {}
    seen_adj = set()
    for w in supports:
        if w.bit_count() < 2:
            continue
        sub = _refined_relabel(h.induced(w))
        key = (sub.n, sub.adj)
        if key in seen_adj:
            continue
        seen_adj.add(key)
        if not host_free and not is_p6_triangle_free(sub):
            continue
        if not is_prime(sub):
            continue
        cf = canonical_form(sub)
        if cf not in classes:
            classes[cf] = canonical_graph(sub)
    return classes


def _refined_relabel(g):
    """Deterministic refinement-based relabeling: isomorphic graphs usually
    collapse to identical adjacency tuples, so far fewer canonical forms are
    needed when deduplicating facet supports."""
    from .canon import _refine

    cells = _refine(g.adj, [g.full_mask])
    perm = [0] * g.n
    pos = 0
    for c in cells:
        for v in bits(c):
            perm[v] = pos
            pos += 1
    return g.permute(perm)


def derive_catalog(h, source, budget_vertices=HULL_BUDGET, ray_cap=None, attach_phi=True):
    """Catalog entries contributed by one mother graph, unnamed."""
    classes = derive_support_classes(h, budget_vertices, ray_cap)
    entries = []
    for cf in sorted(classes, key=lambda c: (c[0], c[1])):
        rep = classes[cf]
        phi = tuple(full_facets(rep, budget_vertices=budget_vertices)) if attach_phi else ()
        entries.append(CatalogEntry("", rep, cf, phi, source))
    return entries


def _named_union(groups):
    """Merge per-mother entry lists and assign deterministic names.

    K2 and C5 are recognized by isomorphism and the published deletion sets
    over H2 pin G2..G13 exactly.  Of the remaining classes the smallest by
    (vertex count, canonical form) is called G1; the published text does not
    determine names for the others (its own list is not reproducible there,
    see the naming report), so they are N1, N2, ... in the same order.
    """
    merged = {}
    for src, entries in groups:
        for e in entries:
            if e.canonical in merged:
                prev = merged[e.canonical]
                if src not in prev.source.split(","):
                    merged[e.canonical] = replace(prev, source=prev.source + "," + src)
            else:
                merged[e.canonical] = e
    names = {}
    k2 = canonical_form(Graph(2, [(0, 1)]))
    c5 = canonical_form(Graph(5, [(i, (i + 1) % 5) for i in range(5)]))
    if k2 in merged:
        names[k2] = "K2"
    if c5 in merged:
        names[c5] = "C5"
    for paper_name in H2_NAMED_DELETIONS:
        cf = canonical_form(h2_named_deletion_graph(paper_name))
        if cf in merged:
            names[cf] = paper_name
    rest = sorted((cf for cf in merged if cf not in names), key=lambda cf: (cf[0], cf[1]))
    for i, cf in enumerate(rest):
        names[cf] = "G1" if i == 0 else f"N{i}"
    out = [replace(e, name=names[cf]) for cf, e in merged.items()]

    def sort_key(e):
        if e.name == "K2":
            return (0, 0)
        if e.name == "C5":
            return (1, 0)
        if e.name.startswith("G"):
            return (2, int(e.name[1:]))
        return (3, int(e.name[1:]))

    out.sort(key=sort_key)
    return out


def build_catalog(budget_vertices=HULL_BUDGET, ray_cap=None, attach_phi=True):
    """Derive the prime facet-inducing catalog from the three containers.

    Full-facet sets are attached per class representative; a class that is a
    container itself (H2) reuses the container's cached hull through its
    canonical relabeling instead of recomputing it.
    """
    kwargs = {"budget_vertices": budget_vertices}
    if ray_cap is not None:
        kwargs["ray_cap"] = ray_cap
    mothers = {"H1": build_h1(), "H2": build_h2(), "H3": build_h3()}
    groups = [
        (src, derive_catalog(h, src, budget_vertices, ray_cap, attach_phi=False))
        for src, h in mothers.items()
    ]
    entries = _named_union(groups)
    if not attach_phi:
        return entries
    from .canon import canonical_permutation
    from .linsys import FACET

    mother_by_cf = {canonical_form(h): h for h in mothers.values()}
    out = []
    for e in entries:
        if e.canonical in mother_by_cf:
            h = mother_by_cf[e.canonical]
            perm = canonical_permutation(h)
            rows = []
            for row in full_facets(h, **kwargs):
                c = [0] * h.n
                for v in range(h.n):
                    c[perm[v]] = row.coeffs[v]
                rows.append(Inequality(tuple(c), row.rhs, FACET))
            rows.sort(key=lambda r: (r.coeffs, r.rhs))
            phi = tuple(rows)
        else:
            phi = tuple(full_facets(e.graph, **kwargs))
        ne = replace(e, phi=phi)
        ne.validate()
        out.append(ne)
    return out


# -- the paper's named deletions over H2 -------------------------------------

H2_NAMED_DELETIONS = {
    "G2": (),
    "G3": (1,),
    "G4": (1, 2),
    "G5": (1, 2, 3),
    "G6": (1, 2, 4),
    "G7": (1, 2, 3, 4),
    "G8": (1, 2, 3, 12),
    "G9": (1, 2, 3, 13),
    "G10": (1, 2, 3, 4, 5),
    "G11": (1, 2, 3, 4, 12),
    "G12": (1, 2, 3, 4, 5, 11),
    "G13": (1, 2, 3, 4, 5, 11, 14),
}

H3_NAMED_DELETION_SIZES = (15, 14, 14, 13, 12, 12, 11, 11, 10, 10, 9)


def h2_named_deletion_graph(paper_name):
    h2 = build_h2()
    labels = H2_NAMED_DELETIONS[paper_name]
    if not labels:
        return h2
    return h2.delete(h2.by_labels(labels))


def map_named_deletions(catalog):
    """Match every named H2 deletion to exactly one derived class; H3's
    deletions are only checkable by class count and size multiset (their
    figure labels are not in the text).

    Returns {paper name: catalog name} plus a "sizes-ok" flag entry.
    """
    by_cf = {e.canonical: e.name for e in catalog}
    report = {}
    used = set()
    for paper_name in sorted(H2_NAMED_DELETIONS, key=lambda s: int(s[1:])):
        cf = canonical_form(h2_named_deletion_graph(paper_name))
        ours = by_cf.get(cf)
        if ours is None:
            raise StabpolyError(f"named deletion {paper_name} matches no derived class")
        if ours in used:
            raise StabpolyError(f"named deletion {paper_name} maps non-injectively")
        used.add(ours)
        report[paper_name] = ours
    h3_sizes = sorted(
        (e.graph.n for e in catalog if "H3" in e.source.split(",") and e.name not in ("K2", "C5", "G1")),
        reverse=True,
    )
    report["h3-deletion-sizes-ok"] = tuple(h3_sizes) == H3_NAMED_DELETION_SIZES
    return report


# -- persistence --------------------------------------------------------------


def save_catalog(catalog, path):
    data = {
        "format": CATALOG_FORMAT,
        "entries": [
            {
                "name": e.name,
                "graph6": to_graph6(e.graph),
                "labels": list(e.graph.labels) if e.graph.labels else None,
                "phi": [row.to_dict() for row in e.phi],
                "source": e.source,
                "canonical": canonical_key(e.graph),
            }
            for e in catalog
        ],
    }
    with open(path, "w", encoding="utf-8") as f:
        json.dump(data, f, separators=(",", ":"))


def load_catalog(path):
    try:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as exc:
        raise DomainError(f"cannot read catalog file {path}: {exc}") from exc
    if not isinstance(data, dict) or data.get("format") != CATALOG_FORMAT:
        raise DomainError(f"catalog file {path} has wrong or missing format tag")
    entries = []
    for item in data.get("entries", []):
        try:
            g = from_graph6(item["graph6"])
            if item.get("labels"):
                g = Graph(g.n, g.edges(), labels=item["labels"])
            phi = tuple(Inequality.from_dict(r) for r in item["phi"])
            entry = CatalogEntry(item["name"], g, canonical_form(g), phi, item["source"])
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed catalog entry: {exc}") from exc
        if canonical_key(g) != item["canonical"]:
            raise DomainError(f"catalog entry {item['name']} fails canonical check")
        entries.append(entry)
    return entries
