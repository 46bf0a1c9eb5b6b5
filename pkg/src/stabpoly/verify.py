"""Acceptance suites: each criterion is a named callable returning
(passed, detail).  The CLI runs them by name; the test suite asserts them.

All numeric comparisons are exact (rational arithmetic end to end); the
stated runtime targets are reported, not enforced.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from itertools import combinations

from .canon import canonical_form
from .catalog import (
    H1_CENTER,
    build_catalog,
    build_h1,
    build_h2,
    build_h3,
    derive_catalog,
    map_named_deletions,
)
from .composition import chvatal_substitute, closure_check
from .errors import StabpolyError
from .families import connected_bipartite_p6_free_graphs, connected_graphs
from .graphs import Graph, bits, cycle_graph, empty_graph, path_graph
from .linsys import LinearSystem
from .modular import enumerate_bimodules, find_modules, is_prime, substitute
from .polytope import (
    full_facets,
    has_clique_cutset,
    is_facet_inducing,
    check_degree2_tightset,
    check_mahjoub,
    stab_facets,
)
from .recognition import FerrySpec, build_ferry, contains_induced_path, is_triangle_free
from .separation import SeparationOracle, membership_oracle, random_rational_point
from .stable import all_stable_sets, count_maximal_stable_sets


class VerifyContext:
    """Shared lazily computed state so the expensive hulls run once."""

    def __init__(self, seed=20250811, workers=None, catalog=None):
        self.seed = seed
        self.workers = workers
        self._catalog = catalog
        self._counts = None

    @property
    def h1(self):
        return build_h1()

    @property
    def h2(self):
        return build_h2()

    @property
    def h3(self):
        return build_h3()

    def catalog_entries_by_source(self):
        if self._counts is None:
            self._counts = {
                "H1": derive_catalog(self.h1, "H1", attach_phi=False),
                "H2": derive_catalog(self.h2, "H2", attach_phi=False),
                "H3": derive_catalog(self.h3, "H3", attach_phi=False),
            }
        return self._counts

    @property
    def catalog(self):
        if self._catalog is None:
            self._catalog = build_catalog()
        return self._catalog


def criterion_h1_641(ctx):
    g = ctx.h1.delete([H1_CENTER])
    full = full_facets(g)
    ok = len(full) == 641
    detail = f"|Phi(H1 - center)| = {len(full)} (expected 641)"
    if not ok:
        counts = {}
        for v in range(ctx.h1.n):
            counts[v] = len(full_facets(ctx.h1.delete([v])))
        detail += f"; all single deletions: {counts}"
    return ok, detail


def criterion_h2_26617(ctx):
    sys_ = stab_facets(ctx.h2)
    ok = len(sys_) == 26617
    return ok, f"STAB(H2) facets = {len(sys_)} (expected 26617, nonnegativity included)"


def criterion_catalog_counts(ctx):
    per = ctx.catalog_entries_by_source()
    counts = {src: len(entries) for src, entries in per.items()}
    union = {}
    for src, entries in per.items():
        for e in entries:
            union.setdefault(e.canonical, set()).add(src)
    common = [cf for cf, srcs in union.items() if len(srcs) == 3]
    k2 = canonical_form(path_graph(2))
    c5 = canonical_form(cycle_graph(5))
    extra_common = [cf for cf in common if cf not in (k2, c5)]
    ok = (
        counts == {"H1": 3, "H2": 15, "H3": 14}
        and len(union) == 26
        and len(extra_common) == 1
    )
    return ok, (
        f"classes per mother {counts} (expected H1:3 H2:15 H3:14), union {len(union)}"
        f" (expected 26), common beyond K2/C5: {len(extra_common)} (expected 1)"
    )


def criterion_h2_structure(ctx):
    h2, h1 = ctx.h2, ctx.h1
    problems = []
    if sorted(h2.degree(v) for v in range(h2.n)) != [5] * 16:
        problems.append("H2 not 5-regular")
    one_del = {canonical_form(h2.delete([v])) for v in range(h2.n)}
    if len(one_del) != 1:
        problems.append(f"one-vertex deletions form {len(one_del)} classes")
    edges = h2.edges()
    disjoint_classes = set()
    for (a, b), (c, d) in combinations(edges, 2):
        if len({a, b, c, d}) == 4:
            disjoint_classes.add(canonical_form(h2.delete([a, b])))
            disjoint_classes.add(canonical_form(h2.delete([c, d])))
    if len(disjoint_classes) != 1:
        problems.append(f"disjoint-edge deletions form {len(disjoint_classes)} classes")
    # facet-inducing checks per isomorphism class representative
    for v in range(h2.n):
        if canonical_form(h2.delete([v])) in one_del:
            if is_facet_inducing(h2.delete([v])) is None:
                problems.append(f"H2 - {{{v}}} not facet-inducing")
            break
    edge_classes = {}
    for a, b in edges:
        edge_classes.setdefault(canonical_form(h2.delete([a, b])), (a, b))
    for cf, (a, b) in edge_classes.items():
        if is_facet_inducing(h2.delete([a, b])) is None:
            problems.append(f"H2 - {{{a},{b}}} not facet-inducing")
    h1_classes = {}
    for v in range(h1.n):
        h1_classes.setdefault(canonical_form(h1.delete([v])), v)
    for cf, v in h1_classes.items():
        if is_facet_inducing(h1.delete([v])) is None:
            problems.append(f"H1 - {{{v}}} not facet-inducing")
    return not problems, "; ".join(problems) if problems else (
        "H2 5-regular; deletions isomorphic and facet-inducing; H1 deletions facet-inducing"
    )


def criterion_ferries(ctx):
    bad = []
    total = 0
    for m in (2, 3, 4):
        for l in range(m + 1):
            for hx in (False, True):
                for hy in (False, True):
                    total += 1
                    g = build_ferry(FerrySpec(m, l, hx, hy))
                    if is_facet_inducing(g) is not None:
                        bad.append((m, l, hx, hy))
    return not bad, f"{total} ferries tested, facet-inducing: {bad or 'none'}"


def criterion_lemma3(ctx):
    checked = 0
    for n in range(3, 10):
        for g in connected_bipartite_p6_free_graphs(n):
            checked += 1
            if count_maximal_stable_sets(g) >= g.n:
                return False, f"counterexample on {g.n} vertices: {g.edges()}"
    return True, f"{checked} connected bipartite P6-free graphs, all < n maximal stable sets"


def criterion_structure_small(ctx):
    stats = {"graphs": 0, "facet_inducing": 0}
    for n in range(2, 8):
        for g in connected_graphs(n):
            stats["graphs"] += 1
            stable = all_stable_sets(g)
            full = full_facets(g)
            inducing = bool(full)
            if not inducing:
                continue
            stats["facet_inducing"] += 1
            if has_clique_cutset(g) is not None:
                return False, f"facet-inducing graph with clique cutset: {g.edges()}"
            for m in find_modules(g).maximal_homogeneous_sets:
                if not full_facets(g.induced(m)):
                    return False, f"homogeneous set {bits(m)} not facet-inducing: {g.edges()}"
            if is_triangle_free(g) and not is_prime(g):
                return False, f"triangle-free facet-inducing not prime: {g.edges()}"
            if not contains_induced_path(g, 6):
                for bm in enumerate_bimodules(g):
                    h = bm.h1 | bm.h2
                    if h.bit_count() != 2:
                        return False, f"non-edge bi-module {bits(h)} in {g.edges()}"
            for phi in full:
                if not check_mahjoub(g, phi, stable):
                    return False, f"Mahjoub bound fails on {g.edges()}"
                if not check_degree2_tightset(g, phi, stable):
                    return False, f"degree-2 tight set fails on {g.edges()}"
    return True, (
        f"{stats['graphs']} connected graphs to 7 vertices, "
        f"{stats['facet_inducing']} facet-inducing, all structure lemmas hold"
    )


def criterion_composition(ctx):
    bases = {
        "K2": path_graph(2),
        "P3": path_graph(3),
        "P4": path_graph(4),
        "C5": cycle_graph(5),
        "E2": empty_graph(2),
        "E3": empty_graph(3),
    }
    checked = 0
    for n1, g1 in bases.items():
        s1 = stab_facets(g1)
        for n2, g2 in bases.items():
            s2 = stab_facets(g2)
            for v in range(g1.n):
                got = chvatal_substitute(s1, v, s2)
                want = stab_facets(substitute(g1, v, g2))
                if got.as_row_set() != want.as_row_set():
                    return False, f"mismatch for {n1}[{v} <- {n2}]"
                checked += 1
    return True, f"{checked} substitution systems match direct hulls"


def random_p6_paw_free_graph(rng, nmax=12):
    """Rejection-sample a (P6,paw)-free graph with a random density."""
    from .recognition import find_paw, find_induced_path

    while True:
        n = rng.randint(4, nmax)
        p = rng.uniform(0.12, 0.4)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = Graph(n, edges)
        bad = True
        for _ in range(2 * n):
            paw = find_paw(g)
            w = paw if paw is not None else (
                find_induced_path(g, 6) if g.n >= 6 else None
            )
            if w is None:
                bad = False
                break
            if g.n <= 4:
                break
            drop = rng.choice(bits(w))
            g = g.delete([drop])
        if not bad and g.n >= 3:
            return g


def criterion_separation(ctx, graphs=50, points=500):
    rng = random.Random(ctx.seed)
    mismatches = 0
    non_facet_rows = 0
    tested = 0
    small = [e for e in ctx.catalog if e.graph.n <= 12]
    for gi in range(graphs):
        g = random_p6_paw_free_graph(rng)
        oracle = SeparationOracle(g, small)
        facets = stab_facets(g).as_row_set()
        for _ in range(points):
            y = random_rational_point(rng, g.n)
            tested += 1
            res = oracle.separate(y)
            member = membership_oracle(g, y)
            if (res.verdict == "inside") != member:
                mismatches += 1
            if res.verdict == "violated" and (res.inequality.coeffs, res.inequality.rhs) not in facets:
                non_facet_rows += 1
    ok = mismatches == 0 and non_facet_rows == 0
    return ok, (
        f"{tested} points over {graphs} graphs: {mismatches} verdict mismatches, "
        f"{non_facet_rows} non-facet violated rows"
    )


def criterion_p5_corollary(ctx):
    survivors = [
        e.name for e in ctx.catalog if not contains_induced_path(e.graph, 5)
    ]
    ok = sorted(survivors) == ["C5", "K2"]
    return ok, f"P5-free catalog members: {sorted(survivors)} (expected C5, K2)"


CRITERIA = {
    "h1-641": criterion_h1_641,
    "h2-26617": criterion_h2_26617,
    "catalog-counts": criterion_catalog_counts,
    "h2-structure": criterion_h2_structure,
    "ferries": criterion_ferries,
    "lemma3": criterion_lemma3,
    "structure-n7": criterion_structure_small,
    "composition": criterion_composition,
    "separation": criterion_separation,
    "p5-corollary": criterion_p5_corollary,
}


def run_suite(names=None, ctx=None, out=print):
    ctx = ctx or VerifyContext()
    names = list(names or CRITERIA)
    results = {}
    for name in names:
        if name not in CRITERIA:
            raise StabpolyError(f"unknown suite {name!r}; have {sorted(CRITERIA)}")
        t0 = time.time()
        ok, detail = CRITERIA[name](ctx)
        dt = time.time() - t0
        results[name] = ok
        out(f"[{'PASS' if ok else 'FAIL'}] {name} ({dt:.1f}s): {detail}")
    return results
