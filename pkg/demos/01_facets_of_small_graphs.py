"""Facets of STAB(G) for small graphs: systems, full facets, certificates.

Run: python demos/01_facets_of_small_graphs.py
"""

from stabpoly.graphs import cycle_graph, path_graph, bits
from stabpoly.polytope import (
    critical_vertices,
    full_facets,
    is_facet_inducing,
    stab_facets,
)
from stabpoly.stable import all_stable_sets, maximal_stable_sets


def show_system(name, g):
    sys_ = stab_facets(g)
    print(f"\n{name}: {g.n} vertices, {g.edge_count()} edges")
    print(f"  stable sets: {len(all_stable_sets(g))}, maximal: {len(maximal_stable_sets(g))}")
    print(f"  defining system: {len(sys_)} rows")
    for r in sys_.rows:
        terms = " + ".join(f"{c}x{v}" for v, c in enumerate(r.coeffs) if c)
        print(f"    [{r.kind:>13}] {terms} <= {r.rhs}")


show_system("K2", path_graph(2))
show_system("P4 (perfect, so cliques only)", path_graph(4))
show_system("C5 (the smallest full facet)", cycle_graph(5))

c5 = cycle_graph(5)
phi = full_facets(c5)
print("\nPhi(C5) normalized:", [str(c) for c in phi[0].normalized()[0]], "<= 1")

cert = is_facet_inducing(c5)
print("\nfacet-inducing certificate for C5 (rows are maximal stable sets):")
for m in cert.row_masks:
    print("  ", bits(m))
print("coefficients:", cert.coeffs, "rhs:", cert.rhs)
print("critical vertices (column with a single 1):", critical_vertices(c5, cert))

c7 = cycle_graph(7)
print(f"\nC7: {len(stab_facets(c7))} rows, {len(full_facets(c7))} full facet(s)")
