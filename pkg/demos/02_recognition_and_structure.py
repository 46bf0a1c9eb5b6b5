"""Forbidden subgraphs, the paw-free dichotomy, ferries, and modules.

Run: python demos/02_recognition_and_structure.py
"""

from stabpoly.graphs import bits, complete_multipartite, cycle_graph, disjoint_union
from stabpoly.modular import enumerate_bimodules, find_modules, substitute
from stabpoly.polytope import is_facet_inducing
from stabpoly.recognition import (
    FerrySpec,
    build_ferry,
    contains_induced_path,
    find_triangle,
    is_paw_free,
    olariu_decompose,
)

c5 = cycle_graph(5)
print("C5 has an induced P4:", contains_induced_path(c5, 4))
print("C5 has an induced P5:", contains_induced_path(c5, 5), "(all five vertices form the cycle)")

k222 = complete_multipartite(2, 2, 2)
print("\nK_{2,2,2}: triangle:", bits(find_triangle(k222)), "but paw-free:", is_paw_free(k222))

both = disjoint_union(c5, k222)
print("components of C5 + K_{2,2,2} under the paw-free dichotomy:")
for comp, kind, parts in olariu_decompose(both):
    print("  ", bits(comp), "->", kind, "" if parts is None else [bits(p) for p in parts])

print("\nferry with m=3, l=2 (8 vertices):")
f = build_ferry(FerrySpec(3, 2))
print("  degrees:", [f.degree(v) for v in range(f.n)])
print("  facet-inducing:", is_facet_inducing(f) is not None, "(ferries never are)")

print("\nmodules: C5 is prime:", find_modules(c5).is_prime)
blown = substitute(c5, 0, complete_multipartite(1, 1))  # an edgeless pair
rep = find_modules(blown)
print("after blowing vertex 0 into two false twins:", [bits(m) for m in rep.maximal_homogeneous_sets])

print("\nbi-modules of C6 (beyond its edges):")
c6 = cycle_graph(6)
for bm in enumerate_bimodules(c6):
    if (bm.h1 | bm.h2).bit_count() > 2:
        print("  ", bits(bm.h1), "|", bits(bm.h2))
