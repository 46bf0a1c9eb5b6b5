"""The three container graphs and the prime facet-inducing catalog.

The H2 hull is large (26617 facets); with STABPOLY_CACHE_DIR set the result
is cached on disk after the first run.  Expect several minutes cold.

Run: python demos/03_containers_and_catalog.py
"""

from stabpoly.catalog import (
    build_catalog,
    build_h1,
    build_h2,
    build_h3,
    map_named_deletions,
)
from stabpoly.polytope import stab_facets
from stabpoly.recognition import is_p6_triangle_free

h1, h2, h3 = build_h1(), build_h2(), build_h3()
print("H1:", h1.n, "vertices;", "(P6,triangle)-free:", is_p6_triangle_free(h1))
print("H2:", h2.n, "vertices;", "(P6,triangle)-free:", is_p6_triangle_free(h2))
print("H3:", h3.n, "vertices;", "(P6,triangle)-free:", is_p6_triangle_free(h3))

print("\ncomputing STAB(H2)...")
sys_ = stab_facets(h2)
print("STAB(H2) facets:", len(sys_), "(16 nonnegativity + the rest)")

print("\nderiving the catalog from the three containers (several hulls)...")
catalog = build_catalog()
print(f"{len(catalog)} classes:")
for e in catalog:
    print(f"  {e.name:>4}: n={e.graph.n:2d} m={e.graph.edge_count():2d} |Phi|={len(e.phi):4d} from {e.source}")

print("\npublished deletion names over H2:")
report = map_named_deletions(catalog)
for k, v in report.items():
    print("  ", k, "->", v)
