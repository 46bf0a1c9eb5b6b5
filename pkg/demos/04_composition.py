"""Defining systems under vertex substitution, checked against direct hulls.

Run: python demos/04_composition.py
"""

from stabpoly.composition import chvatal_substitute
from stabpoly.graphs import cycle_graph, empty_graph, path_graph
from stabpoly.modular import substitute
from stabpoly.polytope import stab_facets


def show(name, sys_):
    print(f"{name}: {len(sys_)} rows")
    for r in sys_.facet_rows():
        terms = " + ".join(f"{c}x{v}" for v, c in enumerate(r.coeffs) if c)
        print(f"   {terms} <= {r.rhs}")


c5 = cycle_graph(5)
e2 = empty_graph(2)

print("substituting two false twins for a vertex of C5:")
composed = chvatal_substitute(stab_facets(c5), 0, stab_facets(e2))
show("  composed system", composed)

direct = stab_facets(substitute(c5, 0, e2))
print("\n  equals the direct hull:", composed.as_row_set() == direct.as_row_set())

print("\nK2 into K2 (a join of K1 and K2, i.e. a triangle):")
k2 = path_graph(2)
show("  composed system", chvatal_substitute(stab_facets(k2), 0, stab_facets(k2)))
