import time
from stabpoly.families import triangle_free_graphs
from stabpoly.recognition import contains_induced_path
from stabpoly.modular import is_prime
from stabpoly.polytope import full_facets
from stabpoly.graphs import to_graph6

t0 = time.time()
for n in (10, 11):
    total = 0
    classes = []
    for g in triangle_free_graphs(n):
        if not g.is_connected():
            continue
        total += 1
        if contains_induced_path(g, 6):
            continue
        if not is_prime(g):
            continue
        if full_facets(g):
            classes.append(g)
    print("n=%d: %d connected tri-free, %d prime facet-inducing P6-free (%.0fs)" % (n, total, len(classes), time.time()-t0), flush=True)
    for g in classes:
        print("   m=%2d g6=%s" % (g.edge_count(), to_graph6(g)), flush=True)
