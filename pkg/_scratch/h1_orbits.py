import time
from stabpoly.catalog import build_h1
from stabpoly.polytope import full_facets, stab_facets

h1 = build_h1()
for name, vtx in [("v1", 0), ("y1", 5), ("z1", 10), ("x", 15)]:
    g = h1.delete([vtx])
    t0 = time.time()
    full = full_facets(g)
    tot = len(stab_facets(g))
    print("H1 - %s: full=%d total=%d (%.1fs)" % (name, len(full), tot, time.time()-t0), flush=True)
