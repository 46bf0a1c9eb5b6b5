import time
from stabpoly.catalog import build_h1, H1_CENTER
from stabpoly.polytope import stab_facets, full_facets

h1 = build_h1()
t0 = time.time()
g = h1.delete([H1_CENTER])
full = full_facets(g)
sys_ = stab_facets(g)
print("H1 - center: total facets=%d, full facets=%d, time=%.1fs" % (len(sys_), len(full), time.time()-t0), flush=True)
