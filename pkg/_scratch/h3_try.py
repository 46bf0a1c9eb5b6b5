import time
from stabpoly.catalog import build_h3, derive_catalog
from stabpoly.polytope import is_facet_inducing, stab_facets
from stabpoly.stable import maximal_stable_sets

h3 = build_h3()
t0 = time.time()
sys_ = stab_facets(h3)
print("H3(v0) facets: %d (%.1fs)" % (len(sys_), time.time()-t0), flush=True)
cert = is_facet_inducing(h3)
print("H3(v0) facet-inducing:", cert is not None, flush=True)
entries = derive_catalog(h3, "H3", attach_phi=False)
print("classes:", len(entries), flush=True)
print("sizes:", sorted((e.graph.n for e in entries), reverse=True), flush=True)
