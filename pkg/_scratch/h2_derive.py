import time
from stabpoly.catalog import build_h2, derive_catalog, H2_NAMED_DELETIONS, h2_named_deletion_graph
from stabpoly.canon import canonical_form, canonical_key
from stabpoly.graphs import to_graph6

t0 = time.time()
entries = derive_catalog(build_h2(), "H2", attach_phi=False)
print("H2 classes: %d in %.1fs" % (len(entries), time.time()-t0), flush=True)
print("sizes:", sorted((e.graph.n for e in entries), reverse=True), flush=True)

named_cfs = {}
for nm in H2_NAMED_DELETIONS:
    named_cfs[canonical_form(h2_named_deletion_graph(nm))] = nm
from stabpoly.graphs import Graph
k2 = canonical_form(Graph(2, [(0,1)]))
c5 = canonical_form(Graph(5, [(i,(i+1)%5) for i in range(5)]))
for e in entries:
    tag = named_cfs.get(e.canonical)
    if e.canonical == k2: tag = "K2"
    if e.canonical == c5: tag = "C5"
    print("class n=%2d tag=%s g6=%s" % (e.graph.n, tag, to_graph6(e.graph)), flush=True)
