import time
from stabpoly.structure import enumerate_structure_space
from stabpoly.graphs import to_graph6

t0 = time.time()
found = enumerate_structure_space(progress=lambda c: print("configs:", c, "%.0fs" % (time.time()-t0), flush=True))
print("TOTAL classes:", len(found), "in %.0fs" % (time.time()-t0), flush=True)
for cf in sorted(found, key=lambda c: (c[0], c[1])):
    g = found[cf]
    print("n=%2d m=%2d g6=%s" % (g.n, g.edge_count(), to_graph6(g)), flush=True)
