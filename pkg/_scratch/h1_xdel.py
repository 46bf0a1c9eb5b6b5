import time
from stabpoly.graphs import Graph
from stabpoly.polytope import full_facets
from stabpoly.errors import StabpolyError

base = []
for i in range(5):
    base.append((i, (i+1)%5))
    base.append((5+i, i))
    base.append((5+i, 5+(i+2)%5))      # y pentagram
    base.append((10+i, (i-1)%5))
    base.append((10+i, (i+1)%5))
    base.append((10+i, 10+(i+1)%5))    # z cycle
    base.append((10+i, 5+(i+2)%5))     # joins
    base.append((10+i, 5+(i+3)%5))

# x-neighborhood shapes over z's (up to rotation); x = vertex 15
xshapes = {
    "all5": [0,1,2,3,4],
    "quad": [0,1,2,3],
    "triple-023": [0,2,3],     # the mutually nonadjacent triple of Lemma-type (ii)
    "triple-012": [0,1,2],
    "pair-02": [0,2],
    "pair-01": [0,1],
    "single": [0],
}
for xname, zs in xshapes.items():
    xedges = [(15, 10+i) for i in zs]
    h1 = Graph(16, base + xedges)
    # orbit-distinct single deletions: v0..v4, y0..y4, z0..z4 all positions (symmetry broken), x
    seen_counts = {}
    for w in range(16):
        g = h1.delete([w])
        try:
            full = len(full_facets(g))
        except StabpolyError:
            full = -1
        kind = ("v","y","z","x")[min(w//5,3)]
        seen_counts[f"{kind}{w%5 if w<15 else ''}"] = full
        if full == 641:
            print("FOUND 641:", xname, "delete", w, flush=True)
    print(xname, seen_counts, flush=True)
