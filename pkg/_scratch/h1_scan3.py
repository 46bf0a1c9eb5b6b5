import time
from stabpoly.graphs import Graph
from stabpoly.polytope import full_facets
from stabpoly.errors import StabpolyError

base = []
for i in range(5):
    base.append((i, (i+1)%5))
    base.append((5+i, i))
    base.append((10+i, (i-1)%5))
    base.append((10+i, (i+1)%5))

ygroups = {
    "ynone": [],
    "yK5":   [(5+i, 5+(i+1)%5) for i in range(5)] + [(5+i, 5+(i+2)%5) for i in range(5)],
}
zgroups = {
    "znone": [],
    "zcyc":  [(10+i, 10+(i+1)%5) for i in range(5)],
    "zpent": [(10+i, 10+(i+2)%5) for i in range(5)],
    "zK5":   [(10+i, 10+(i+1)%5) for i in range(5)] + [(10+i, 10+(i+2)%5) for i in range(5)],
}
joink = {s: [(10+i, 5+(i+s)%5) for i in range(5)] for s in range(5)}

for yk, ye in ygroups.items():
    for zk, ze in zgroups.items():
        for jbits in range(32):
            edges = list(base) + ye + ze
            js = [s for s in range(5) if jbits >> s & 1]
            for s in js: edges += joink[s]
            g = Graph(15, edges)
            if not g.is_connected():
                continue
            try:
                full = len(full_facets(g))
            except StabpolyError as e:
                continue
            if full >= 500:
                print((yk, zk, tuple(js)), "-> full:", full, flush=True)
            if full == 641:
                print("FOUND 641:", (yk, zk, tuple(js)), flush=True)
