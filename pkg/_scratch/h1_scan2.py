import itertools, time
from stabpoly.graphs import Graph
from stabpoly.polytope import full_facets
from stabpoly.errors import StabpolyError

base = []
for i in range(5):
    base.append((i, (i+1)%5))            # v cycle
    base.append((5+i, i))                # y_i - v_i
    base.append((10+i, (i-1)%5))         # z anchors: z_i spans v_{i-1}, v_{i+1}
    base.append((10+i, (i+1)%5))

ygroups = {
    "ypent": [(5+i, 5+(i+2)%5) for i in range(5)],
    "ycyc":  [(5+i, 5+(i+1)%5) for i in range(5)],
}
zgroups = {
    "zcyc":  [(10+i, 10+(i+1)%5) for i in range(5)],
    "zpent": [(10+i, 10+(i+2)%5) for i in range(5)],
}
joink = {s: [(10+i, 5+(i+s)%5) for i in range(5)] for s in range(5)}

seen = {}
for yk in ("ypent", "ycyc"):
    for zbits in range(4):
        for jbits in range(32):
            edges = list(base) + ygroups[yk]
            zs = [nm for b, nm in enumerate(("zcyc","zpent")) if zbits >> b & 1]
            js = [s for s in range(5) if jbits >> s & 1]
            for nm in zs: edges += zgroups[nm]
            for s in js: edges += joink[s]
            g = Graph(15, edges)
            if not g.is_connected():
                continue
            key = (yk, tuple(zs), tuple(js))
            try:
                full = len(full_facets(g))
            except StabpolyError as e:
                print(key, "ERR", e, flush=True); continue
            if full > 100 or full == 0:
                print(key, "-> full:", full, flush=True)
            if full == 641:
                print("FOUND 641:", key, flush=True)
