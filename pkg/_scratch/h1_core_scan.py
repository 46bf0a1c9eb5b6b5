import itertools, time
from stabpoly.graphs import Graph
from stabpoly.polytope import full_facets
from stabpoly.errors import StabpolyError

# 15-vertex core: v 0-4, y 5-9, z 10-14 (z_i spans v_{i-1}, v_{i+1})
base = []
for i in range(5):
    base.append((i, (i+1)%5))            # v cycle
    base.append((5+i, i))                # y_i - v_i
    base.append((10+i, (i-1)%5))         # z anchors
    base.append((10+i, (i+1)%5))

groups = {
    "ypent":  [(5+i, 5+(i+2)%5) for i in range(5)],        # y_i ~ y_{i+2}
    "zcyc":   [(10+i, 10+(i+1)%5) for i in range(5)],      # z_i ~ z_{i+1}
    "zpent":  [(10+i, 10+(i+2)%5) for i in range(5)],      # z_i ~ z_{i+2}
    "join23": [(10+i, 5+(i+2)%5) for i in range(5)] + [(10+i, 5+(i+3)%5) for i in range(5)],
    "join14": [(10+i, 5+(i+1)%5) for i in range(5)] + [(10+i, 5+(i+4)%5) for i in range(5)],
}
names = list(groups)
for picks in itertools.product([0,1], repeat=len(names)):
    edges = list(base)
    for nm, p in zip(names, picks):
        if p:
            edges.extend(groups[nm])
    try:
        g = Graph(15, edges)
    except Exception:
        continue
    if not g.is_connected():
        continue
    t0 = time.time()
    try:
        full = len(full_facets(g))
    except StabpolyError as e:
        print(dict(zip(names,picks)), "ERR", e, flush=True); continue
    print({nm for nm,p in zip(names,picks) if p}, "-> full:", full, "(%.1fs)" % (time.time()-t0), flush=True)
