import time, sys
from stabpoly.graphs import Graph
from stabpoly.stable import maximal_stable_sets
from stabpoly.dd import extreme_rays, DDStatus

def build_h2():
    names = [(x,i) for x in "abcd" for i in range(4)]
    pos = {nm:k for k,nm in enumerate(names)}
    edges = set()
    for x in "abcd":
        for i in range(4):
            edges.add(frozenset((pos[(x,i)], pos[(x,(i+1)%4)])))
    for i in range(4):
        for (x,y) in (("a","b"),("b","c"),("c","d"),("d","a")):
            edges.add(frozenset((pos[(x,i)], pos[(y,i)])))
        edges.add(frozenset((pos[("a",i)], pos[("c",(i+2)%4)])))
        edges.add(frozenset((pos[("b",i)], pos[("d",(i+2)%4)])))
    return Graph(16, [tuple(e) for e in edges])

h2 = build_h2()
n = 16
ms = maximal_stable_sets(h2)
nonneg = [tuple(-1 if j==v else 0 for j in range(n+1)) for v in range(n)]
def srow(s): return tuple((s>>j&1) for j in range(n)) + (-1,)

def run(name, stab_rows):
    rows = nonneg + stab_rows
    st = DDStatus()
    t0 = time.time()
    rays = extreme_rays(rows, status=st)
    print("%-16s rays=%d time=%.1fs max_rays=%d pairs=%.2e faces=%d" % (
        name, len(rays), time.time()-t0, st.max_rays, st.pairs_filtered, st.faces_tested), flush=True)

for which in sys.argv[1:]:
    if which == "desc":
        run("popcount desc", sorted((srow(s) for s in ms), key=lambda r: (-sum(r[:n]), r)))
    elif which == "asc":
        run("popcount asc", sorted((srow(s) for s in ms), key=lambda r: (sum(r[:n]), r)))
    elif which == "lex":
        run("lex", sorted(srow(s) for s in ms))
