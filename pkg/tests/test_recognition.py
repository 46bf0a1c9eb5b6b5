import random
from itertools import combinations

import pytest

from stabpoly.errors import DomainError
from stabpoly.graphs import (
    Graph,
    bits,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    mask_of,
    path_graph,
)
from stabpoly.recognition import (
    COMPLETE_MULTIPARTITE,
    TRIANGLE_FREE,
    DisconnectedFerryWarning,
    FerrySpec,
    bipartition,
    build_ferry,
    complete_multipartite_parts,
    contains_induced_path,
    find_induced_path,
    find_paw,
    find_triangle,
    is_co_matched_bipartite,
    is_complete_multipartite,
    is_matched_cobipartite,
    is_paw_free,
    is_triangle_free,
    olariu_decompose,
)


def random_graph(rng, n, p=0.4):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def brute_has_induced_path(g, k):
    for combo in combinations(range(g.n), k):
        sub = g.induced(mask_of(combo))
        degs = sorted(sub.degree(v) for v in range(k))
        if k == 2:
            want = [1, 1]
        else:
            want = [1, 1] + [2] * (k - 2)
        if degs == want and sub.is_connected():
            return True
    return False


def test_induced_path_examples():
    assert contains_induced_path(path_graph(6), 6)
    assert not contains_induced_path(cycle_graph(5), 5)
    assert contains_induced_path(cycle_graph(5), 4)
    with pytest.raises(DomainError):
        find_induced_path(path_graph(3), 1)


def test_induced_path_brute_oracle():
    rng = random.Random(11)
    for _ in range(120):
        n = rng.randint(2, 8)
        g = random_graph(rng, n, rng.uniform(0.15, 0.7))
        for k in range(2, n + 1):
            assert contains_induced_path(g, k) == brute_has_induced_path(g, k)


def test_witness_is_a_path():
    rng = random.Random(5)
    for _ in range(60):
        g = random_graph(rng, 8)
        w = find_induced_path(g, 4)
        if w is not None:
            sub = g.induced(w)
            assert sorted(sub.degree(v) for v in range(4)) == [1, 1, 2, 2]
            assert sub.is_connected()


def test_triangle_and_paw():
    assert not is_triangle_free(complete_graph(3))
    assert is_paw_free(complete_multipartite(2, 2, 2))
    assert not is_triangle_free(complete_multipartite(2, 2, 2))
    paw = Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
    assert find_paw(paw) == 0b1111
    assert is_triangle_free(cycle_graph(5))
    # triangle-free implies paw-free
    rng = random.Random(2)
    for _ in range(80):
        g = random_graph(rng, rng.randint(1, 9))
        if is_triangle_free(g):
            assert is_paw_free(g)


def test_complete_multipartite():
    parts = complete_multipartite_parts(complete_multipartite(2, 3))
    assert sorted(p.bit_count() for p in parts) == [2, 3]
    assert not is_complete_multipartite(path_graph(4))
    assert not is_complete_multipartite(cycle_graph(5))
    assert is_complete_multipartite(complete_graph(4))


def test_olariu_decompose():
    g = disjoint_union(cycle_graph(5), complete_multipartite(2, 2, 2))
    tags = olariu_decompose(g)
    kinds = sorted(t[1] for t in tags)
    assert kinds == sorted([TRIANGLE_FREE, COMPLETE_MULTIPARTITE])
    k3 = olariu_decompose(complete_graph(3))
    assert k3[0][1] == COMPLETE_MULTIPARTITE and len(k3[0][2]) == 3
    paw = Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
    with pytest.raises(DomainError):
        olariu_decompose(paw)


def test_olariu_exhaustive_small():
    # the dichotomy over every connected paw-free graph with at most 7 vertices
    from stabpoly.families import connected_graphs

    for n in range(1, 8):
        for g in connected_graphs(n):
            if is_paw_free(g):
                tags = olariu_decompose(g)
                assert len(tags) == 1
                comp, kind, parts = tags[0]
                if kind == COMPLETE_MULTIPARTITE:
                    assert complete_multipartite_parts(g) is not None
                else:
                    assert is_triangle_free(g)


def test_bipartition():
    s1, s2 = bipartition(cycle_graph(4))
    assert {s1.bit_count(), s2.bit_count()} == {2}
    assert bipartition(cycle_graph(5)) is None
    s1, s2 = bipartition(path_graph(6))
    assert s1.bit_count() == s2.bit_count() == 3


def test_ferry_shapes():
    g = build_ferry(FerrySpec(3, 2))
    assert g.n == 8 and g.is_connected()
    zs = [v for v in range(g.n) if g.degree(v) == 2]
    assert len(zs) >= 2  # the two z vertices have degree exactly 2
    for z in (6, 7):
        assert g.degree(z) == 2
        a, b = bits(g.adj[z])
        assert not g.has_edge(a, b)

    g = build_ferry(FerrySpec(2, 2))
    assert g.n == 6
    assert g.degree(4) == g.degree(5) == 2

    with pytest.warns(DisconnectedFerryWarning):
        g = build_ferry(FerrySpec(1, 0))
    assert g.n == 2 and g.edge_count() == 0

    with pytest.raises(DomainError):
        FerrySpec(0, 0)
    with pytest.raises(DomainError):
        FerrySpec(2, 3)
    with pytest.raises(DomainError):
        FerrySpec(2, 1, x0y0_adjacent=True)


def test_ferry_x0_y0():
    g = build_ferry(FerrySpec(2, 1, has_x0=True, has_y0=True))
    assert g.n == 7
    x0, y0 = 5, 6
    assert all(g.has_edge(x0, y) for y in (2, 3))
    assert all(g.has_edge(y0, x) for x in (0, 1))
    assert not g.has_edge(x0, y0)
    g2 = build_ferry(FerrySpec(2, 1, has_x0=True, has_y0=True, x0y0_adjacent=True))
    assert g2.has_edge(5, 6)


def brute_matched_cobipartite(g):
    # over all clique bipartitions
    n = g.n
    for mask in range(1 << n):
        c1, c2 = mask, g.full_mask & ~mask
        if c1.bit_count() > c2.bit_count():
            continue
        if c2.bit_count() - c1.bit_count() > 1:
            continue
        ok = True
        for side in (c1, c2):
            for v in bits(side):
                if g.adj[v] & side != side & ~(1 << v):
                    ok = False
        if not ok:
            continue
        un1 = un2 = 0
        for v in bits(c1):
            d = (g.adj[v] & c2).bit_count()
            if d > 1:
                ok = False
            elif d == 0:
                un1 += 1
        for v in bits(c2):
            d = (g.adj[v] & c1).bit_count()
            if d > 1:
                ok = False
            elif d == 0:
                un2 += 1
        if ok and un1 <= 1 and un2 <= 1:
            return True
    return False


def test_co_matched_bipartite():
    two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                              (0, 3), (1, 4), (2, 5)])
    assert is_matched_cobipartite(two_triangles)
    assert is_co_matched_bipartite(two_triangles.complement())
    assert is_co_matched_bipartite(path_graph(2))
    assert not is_co_matched_bipartite(cycle_graph(5))
    rng = random.Random(9)
    for _ in range(120):
        g = random_graph(rng, rng.randint(1, 7), rng.uniform(0.2, 0.8))
        assert is_matched_cobipartite(g) == brute_matched_cobipartite(g)
