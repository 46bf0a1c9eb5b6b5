import json
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stabpoly.errors import DomainError
from stabpoly.graphs import (
    Graph,
    bits,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_graph6,
    from_json_dict,
    join,
    load_graph,
    mask_of,
    path_graph,
    to_graph6,
    to_json_dict,
)


def random_graph(rng, n, p=0.4):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


graphs_strategy = st.integers(1, 10).flatmap(
    lambda n: st.builds(
        lambda seed: random_graph(random.Random(seed), n),
        st.integers(0, 10**9),
    )
)


def test_construction_validation():
    with pytest.raises(DomainError):
        Graph(0)
    with pytest.raises(DomainError):
        Graph(33)
    with pytest.raises(DomainError):
        Graph(3, [(0, 0)])
    with pytest.raises(DomainError):
        Graph(3, [(0, 5)])
    with pytest.raises(DomainError):
        Graph(3, [(0, 1)], labels=(1, 2, 2))


@given(graphs_strategy)
@settings(max_examples=80, deadline=None)
def test_complement_involution(g):
    assert g.complement().complement() == g
    for v in range(g.n):
        assert g.degree(v) + g.complement().degree(v) == g.n - 1


def test_complement_examples():
    c5 = cycle_graph(5)
    assert c5.complement().edge_count() == 5
    assert path_graph(2).complement() == empty_graph(2)


def test_induced_subgraph_examples():
    c5 = cycle_graph(5)
    p4 = c5.induced(mask_of([0, 1, 2, 3]))
    assert sorted(p4.edges()) == sorted(path_graph(4).edges())
    assert c5.induced(c5.full_mask) == c5
    with pytest.raises(DomainError):
        c5.induced(0)
    with pytest.raises(DomainError):
        c5.induced(1 << 6)


@given(graphs_strategy)
@settings(max_examples=60, deadline=None)
def test_induced_full_identity(g):
    assert g.induced(g.full_mask) == g


def test_connectivity():
    assert cycle_graph(5).is_connected()
    two = disjoint_union(path_graph(2), path_graph(2))
    assert not two.is_connected()
    assert len(two.connected_components()) == 2
    assert sorted(map(bits, two.connected_components())) == [[0, 1], [2, 3]]


def test_join_and_multipartite():
    k23 = complete_multipartite(2, 3)
    assert k23.edge_count() == 6
    w = join(cycle_graph(5), empty_graph(1))
    assert w.degree(5) == 5


def test_graph6_known_values():
    # networkx is the reference encoder
    pairs = [
        (cycle_graph(5), nx.cycle_graph(5)),
        (path_graph(4), nx.path_graph(4)),
        (complete_graph(6), nx.complete_graph(6)),
        (empty_graph(3), nx.empty_graph(3)),
    ]
    for g, nxg in pairs:
        ours = to_graph6(g)
        theirs = nx.to_graph6_bytes(nxg, header=False).decode().strip()
        assert ours == theirs
        assert from_graph6(ours) == g


def test_graph6_matches_networkx_random():
    rng = random.Random(17)
    for _ in range(100):
        n = rng.randint(1, 12)
        g = random_graph(rng, n)
        nxg = nx.empty_graph(n)
        nxg.add_edges_from(g.edges())
        assert to_graph6(g) == nx.to_graph6_bytes(nxg, header=False).decode().strip()


def test_graph6_round_trip_random():
    rng = random.Random(1)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 16))
        assert from_graph6(to_graph6(g)) == g


def test_graph6_errors():
    with pytest.raises(DomainError):
        from_graph6("")
    with pytest.raises(DomainError):
        from_graph6("D")  # truncated body


def test_json_round_trip():
    g = Graph(4, [(0, 1), (1, 2)], labels=(4, 3, 2, 1))
    d = to_json_dict(g)
    h = from_json_dict(json.loads(json.dumps(d)))
    assert h == g and h.labels == g.labels


def test_load_graph_autodetect():
    g = cycle_graph(5)
    assert load_graph(to_graph6(g)) == g
    assert load_graph(json.dumps(to_json_dict(g))) == g
    with pytest.raises(DomainError):
        load_graph("")


def test_labels_machinery():
    g = Graph(3, [(0, 1), (1, 2)], labels=(2, 3, 1))
    assert g.by_labels([2, 1]) == 0b101
    assert bits(g.delete(g.by_labels([3])).full_mask) == [0, 1]
