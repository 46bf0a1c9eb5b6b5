import random
from fractions import Fraction

import pytest

from stabpoly.errors import DomainError
from stabpoly.graphs import Graph, cycle_graph, path_graph
from stabpoly.polytope import stab_facets
from stabpoly.separation import (
    INSIDE,
    VIOLATED,
    SeparationOracle,
    membership_oracle,
    parse_point,
    random_rational_point,
    separate,
)
from stabpoly.stable import all_stable_sets


def test_c5_examples(catalog):
    c5 = cycle_graph(5)
    oracle = SeparationOracle(c5, catalog)
    res = oracle.separate([Fraction(0)] * 5)
    assert res.verdict == INSIDE
    res = oracle.separate([Fraction(1, 2)] * 5)
    assert res.verdict == VIOLATED
    assert res.inequality.coeffs == (1, 1, 1, 1, 1) and res.inequality.rhs == 2
    assert res.amount == Fraction(1, 2)
    assert res.support.name == "C5"
    y = [Fraction(0)] * 5
    y[3] = Fraction(-1, 3)
    res = oracle.separate(y)
    assert res.verdict == VIOLATED
    assert res.inequality.kind == "nonnegativity"
    assert res.amount == Fraction(1, 3)


def test_clique_stage(catalog):
    k3 = Graph(3, [(0, 1), (0, 2), (1, 2)])
    res = separate(k3, [Fraction(1, 2)] * 3, catalog)
    assert res.verdict == VIOLATED
    assert res.inequality.coeffs == (1, 1, 1) and res.inequality.rhs == 1
    assert res.support.name == "K2"


def test_rejects_out_of_class(catalog):
    paw = Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
    with pytest.raises(DomainError):
        SeparationOracle(paw, catalog)


def test_membership_oracle_basics():
    c5 = cycle_graph(5)
    assert membership_oracle(c5, [Fraction(0)] * 5)
    assert not membership_oracle(c5, [Fraction(1, 2)] * 5)
    for s in all_stable_sets(c5):
        y = [Fraction((s >> v) & 1) for v in range(5)]
        assert membership_oracle(c5, y)
    y = [Fraction(0)] * 5
    y[0] = Fraction(-1, 7)
    assert not membership_oracle(c5, y)


def test_membership_matches_facets_random():
    rng = random.Random(15)
    for _ in range(15):
        n = rng.randint(2, 8)
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
        sys_ = stab_facets(g)
        for _ in range(40):
            y = random_rational_point(rng, n)
            by_facets = all(
                sum(Fraction(c) * y[v] for v, c in enumerate(r.coeffs)) <= r.rhs
                for r in sys_.rows
            )
            assert membership_oracle(g, y) == by_facets


def test_scaling_never_flips_inside(catalog):
    rng = random.Random(77)
    c5 = cycle_graph(5)
    oracle = SeparationOracle(c5, catalog)
    for _ in range(50):
        y = [abs(x) for x in random_rational_point(rng, 5)]
        if oracle.separate(y).verdict == INSIDE:
            for lam in (Fraction(1, 2), Fraction(1, 3), Fraction(9, 10)):
                assert oracle.separate([lam * v for v in y]).verdict == INSIDE


def test_violation_amount_reproducible(catalog):
    rng = random.Random(31)
    from stabpoly.verify import random_p6_paw_free_graph

    for _ in range(10):
        g = random_p6_paw_free_graph(rng, nmax=10)
        oracle = SeparationOracle(g, catalog)
        for _ in range(30):
            y = random_rational_point(rng, g.n)
            res = oracle.separate(y)
            if res.verdict == VIOLATED:
                lhs = sum(Fraction(c) * y[v] for v, c in enumerate(res.inequality.coeffs))
                assert lhs - res.inequality.rhs == res.amount


def test_result_json(catalog):
    c5 = cycle_graph(5)
    res = separate(c5, [Fraction(1, 2)] * 5, catalog)
    d = res.to_dict()
    assert d["verdict"] == "violated"
    assert d["amount"] == "1/2"
    assert d["support"]["name"] == "C5"


def test_parse_point():
    assert parse_point(["1/2", "0", 1], 3) == (Fraction(1, 2), Fraction(0), Fraction(1))
    with pytest.raises(DomainError):
        parse_point(["1"], 2)
