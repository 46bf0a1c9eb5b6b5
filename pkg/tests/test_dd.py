import random

import pytest

from stabpoly.dd import DDStatus, extreme_rays, extreme_rays_reference
from stabpoly.errors import BudgetError, DomainError


def orthant_rows(d):
    return [tuple(1 if j == i else 0 for j in range(d)) for i in range(d)]


def test_reversed_orthant():
    rays = extreme_rays(orthant_rows(4))
    assert rays == sorted(tuple(-1 if j == i else 0 for j in range(4)) for i in range(4))


def test_hypercube_vertices():
    for d in (2, 3, 4, 5):
        rows = []
        for i in range(d):
            rows.append(tuple(-1 if j == i else 0 for j in range(d + 1)))
            rows.append(tuple((1 if j == i else 0) if j < d else -1 for j in range(d + 1)))
        rays = extreme_rays(rows)
        assert len(rays) == 2 ** d
        assert all(r[d] == 1 and set(r[:d]) <= {0, 1} for r in rays)


def test_cross_polytope_facets():
    # conv(+-e_i) in R^3 has 8 facets; facet enumeration via the polar lift
    d = 3
    pts = []
    for i in range(d):
        for s in (1, -1):
            p = [0] * d
            p[i] = s
            pts.append(p)
    rows = [tuple([1] + p) for p in pts]
    rays = extreme_rays(rows)
    assert len(rays) == 8
    assert all(abs(c) == 1 for r in rays for c in r)


def test_not_pointed_raises():
    with pytest.raises(DomainError):
        extreme_rays([(1, 0, 0), (-1, 0, 0), (0, 1, 0)])


def test_ray_cap():
    rows = []
    d = 5
    for i in range(d):
        rows.append(tuple(-1 if j == i else 0 for j in range(d + 1)))
        rows.append(tuple((1 if j == i else 0) if j < d else -1 for j in range(d + 1)))
    with pytest.raises(BudgetError):
        extreme_rays(rows, ray_cap=10)


def test_agrees_with_reference_on_random_cones():
    rng = random.Random(42)
    done = 0
    while done < 100:
        d = rng.randint(2, 5)
        m = rng.randint(d, d + 7)
        rows = [tuple(rng.randint(-3, 3) for _ in range(d)) for _ in range(m)]
        try:
            ref = extreme_rays_reference(rows)
        except DomainError:
            continue
        assert extreme_rays(rows) == ref
        done += 1


def test_deterministic():
    rows = [(1, 1, -1), (-1, 0, 0), (0, -1, 0), (1, -2, 0), (0, 0, -1)]
    st = DDStatus()
    first = extreme_rays(rows, status=st)
    assert st.rows_inserted > 0
    assert extreme_rays(rows) == first


def test_output_primitive():
    rng = random.Random(5)
    for _ in range(40):
        d = rng.randint(2, 4)
        rows = [tuple(rng.randint(-4, 4) for _ in range(d)) for _ in range(d + 4)]
        try:
            rays = extreme_rays(rows)
        except DomainError:
            continue
        from math import gcd
        for r in rays:
            g = 0
            for x in r:
                g = gcd(g, x)
            assert g == 1
            assert all(sum(a * x for a, x in zip(row, r)) <= 0 for row in rows)