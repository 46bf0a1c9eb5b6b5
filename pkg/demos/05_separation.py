"""The separation oracle against the exact LP membership oracle.

Builds the catalog first (several minutes cold; cache with
STABPOLY_CACHE_DIR).

Run: python demos/05_separation.py
"""

import random
from fractions import Fraction

from stabpoly.catalog import build_catalog
from stabpoly.graphs import cycle_graph
from stabpoly.separation import SeparationOracle, membership_oracle, random_rational_point

catalog = build_catalog()
c5 = cycle_graph(5)
oracle = SeparationOracle(c5, catalog)

print("C5, y = (1/2, ..., 1/2):")
res = oracle.separate([Fraction(1, 2)] * 5)
terms = " + ".join(f"{c}x{v}" for v, c in enumerate(res.inequality.coeffs) if c)
print(f"  {res.verdict}: {terms} <= {res.inequality.rhs}, amount {res.amount}")
print(f"  supported by {res.support.name}")

print("\nC5, y = (1/3, ..., 1/3):", oracle.separate([Fraction(1, 3)] * 5).verdict)

print("\nrandom points, oracle vs exact LP membership:")
rng = random.Random(1)
agree = 0
for _ in range(200):
    y = random_rational_point(rng, 5)
    inside = oracle.separate(y).verdict == "inside"
    member = membership_oracle(c5, y)
    agree += inside == member
print(f"  {agree}/200 agree (must be all)")
