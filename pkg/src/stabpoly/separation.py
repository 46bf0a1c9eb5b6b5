"""Polynomial separation over STAB(G) for (P6,paw)-free graphs, plus the
exact LP membership oracle used to certify it.

The oracle follows the constant-catalog pipeline: nonnegativity first, then
maximal-clique rows through an exact max-weight clique query on the paw-free
decomposition, then the lifted full-facet rows of every catalog class over
its clique-join extensions.  Candidate rows depend only on the graph and
catalog, so they are enumerated once and cached on the oracle object.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .composition import enumerate_clique_join_extensions
from .errors import DomainError
from .exactla import phase1_feasible
from .graphs import bits
from .linsys import FACET, Inequality, format_rational, parse_rational
from .recognition import find_induced_path, find_paw
from .stable import max_weight_clique_pawfree, maximal_stable_sets

INSIDE = "inside"
VIOLATED = "violated"


@dataclass(frozen=True)
class SupportingSubgraph:
    """Where a violated row comes from: catalog class, embedded core, and the
    joined clique (clique rows use the degenerate names K1/K2)."""

    name: str
    core: int
    embedding: tuple
    clique: int


@dataclass(frozen=True)
class SeparationResult:
    verdict: str
    inequality: Inequality | None = None
    support: SupportingSubgraph | None = None
    amount: Fraction | None = None

    def to_dict(self):
        d = {"verdict": self.verdict}
        if self.verdict == VIOLATED:
            d["inequality"] = self.inequality.to_dict()
            d["amount"] = format_rational(self.amount)
            if self.support is not None:
                d["support"] = {
                    "name": self.support.name,
                    "core": sorted(bits(self.support.core)),
                    "embedding": list(self.support.embedding),
                    "clique": sorted(bits(self.support.clique)),
                }
        return d


def parse_point(data, n):
    """A query point from a JSON list of 'p/q' strings (or numbers)."""
    if len(data) != n:
        raise DomainError(f"point has {len(data)} entries, graph has {n}")
    out = []
    for x in data:
        out.append(parse_rational(x) if isinstance(x, str) else Fraction(x))
    return tuple(out)


def _require_p6_paw_free(g):
    paw = find_paw(g)
    if paw is not None:
        raise DomainError(f"graph is not paw-free: paw on vertices {bits(paw)}")
    if g.n >= 6:
        p6 = find_induced_path(g, 6)
        if p6 is not None:
            raise DomainError(f"graph is not P6-free: induced path on vertices {bits(p6)}")


class SeparationOracle:
    """Per-graph separation state: verified class membership and the cached
    lifted catalog rows."""

    def __init__(self, g, catalog):
        _require_p6_paw_free(g)
        self.g = g
        self.catalog = catalog
        self._rows = None

    def _catalog_rows(self):
        if self._rows is not None:
            return self._rows
        rows = []
        seen = set()
        for entry in self.catalog:
            f = entry.graph
            if f.n <= 2 or f.n > self.g.n:
                continue
            for ext in enumerate_clique_join_extensions(self.g, f):
                if not ext.maximal:
                    continue
                for phi in entry.phi:
                    coeffs = [0] * self.g.n
                    for i, hv in enumerate(ext.embedding):
                        coeffs[hv] = phi.coeffs[i]
                    for v in bits(ext.clique):
                        coeffs[v] = phi.rhs
                    key = (tuple(coeffs), phi.rhs)
                    if key in seen:
                        continue
                    seen.add(key)
                    rows.append(
                        (
                            Inequality(key[0], phi.rhs, FACET),
                            SupportingSubgraph(entry.name, ext.core, ext.embedding, ext.clique),
                        )
                    )
        rows.sort(key=lambda t: (t[0].coeffs, t[0].rhs))
        self._rows = rows
        return rows

    def separate(self, y):
        """Inside verdict or the most violated facet row, stage by stage."""
        g = self.g
        if len(y) != g.n:
            raise DomainError("point dimension mismatch")
        y = tuple(Fraction(x) for x in y)
        neg = [(y[v], v) for v in range(g.n) if y[v] < 0]
        if neg:
            val, v = min(neg)
            row = Inequality.nonnegativity(g.n, v)
            return SeparationResult(VIOLATED, row, None, -val)
        clique, val = max_weight_clique_pawfree(g, y)
        if val > 1:
            coeffs = tuple(1 if clique >> j & 1 else 0 for j in range(g.n))
            row = Inequality(coeffs, 1, FACET)
            cb = sorted(bits(clique))
            if len(cb) >= 2:
                support = SupportingSubgraph(
                    "K2", (1 << cb[0]) | (1 << cb[1]), (cb[0], cb[1]),
                    clique & ~((1 << cb[0]) | (1 << cb[1])),
                )
            else:
                support = SupportingSubgraph("K1", clique, (cb[0],), 0)
            return SeparationResult(VIOLATED, row, support, val - 1)
        best = None
        for row, support in self._catalog_rows():
            lhs = sum(Fraction(c) * y[v] for v, c in enumerate(row.coeffs) if c)
            amount = lhs - row.rhs
            if amount <= 0:
                continue
            # rows compare on the rhs = 1 scale; the reported amount is the
            # raw slack of the returned primitive row
            key = (Fraction(amount, row.rhs), tuple(-c for c in row.normalized()[0]))
            if best is None or key > best[0]:
                best = (key, amount, row, support)
        if best is None:
            return SeparationResult(INSIDE)
        _, amount, row, support = best
        return SeparationResult(VIOLATED, row, support, amount)


def separate(g, y, catalog):
    return SeparationOracle(g, catalog).separate(y)


def membership_oracle(g, y):
    """Exact membership: y is in STAB(g) iff y >= 0 and some convex
    combination of maximal stable incidence vectors dominates y (STAB is
    down-monotone, so dominance and membership coincide); decided by exact
    LP feasibility."""
    y = tuple(Fraction(x) for x in y)
    if len(y) != g.n:
        raise DomainError("point dimension mismatch")
    if any(x < 0 for x in y):
        return False
    stable = maximal_stable_sets(g)
    k = len(stable)
    rows = []
    rhs = []
    for v in range(g.n):
        row = [Fraction(1) if s >> v & 1 else Fraction(0) for s in stable]
        slack = [Fraction(0)] * g.n
        slack[v] = Fraction(-1)
        rows.append(row + slack)
        rhs.append(y[v])
    rows.append([Fraction(1)] * k + [Fraction(0)] * g.n)
    rhs.append(Fraction(1))
    return phase1_feasible(rows, rhs)


def random_rational_point(rng, n, max_den=64, lo=Fraction(-1, 4), hi=Fraction(6, 5)):
    """A random rational vector with bounded denominators; spans a band
    around [0,1] so all separation stages get exercised."""
    out = []
    span = hi - lo
    for _ in range(n):
        den = rng.randint(1, max_den)
        num = rng.randint(0, den)
        out.append(lo + span * Fraction(num, den))
    return tuple(out)
