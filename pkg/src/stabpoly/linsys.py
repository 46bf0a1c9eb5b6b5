"""Inequality rows and linear systems with exact rational I/O.

Rows are stored in primitive integer form: integer coefficients with gcd 1
(including the right-hand side) and a canonical orientation.  Full facets
expose an equivalent rhs = 1 rational view.  The JSON format carries
rationals as decimal-free "p/q" (or plain "p") strings and round-trips
bit-exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainError
from .graphs import bits

NONNEGATIVITY = "nonnegativity"
FACET = "facet"


def format_rational(x):
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def parse_rational(s):
    try:
        if "/" in s:
            p, q = s.split("/")
            return Fraction(int(p), int(q))
        return Fraction(int(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"bad rational literal {s!r}") from exc


@dataclass(frozen=True)
class Inequality:
    """A valid inequality coeffs . x <= rhs in primitive integer form."""

    coeffs: tuple
    rhs: int
    kind: str = FACET

    @staticmethod
    def from_rational(coeffs, rhs, kind=FACET):
        fracs = [Fraction(c) for c in coeffs] + [Fraction(rhs)]
        den = 1
        for f in fracs:
            den = den * f.denominator // gcd(den, f.denominator)
        ints = [int(f * den) for f in fracs]
        g = 0
        for x in ints:
            g = gcd(g, x)
        if g == 0:
            raise DomainError("all-zero inequality")
        ints = [x // g for x in ints]
        return Inequality(tuple(ints[:-1]), ints[-1], kind)

    @staticmethod
    def nonnegativity(n, v):
        coeffs = tuple(-1 if j == v else 0 for j in range(n))
        return Inequality(coeffs, 0, NONNEGATIVITY)

    @property
    def n(self):
        return len(self.coeffs)

    def support(self):
        m = 0
        for j, c in enumerate(self.coeffs):
            if c:
                m |= 1 << j
        return m

    def is_full(self):
        return all(self.coeffs)

    def evaluate_mask(self, mask):
        """coeffs . incidence vector of a vertex mask."""
        return sum(self.coeffs[v] for v in bits(mask))

    def is_tight_mask(self, mask):
        return self.evaluate_mask(mask) == self.rhs

    def normalized(self):
        """(Fraction coefficients, Fraction 1) for rows with positive rhs."""
        if self.rhs <= 0:
            raise DomainError("rhs = 1 normalization needs a positive right-hand side")
        r = Fraction(self.rhs)
        return tuple(Fraction(c) / r for c in self.coeffs), Fraction(1)

    def to_dict(self):
        return {
            "coeffs": [format_rational(c) for c in self.coeffs],
            "rhs": format_rational(self.rhs),
            "kind": self.kind,
        }

    @staticmethod
    def from_dict(d):
        try:
            coeffs = [parse_rational(s) for s in d["coeffs"]]
            rhs = parse_rational(d["rhs"])
            kind = d["kind"]
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed inequality JSON: {exc}") from exc
        if kind not in (NONNEGATIVITY, FACET):
            raise DomainError(f"unknown inequality kind {kind!r}")
        return Inequality.from_rational(coeffs, rhs, kind)


@dataclass(frozen=True)
class LinearSystem:
    """An ambient dimension and a duplicate-free list of inequality rows."""

    n: int
    rows: tuple

    def __post_init__(self):
        if any(r.n != self.n for r in self.rows):
            raise DomainError("row dimension mismatch in linear system")

    def __len__(self):
        return len(self.rows)

    def facet_rows(self):
        return [r for r in self.rows if r.kind == FACET]

    def nonnegativity_rows(self):
        return [r for r in self.rows if r.kind == NONNEGATIVITY]

    def full_rows(self):
        return [r for r in self.rows if r.kind == FACET and r.is_full()]

    def as_row_set(self):
        return frozenset((r.coeffs, r.rhs) for r in self.rows)

    def to_json(self):
        return json.dumps(
            {"n": self.n, "rows": [r.to_dict() for r in self.rows]},
            separators=(",", ":"),
        )

    @staticmethod
    def from_json(text):
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DomainError(f"bad linear system JSON: {exc}") from exc
        try:
            n = int(d["n"])
            rows = tuple(Inequality.from_dict(r) for r in d["rows"])
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed linear system JSON: {exc}") from exc
        return LinearSystem(n, rows)
