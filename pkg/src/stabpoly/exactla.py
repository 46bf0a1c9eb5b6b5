"""Exact linear algebra over the rationals for small systems.

Everything here works on lists of python ints or Fractions; sizes are at
most a few dozen rows, so plain fraction-free elimination is plenty.
"""

from __future__ import annotations

from fractions import Fraction


def rank_int(rows):
    """Rank of an integer matrix (fraction-free Gaussian elimination)."""
    if not rows:
        return 0
    m = [list(r) for r in rows]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(rank + 1, nrows):
            for c in range(col + 1, ncols):
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) // prev
            m[r][col] = 0
        prev = m[rank][col]
        rank += 1
        if rank == nrows:
            break
    return rank


def solve_exact(a_rows, b):
    """Solve A x = b exactly; returns Fractions, or None if inconsistent or
    underdetermined."""
    n = len(a_rows)
    ncols = len(a_rows[0])
    m = [[Fraction(x) for x in row] + [Fraction(bv)] for row, bv in zip(a_rows, b)]
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, n) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        f = m[r][col]
        m[r] = [x / f for x in m[r]]
        for i in range(n):
            if i != r and m[i][col]:
                g = m[i][col]
                m[i] = [x - g * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    for i in range(r, n):
        if m[i][ncols]:
            return None
    if r < ncols:
        return None
    x = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        x[col] = m[i][ncols]
    return x


class RankTracker:
    """Incremental rank over the rationals: add rows, query independence."""

    def __init__(self, ncols):
        self.ncols = ncols
        self.echelon = []  # (pivot_col, reduced Fraction row)

    @property
    def rank(self):
        return len(self.echelon)

    def try_add(self, row):
        """Add the row if it is independent of those already added; returns
        True when added."""
        v = [Fraction(x) for x in row]
        for col, erow in self.echelon:
            if v[col]:
                f = v[col]
                v = [a - f * b for a, b in zip(v, erow)]
        piv = next((j for j in range(self.ncols) if v[j]), None)
        if piv is None:
            return False
        f = v[piv]
        v = [a / f for a in v]
        for i, (col, erow) in enumerate(self.echelon):
            if erow[piv]:
                g = erow[piv]
                self.echelon[i] = (col, [a - g * b for a, b in zip(erow, v)])
        self.echelon.append((piv, v))
        return True


def phase1_feasible(rows, rhs):
    """Exact feasibility of {x >= 0 : A x = b} with b >= 0, by a Phase-I
    simplex with Bland's rule over Fractions."""
    m = len(rows)
    if m == 0:
        return True
    n = len(rows[0])
    tab = []
    for i in range(m):
        if rhs[i] < 0:
            raise ValueError("phase1_feasible needs nonnegative right-hand sides")
        row = [Fraction(x) for x in rows[i]]
        art = [Fraction(int(j == i)) for j in range(m)]
        tab.append(row + art + [Fraction(rhs[i])])
    ncols = n + m
    basis = list(range(n, n + m))
    # objective: minimize sum of artificials; reduced costs via z-row
    zrow = [Fraction(0)] * (ncols + 1)
    for i in range(m):
        for j in range(ncols + 1):
            zrow[j] += tab[i][j]
    while True:
        enter = next((j for j in range(n) if zrow[j] > 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][ncols] / tab[i][enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            break
        _, piv = best
        f = tab[piv][enter]
        tab[piv] = [x / f for x in tab[piv]]
        for i in range(m):
            if i != piv and tab[i][enter]:
                g = tab[i][enter]
                tab[i] = [a - g * b for a, b in zip(tab[i], tab[piv])]
        g = zrow[enter]
        zrow = [a - g * b for a, b in zip(zrow, tab[piv])]
        basis[piv] = enter
    return zrow[ncols] == 0
