"""Double description method for pointed rational polyhedral cones.

``extreme_rays(rows)`` returns the extreme rays of the cone
{ x : a . x <= 0 for every row a }, with integer input rows and integer,
gcd-reduced output rays.  The row matrix must have full column rank
(pointed cone), which holds for every cone this package builds.

The engine carries each ray's tight-row set as a packed bit row and decides
adjacency of a positive/negative ray pair combinatorially: the pair is
adjacent iff no other current ray is tight on the intersection of their
tight sets.  Pairs are pre-filtered by popcount and deduplicated by
intersection pattern, so each candidate face is examined once.  All ray
arithmetic is integer and exact; numpy is used only where 64-bit bounds
are proven by the coefficient guard below.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np

from .errors import BudgetError, DomainError

# With row entries bounded by _MAX_ROW and ray entries by _MAX_RAY, every
# int64 intermediate below stays under 2**62.
_MAX_RAY = 1 << 28
_MAX_ROW = 1 << 20

DEFAULT_RAY_CAP = 5_000_000


def _reduced(vec):
    g = 0
    for x in vec:
        g = gcd(g, x)
        if g == 1:
            return tuple(vec)
    if g <= 1:
        return tuple(vec)
    return tuple(x // g for x in vec)


def _independent_rows(rows, d):
    """Indices of the first maximal linearly independent subset, by reduced
    Gaussian elimination over the rationals."""
    echelon = []  # (pivot_col, row); each row is 1 at its pivot, 0 at others
    chosen = []
    for idx, row in enumerate(rows):
        v = [Fraction(x) for x in row]
        for col, erow in echelon:
            if v[col]:
                f = v[col]
                v = [a - f * b for a, b in zip(v, erow)]
        piv = next((j for j in range(d) if v[j]), None)
        if piv is None:
            continue
        inv = v[piv]
        v = [a / inv for a in v]
        for i, (col, erow) in enumerate(echelon):
            if erow[piv]:
                f = erow[piv]
                echelon[i] = (col, [a - f * b for a, b in zip(erow, v)])
        echelon.append((piv, v))
        chosen.append(idx)
        if len(chosen) == d:
            break
    return chosen


def _initial_rays(rows, basis, d):
    """Rays of the simplicial cone of the basis rows: integer columns of
    -inverse(A), scaled primitive, ray j tight on all basis rows but j."""
    a = [[Fraction(rows[i][j]) for j in range(d)] for i in basis]
    # invert by Gauss-Jordan
    inv = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
    m = [row[:] for row in a]
    for col in range(d):
        piv = next(r for r in range(col, d) if m[r][col])
        m[col], m[piv] = m[piv], m[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        f = m[col][col]
        m[col] = [x / f for x in m[col]]
        inv[col] = [x / f for x in inv[col]]
        for r in range(d):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    rays = []
    for j in range(d):
        col = [-inv[i][j] for i in range(d)]
        den = 1
        for x in col:
            den = den * x.denominator // gcd(den, x.denominator)
        ray = _reduced([int(x * den) for x in col])
        rays.append(ray)
    return rays


def _pack_sets(sets, words):
    out = np.zeros((len(sets), words), dtype=np.uint64)
    for i, s in enumerate(sets):
        w = 0
        while s:
            out[i, w] = s & 0xFFFFFFFFFFFFFFFF
            s >>= 64
            w += 1
    return out


class DDStatus:
    """Counters reported with budget errors and exposed for diagnostics."""

    def __init__(self):
        self.rows_inserted = 0
        self.max_rays = 0
        self.pairs_filtered = 0
        self.faces_tested = 0


def extreme_rays(rows, ray_cap=DEFAULT_RAY_CAP, status=None):
    """Extreme rays of {x : a.x <= 0 for a in rows}, sorted, primitive."""
    if not rows:
        raise DomainError("no inequality rows given")
    d = len(rows[0])
    rows = [tuple(int(x) for x in r) for r in rows]
    if any(len(r) != d for r in rows):
        raise DomainError("ragged row dimensions")
    if max((abs(x) for r in rows for x in r), default=0) > _MAX_ROW:
        raise BudgetError("row coefficients exceed the engine's integer guard")
    basis = _independent_rows(rows, d)
    if len(basis) < d:
        raise DomainError("cone is not pointed (row rank below dimension)")
    if status is None:
        status = DDStatus()

    m = len(rows)
    words = (m + 63) // 64
    rays = _initial_rays(rows, basis, d)
    zero = []
    basis_mask = 0
    for i in basis:
        basis_mask |= 1 << i
    for j, i in enumerate(basis):
        zero.append(basis_mask & ~(1 << i))

    ray_np = np.array(rays, dtype=np.int64)
    zero_np = _pack_sets(zero, words)
    row_np = np.array(rows, dtype=np.int64)

    basis_set = set(basis)
    order = [k for k in range(m) if k not in basis_set]
    need = d - 2

    for k in order:
        status.rows_inserted += 1
        nrays = ray_np.shape[0]
        vals = ray_np @ row_np[k]
        pos_idx = np.nonzero(vals > 0)[0]
        zer_idx = np.nonzero(vals == 0)[0]
        wk, bk = divmod(k, 64)
        kbit = np.uint64(1 << bk)
        if pos_idx.size == 0:
            if zer_idx.size:
                zero_np[zer_idx, wk] |= kbit
            continue
        neg_idx = np.nonzero(vals < 0)[0]
        new_rays = []
        new_zero = []
        if neg_idx.size:
            uniq = _crossing_faces(zero_np, pos_idx, neg_idx, need, words, status)
            if uniq.shape[0]:
                keepers = _adjacent_pairs(uniq, zero_np, m, status)
                for p, q in keepers:
                    if vals[p] < 0:
                        p, q = q, p
                    vp, vq = int(vals[p]), int(vals[q])
                    rp = ray_np[p].tolist()
                    rq = ray_np[q].tolist()
                    vec = _reduced([vp * b - vq * a for a, b in zip(rp, rq)])
                    new_rays.append(vec)
                    zp = int.from_bytes(zero_np[p].tobytes(), "little")
                    zq = int.from_bytes(zero_np[q].tobytes(), "little")
                    new_zero.append((zp & zq) | (1 << k))
        # keep feasible rays, mark the newly tight ones, append children
        keep = vals <= 0
        if zer_idx.size:
            zero_np[zer_idx, wk] |= kbit
        ray_np = ray_np[keep]
        zero_np = zero_np[keep]
        if new_rays:
            if max(abs(x) for vec in new_rays for x in vec) > _MAX_RAY:
                raise BudgetError("ray coefficients exceed the engine's integer guard")
            ray_np = np.concatenate([ray_np, np.array(new_rays, dtype=np.int64)])
            zero_np = np.concatenate([zero_np, _pack_sets(new_zero, words)])
        status.max_rays = max(status.max_rays, ray_np.shape[0])
        if ray_np.shape[0] > ray_cap:
            raise BudgetError(
                f"double description ray cap exceeded: {ray_np.shape[0]} rays "
                f"after {status.rows_inserted} insertions (cap {ray_cap})"
            )

    out = sorted(tuple(r) for r in ray_np.tolist())
    return out


def _crossing_faces(zero_np, pos_idx, neg_idx, need, words, status):
    """Distinct tight-set intersections of pos/neg pairs with enough common
    tight rows to possibly span a (d-2)-face."""
    zp_all = zero_np[pos_idx]
    zn = zero_np[neg_idx]
    chunks = []
    block = max(1, int(32_000_000 // max(1, zn.shape[0] * words)))
    for s in range(0, zp_all.shape[0], block):
        zp = zp_all[s : s + block]
        inter = zp[:, None, :] & zn[None, :, :]
        cnt = np.bitwise_count(inter).sum(axis=2, dtype=np.int64)
        ii, jj = np.nonzero(cnt >= need)
        status.pairs_filtered += cnt.size
        if ii.size:
            flat = inter[ii, jj]
            chunks.append(np.unique(flat, axis=0))
    if not chunks:
        return np.zeros((0, words), dtype=np.uint64)
    allz = np.concatenate(chunks)
    return np.unique(allz, axis=0)


def _adjacent_pairs(uniq, zero_np, m, status):
    """For each candidate face, the unique tight-ray pair if there is one.

    The witness masks (rays tight at a given inequality) are python ints,
    intersected rarest-first with popcount early exit.
    """
    nrays = zero_np.shape[0]
    bits_ = np.unpackbits(zero_np.view(np.uint8), axis=1, bitorder="little")
    tpack = np.packbits(bits_.T[:m], axis=1, bitorder="little")
    tints = [int.from_bytes(tpack[i].tobytes(), "little") for i in range(m)]
    rowpop = np.bitwise_count(tpack).sum(axis=1)
    gorder = np.argsort(rowpop, kind="stable")
    glist = gorder.tolist()

    ubits = np.unpackbits(uniq.view(np.uint8), axis=1, bitorder="little")[:, :m]
    ubits = ubits[:, gorder]
    rows_, cols_ = np.nonzero(ubits)
    nfaces = uniq.shape[0]
    bounds = np.searchsorted(rows_, np.arange(nfaces + 1))
    cols_ = cols_.tolist()

    out = []
    full = (1 << nrays) - 1
    for u in range(nfaces):
        status.faces_tested += 1
        lo, hi = bounds[u], bounds[u + 1]
        acc = full
        # acc always contains the generating pair, so it can only settle at
        # size two; reaching two early decides adjacency already
        for c in cols_[lo:hi]:
            acc &= tints[glist[c]]
            if acc.bit_count() == 2:
                break
        if acc.bit_count() == 2:
            b = acc & -acc
            i1 = b.bit_length() - 1
            i2 = (acc ^ b).bit_length() - 1
            out.append((i1, i2))
    return out


def extreme_rays_reference(rows):
    """Slow exact reference: same contract as extreme_rays, pure python,
    pairwise-subset adjacency.  For small cross-checks only."""
    d = len(rows[0])
    rows = [tuple(int(x) for x in r) for r in rows]
    basis = _independent_rows(rows, d)
    if len(basis) < d:
        raise DomainError("cone is not pointed (row rank below dimension)")
    rays = _initial_rays(rows, basis, d)
    zero = []
    basis_mask = 0
    for i in basis:
        basis_mask |= 1 << i
    for j, i in enumerate(basis):
        zero.append(basis_mask & ~(1 << i))
    items = list(zip(rays, zero))
    for k in (i for i in range(len(rows)) if i not in set(basis)):
        row = rows[k]
        vals = [sum(a * x for a, x in zip(row, r)) for r, _ in items]
        keep = []
        new = []
        for idx, ((r, z), v) in enumerate(zip(items, vals)):
            if v == 0:
                keep.append((r, z | (1 << k)))
            elif v < 0:
                keep.append((r, z))
        for i, ((ri, zi), vi) in enumerate(zip(items, vals)):
            if vi <= 0:
                continue
            for j, ((rj, zj), vj) in enumerate(zip(items, vals)):
                if vj >= 0:
                    continue
                inter = zi & zj
                adjacent = True
                for t, ((rt, zt), _) in enumerate(zip(items, vals)):
                    if t not in (i, j) and zt & inter == inter:
                        adjacent = False
                        break
                if adjacent:
                    vec = _reduced([vi * b - vj * a for a, b in zip(ri, rj)])
                    new.append((vec, inter | (1 << k)))
        items = keep + new
    return sorted(r for r, _ in items)
