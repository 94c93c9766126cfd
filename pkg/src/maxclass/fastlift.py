"""Streaming lift enumeration on vertex bitmasks (n <= 6).

A class of the n-cube is a 64-bit integer with bit ``v`` set iff concept ``v``
belongs to it. The lifting step is the same as :mod:`maxclass.lifting`, but
lifts are produced one at a time in Gray-code order over the level vectors and
checked on the fly instead of being materialised. Used where the number of
classes is too large to hold in memory; for n=6 and d in {2, 3} there are about
10^8 of them.

Distinct (projection, reduction, levels) triples give distinct classes,
because a lift determines its projection onto the first n-1 coordinates and
its reduction on the last one, so no deduplication is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np
from numba import njit

from .concepts import sauer_bound
from .graph import cube_masks_by_dim, subcube_vertices
from .lifting import _construct

MAX_N = 6


def _class_mask(points) -> int:
    m = 0
    for v in points:
        m |= 1 << v
    return m


def _pattern_table(n: int, k: int) -> np.ndarray:
    """``table[s, t]``: vertices whose restriction to the s-th k-set equals pattern t."""
    sets = list(combinations(range(n), k))
    table = np.zeros((max(len(sets), 1), 1 << k), dtype=np.uint64)
    for si, s in enumerate(sets):
        for v in range(1 << n):
            t = 0
            for j, bit in enumerate(s):
                t |= ((v >> bit) & 1) << j
            table[si, t] |= np.uint64(1 << v)
    return table


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - np.uint64(1)
        c += 1
    return c


@njit(cache=True)
def _spread(x, nbits):
    out = np.uint64(0)
    for v in range(nbits):
        if (x >> np.uint64(v)) & np.uint64(1):
            out |= np.uint64(1) << np.uint64(2 * v)
    return out


@njit(cache=True)
def _shatters_any(L, table):
    for s in range(table.shape[0]):
        ok = True
        for t in range(table.shape[1]):
            if L & table[s, t] == 0:
                ok = False
                break
        if ok:
            return s
    return -1


@njit(cache=True)
def _cube_bases(L, positions, zero):
    """Bases (all listed bits clear) of the cubes of ``L`` spanned by the given bit positions."""
    M = L
    for p in positions:
        M = M & (M >> np.uint64(1 << p)) & zero[p]
    return M


@njit(cache=True)
def _min_boundary(L, tables, zero):
    """Fewest (d-1)-cubes with exactly one d-coface, over all (d-1)-color sets."""
    face_sets, top_sets, cof_index, cof_bit = tables
    top = np.empty(top_sets.shape[0], dtype=np.uint64)
    for t in range(top_sets.shape[0]):
        top[t] = _cube_bases(L, top_sets[t], zero)
    best = 1 << 30
    for s in range(face_sets.shape[0]):
        ones = np.uint64(0)
        twos = np.uint64(0)
        for k in range(cof_index.shape[1]):
            MT = top[cof_index[s, k]]
            E = MT | (MT << np.uint64(1 << cof_bit[s, k]))
            twos |= ones & E
            ones |= E
        c = _popcount(_cube_bases(L, face_sets[s], zero) & ones & ~twos)
        if c < best:
            best = c
    return best


@njit(cache=True)
def _scan(
    cmasks, cube_ptr, cube_masks, lower, m, size, low_table, high_table, lowmask, check_lower,
    tables, zero, check_boundary,
):
    """Enumerate all lifts.

    Returns (count, bad_size, bad_high, bad_low, bad_boundary, xor_digest, sum_digest).
    """
    nverts = 1 << m
    count = 0
    bad_size = 0
    bad_high = 0
    bad_low = 0
    bad_boundary = 0
    xor_digest = np.uint64(0)
    sum_digest = np.uint64(0)
    comps = np.zeros(nverts, dtype=np.uint64)
    for ci in range(cmasks.shape[0]):
        c = cmasks[ci]
        for li in range(lower.shape[0]):
            cp = lower[li]
            if cp & ~c or cp == c:
                continue
            free = c & ~cp
            k = 0
            remaining = free
            while remaining:
                X = remaining & (~remaining + np.uint64(1))
                while True:
                    Y = X
                    for j in range(m):
                        sh = np.uint64(1 << j)
                        lm = lowmask[j]
                        Y |= (((X & lm) << sh) | ((X >> sh) & lm)) & free
                    for q in range(cube_ptr[ci], cube_ptr[ci + 1]):
                        part = cube_masks[q] & free
                        if part & X:
                            Y |= part
                    if Y == X:
                        break
                    X = Y
                comps[k] = X
                k += 1
                remaining &= ~X
            s_cp = _spread(cp, nverts)
            L = s_cp | (s_cp << np.uint64(1))
            toggles = np.zeros(k, dtype=np.uint64)
            for q in range(k):
                sq = _spread(comps[q], nverts)
                L |= sq
                toggles[q] = sq | (sq << np.uint64(1))
            for g in range(1 << k):
                if g:
                    q = 0
                    while not (g >> q) & 1:
                        q += 1
                    L ^= toggles[q]
                count += 1
                xor_digest ^= L
                sum_digest += L
                if _popcount(L) != size:
                    bad_size += 1
                if _shatters_any(L, high_table) >= 0:
                    bad_high += 1
                if check_lower and _shatters_any(L, low_table) < 0:
                    bad_low += 1
                if check_boundary and _min_boundary(L, tables, zero) < 2:
                    bad_boundary += 1
    return count, bad_size, bad_high, bad_low, bad_boundary, xor_digest, sum_digest


@dataclass(frozen=True)
class ScanResult:
    n: int
    d: int
    count: int
    bad_size: int
    bad_vc_high: int
    bad_vc_low: int
    xor_digest: int
    sum_digest: int
    bad_boundary: int = 0

    @property
    def ok(self) -> bool:
        return self.bad_size == 0 and self.bad_vc_high == 0 and self.bad_vc_low == 0


def digests(masks) -> tuple[int, int]:
    x = 0
    s = 0
    for L in masks:
        x ^= L
        s = (s + L) % (1 << 64)
    return x, s


def _zero_masks(n: int) -> np.ndarray:
    """``zero[p]``: vertices of the n-cube whose bit ``p`` is clear."""
    return np.array(
        [_class_mask(v for v in range(1 << n) if not v >> p & 1) for p in range(n)], dtype=np.uint64
    )


def _boundary_tables(n: int, d: int):
    """Face sets, top sets, and for each face set the top set and bit of each coface."""
    if d < 2:
        empty = np.zeros((1, 0), dtype=np.int64)
        return empty, empty, empty, empty
    faces = list(combinations(range(n), d - 1))
    tops = list(combinations(range(n), d))
    where = {t: k for k, t in enumerate(tops)}
    index = [[where[tuple(sorted(S + (j,)))] for j in range(n) if j not in S] for S in faces]
    bits = [[j for j in range(n) if j not in S] for S in faces]
    as_array = lambda rows: np.array(rows, dtype=np.int64)  # noqa: E731
    return as_array(faces), as_array(tops), as_array(index), as_array(bits)


def min_boundary(points, n: int, d: int) -> int:
    """Smallest number of boundary (d-1)-cubes over the (d-1)-color sets of a class."""
    return int(_min_boundary(np.uint64(_class_mask(points)), _boundary_tables(n, d), _zero_masks(n)))


def scan_construct(n: int, d: int, check_boundary: bool = False) -> ScanResult:
    """Stream every lift produced by the construction for ``(n, d)`` and check it.

    Each lift is checked for cardinality ``sauer_bound(n, d)``, for shattering
    no (d+1)-set, and for shattering at least one d-set. With
    ``check_boundary`` (needs d >= 2) it also counts lifts having some
    (d-1)-color set with fewer than two boundary (d-1)-cubes.
    """
    if not 1 <= n <= MAX_N:
        raise ValueError(f"streaming construction supports 1 <= n <= {MAX_N}")
    if d == 0 or d == n:
        masks = [_class_mask(pts) for pts in _construct(n, d)]
        x, s = digests(masks)
        bad_size = sum(bin(L).count("1") != sauer_bound(n, d) for L in masks)
        bad_boundary = 0
        if check_boundary and d >= 2:
            bad_boundary = sum(min_boundary(pts, n, d) < 2 for pts in _construct(n, d))
        return ScanResult(n, d, len(masks), bad_size, 0, 0, x, s, bad_boundary)
    m = n - 1
    uppers = _construct(m, d)
    cmasks = np.array([_class_mask(C) for C in uppers], dtype=np.uint64)
    ptr = [0]
    cubes = []
    for C in uppers:
        levels = cube_masks_by_dim(C, m, d)
        for base, cm in sorted(levels[d]):
            cubes.append(_class_mask(subcube_vertices(base, cm)))
        ptr.append(len(cubes))
    lower = np.array([_class_mask(C) for C in _construct(m, d - 1)], dtype=np.uint64)
    lowmask = np.array(
        [_class_mask(v for v in range(1 << m) if not v >> j & 1) for j in range(m)],
        dtype=np.uint64,
    )
    high = _pattern_table(n, d + 1)
    low = _pattern_table(n, d)
    res = _scan(
        cmasks,
        np.array(ptr, dtype=np.int64),
        np.array(cubes or [0], dtype=np.uint64),
        lower,
        m,
        sauer_bound(n, d),
        low,
        high,
        lowmask,
        comb(n, d) > 0,
        _boundary_tables(n, d),
        _zero_masks(n),
        check_boundary and d >= 2,
    )
    count, bad_size, bad_high, bad_low, bad_boundary, x, s = res
    return ScanResult(
        n, d, int(count), int(bad_size), int(bad_high), int(bad_low), int(x), int(s), int(bad_boundary)
    )


# -- batched round-trip check ---------------------------------------------------


@njit(cache=True)
def _round_trip_failures(points, reps, sizes, n):
    """Index of the first class with a sample that does not decode uniquely, else -1.

    A sample of ``v`` on coordinates ``mask`` decodes to ``w`` exactly when
    ``rep(w)`` lies inside ``mask`` and ``w`` agrees with ``v`` there; the round
    trip holds when that ``w`` is unique for every ``(v, mask)``.
    """
    for k in range(points.shape[0]):
        m = sizes[k]
        for a in range(m):
            v = points[k, a]
            for mask in range(1 << n):
                hits = 0
                for b in range(m):
                    if reps[k, b] & ~mask == 0 and (v ^ points[k, b]) & mask == 0:
                        hits += 1
                if hits != 1:
                    return k
    return -1


def round_trip_batch(pairs, n: int) -> int:
    """Exhaustive compress/reconstruct check for many ``(C, r)`` pairs on the n-cube.

    Equivalent to :func:`maxclass.compression.check_round_trip` on each pair;
    returns the index of the first failing pair or -1.
    """
    from .concepts import colors_mask

    pairs = list(pairs)
    width = max((len(C) for C, _ in pairs), default=1)
    points = np.zeros((len(pairs), width), dtype=np.int64)
    reps = np.zeros((len(pairs), width), dtype=np.int64)
    sizes = np.zeros(len(pairs), dtype=np.int64)
    for k, (C, r) in enumerate(pairs):
        for a, v in enumerate(sorted(C.concepts)):
            points[k, a] = v
            reps[k, a] = colors_mask(n, r[v])
        sizes[k] = len(C)
    return int(_round_trip_failures(points, reps, sizes, n))
