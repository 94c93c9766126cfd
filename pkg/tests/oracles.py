"""Brute-force reference implementations used as test oracles.

Everything here works on tuples of bits straight from the definitions and
shares no code with the package.
"""

from __future__ import annotations

import math
from itertools import combinations, product

import numpy as np
from scipy.optimize import linprog


def bits(s: str) -> tuple[int, ...]:
    return tuple(int(c) for c in s)


def rows_of(C) -> set[tuple[int, ...]]:
    return {bits(s) for s in C.strings()}


def proj(rows, keep) -> set:
    return {tuple(r[i] for i in keep) for r in rows}


def vc(rows, n: int) -> int:
    for k in range(n, -1, -1):
        for Y in combinations(range(n), k):
            if len(proj(rows, Y)) == 2 ** k:
                return k
    raise ValueError("empty")


def sauer(n: int, d: int) -> int:
    return sum(math.comb(n, i) for i in range(d + 1))


def is_maximum(rows, n: int) -> bool:
    """Every projection, including the whole class, meets Sauer's bound for its VC dimension."""
    for k in range(1, n + 1):
        for Y in combinations(range(n), k):
            P = proj(rows, Y)
            if len(P) != sauer(k, vc(P, k)):
                return False
    return True


def maximum_classes(n: int, d: int) -> set[frozenset]:
    cube = list(product((0, 1), repeat=n))
    out = set()
    for sub in combinations(cube, sauer(n, d)):
        if vc(sub, n) == d and is_maximum(sub, n):
            out.add(frozenset(sub))
    return out


def flip(r, i):
    return r[:i] + (1 - r[i],) + r[i + 1 :]


def edges(rows) -> set:
    """(u, v, color) with u < v lexicographically, color 1-based."""
    out = set()
    for u in rows:
        for i in range(len(u)):
            w = flip(u, i)
            if w in rows and u < w:
                out.add((u, w, i + 1))
    return out


def incident(rows, v) -> set:
    return {i + 1 for i in range(len(v)) if flip(v, i) in rows}


def cube_vertices(base, colors):
    for pat in product((0, 1), repeat=len(colors)):
        r = list(base)
        for c, b in zip(colors, pat):
            r[c - 1] = b
        yield tuple(r)


def cubes(rows, k: int) -> set:
    """(base, colors) for every k-cube inside ``rows``; base has zeros on the colors."""
    n = len(next(iter(rows)))
    out = set()
    for colors in combinations(range(1, n + 1), k):
        for r in rows:
            base = tuple(0 if i + 1 in colors else b for i, b in enumerate(r))
            if all(w in rows for w in cube_vertices(base, colors)):
                out.add((base, colors))
    return out


def is_corner(rows, v) -> bool:
    """Unique maximum-dimension cube through v, containing all neighbors of v."""
    n = len(v)
    through = []
    for k in range(n + 1):
        for colors in combinations(range(1, n + 1), k):
            base = tuple(0 if i + 1 in colors else b for i, b in enumerate(v))
            verts = set(cube_vertices(base, colors))
            if v in verts and verts <= rows:
                through.append(verts)
    top = max(len(c) for c in through)
    best = [c for c in through if len(c) == top]
    if len(best) != 1:
        return False
    nbrs = {flip(v, i) for i in range(n)} & rows
    return nbrs <= best[0]


def graph_distance(rows, s, t) -> float:
    seen = {s: 0}
    frontier = [s]
    while frontier:
        nxt = []
        for u in frontier:
            for i in range(len(u)):
                w = flip(u, i)
                if w in rows and w not in seen:
                    seen[w] = seen[u] + 1
                    nxt.append(w)
        frontier = nxt
    return seen.get(t, math.inf)


def consistent_reps(sample: dict, rows_rep: dict) -> list:
    """All representatives S within the sample's indices whose concept agrees with the sample."""
    hits = []
    for v, S in rows_rep.items():
        if set(S) <= set(sample) and all(v[i - 1] == b for i, b in sample.items()):
            hits.append(S)
    return hits


# -- arrangement oracles (floating point LP; used only on well-separated inputs) --


def lp_margin(normals, offsets, signs, extra_A=None, extra_b=None) -> float:
    """Largest t with s_i (n_i . x - o_i) >= t for all i (capped at 1)."""
    N = np.array([[float(c) for c in nrm] for nrm in normals])
    o = np.array([float(c) for c in offsets])
    s = np.array([1.0 if b else -1.0 for b in signs])
    d = N.shape[1]
    # variables (x, t); maximize t
    A = np.hstack([-(s[:, None] * N), np.ones((len(s), 1))])
    b = -s * o
    if extra_A is not None:
        A = np.vstack([A, np.hstack([extra_A, np.zeros((len(extra_A), 1))])])
        b = np.concatenate([b, extra_b])
    c = np.zeros(d + 1)
    c[-1] = -1
    res = linprog(c, A_ub=A, b_ub=b, bounds=[(None, None)] * d + [(None, 1)], method="highs")
    return -res.fun if res.status == 0 else -math.inf


def lp_cells(normals, offsets, extra_A=None, extra_b=None, tol=1e-9) -> set[str]:
    out = set()
    for signs in product((0, 1), repeat=len(normals)):
        if lp_margin(normals, offsets, signs, extra_A, extra_b) > tol:
            out.add("".join(map(str, signs)))
    return out


def polygon(m: int, circumscribed: bool):
    """Half-planes a . x <= b of a regular m-gon inscribed in / circumscribing the unit circle."""
    ang = np.arange(m) * 2 * np.pi / m
    A = np.stack([np.cos(ang), np.sin(ang)], axis=1)
    b = np.full(m, 1.0 if circumscribed else math.cos(math.pi / m))
    return A, b


def lp_sup(normals, offsets, signs, g, extra_A, extra_b) -> float:
    """max g . x over the closed cell intersected with extra constraints."""
    N = np.array([[float(c) for c in nrm] for nrm in normals])
    o = np.array([float(c) for c in offsets])
    s = np.array([1.0 if b else -1.0 for b in signs])
    A = np.vstack([-(s[:, None] * N), extra_A])
    b = np.concatenate([-s * o, extra_b])
    res = linprog(-np.array([float(c) for c in g]), A_ub=A, b_ub=b, bounds=[(None, None)] * 2, method="highs")
    return -res.fun


def lp_sup_unbounded(normals, offsets, signs, g) -> float:
    """max g . x over a closed Euclidean cell; inf if unbounded above."""
    N = np.array([[float(c) for c in nrm] for nrm in normals])
    o = np.array([float(c) for c in offsets])
    s = np.array([1.0 if b else -1.0 for b in signs])
    res = linprog(
        -np.array([float(c) for c in g]), A_ub=-(s[:, None] * N), b_ub=-s * o,
        bounds=[(None, None)] * N.shape[1], method="highs",
    )
    if res.status == 3:
        return math.inf
    return -res.fun
