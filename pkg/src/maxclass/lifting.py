"""Recursive construction of all d-maximum classes, and shifting.

A d-maximum class of the n-cube is rebuilt from its projection ``C`` (dropping
the last coordinate) and its reduction ``C'``: ``C'`` is lifted to both levels
and every ``C'``-connected component of ``C`` independently to one level. The
lifted coordinate is always appended as ``x_n`` (the least significant bit), so
outputs are reproducible bit for bit.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .concepts import ConceptClass, color_mask, is_maximum, vc_dimension
from .errors import StructureError
from .graph import Cube, cube_masks_by_dim, subcube_vertices

MAX_N = 8


class _DisjointSet:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def _components(points: frozenset, sub: frozenset, n: int, d: int):
    """Group the vertices of ``points - sub`` and the d-cubes of ``points``.

    Two d-cubes are in the same component when a path of the one-inclusion
    graph avoiding ``sub`` joins them. Returns ``[(vertices, cubes), ...]``
    with vertices excluding ``sub``.
    """
    free = points - sub
    ds = _DisjointSet(free)
    for v in free:
        for i in range(n):
            w = v ^ (1 << i)
            if w in free:
                ds.union(v, w)
    levels = cube_masks_by_dim(points, n, d)
    cubes = sorted(levels[d]) if d < len(levels) else []
    anchor = {}
    for base, cm in cubes:
        outside = [w for w in subcube_vertices(base, cm) if w in free]
        if not outside:
            raise StructureError("a d-cube lies inside the reduction")
        for w in outside[1:]:
            ds.union(outside[0], w)
        anchor[(base, cm)] = outside[0]
    groups: dict[int, tuple[list, list]] = {}
    for v in sorted(free):
        groups.setdefault(ds.find(v), ([], []))[0].append(v)
    for cube in cubes:
        groups[ds.find(anchor[cube])][1].append(cube)
    return [groups[k] for k in sorted(groups)]


def connected_components_mod(C: ConceptClass, Cp: ConceptClass) -> list[list[Cube]]:
    """Partition of the d-cubes of ``C`` into ``Cp``-connected components."""
    if C.n != Cp.n or not Cp.concepts < C.concepts:
        raise StructureError("reduction must be a proper subset of the class")
    if not is_maximum(C) or not is_maximum(Cp):
        raise StructureError("both classes must be maximum")
    d = vc_dimension(C)
    if vc_dimension(Cp) != d - 1:
        raise StructureError("reduction must have VC dimension one less than the class")
    comps = _components(C.concepts, Cp.concepts, C.n, d)
    return [[Cube(b, cm, C.n) for b, cm in cubes] for _, cubes in comps if cubes]


def lift(C: ConceptClass, Cp: ConceptClass, levels) -> ConceptClass:
    """Lift with an explicit level per vertex-component (in the order of ``_components``)."""
    d = vc_dimension(C)
    comps = _components(C.concepts, Cp.concepts, C.n, d)
    if len(levels) != len(comps):
        raise ValueError(f"need {len(comps)} levels, got {len(levels)}")
    out = set()
    for v in Cp.concepts:
        out.add(v << 1)
        out.add(v << 1 | 1)
    for (verts, _), p in zip(comps, levels):
        out.update(v << 1 | p for v in verts)
    return ConceptClass(C.n + 1, frozenset(out))


def _key(points: frozenset) -> tuple:
    return tuple(sorted(points))


@lru_cache(maxsize=None)
def _construct(n: int, d: int) -> tuple[frozenset, ...]:
    if d == 0:
        return tuple(frozenset([v]) for v in range(1 << n))
    if d == n:
        return (frozenset(range(1 << n)),)
    found = set()
    lower = _construct(n - 1, d - 1)
    for C in _construct(n - 1, d):
        for Cp in lower:
            if not Cp < C:
                continue
            comps = _components(C, Cp, n - 1, d)
            both = set()
            for v in Cp:
                both.add(v << 1)
                both.add(v << 1 | 1)
            for levels in product((0, 1), repeat=len(comps)):
                out = set(both)
                for (verts, _), p in zip(comps, levels):
                    out.update(v << 1 | p for v in verts)
                found.add(frozenset(out))
    return tuple(sorted(found, key=_key))


def construct(n: int, d: int, force: bool = False) -> list[ConceptClass]:
    """All d-maximum classes of the n-cube, in canonical order.

    Refuses ``n > 8`` unless ``force`` is set.
    """
    if n < 0 or d < 0 or d > n:
        raise ValueError(f"need 0 <= d <= n, got n={n}, d={d}")
    if n > MAX_N and not force:
        raise ValueError(f"construct is limited to n <= {MAX_N}; pass force=True to override")
    return [ConceptClass(n, pts) for pts in _construct(n, d)]


def shift(C: ConceptClass, i: int) -> ConceptClass:
    """Push every concept without an ``i``-edge down to ``x_i = 0``."""
    if not is_maximum(C):
        raise StructureError("shifting is defined here for maximum classes only")
    m = color_mask(C.n, i)
    pts = C.concepts
    return C.with_concepts(v if v ^ m in pts else v & ~m for v in pts)


def shift_to_fixed_point(C: ConceptClass) -> ConceptClass:
    while True:
        prev = C
        for i in range(1, C.n + 1):
            C = shift(C, i)
        if C == prev:
            return C
