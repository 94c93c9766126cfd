"""One-inclusion graphs and the cubical complex of a concept class."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .concepts import ConceptClass, color_mask, format_concept, mask_colors


def color_masks(n: int) -> list[int]:
    return [color_mask(n, i) for i in range(1, n + 1)]


def incident_mask(points, n: int, v: int) -> int:
    """OR of the color masks of edges at ``v`` inside the vertex set ``points``."""
    out = 0
    for i in range(n):
        m = 1 << i
        if v ^ m in points:
            out |= m
    return out


def subcube_vertices(base: int, cmask: int) -> Iterable[int]:
    """All ``2^k`` vertices obtained by toggling the bits of ``cmask`` on ``base``."""
    sub = cmask
    while True:
        yield base ^ sub
        if sub == 0:
            return
        sub = (sub - 1) & cmask


@dataclass(frozen=True, order=True)
class Cube:
    """Subcube with minimum vertex ``base`` (zero on every cube color) and color mask ``cmask``."""

    base: int
    cmask: int
    n: int

    @classmethod
    def from_colors(cls, base: int, colors: Iterable[int], n: int) -> "Cube":
        cm = 0
        for i in colors:
            cm |= color_mask(n, i)
        return cls(base & ~cm, cm, n)

    @property
    def colors(self) -> tuple[int, ...]:
        return mask_colors(self.n, self.cmask)

    @property
    def dim(self) -> int:
        return bin(self.cmask).count("1")

    def vertices(self) -> list[int]:
        return sorted(subcube_vertices(self.base, self.cmask))

    def __repr__(self) -> str:
        return f"Cube({format_concept(self.base, self.n)}, colors={list(self.colors)})"


@dataclass(frozen=True)
class OneInclusionGraph:
    cls: ConceptClass
    edges: tuple[tuple[int, int, int], ...]

    def edges_of_color(self, i: int) -> list[tuple[int, int]]:
        return [(u, v) for u, v, c in self.edges if c == i]

    def neighbors(self, v: int) -> list[int]:
        self.cls.require(v)
        return sorted(v ^ m for m in color_masks(self.cls.n) if v ^ m in self.cls.concepts)

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def to_edge_list(self) -> str:
        n = self.cls.n
        return "".join(
            f"{format_concept(u, n)} {format_concept(v, n)} {c}\n" for u, v, c in self.edges
        )

    def to_dot(self) -> str:
        n = self.cls.n
        lines = ["graph oneinclusion {"]
        lines += [f'  "{s}";' for s in self.cls.strings()]
        lines += [
            f'  "{format_concept(u, n)}" -- "{format_concept(v, n)}" [label="{c}"];'
            for u, v, c in self.edges
        ]
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_graph(C: ConceptClass) -> OneInclusionGraph:
    edges = []
    pts = C.concepts
    for u in sorted(pts):
        for i in range(1, C.n + 1):
            m = color_mask(C.n, i)
            if not u & m and u | m in pts:
                edges.append((u, u | m, i))
    edges.sort()
    return OneInclusionGraph(C, tuple(edges))


def cube_masks_by_dim(points, n: int, max_dim: int | None = None) -> list[set[tuple[int, int]]]:
    """Subcubes of ``points`` grouped by dimension, as ``(base, cmask)`` pairs.

    A (k+1)-cube is two parallel k-cubes; it is generated once, from the face
    obtained by dropping its lowest-order color bit.
    """
    levels: list[set[tuple[int, int]]] = [{(v, 0) for v in points}]
    masks = [1 << i for i in range(n)]
    while max_dim is None or len(levels) <= max_dim:
        prev = levels[-1]
        nxt = set()
        for base, cm in prev:
            low = cm & -cm if cm else 1 << n
            for m in masks:
                if m >= low:
                    break
                if not base & m and (base | m, cm) in prev:
                    nxt.add((base, cm | m))
        if not nxt:
            break
        levels.append(nxt)
    return levels


def enumerate_cubes(C: ConceptClass, dim: int | None = None) -> list[Cube]:
    """Every subcube of ``C`` of dimension ``dim`` (all dimensions if ``None``)."""
    levels = cube_masks_by_dim(C.concepts, C.n, dim)
    if dim is None:
        found = [c for lvl in levels for c in lvl]
    elif dim < len(levels):
        found = list(levels[dim])
    else:
        found = []
    return sorted(Cube(b, cm, C.n) for b, cm in found)


def max_cube_dim(C: ConceptClass) -> int:
    if not C.concepts:
        return -1
    return len(cube_masks_by_dim(C.concepts, C.n)) - 1


def is_d_complete_collection(C: ConceptClass, d: int) -> bool:
    if d > C.n or d < 0:
        return False
    levels = cube_masks_by_dim(C.concepts, C.n, d)
    present = {cm for _, cm in levels[d]} if d < len(levels) else set()
    return all(
        sum(color_mask(C.n, i) for i in s) in present for s in combinations(range(1, C.n + 1), d)
    )


def incident_colors(C: ConceptClass, v: int) -> frozenset:
    """Labels of the edges at ``v`` in the one-inclusion graph of ``C``."""
    C.require(v)
    return frozenset(mask_colors(C.n, incident_mask(C.concepts, C.n, v)))


def bfs_distances(points, n: int, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    masks = color_masks(n)
    while queue:
        u = queue.popleft()
        for m in masks:
            w = u ^ m
            if w in points and w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_shortest_path_closed(C: ConceptClass) -> bool:
    pts = C.concepts
    for u in pts:
        dist = bfs_distances(pts, C.n, u)
        for v in pts:
            if dist.get(v) != bin(u ^ v).count("1"):
                return False
    return True


def connected_components(points, n: int) -> list[frozenset]:
    seen: set[int] = set()
    comps = []
    for v in sorted(points):
        if v in seen:
            continue
        comp = frozenset(bfs_distances(points, n, v))
        seen |= comp
        comps.append(comp)
    return comps
