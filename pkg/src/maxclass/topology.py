"""Boundaries, collapsibility and strong contractibility of cubical complexes.

Contractibility itself is not decidable in general. Collapsibility to a point
is a sufficient condition we can certify; disconnectedness and an Euler
characteristic different from 1 certify non-contractibility. Anything else is
reported as ``UNKNOWN``.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from itertools import combinations

from .concepts import ConceptClass, reduction
from .errors import StructureError
from .graph import Cube, connected_components, cube_masks_by_dim

DEFAULT_BUDGET = 32


class TriState(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    def __and__(self, other: "TriState") -> "TriState":
        if TriState.NO in (self, other):
            return TriState.NO
        if TriState.UNKNOWN in (self, other):
            return TriState.UNKNOWN
        return TriState.YES

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class BoundaryReport:
    dim: int
    boundary_cubes: tuple[Cube, ...]
    per_colorset_counts: dict

    def count(self, colors) -> int:
        return self.per_colorset_counts.get(tuple(sorted(colors)), 0)


def boundary(C: ConceptClass) -> BoundaryReport:
    """The (d-1)-cubes that are a face of exactly one d-cube, d the top cube dimension."""
    levels = cube_masks_by_dim(C.concepts, C.n)
    d = len(levels) - 1
    if d < 1:
        raise StructureError("boundary needs a class containing at least one edge")
    top = levels[d]
    cofaces: dict[tuple[int, int], int] = {}
    for base, cm in top:
        bits = cm
        while bits:
            m = bits & -bits
            bits ^= m
            for face in ((base, cm ^ m), (base | m, cm ^ m)):
                cofaces[face] = cofaces.get(face, 0) + 1
    cubes = tuple(sorted(Cube(b, cm, C.n) for (b, cm), k in cofaces.items() if k == 1))
    counts: dict[tuple[int, ...], int] = {}
    for cube in cubes:
        counts[cube.colors] = counts.get(cube.colors, 0) + 1
    return BoundaryReport(d, cubes, dict(sorted(counts.items())))


def _complex(C: ConceptClass) -> set[tuple[int, int]]:
    return set().union(*cube_masks_by_dim(C.concepts, C.n))


def euler_characteristic(C: ConceptClass) -> int:
    return sum((-1) ** k * len(lvl) for k, lvl in enumerate(cube_masks_by_dim(C.concepts, C.n)))


def _faces(cube):
    base, cm = cube
    bits = cm
    while bits:
        m = bits & -bits
        bits ^= m
        yield (base, cm ^ m)
        yield (base | m, cm ^ m)


def _collapse_once(cells: set, rng: random.Random | None) -> set:
    """Greedy elementary collapses until no free face is left; returns what remains."""
    cells = set(cells)
    cofaces: dict[tuple[int, int], set] = {c: set() for c in cells}
    for c in cells:
        for f in _faces(c):
            cofaces[f].add(c)
    free = [c for c in cells if len(cofaces[c]) == 1]
    while free:
        if rng is None:
            sigma = free.pop()
        else:
            sigma = free.pop(rng.randrange(len(free)))
        if sigma not in cells or len(cofaces[sigma]) != 1:
            continue
        (tau,) = cofaces[sigma]
        cells.discard(sigma)
        cells.discard(tau)
        for gone in (tau, sigma):
            for f in _faces(gone):
                if f in cells:
                    cofaces[f].discard(gone)
                    if len(cofaces[f]) == 1:
                        free.append(f)
    return cells


def is_collapsible(C: ConceptClass, budget: int = DEFAULT_BUDGET, seed: int = 0) -> TriState:
    """Collapse the cubical complex of ``C`` towards a point.

    One deterministic greedy pass, then up to ``budget`` randomized restarts
    from a seeded generator.
    """
    if not C.concepts:
        return TriState.NO
    if len(connected_components(C.concepts, C.n)) > 1:
        return TriState.NO
    if euler_characteristic(C) != 1:
        return TriState.NO
    cells = _complex(C)
    rng = random.Random(seed)
    for attempt in range(budget + 1):
        left = _collapse_once(cells, None if attempt == 0 else rng)
        if len(left) == 1:
            return TriState.YES
    return TriState.UNKNOWN


def multiple_reduction(C: ConceptClass, colors) -> ConceptClass:
    """Reduce by each color in turn (reductions commute).

    Colors are coordinates of ``C``; reducing from the highest index down
    keeps the remaining indices valid.
    """
    out = C
    for i in sorted(colors, reverse=True):
        out = reduction(out, i)
    return out


def is_strongly_contractible(
    C: ConceptClass, budget: int = DEFAULT_BUDGET, max_chain: int | None = None
) -> TriState:
    """Collapsibility of ``C`` and of every non-empty multiple reduction.

    Chains of distinct colors up to the top cube dimension are examined;
    since reductions commute each chain is keyed by its color set. Empty
    reductions correspond to planes that miss the complex and impose nothing.
    """
    verdict = is_collapsible(C, budget)
    if verdict is TriState.NO:
        return verdict
    levels = cube_masks_by_dim(C.concepts, C.n)
    depth = len(levels) - 1 if max_chain is None else max_chain
    for k in range(1, depth + 1):
        for colors in combinations(range(1, C.n + 1), k):
            R = multiple_reduction(C, colors)
            if not R.concepts:
                continue
            verdict = verdict & is_collapsible(R, budget)
            if verdict is TriState.NO:
                return verdict
    return verdict
