"""Hyperplane arrangements with exact rational coefficients.

Plane ``i`` (1-based, its position in ``planes``) is the cube color ``x_i``;
a point is on the positive side, bit 1, when ``normal . x > offset``.

Two kinds are supported:

``euclidean``
    ``n >= d`` hyperplanes of R^d in general position; the class is d-maximum.
``klein_disk``
    chords of the open unit disk (ambient dimension 2) forming a simple
    hyperbolic ``rank``-arrangement: with rank 2 every pair of chords crosses
    inside the disk and no three are concurrent there; with rank 1 no two
    chords meet in the closed disk.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

from ..concepts import ConceptClass, sauer_bound
from ..errors import ArrangementError, Check, EnumerationError
from .exact import Vector, dot, frac, sign, solve

EUCLIDEAN = "euclidean"
KLEIN = "klein_disk"


@dataclass(frozen=True)
class Hyperplane:
    normal: Vector
    offset: Fraction

    def __post_init__(self):
        object.__setattr__(self, "normal", tuple(frac(x) for x in self.normal))
        object.__setattr__(self, "offset", frac(self.offset))

    def value(self, x: Sequence[Fraction]) -> Fraction:
        return dot(self.normal, x) - self.offset

    def side(self, x: Sequence[Fraction]) -> int:
        return sign(self.value(x))


@dataclass(frozen=True)
class Arrangement:
    dim: int
    planes: tuple[Hyperplane, ...]
    kind: str = EUCLIDEAN
    rank: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "planes", tuple(self.planes))
        if self.kind not in (EUCLIDEAN, KLEIN):
            raise ArrangementError(f"unknown arrangement kind {self.kind!r}")
        if self.kind == KLEIN and self.dim != 2:
            raise ArrangementError("klein_disk arrangements are supported in dimension 2 only")
        if self.rank is None:
            object.__setattr__(self, "rank", self.dim if self.kind == EUCLIDEAN else _infer_rank(self))
        for p in self.planes:
            if len(p.normal) != self.dim:
                raise ArrangementError(f"normal {p.normal} does not have length {self.dim}")

    @property
    def n(self) -> int:
        return len(self.planes)

    def concept_at(self, x: Sequence[Fraction]) -> int:
        """Concept of a point lying on no plane."""
        v = 0
        for p in self.planes:
            s = p.side(x)
            if s == 0:
                raise ArrangementError(f"point {x} lies on a plane")
            v = (v << 1) | (s > 0)
        return v

    def intersection(self, idx: Sequence[int]) -> Vector | None:
        """Common point of ``dim`` planes given by 0-based indices."""
        rows = [self.planes[i].normal for i in idx]
        return solve(rows, [self.planes[i].offset for i in idx])

    @classmethod
    def from_lists(cls, normals, offsets, kind: str = EUCLIDEAN, rank: int | None = None):
        planes = tuple(Hyperplane(nrm, off) for nrm, off in zip(normals, offsets))
        return cls(len(planes[0].normal) if planes else 0, planes, kind, rank)


def _infer_rank(A: Arrangement) -> int:
    for i, j in combinations(range(A.n), 2):
        p = A.intersection((i, j))
        if p is not None and dot(p, p) < 1:
            return 2
    return 1


def _inside(x) -> bool:
    return dot(x, x) < 1


def validate(A: Arrangement) -> Check:
    """Exact general-position test; the witness lists the offending colors."""
    for i, p in enumerate(A.planes):
        if not any(p.normal):
            return Check(False, (i + 1,), "zero normal")
    if A.kind == EUCLIDEAN:
        return _validate_euclidean(A)
    return _validate_klein(A)


def _validate_euclidean(A: Arrangement) -> Check:
    d = A.dim
    if A.n < d:
        return Check(False, tuple(range(1, A.n + 1)), f"need at least {d} planes")
    for idx in combinations(range(A.n), d):
        x = A.intersection(idx)
        colors = tuple(i + 1 for i in idx)
        if x is None:
            return Check(False, colors, "planes do not meet in a single point")
        for j in range(A.n):
            if j not in idx and A.planes[j].value(x) == 0:
                return Check(False, tuple(sorted(colors + (j + 1,))), "too many planes through a point")
    return Check(True)


def _validate_klein(A: Arrangement) -> Check:
    for i, p in enumerate(A.planes):
        if p.offset ** 2 >= dot(p.normal, p.normal):
            return Check(False, (i + 1,), "line misses the open disk")
    for i, j in combinations(range(A.n), 2):
        x = A.intersection((i, j))
        on_circle = x is not None and dot(x, x) == 1
        inside = x is not None and _inside(x)
        if on_circle:
            return Check(False, (i + 1, j + 1), "lines meet on the ideal boundary")
        if A.rank == 2 and not inside:
            return Check(False, (i + 1, j + 1), "lines do not cross inside the disk")
        if A.rank == 1 and inside:
            return Check(False, (i + 1, j + 1), "lines cross inside the disk")
        if A.rank == 2:
            for k in range(A.n):
                if k not in (i, j) and A.planes[k].value(x) == 0:
                    return Check(False, tuple(sorted((i + 1, j + 1, k + 1))), "three lines concurrent")
    if A.rank not in (1, 2):
        return Check(False, None, "klein_disk rank must be 1 or 2")
    return Check(True)


@dataclass(frozen=True)
class CellMap:
    """Concept -> rational point in the interior of its cell."""

    points: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.points)


def _nudge(A: Arrangement, base, direction, want_inside: bool, fixed: set):
    """Rational point ``base + t*direction`` that keeps the sign of every plane not in ``fixed``."""
    t = Fraction(1)
    for _ in range(200):
        x = tuple(b + t * w for b, w in zip(base, direction))
        good = all(
            A.planes[j].side(x) == A.planes[j].side(base) for j in range(A.n) if j not in fixed
        )
        if good and (not want_inside or _inside(x)):
            return x
        t /= 2
    raise ArrangementError("could not place a representative point")


def _vertex_cells(A: Arrangement, inside: bool):
    """Cells around each d-intersection point: the 2^d sign perturbations."""
    d = A.dim
    for idx in combinations(range(A.n), d):
        p = A.intersection(idx)
        if p is None or (inside and not _inside(p)):
            continue
        rows = [A.planes[i].normal for i in idx]
        for signs in product((-1, 1), repeat=d):
            w = solve(rows, signs)
            x = _nudge(A, p, w, inside, set(idx))
            yield A.concept_at(x), x


def chord_endpoint_params(p: Hyperplane):
    """Foot point ``f``, direction ``t`` and squared half-length in parameter space.

    The chord is ``f + s*t`` for ``s**2 < half2``; its ideal endpoints are at
    ``s = +-sqrt(half2)``.
    """
    nn = dot(p.normal, p.normal)
    f = tuple(p.offset * c / nn for c in p.normal)
    t = (-p.normal[1], p.normal[0])
    half2 = (nn - p.offset ** 2) / (nn * nn)
    return f, t, half2


def _sqrt_below(x: Fraction, floor: Fraction) -> Fraction:
    """Rational strictly between ``floor`` and ``sqrt(x)`` (requires floor < sqrt(x))."""
    r = Fraction(math.sqrt(float(x))).limit_denominator(10 ** 9)
    while r * r >= x or r <= floor:
        r = (r + floor) / 2 if r > floor else floor + (r - floor) / 2
        if r * r < x and r > floor:
            break
    return r


def _endpoint_cells(A: Arrangement):
    """The two cells at each ideal endpoint of each chord."""
    for k, p in enumerate(A.planes):
        f, t, half2 = chord_endpoint_params(p)
        crossings = []
        for j, q in enumerate(A.planes):
            if j == k:
                continue
            denom = dot(q.normal, t)
            if denom == 0:
                continue
            s = (q.offset - dot(q.normal, f)) / denom
            if s * s < half2:
                crossings.append(s)
        for eps in (1, -1):
            beyond = [eps * s for s in crossings]
            floor = max(beyond, default=Fraction(0))
            if floor < 0:
                floor = Fraction(0)
            s_hi = _sqrt_below(half2, floor)
            s = eps * (floor + s_hi) / 2
            q0 = tuple(fi + s * ti for fi, ti in zip(f, t))
            for sgn in (1, -1):
                w = tuple(sgn * c for c in p.normal)
                x = _nudge(A, q0, w, True, {k})
                yield A.concept_at(x), x


def cells(A: Arrangement) -> tuple[ConceptClass, CellMap]:
    """Enumerate every cell of a simple arrangement as a concept.

    In a simple Euclidean arrangement with ``n >= d`` every cell is a pointed
    polyhedron, so it has a vertex and appears among the 2^d perturbations of
    some d-intersection point. In the disk every cell touches an interior
    crossing or an ideal endpoint of a chord. Completeness is confirmed by the
    cardinality check against Sauer's bound.
    """
    check = validate(A)
    if not check:
        raise ArrangementError(f"arrangement is not simple: {check.reason}", check.witness)
    found: dict[int, tuple] = {}
    if A.kind == EUCLIDEAN:
        sources = _vertex_cells(A, inside=False)
    else:
        sources = _vertex_cells(A, inside=True) if A.rank == 2 else iter(())
        sources = (*sources, *_endpoint_cells(A))
    for v, x in sources:
        found.setdefault(v, x)
    expected = sauer_bound(A.n, A.rank)
    if len(found) != expected:
        raise EnumerationError(f"found {len(found)} cells, expected {expected}", len(found))
    return ConceptClass(A.n, frozenset(found)), CellMap(dict(sorted(found.items())))


# -- JSON ---------------------------------------------------------------------


def _fmt(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def arrangement_to_json(A: Arrangement) -> dict:
    out = {
        "dim": A.dim,
        "kind": A.kind,
        "planes": [
            {"normal": [_fmt(c) for c in p.normal], "offset": _fmt(p.offset)} for p in A.planes
        ],
    }
    if A.kind == KLEIN:
        out["rank"] = A.rank
    return out


def arrangement_from_json(data: dict) -> Arrangement:
    planes = tuple(
        Hyperplane(tuple(Fraction(c) for c in p["normal"]), Fraction(p["offset"]))
        for p in data["planes"]
    )
    return Arrangement(int(data["dim"]), planes, data.get("kind", EUCLIDEAN), data.get("rank"))
