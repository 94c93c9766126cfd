"""Corner-peeling and min-peeling of concept classes.

A vertex ``v`` of a class is a corner when its neighbors all lie in a single
cube through ``v`` that is the unique cube of maximum dimension containing
``v``. Every cube through ``v`` uses only colors incident to ``v``, so this
holds exactly when the cube spanned at ``v`` by all its incident colors lies in
the class; that cube is the witness.

Peeling an isolated vertex is only accepted as the final step of a sequence.
Removing an isolated vertex while other vertices remain is not a deformation
retraction, and allowing it would let disconnected classes be "peeled" and
would hand the empty representative to more than one concept.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .concepts import ConceptClass, format_concept, mask_colors, parse_concept
from .errors import Check
from .graph import Cube, incident_mask, is_shortest_path_closed, subcube_vertices


@dataclass(frozen=True)
class PeelEvent:
    vertex: int
    representative: tuple[int, ...]
    cube_dim: int
    step: int

    def to_json(self, n: int) -> dict:
        return {
            "vertex": format_concept(self.vertex, n),
            "rep": list(self.representative),
            "dim": self.cube_dim,
            "step": self.step,
        }


@dataclass(frozen=True)
class PeelingSequence:
    n: int
    mode: str
    events: tuple[PeelEvent, ...]

    @property
    def max_degree(self) -> int:
        return max((e.cube_dim for e in self.events), default=0)

    @property
    def vertices(self) -> list[int]:
        return [e.vertex for e in self.events]

    @property
    def dims(self) -> list[int]:
        return [e.cube_dim for e in self.events]

    def __len__(self) -> int:
        return len(self.events)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "max_degree": self.max_degree,
            "events": [e.to_json(self.n) for e in self.events],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PeelingSequence":
        n = data["n"]
        events = tuple(
            PeelEvent(parse_concept(e["vertex"])[0], tuple(sorted(e["rep"])), e["dim"], e["step"])
            for e in data["events"]
        )
        return cls(n, data.get("mode", "corner"), events)


def _corner_mask(points, n: int, v: int) -> int | None:
    """Witness color mask if ``v`` is a corner of ``points``, else ``None``."""
    inc = incident_mask(points, n, v)
    if all(w in points for w in subcube_vertices(v, inc)):
        return inc
    return None


def is_corner_vertex(C: ConceptClass, v: int) -> tuple[bool, Cube | None]:
    """Corner test with the witness cube (``None`` when ``v`` is not a corner)."""
    C.require(v)
    inc = _corner_mask(C.concepts, C.n, v)
    if inc is None:
        return False, None
    return True, Cube(v & ~inc, inc, C.n)


def _event(n: int, v: int, inc: int, step: int) -> PeelEvent:
    cols = mask_colors(n, inc)
    return PeelEvent(v, cols, len(cols), step)


def _peelable_corners(points, n: int) -> list[tuple[int, int]]:
    """``(v, witness mask)`` for every vertex that may be peeled now, best first."""
    out = []
    last = len(points) == 1
    for v in points:
        inc = _corner_mask(points, n, v)
        if inc is None or (inc == 0 and not last):
            continue
        out.append((v, inc))
    out.sort(key=lambda p: (-bin(p[1]).count("1"), p[0]))
    return out


def corner_peel(C: ConceptClass, prefix: Sequence[int] = ()) -> PeelingSequence | None:
    """Find a complete corner-peeling sequence, or ``None`` if none exists.

    Depth-first search over corner choices, largest witness cube first and then
    canonical vertex order. Residual sets already known to dead-end are
    memoized. ``prefix`` forces the first vertices (each must be a valid corner
    at its step).
    """
    n = C.n
    points = set(C.concepts)
    events: list[PeelEvent] = []
    for v in prefix:
        if v not in points:
            return None
        inc = _corner_mask(points, n, v)
        if inc is None or (inc == 0 and len(points) > 1):
            return None
        events.append(_event(n, v, inc, len(events) + 1))
        points.discard(v)

    dead: set[frozenset] = set()

    def search(points: set) -> bool:
        if not points:
            return True
        key = frozenset(points)
        if key in dead:
            return False
        for v, inc in _peelable_corners(points, n):
            events.append(_event(n, v, inc, len(events) + 1))
            points.discard(v)
            if search(points):
                return True
            points.add(v)
            events.pop()
        dead.add(key)
        return False

    if not search(points):
        return None
    return PeelingSequence(n, "corner", tuple(events))


def verify_corner_sequence(
    C: ConceptClass,
    seq: Iterable[int],
    complete: bool = True,
    check_closure: bool = False,
) -> Check:
    """Replay ``seq`` on ``C`` checking the corner conditions at each step.

    With ``complete=False`` the sequence may be a prefix; the residual class is
    returned on the result. ``check_closure`` additionally asserts that a
    shortest-path closed input stays closed after every peel.
    """
    n = C.n
    points = set(C.concepts)
    closure = check_closure and is_shortest_path_closed(C)
    seen = set()
    for step, v in enumerate(seq, start=1):
        if isinstance(v, str):
            v = parse_concept(v)[0]
        if v in seen or v not in points:
            return Check(False, v, "vertex not in residual class", step)
        inc = _corner_mask(points, n, v)
        if inc is None:
            return Check(False, v, "not a corner vertex", step)
        if inc == 0 and len(points) > 1:
            return Check(False, v, "isolated vertex peeled before the end", step)
        points.discard(v)
        seen.add(v)
        if closure and not is_shortest_path_closed(C.with_concepts(points)):
            return Check(False, v, "shortest-path closure lost", step)
    residual = C.with_concepts(points)
    if complete and points:
        return Check(False, None, "sequence does not exhaust the class", None, residual)
    return Check(True, residual=residual)


def min_peel(C: ConceptClass) -> PeelingSequence:
    """Repeatedly remove a minimum-degree vertex (ties: canonical order)."""
    n = C.n
    points = set(C.concepts)
    deg = {v: incident_mask(points, n, v) for v in points}
    events = []
    while points:
        v = min(points, key=lambda u: (bin(deg[u]).count("1"), u))
        events.append(_event(n, v, deg[v], len(events) + 1))
        points.discard(v)
        inc = deg.pop(v)
        for i in range(n):
            m = 1 << i
            if inc & m:
                deg[v ^ m] &= ~m
    return PeelingSequence(n, "min", tuple(events))


def sequence_from_order(C: ConceptClass, order: Iterable[int], mode: str = "corner") -> PeelingSequence:
    """Record ``order`` as a peeling sequence, with each vertex's incident colors at removal.

    No corner check is made here; pair with :func:`verify_corner_sequence`.
    """
    n = C.n
    points = set(C.concepts)
    events = []
    for v in order:
        events.append(_event(n, v, incident_mask(points, n, v), len(events) + 1))
        points.discard(v)
    return PeelingSequence(n, mode, tuple(events))
