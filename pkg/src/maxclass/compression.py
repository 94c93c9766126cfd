"""Unlabeled compression schemes given by representation maps."""

from __future__ import annotations

from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter
from itertools import combinations
from typing import Iterable, Mapping

from .concepts import ConceptClass, colors_mask, format_concept, parse_concept, sauer_bound
from .errors import Check, MembershipError, NoConsistentConceptError, SchemeError, StructureError
from .graph import build_graph
from .peeling import PeelingSequence


@dataclass(frozen=True)
class RepresentationMap:
    """Concept -> color set. ``d`` is the size of the largest representative."""

    n: int
    entries: Mapping[int, frozenset] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "entries", {v: frozenset(s) for v, s in self.entries.items()})
        inverse = {}
        for v, s in self.entries.items():
            if any(not 1 <= i <= self.n for i in s):
                raise StructureError(f"representative of {format_concept(v, self.n)} out of range")
            if s in inverse:
                raise StructureError(
                    "representation map is not injective", (inverse[s], v)
                )
            inverse[s] = v
        object.__setattr__(self, "_inverse", inverse)

    @property
    def d(self) -> int:
        return max((len(s) for s in self.entries.values()), default=0)

    def __getitem__(self, v: int) -> frozenset:
        return self.entries[v]

    def __len__(self) -> int:
        return len(self.entries)

    def inverse(self, S: Iterable[int]) -> int:
        return self._inverse[frozenset(S)]

    def image(self) -> set:
        return set(self._inverse)

    def to_json(self) -> list[dict]:
        return [
            {"concept": format_concept(v, self.n), "rep": sorted(self.entries[v])}
            for v in sorted(self.entries)
        ]

    @classmethod
    def from_json(cls, rows: list[dict], n: int | None = None) -> "RepresentationMap":
        entries = {}
        for row in rows:
            v, width = parse_concept(row["concept"])
            n = width if n is None else n
            entries[v] = frozenset(row["rep"])
        return cls(n or 0, entries)


def representation_from_peeling(
    seq: PeelingSequence, C: ConceptClass | None = None
) -> RepresentationMap:
    """Each peeled vertex is represented by its incident colors at removal time."""
    if C is not None and set(seq.vertices) != set(C.concepts):
        raise StructureError("peeling sequence does not exhaust the class")
    if len(set(seq.vertices)) != len(seq.events):
        raise StructureError("peeling sequence repeats a vertex")
    return RepresentationMap(seq.n, {e.vertex: frozenset(e.representative) for e in seq.events})


def _require_total(C: ConceptClass, r: RepresentationMap) -> None:
    missing = [v for v in C if v not in r.entries]
    if missing:
        raise StructureError("representation map is not total on the class", missing[0])


def check_non_clashing(C: ConceptClass, r: RepresentationMap) -> Check:
    """Every pair of distinct concepts must differ on the union of their representatives."""
    _require_total(C, r)
    masks = {v: colors_mask(C.n, r[v]) for v in C}
    vs = sorted(C.concepts)
    for a, b in combinations(vs, 2):
        if not (a ^ b) & (masks[a] | masks[b]):
            return Check(False, (a, b), "clashing pair")
    return Check(True)


def is_bijection_onto_small_sets(C: ConceptClass, r: RepresentationMap, d: int) -> bool:
    """Image is exactly the subsets of ``[n]`` of size at most ``d`` (maximum case)."""
    _require_total(C, r)
    return (
        len(C) == sauer_bound(C.n, d)
        and len(r.image()) == len(C)
        and all(len(s) <= d for s in r.image())
    )


def _normalize_sample(sample) -> dict[int, int]:
    pts = dict(sample.items()) if isinstance(sample, Mapping) else {}
    if not isinstance(sample, Mapping):
        for i, b in sample:
            if i in pts:
                raise ValueError(f"index {i} repeated in sample")
            pts[i] = b
    return {int(i): int(b) for i, b in pts.items()}


def _agrees(v: int, n: int, sample: dict[int, int]) -> bool:
    return all(((v >> (n - i)) & 1) == b for i, b in sample.items())


def compress(sample, C: ConceptClass, r: RepresentationMap) -> frozenset:
    """Subset ``S`` of the sample's indices whose represented concept agrees with the sample.

    ``sample`` maps coordinate index to bit (or is an iterable of pairs). All
    subsets of size at most ``r.d`` are scanned; a second hit means the map is
    not a valid scheme and raises :class:`SchemeError`.
    """
    sample = _normalize_sample(sample)
    for i in sample:
        if not 1 <= i <= C.n:
            raise ValueError(f"sample index {i} out of range 1..{C.n}")
    if not any(_agrees(v, C.n, sample) for v in C.concepts):
        raise NoConsistentConceptError("no concept of the class agrees with the sample", sample)
    hits = []
    idx = sorted(sample)
    for k in range(min(r.d, len(idx)) + 1):
        for S in combinations(idx, k):
            S = frozenset(S)
            if S in r.image():
                v = r.inverse(S)
                if v in C.concepts and _agrees(v, C.n, sample):
                    hits.append(S)
    if len(hits) != 1:
        raise SchemeError(
            f"expected one consistent representative, found {len(hits)}",
            [sorted(h) for h in hits],
        )
    return hits[0]


def reconstruct(S: Iterable[int], r: RepresentationMap) -> int:
    S = frozenset(S)
    try:
        return r.inverse(S)
    except KeyError:
        raise MembershipError(f"{sorted(S)} is not a representative", sorted(S)) from None


@dataclass(frozen=True)
class AcyclicityReport:
    acyclic: bool
    cycle: tuple[int, ...] | None
    anomalies: tuple[tuple[int, int, int], ...]

    def __bool__(self) -> bool:
        return self.acyclic


def is_acyclic(C: ConceptClass, r: RepresentationMap) -> AcyclicityReport:
    """Orient each ``i``-edge away from the endpoint whose representative contains ``i``.

    Edges where neither or both endpoints contain the color are not oriented
    and are reported as anomalies.
    """
    _require_total(C, r)
    ts: TopologicalSorter = TopologicalSorter()
    for v in C.concepts:
        ts.add(v)
    anomalies = []
    for u, v, i in build_graph(C).edges:
        iu, iv = i in r[u], i in r[v]
        if iu == iv:
            anomalies.append((u, v, i))
        elif iu:
            ts.add(v, u)  # u -> v
        else:
            ts.add(u, v)
    try:
        ts.prepare()
    except CycleError as exc:
        return AcyclicityReport(False, tuple(exc.args[1]), tuple(anomalies))
    return AcyclicityReport(True, None, tuple(anomalies))


def check_round_trip(
    C: ConceptClass, r: RepresentationMap, samples_from: ConceptClass | None = None
) -> Check:
    """Compress then reconstruct every sample of every concept of ``samples_from``.

    A sample of ``v`` is ``v`` restricted to any subset of coordinates; there
    are ``|samples_from| * 2^n`` of them. ``C`` is the class decoded into and
    defaults to ``samples_from``; a larger ``C`` models a scheme completed by
    extra hypotheses. The witness is ``(concept, sample)`` on failure.
    """
    n = C.n
    for v in samples_from or C:
        for mask in range(1 << n):
            sample = {i: (v >> (n - i)) & 1 for i in range(1, n + 1) if mask >> (n - i) & 1}
            try:
                w = reconstruct(compress(sample, C, r), r)
            except (SchemeError, MembershipError) as exc:
                return Check(False, (v, sample), str(exc))
            if not _agrees(w, n, sample):
                return Check(False, (v, sample), "reconstruction disagrees with the sample")
    return Check(True)
