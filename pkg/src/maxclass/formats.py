"""Reading and writing classes, representation maps, peelings and arrangements.

Concept files are plain text, one bit string per line. Blank lines and ``#``
comments are ignored, and an optional ``n=<int>`` line fixes the dimension
(needed for an empty class). A ``.json`` file holds ``{"n": .., "concepts": [..]}``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .arrangement import Arrangement, arrangement_from_json, arrangement_to_json
from .compression import RepresentationMap
from .concepts import ConceptClass
from .peeling import PeelingSequence


def parse_class_text(text: str) -> ConceptClass:
    n = None
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("n="):
            n = int(line[2:])
        else:
            rows.append(line)
    return ConceptClass.from_strings(rows, n)


def class_text(C: ConceptClass, rows=None) -> str:
    rows = C.strings() if rows is None else list(rows)
    head = [] if rows else [f"n={C.n}"]
    return "\n".join(head + rows) + "\n"


def class_to_json(C: ConceptClass) -> dict:
    return {"n": C.n, "concepts": C.strings()}


def class_from_json(data: dict) -> ConceptClass:
    if not isinstance(data, dict) or "concepts" not in data:
        raise ValueError('a class JSON file needs a "concepts" list')
    return ConceptClass.from_strings(data["concepts"], data.get("n"))


def read_class(path) -> ConceptClass:
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".json":
        return class_from_json(json.loads(text))
    return parse_class_text(text)


def write_class(C: ConceptClass, path) -> None:
    path = Path(path)
    if path.suffix == ".json":
        dump_json(class_to_json(C), path)
    else:
        path.write_text(class_text(C))


def rep_from_json(data, n: int | None = None) -> RepresentationMap:
    """Accepts a list of ``{"concept", "rep"}`` rows, an object with a
    ``representation`` list, or a peeling (object with ``events``)."""
    if isinstance(data, dict):
        if "events" in data:
            seq = PeelingSequence.from_json(data)
            return RepresentationMap(seq.n, {e.vertex: frozenset(e.representative) for e in seq.events})
        n = data.get("n", n)
        data = data["representation"]
    return RepresentationMap.from_json(data, n)


def read_rep(path, n: int | None = None) -> RepresentationMap:
    return rep_from_json(json.loads(Path(path).read_text()), n)


def read_arrangement(path) -> Arrangement:
    return arrangement_from_json(json.loads(Path(path).read_text()))


def write_arrangement(A: Arrangement, path) -> None:
    dump_json(arrangement_to_json(A), path)


def dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=False) + "\n"


def dump_json(data, path) -> None:
    Path(path).write_text(dumps(data))
