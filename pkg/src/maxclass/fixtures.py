"""Bundled example classes and arrangements.

Bit strings read ``x1 x2 ... xn`` from left to right. Rows keep the order of the
published tables so that exports are byte-for-byte comparable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arrangement import KLEIN, Arrangement
from .compression import RepresentationMap
from .concepts import ConceptClass, parse_concept


@dataclass(frozen=True)
class Fixture:
    name: str
    rows: tuple[str, ...]
    description: str
    labels: dict = field(default_factory=dict)  # row -> list of label color sets

    @property
    def cls(self) -> ConceptClass:
        return ConceptClass.from_strings(self.rows)

    def representation(self) -> RepresentationMap | None:
        """The published labels as a map, taking the first label where several are listed."""
        if not self.labels:
            return None
        n = len(self.rows[0])
        return RepresentationMap(
            n, {parse_concept(r)[0]: frozenset(ls[0]) for r, ls in self.labels.items()}
        )

    def text(self) -> str:
        return "\n".join(self.rows) + "\n"


# v0 .. v10
TABLE_EUCLIDEAN = (
    "0000", "1000", "0100", "0010", "1010", "1100", "0110", "1001", "1101", "0101", "0111",
)

# the published partial sweep: v7, v8, v5, v9, v2, v0; leaves v1, v3, v4, v6, v10
SWEEP_PREFIX = ("1001", "1101", "1100", "0101", "0100", "0000")
SWEEP_RESIDUAL = ("1000", "0010", "1010", "0110", "0111")

_DISCONNECTED = {
    "0000": [()],
    "1000": [(1,)],
    "0100": [(2,)],
    "0010": [(3,)],
    "0001": [(4,)],
    "1100": [(1, 2)],
    "0011": [(3, 4)],
    "0110": [(2, 3)],
    "1001": [(1, 4)],
    "1111": [(1, 3), (2, 4)],
}

_CONTRACTIBLE = {
    "0000": [()],
    "1000": [(1,)],
    "0100": [(2,)],
    "0010": [(3,)],
    "1100": [(1, 2)],
    "0110": [(2, 3)],
    "1010": [(1, 3)],
    "1011": [(2, 4)],
    "1101": [(3, 4)],
    "0111": [(1, 4)],
}

FIXTURES: dict[str, Fixture] = {
    f.name: f
    for f in (
        Fixture(
            "table-euclidean",
            TABLE_EUCLIDEAN,
            "2-maximum class in the 4-cube realized by four lines in the plane",
        ),
        Fixture(
            "maximal-disconnected",
            tuple(_DISCONNECTED),
            "VC-2 maximal class: four squares at 0000 plus the isolated vertex 1111",
            _DISCONNECTED,
        ),
        Fixture(
            "maximal-contractible",
            tuple(_CONTRACTIBLE),
            "VC-2 maximal class: three squares at 0000 with three pendant edges",
            _CONTRACTIBLE,
        ),
        Fixture(
            "maximal-contractible-enlarged",
            tuple(_CONTRACTIBLE) + ("1111",),
            "the contractible maximal class with 1111 added to complete the labeling",
            {**_CONTRACTIBLE, "1111": [(4,)]},
        ),
        Fixture(
            "xyzx-path",
            ("000", "100", "110", "111", "011"),
            "path of four edges colored x1, x2, x3, x1 in the 3-cube",
        ),
        Fixture(
            "square-plus-pendant",
            ("000", "001", "010", "011", "110"),
            "a square on x2, x3 with a pendant x1 edge",
        ),
    )
}


def _arr(normals, offsets, kind="euclidean", rank=None) -> Arrangement:
    return Arrangement.from_lists(
        [tuple(Fraction(c) for c in nrm) for nrm in normals],
        [Fraction(o) for o in offsets],
        kind,
        rank,
    )


ARRANGEMENTS: dict[str, tuple[Arrangement, tuple]] = {
    # three parallel chords: a 4-vertex stick
    "klein-disjoint": (
        _arr([(1, 0), (1, 0), (1, 0)], ["-1/2", 0, "1/2"], KLEIN, 1),
        (1, 3),
    ),
    # three chords crossing pairwise inside the disk; this direction interleaves 1- and 2-cubes
    "klein-crossing": (
        _arr([(1, 0), (0, 1), (1, 1)], [0, 0, "1/2"], KLEIN, 2),
        (3, -1),
    ),
    # four lines whose cells are the 11-row table; sweeping upward peels v7, v8, v5, v9, v2, v0 first
    "lines-table": (
        _arr([(-2, 0), (3, -3), (0, 1), (1, -2)], [1, 0, 4, 1]),
        ("-1/50", 1),
    ),
    "lines-4": (
        _arr([(1, 0), (0, 1), (1, 1), (1, -2)], [0, 0, 3, 1]),
        (1, "1/7"),
    ),
}


def get(name: str) -> Fixture:
    try:
        return FIXTURES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}") from None
