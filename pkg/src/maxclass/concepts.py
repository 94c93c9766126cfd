"""Concepts and concept classes in the binary n-cube.

Representation
--------------
A concept is a Python ``int``. Coordinate ``x_i`` (1-based, ``1 <= i <= n``)
is stored in bit ``n - i``, so ``x_1`` is the most significant bit. With this
choice the natural integer order coincides with the lexicographic order of the
bit strings ``x_1 x_2 ... x_n``, which is the canonical order used everywhere.

Color sets are ``frozenset`` of 1-based coordinate indices; wherever they are
emitted they are sorted tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

from .errors import EmptyClassError, MembershipError

ColorSet = frozenset


def color_mask(n: int, i: int) -> int:
    """Bit mask of coordinate ``x_i`` in an ``n``-bit concept."""
    if not 1 <= i <= n:
        raise ValueError(f"color {i} out of range 1..{n}")
    return 1 << (n - i)


def colors_mask(n: int, colors: Iterable[int]) -> int:
    m = 0
    for i in colors:
        m |= color_mask(n, i)
    return m


def mask_colors(n: int, mask: int) -> tuple[int, ...]:
    """Inverse of :func:`colors_mask`, sorted ascending."""
    return tuple(i for i in range(1, n + 1) if mask >> (n - i) & 1)


def parse_concept(bits: str) -> tuple[int, int]:
    """``'1001'`` -> ``(9, 4)``."""
    bits = bits.strip()
    if not bits or any(ch not in "01" for ch in bits):
        raise ValueError(f"not a bit string: {bits!r}")
    return int(bits, 2), len(bits)


def format_concept(v: int, n: int) -> str:
    return format(v, f"0{n}b") if n else ""


def popcount(v: int) -> int:
    return bin(v).count("1")


def project_bits(v: int, n: int, keep: tuple[int, ...]) -> int:
    """Concept ``v`` restricted to the sorted coordinates ``keep``."""
    out = 0
    for i in keep:
        out = (out << 1) | ((v >> (n - i)) & 1)
    return out


@dataclass(frozen=True)
class ConceptClass:
    """A finite set of concepts of a fixed ambient dimension ``n``."""

    n: int
    concepts: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("ambient dimension must be non-negative")
        object.__setattr__(self, "concepts", frozenset(self.concepts))
        top = 1 << self.n
        for v in self.concepts:
            if not 0 <= v < top:
                raise ValueError(f"concept {v} does not fit in {self.n} bits")

    @classmethod
    def from_strings(cls, rows: Iterable[str], n: int | None = None) -> "ConceptClass":
        vals = []
        for row in rows:
            v, width = parse_concept(row)
            if n is None:
                n = width
            elif width != n:
                raise ValueError(f"concept {row!r} has length {width}, expected {n}")
            vals.append(v)
        if n is None:
            raise ValueError("cannot infer ambient dimension of an empty class")
        return cls(n, frozenset(vals))

    @classmethod
    def full(cls, n: int) -> "ConceptClass":
        return cls(n, frozenset(range(1 << n)))

    @classmethod
    def downward_closed(cls, n: int, d: int) -> "ConceptClass":
        """All vertices with at most ``d`` ones."""
        return cls(n, frozenset(v for v in range(1 << n) if popcount(v) <= d))

    def __len__(self) -> int:
        return len(self.concepts)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.concepts))

    def __contains__(self, v) -> bool:
        if isinstance(v, str):
            v = parse_concept(v)[0]
        return v in self.concepts

    def strings(self) -> list[str]:
        return [format_concept(v, self.n) for v in self]

    def mask(self, i: int) -> int:
        return color_mask(self.n, i)

    def with_concepts(self, concepts: Iterable[int]) -> "ConceptClass":
        return ConceptClass(self.n, frozenset(concepts))

    def require(self, v: int) -> None:
        if v not in self.concepts:
            raise MembershipError(f"{format_concept(v, self.n)} is not in the class", v)

    def __repr__(self) -> str:
        body = ", ".join(self.strings())
        return f"ConceptClass(n={self.n}, {{{body}}})"


def sauer_bound(n: int, d: int) -> int:
    """Number of subsets of ``[n]`` of size at most ``d``.

    The sum runs from ``i = 0``; the empty set term is what makes a
    2-maximum class in the 4-cube have 11 concepts.
    """
    if n < 0 or d < 0 or d > n:
        raise ValueError(f"need 0 <= d <= n, got n={n}, d={d}")
    return sum(comb(n, i) for i in range(d + 1))


def shatters(C: ConceptClass, colors: Iterable[int]) -> bool:
    colors = tuple(colors)
    m = colors_mask(C.n, colors)
    return len({v & m for v in C.concepts}) == 1 << len(colors)


def vc_dimension(C: ConceptClass) -> int:
    """Size of the largest shattered coordinate set.

    Shattering is hereditary, so the search stops at the first size with no
    shattered subset.
    """
    if not C.concepts:
        raise EmptyClassError("empty class has no VC dimension")
    d = 0
    for k in range(1, C.n + 1):
        if (1 << k) > len(C):
            break
        if any(shatters(C, s) for s in combinations(range(1, C.n + 1), k)):
            d = k
        else:
            break
    return d


def project(C: ConceptClass, keep: Iterable[int]) -> ConceptClass:
    keep = tuple(sorted(set(keep)))
    for i in keep:
        color_mask(C.n, i)
    return ConceptClass(len(keep), frozenset(project_bits(v, C.n, keep) for v in C.concepts))


def _drop(C: ConceptClass, i: int) -> tuple[int, ...]:
    return tuple(j for j in range(1, C.n + 1) if j != i)


def reduction(C: ConceptClass, i: int) -> ConceptClass:
    """``C^i``: the concepts with an ``i``-colored edge, with ``x_i`` deleted."""
    m = color_mask(C.n, i)
    keep = _drop(C, i)
    pts = C.concepts
    return ConceptClass(C.n - 1, frozenset(project_bits(v, C.n, keep) for v in pts if v ^ m in pts))


def tail(C: ConceptClass, i: int) -> ConceptClass:
    """Concepts with no ``i``-colored edge, in the original ambient cube."""
    m = color_mask(C.n, i)
    return C.with_concepts(v for v in C.concepts if v ^ m not in C.concepts)


def is_maximum(C: ConceptClass, full_check: bool = False) -> bool:
    """Sauer's bound met with equality.

    For a finite cube cardinality equality alone is enough; ``full_check``
    additionally tests every projection (exponential, meant for tests).
    """
    if not C.concepts:
        return False
    d = vc_dimension(C)
    if len(C) != sauer_bound(C.n, d):
        return False
    if full_check:
        for k in range(C.n):
            for keep in combinations(range(1, C.n + 1), k):
                P = project(C, keep)
                if len(P) != sauer_bound(k, vc_dimension(P)):
                    return False
    return True


def is_maximal(C: ConceptClass) -> bool:
    """True iff every vertex outside ``C`` raises the VC dimension when added."""
    d = vc_dimension(C)
    if d == C.n:
        return True
    outside = [v for v in range(1 << C.n) if v not in C.concepts]
    # Only (d+1)-sets missing exactly one pattern can become shattered.
    full = 1 << (d + 1)
    near = []
    for s in combinations(range(1, C.n + 1), d + 1):
        m = colors_mask(C.n, s)
        seen = {u & m for u in C.concepts}
        if len(seen) == full - 1:
            near.append((m, seen))
    return all(any(v & m not in seen for m, seen in near) for v in outside)
