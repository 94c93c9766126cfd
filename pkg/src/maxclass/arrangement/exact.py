"""Exact linear algebra over ``Fraction`` and signs of quadratic surds.

Chord endpoints in the Klein disk have coordinates in ``Q(sqrt(r))``; every
quantity compared during a Klein sweep has the form ``a + b*sqrt(r)`` or the
difference of two such numbers, so signs are decided by squaring, never by
floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vector = tuple[Fraction, ...]


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def sign(x) -> int:
    return (x > 0) - (x < 0)


def solve(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Vector | None:
    """Solve the square system ``A x = b``; ``None`` when ``A`` is singular."""
    k = len(A)
    M = [[frac(x) for x in row] + [frac(rhs)] for row, rhs in zip(A, b)]
    for col in range(k):
        pivot = next((r for r in range(col, k) if M[r][col] != 0), None)
        if pivot is None:
            return None
        M[col], M[pivot] = M[pivot], M[col]
        inv = 1 / M[col][col]
        M[col] = [x * inv for x in M[col]]
        for r in range(k):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return tuple(M[r][k] for r in range(k))


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    M = [[frac(x) for x in row] for row in rows]
    if not M:
        return 0
    r = 0
    for col in range(len(M[0])):
        pivot = next((i for i in range(r, len(M)) if M[i][col] != 0), None)
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        for i in range(r + 1, len(M)):
            if M[i][col] != 0:
                f = M[i][col] / M[r][col]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        r += 1
        if r == len(M):
            break
    return r


def surd_sign(a: Fraction, b: Fraction = Fraction(0), r: Fraction = Fraction(0)) -> int:
    """Sign of ``a + b*sqrt(r)`` with ``r >= 0``."""
    if r < 0:
        raise ValueError("negative radicand")
    sa = sign(a)
    sb = sign(b) if r else 0
    if sb == 0 or sa == sb:
        return sa or sb
    if sa == 0:
        return sb
    diff = a * a - b * b * r
    return sa if diff > 0 else sb if diff < 0 else 0


def surd2_sign(a, b, r, c, s) -> int:
    """Sign of ``a + b*sqrt(r) + c*sqrt(s)``."""
    first = surd_sign(a, b, r)
    sc = sign(c) if s else 0
    if sc == 0 or first == sc:
        return first or sc
    if first == 0:
        return sc
    # compare (a + b sqrt r)^2 with c^2 s
    diff = surd_sign(a * a + b * b * r - c * c * s, 2 * a * b, r)
    return first if diff > 0 else sc if diff < 0 else 0


class Surd:
    """The real number ``a + b*sqrt(r)``, compared exactly against other surds."""

    __slots__ = ("a", "b", "r")

    def __init__(self, a, b=0, r=0):
        self.a, self.b, self.r = frac(a), frac(b), frac(r)
        if self.r < 0:
            raise ValueError("negative radicand")

    def cmp(self, other: "Surd") -> int:
        return surd2_sign(self.a - other.a, self.b, self.r, -other.b, other.r)

    def __lt__(self, other: "Surd") -> bool:
        return self.cmp(other) < 0

    def __eq__(self, other) -> bool:
        return isinstance(other, Surd) and self.cmp(other) == 0

    def __hash__(self):
        return hash(float(self))

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * float(self.r) ** 0.5

    def __repr__(self) -> str:
        return f"Surd({self.a} + {self.b}*sqrt({self.r}))"
