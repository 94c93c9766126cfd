"""Corner-peeling a simple arrangement by sweeping a generic hyperplane across it.

Euclidean sweep
    The hyperplane ``{g . x = t}`` moves from ``t = -inf`` to ``+inf``. Every
    d-intersection point ``p`` is passed once; at that moment the cell on which
    ``g . x`` is maximized at ``p`` is left behind and peeled. Its sign at the
    planes through ``p`` comes from expanding ``g`` in their normals, and at
    every other plane it is the sign at ``p``. The cells left over are those that meet the sweep plane beyond the
    last event; they form the arrangement restricted to that plane, which is
    one dimension lower and is swept the same way.

Klein-disk sweep
    A chord of the disk is swept in direction ``g``; a cell disappears at the
    point where ``g . x`` attains its supremum over the cell. That point is an
    interior crossing of two chords (the cell behind it is peeled), the
    forward ideal endpoint of a chord (the cell on the side of the chord
    away from the circle's forward tangent), or, for the last cell, the point
    ``g/|g|`` of the circle. Endpoints have coordinates in ``Q(sqrt(r))`` and
    are ordered with exact surd comparisons.

Directions come from ``direction_sequence``: the user's vector first if given,
then vectors drawn from ``random.Random(seed + 1)`` with components
``p/q``, ``|p| <= 97``, ``1 <= q <= 13``. Directions inside the lower
dimensional restrictions are drawn the same way from ``random.Random(seed)``. A direction is retried while any
event tie or degenerate incidence remains, up to ``max_retries``.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

from ..concepts import ConceptClass
from ..errors import ArrangementError, GenericityError, InternalConsistencyError
from ..peeling import PeelingSequence, sequence_from_order, verify_corner_sequence
from .core import (
    EUCLIDEAN,
    KLEIN,
    Arrangement,
    Hyperplane,
    cells,
    chord_endpoint_params,
    validate,
)
from .exact import Surd, dot, sign, solve, surd_sign

DEFAULT_RETRIES = 64


class _Degenerate(Exception):
    """The current direction is not generic."""


def random_direction(rng: random.Random, dim: int) -> tuple[Fraction, ...]:
    while True:
        g = tuple(Fraction(rng.randint(-97, 97), rng.randint(1, 13)) for _ in range(dim))
        if any(g):
            return g


def direction_sequence(dim: int, seed: int = 0, first=None) -> Iterator[tuple[Fraction, ...]]:
    if first is not None:
        yield tuple(Fraction(c) for c in first)
    rng = random.Random(seed)
    while True:
        yield random_direction(rng, dim)


def _backward_cell(A: Arrangement, idx, x, g) -> int:
    """The cell at vertex ``x`` on which ``g`` attains its maximum at ``x``.

    Writing ``g = sum mu_i n_i`` over the planes through ``x``, that cell is
    the cone with sign ``-sign(mu_i)`` on plane ``i``. This is generally not the
    cell containing ``x - delta*g`` unless the normals are orthogonal.
    """
    mu = solve([[A.planes[i].normal[k] for i in idx] for k in range(A.dim)], g)
    if 0 in mu:
        raise _Degenerate
    s = dict(zip(idx, mu))
    v = 0
    for j, p in enumerate(A.planes):
        side = -sign(s[j]) if j in s else p.side(x)
        if side == 0:
            raise _Degenerate
        v = (v << 1) | (side > 0)
    return v


# -- Euclidean ----------------------------------------------------------------


def _restrict(A: Arrangement, g, t: Fraction) -> Arrangement:
    """The arrangement induced on ``{g . x = t}`` in coordinates along ``e_i - (g_i/g_m) e_m``."""
    m = next(i for i, c in enumerate(g) if c)
    planes = []
    for p in A.planes:
        nm = p.normal[m]
        normal = tuple(p.normal[i] - nm * g[i] / g[m] for i in range(A.dim) if i != m)
        planes.append(Hyperplane(normal, p.offset - nm * t / g[m]))
    return Arrangement(A.dim - 1, tuple(planes), EUCLIDEAN)


def _euclidean_order(A: Arrangement, rng: random.Random, g=None) -> list[int]:
    if A.dim == 0:
        v = 0
        for p in A.planes:
            if p.offset == 0:
                raise _Degenerate
            v = (v << 1) | (p.offset < 0)
        return [v]
    if g is None:
        g = random_direction(rng, A.dim)
    if not any(g):
        raise _Degenerate
    events = []
    for idx in combinations(range(A.n), A.dim):
        x = A.intersection(idx)
        events.append((dot(g, x), _backward_cell(A, idx, x, g)))
    events.sort()
    values = [e[0] for e in events]
    if len(set(values)) != len(values):
        raise _Degenerate
    t = (values[-1] if values else Fraction(0)) + 1
    H = _restrict(A, g, t)
    if H.dim > 0 and not validate(H):
        raise _Degenerate
    return [v for _, v in events] + _euclidean_order(H, rng)


# -- Klein disk ---------------------------------------------------------------


def _klein_events(A: Arrangement, g) -> list[tuple[Surd, int]]:
    nn_g = dot(g, g)
    ng = [dot(p.normal, g) for p in A.planes]
    events: list[tuple[Surd, int]] = []
    if A.rank == 2:
        for idx in combinations(range(A.n), 2):
            x = A.intersection(idx)
            events.append((Surd(dot(g, x)), _backward_cell(A, idx, x, g)))
    for k, p in enumerate(A.planes):
        f, t, half2 = chord_endpoint_params(p)
        gt = dot(g, t)
        if gt == 0:
            raise _Degenerate
        eps = sign(gt)
        # forward endpoint e = f + eps*sqrt(half2)*t
        def at(a: Sequence[Fraction], c: Fraction = Fraction(0)):
            """Sign of ``a . e - c``."""
            return surd_sign(dot(a, f) - c, eps * dot(a, t), half2)

        # circle tangent at e is perp(e) = (-e2, e1); forward tangent has g . tau > 0
        ex = (f[0], eps * t[0])
        ey = (f[1], eps * t[1])
        perp = ((-ey[0], -ey[1]), ex)  # per component: (rational part, coefficient of sqrt)
        g_perp = surd_sign(
            g[0] * perp[0][0] + g[1] * perp[1][0], g[0] * perp[0][1] + g[1] * perp[1][1], half2
        )
        n_perp = surd_sign(
            p.normal[0] * perp[0][0] + p.normal[1] * perp[1][0],
            p.normal[0] * perp[0][1] + p.normal[1] * perp[1][1],
            half2,
        )
        if g_perp == 0 or n_perp == 0:
            raise _Degenerate
        v = 0
        for j, q in enumerate(A.planes):
            s = -g_perp * n_perp if j == k else at(q.normal, q.offset)
            if s == 0:
                raise _Degenerate
            v = (v << 1) | (s > 0)
        events.append((Surd(dot(g, f), eps * gt, half2), v))
    # last cell: the ideal point g/|g|
    v = 0
    for p, c in zip(A.planes, ng):
        s = surd_sign(-p.offset, c / nn_g, nn_g)  # n.g/|g| - o
        if s == 0:
            raise _Degenerate
        v = (v << 1) | (s > 0)
    events.sort(key=_surd_key)
    for (a, _), (b, _) in zip(events, events[1:]):
        if a.cmp(b) == 0:
            raise _Degenerate
    return [*events, (None, v)]


class _SurdKey:
    __slots__ = ("s",)

    def __init__(self, s: Surd):
        self.s = s

    def __lt__(self, other: "_SurdKey") -> bool:
        return self.s.cmp(other.s) < 0


def _surd_key(event):
    return _SurdKey(event[0])


def _klein_order(A: Arrangement, g) -> list[int]:
    if not any(g):
        raise _Degenerate
    return [v for _, v in _klein_events(A, g)]


# -- entry points -------------------------------------------------------------


def run_sweep(
    A: Arrangement, direction=None, seed: int = 0, max_retries: int = DEFAULT_RETRIES
) -> tuple[PeelingSequence, tuple[Fraction, ...]]:
    """Sweep either kind of arrangement; also returns the direction actually used."""
    mode = "sweep_klein" if A.kind == KLEIN else "sweep"
    check = validate(A)
    if not check:
        raise ArrangementError(f"arrangement is not simple: {check.reason}", check.witness)
    C, _ = cells(A)
    rng = random.Random(seed)
    dirs = direction_sequence(A.dim, seed + 1, direction)
    for _ in range(max_retries):
        g = next(dirs)
        try:
            order = _klein_order(A, g) if A.kind == KLEIN else _euclidean_order(A, rng, g)
        except _Degenerate:
            continue
        return _certify(C, order, mode), g
    raise GenericityError(f"no generic sweep direction after {max_retries} tries")


def _certify(C: ConceptClass, order: list[int], mode: str) -> PeelingSequence:
    result = verify_corner_sequence(C, order)
    if not result:
        raise InternalConsistencyError(
            f"sweep produced an invalid peeling at step {result.step}: {result.reason}",
            result.witness,
        )
    return sequence_from_order(C, order, mode)


def sweep(
    A: Arrangement, direction=None, seed: int = 0, max_retries: int = DEFAULT_RETRIES
) -> PeelingSequence:
    """Corner-peeling of ``cells(A)`` by a generic Euclidean sweep."""
    if A.kind != EUCLIDEAN:
        raise ArrangementError("sweep expects a euclidean arrangement; use sweep_klein")
    return run_sweep(A, direction, seed, max_retries)[0]


def sweep_klein(
    A: Arrangement, direction=None, seed: int = 0, max_retries: int = DEFAULT_RETRIES
) -> PeelingSequence:
    """Corner-peeling of ``cells(A)`` by sweeping a chord across the disk."""
    if A.kind != KLEIN:
        raise ArrangementError("sweep_klein expects a klein_disk arrangement")
    return run_sweep(A, direction, seed, max_retries)[0]
