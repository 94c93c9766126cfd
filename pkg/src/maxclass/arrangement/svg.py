"""SVG drawings of planar arrangements and of the steps of a sweep."""

from __future__ import annotations

import math
from pathlib import Path

from ..concepts import format_concept
from ..errors import ArrangementError
from ..peeling import PeelingSequence
from .core import KLEIN, Arrangement, CellMap, chord_endpoint_params

SIZE = 480


def _segments(A: Arrangement, box: float):
    if A.kind == KLEIN:
        for p in A.planes:
            f, t, half2 = chord_endpoint_params(p)
            h = math.sqrt(half2)
            yield [(float(f[k]) + s * h * float(t[k]) for k in range(2)) for s in (-1, 1)]
        return
    for p in A.planes:
        a, b = (float(c) for c in p.normal)
        o = float(p.offset)
        pts = []
        for x in (-box, box):
            if b:
                y = (o - a * x) / b
                if -box <= y <= box:
                    pts.append((x, y))
        for y in (-box, box):
            if a:
                x = (o - b * y) / a
                if -box <= x <= box:
                    pts.append((x, y))
        if len(pts) >= 2:
            yield [pts[0], max(pts, key=lambda q: math.dist(q, pts[0]))]


def _scale(box: float):
    def to_px(pt):
        x, y = pt
        return (SIZE / 2 * (1 + x / box), SIZE / 2 * (1 - y / box))

    return to_px


def _box(A: Arrangement, cellmap: CellMap) -> float:
    if A.kind == KLEIN:
        return 1.1
    m = max((abs(float(c)) for x in cellmap.points.values() for c in x), default=1.0)
    return 1.3 * m + 1


def render(A: Arrangement, cellmap: CellMap, peeled=(), current=None) -> str:
    """One SVG: lines, cell labels; ``peeled`` cells greyed, ``current`` highlighted."""
    if A.dim != 2:
        raise ArrangementError("SVG output supports planar arrangements only")
    box = _box(A, cellmap)
    px = _scale(box)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}" font-family="monospace" font-size="10">',
        f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>',
    ]
    if A.kind == KLEIN:
        c = px((0, 0))
        out.append(
            f'<circle cx="{c[0]:.2f}" cy="{c[1]:.2f}" r="{SIZE / 2 / box:.2f}" fill="none" stroke="gray"/>'
        )
    for i, seg in enumerate(_segments(A, box), start=1):
        (x0, y0), (x1, y1) = (px(q) for q in seg)
        out.append(f'<line x1="{x0:.2f}" y1="{y0:.2f}" x2="{x1:.2f}" y2="{y1:.2f}" stroke="black"/>')
        out.append(f'<text x="{x1 + 3:.2f}" y="{y1:.2f}" fill="blue">x{i}</text>')
    gone = set(peeled)
    for v, pt in cellmap.points.items():
        x, y = px(tuple(float(c) for c in pt))
        color = "red" if v == current else "lightgray" if v in gone else "black"
        out.append(f'<text x="{x:.2f}" y="{y:.2f}" fill="{color}">{format_concept(v, A.n)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_sweep_svgs(A: Arrangement, cellmap: CellMap, seq: PeelingSequence, outdir) -> list[Path]:
    """``arrangement.svg`` plus one ``step_XX.svg`` per sweep event."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    paths = [outdir / "arrangement.svg"]
    paths[0].write_text(render(A, cellmap))
    order = seq.vertices
    for k, v in enumerate(order):
        path = outdir / f"step_{k + 1:02d}.svg"
        path.write_text(render(A, cellmap, order[:k], v))
        paths.append(path)
    return paths
