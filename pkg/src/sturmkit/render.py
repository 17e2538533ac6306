"""SVG drawings of meanders and of decorated complexes.

Meanders: crossings sit on a horizontal axis in h1 order; arcs between
h0-consecutive crossings are half circles, above the axis for odd h0
positions and below for even ones.

Complexes: each closed hemisphere (or the single disk) is drawn as a round
disk, its boundary on a circle and interior vertices placed by barycentric
(Tutte) relaxation.  Meridians are highlighted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .cells import (
    RegularCellComplex,
    TemplateDecoration,
    boundary_circuit,
    closed_hemisphere,
    poles,
)
from .meander import Meander

EW_COLOR = "#c0392b"
WE_COLOR = "#2471a3"


@dataclass(frozen=True)
class RenderSpec:
    width: int = 900
    height: int = 420
    labels: bool = True
    morse: bool = True

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError("width and height must be positive")


def _svg(spec: RenderSpec, body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.width}" height="{spec.height}" '
        f'viewBox="0 0 {spec.width} {spec.height}" font-family="sans-serif" font-size="11">'
    )
    return "\n".join([head, '<rect width="100%" height="100%" fill="white"/>', *body, "</svg>"]) + "\n"


def _f(x: float) -> str:
    return f"{x:.2f}"


def meander_svg(m: Meander, spec: RenderSpec = RenderSpec()) -> str:
    n = m.n
    margin = 30
    step = (spec.width - 2 * margin) / max(1, n - 1)
    y0 = spec.height / 2
    xs = {v: margin + (m.position(1, v) - 1) * step for v in m.labels}
    body = [f'<line x1="{margin - 15}" y1="{_f(y0)}" x2="{spec.width - margin + 15}" '
            f'y2="{_f(y0)}" stroke="#888" stroke-width="1"/>']
    h0 = m.h(0)
    for j in range(1, n):
        a, b = xs[h0[j - 1]], xs[h0[j]]
        r = abs(b - a) / 2
        sweep = 1 if (j % 2 == 1) == (b > a) else 0
        body.append(
            f'<path class="{"upper" if j % 2 else "lower"}" d="M {_f(a)} {_f(y0)} '
            f'A {_f(r)} {_f(r)} 0 0 {sweep} {_f(b)} {_f(y0)}" fill="none" stroke="black"/>'
        )
    # loose ends: in from the southwest, out to the northeast
    body.append(f'<line x1="{_f(xs[h0[0]] - 12)}" y1="{_f(y0 + 18)}" x2="{_f(xs[h0[0]])}" '
                f'y2="{_f(y0)}" stroke="black"/>')
    body.append(f'<line x1="{_f(xs[h0[-1]])}" y1="{_f(y0)}" x2="{_f(xs[h0[-1]] + 12)}" '
                f'y2="{_f(y0 - 18)}" stroke="black"/>')
    mo = m.morse if m.morse_seq is not None else {}
    for v in m.labels:
        body.append(f'<circle class="crossing" cx="{_f(xs[v])}" cy="{_f(y0)}" r="3" fill="black"/>')
        if spec.labels:
            body.append(f'<text x="{_f(xs[v])}" y="{_f(y0 + 16)}" text-anchor="middle">'
                        f"{escape(str(v))}</text>")
        if spec.morse and v in mo:
            body.append(f'<text x="{_f(xs[v])}" y="{_f(y0 - 8)}" text-anchor="middle" '
                        f'fill="#666" font-size="9">{mo[v]}</text>')
    return _svg(spec, body)


def _disk_layout(c: RegularCellComplex, north, cx, cy, r) -> dict:
    """Vertex coordinates: boundary on a circle from the top, interior relaxed."""
    circ = boundary_circuit(c, north)
    bverts = list(circ[0::2])
    pos = {}
    k = len(bverts)
    for i, v in enumerate(bverts):
        ang = math.pi / 2 + 2 * math.pi * i / k
        pos[v] = (cx + r * math.cos(ang), cy - r * math.sin(ang))
    inner = [v for v in c.vertices if v not in pos]
    nb = {v: [] for v in c.vertices}
    for t, h in c.edges.values():
        nb[t].append(h)
        nb[h].append(t)
    for v in inner:
        pos[v] = (cx, cy)
    for _ in range(500):
        for v in inner:
            xs = [pos[w][0] for w in nb[v]]
            ys = [pos[w][1] for w in nb[v]]
            pos[v] = (sum(xs) / len(xs), sum(ys) / len(ys))
    return pos


def _draw_disk(c: RegularCellComplex, north, cx, cy, r, spec, ew=(), we=(), title="") -> list[str]:
    pos = _disk_layout(c, north, cx, cy, r)
    out = []
    if title:
        out.append(f'<text x="{_f(cx)}" y="{_f(cy - r - 14)}" text-anchor="middle" '
                   f'font-weight="bold">{escape(title)}</text>')
    seen_pairs: dict = {}
    for e, (t, h) in sorted(c.edges.items()):
        key = frozenset((t, h))
        k = seen_pairs.get(key, 0)
        seen_pairs[key] = k + 1
        (x1, y1), (x2, y2) = pos[t], pos[h]
        # parallel edges bow out alternately
        off = 0 if k == 0 else (18 * ((k + 1) // 2) * (1 if k % 2 else -1))
        mx, my = (x1 + x2) / 2, (y1 + y2) / 2
        dx, dy = x2 - x1, y2 - y1
        ln = math.hypot(dx, dy) or 1.0
        qx, qy = mx - dy / ln * off, my + dx / ln * off
        color = EW_COLOR if e in ew else WE_COLOR if e in we else "black"
        width = 2.5 if color != "black" else 1.2
        out.append(f'<path class="edge" d="M {_f(x1)} {_f(y1)} Q {_f(qx)} {_f(qy)} {_f(x2)} {_f(y2)}" '
                   f'fill="none" stroke="{color}" stroke-width="{width}" marker-end="url(#arrow)"/>')
        if spec.labels:
            lx, ly = (mx + qx) / 2, (my + qy) / 2
            out.append(f'<text x="{_f(lx + 4)}" y="{_f(ly - 3)}" fill="#555" font-size="9">{e}</text>')
    for f in c.cells(2):
        vs = c.face_vertices(f)
        fx = sum(pos[v][0] for v in vs) / len(vs)
        fy = sum(pos[v][1] for v in vs) / len(vs)
        out.append(f'<circle class="face" cx="{_f(fx)}" cy="{_f(fy)}" r="3" fill="white" stroke="black"/>')
        if spec.labels:
            out.append(f'<text x="{_f(fx + 5)}" y="{_f(fy + 4)}">{f}</text>')
    for v in c.vertices:
        x, y = pos[v]
        out.append(f'<circle class="vertex" cx="{_f(x)}" cy="{_f(y)}" r="4" fill="black"/>')
        if spec.labels:
            out.append(f'<text x="{_f(x + 6)}" y="{_f(y - 6)}" font-weight="bold">{v}</text>')
    return out


_ARROW = ('<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" '
          'markerHeight="6" orient="auto-start-reverse"><path d="M 0 0 L 10 5 L 0 10 z"/></marker></defs>')


def complex_svg(c: RegularCellComplex, d: TemplateDecoration | None = None,
                spec: RenderSpec = RenderSpec()) -> str:
    body = [_ARROW]
    r = min(spec.height / 2 - 40, spec.width / 4 - 30)
    cy = spec.height / 2 + 8
    if d is not None and c.ball is not None:
        for i, side in enumerate("WE"):
            half = closed_hemisphere(c, d, side)
            cx = spec.width * (0.25 + 0.5 * i)
            body += _draw_disk(half, d.north, cx, cy, r, spec, d.meridian_ew, d.meridian_we,
                               title=f"{'west' if side == 'W' else 'east'} hemisphere")
    else:
        north, _ = poles(c)
        body += _draw_disk(c, north, spec.width / 2, cy, r, spec)
    return _svg(spec, body)
