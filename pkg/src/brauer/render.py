"""ASCII and SVG pictures of weight and cap diagrams.

In the ASCII picture the first line holds one symbol per vertex and the arcs
hang below it. Column 0 is the wall. In the SVG picture the wall is the
y-axis and each vertex sits at its real coordinate on the x-axis.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from .caps import CapDiagram
from .partitions import Partition
from .weights import PRETTY, WeightDiagram

STEP = 3          # ASCII columns per vertex slot


def _depths(c: CapDiagram):
    """Nesting depth of every arc on the doubled line, innermost arcs at depth 1.

    Keys are ``("cap", (a, b))`` and ``("curl", k)`` for the wall arc through slot k.
    """
    q = lambda k: c.base.pos2(k)
    spans = {("cap", arc): (q(arc[0]), q(arc[1])) for arc in c.caps}
    for a, b in c.curls:
        spans[("curl", a)] = (-q(a), q(a))
        spans[("curl", b)] = (-q(b), q(b))
    depth = {}
    for key in sorted(spans, key=lambda k: spans[k][1] - spans[k][0]):
        l, r = spans[key]
        inner = [depth[o] for o in depth if l <= spans[o][0] and spans[o][1] <= r]
        depth[key] = 1 + max(inner, default=0)
    return depth


def ascii_weight(x: WeightDiagram, width: int | None = None) -> str:
    width = max(width or 0, len(x) + 2)
    line = [" "] * (STEP * width + 1)
    line[0] = "|"
    for k in range(width):
        line[STEP * k + 2] = x[k]
    return "".join(line).rstrip()


def ascii_cap(c: CapDiagram, width: int | None = None) -> str:
    width = max(width or 0, c.width + 1)
    depth = _depths(c)
    rows = max(depth.values(), default=0) + 1
    grid = [[" "] * (STEP * width + 1) for _ in range(rows)]
    col = lambda k: STEP * k + 2
    for r in range(rows):
        grid[r][0] = "|"
    for (kind, data), d in depth.items():
        if kind == "cap":
            a, b = data
            for r in range(d - 1):
                grid[r][col(a)] = grid[r][col(b)] = "|"
            for j in range(col(a) + 1, col(b)):
                grid[d - 1][j] = "_"
            grid[d - 1][col(a)] = grid[d - 1][col(b)] = "+"
        else:
            for r in range(d - 1):
                grid[r][col(data)] = "|"
            for j in range(1, col(data)):
                grid[d - 1][j] = "_"
            grid[d - 1][col(data)] = "+"
    rays = list(c.rays) + list(range(c.width, width))
    if c.up_ray is not None:
        rays.append(c.up_ray)
    for k in rays:
        for r in range(rows):
            grid[r][col(k)] = "|"
    lines = [ascii_weight(c.base, width)] + ["".join(g).rstrip() for g in grid]
    return "\n".join(lines)


def _svg(body: list[str], w: float, h: float) -> str:
    head = ('<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:g}" height="{h:g}" '
            f'viewBox="0 0 {w:g} {h:g}">')
    return "\n".join([head] + ["  " + b for b in body] + ["</svg>"]) + "\n"


def svg_cap(c: CapDiagram, width: int | None = None, title: str | None = None,
            unit: float = 40.0) -> str:
    """SVG 1.1 drawing: caps and curls as quadratic Bezier paths, rays as lines."""
    width = max(width or 0, c.width + 1)
    depth = _depths(c)
    levels = max(depth.values(), default=0)
    x0, y0 = unit, unit * (1.5 if title else 1.0)
    xs = lambda k: x0 + unit * c.base.pos2(k) / 2
    right = xs(width - 1) + unit
    bottom = y0 + unit * (levels + 1.5)
    body = []
    if title:
        body.append(f'<text x="{x0:g}" y="{unit * 0.6:g}" font-family="sans-serif" '
                    f'font-size="{unit * 0.4:g}">{escape(title)}</text>')
    body.append(f'<line x1="{x0:g}" y1="{y0 - unit * 0.6:g}" x2="{x0:g}" y2="{bottom:g}" '
                'stroke="black" stroke-width="2"/>')
    body.append(f'<line x1="{x0:g}" y1="{y0:g}" x2="{right:g}" y2="{y0:g}" stroke="#999" stroke-dasharray="4 3"/>')
    style = 'fill="none" stroke="black" stroke-width="1.5"'
    for (kind, data), d in sorted(depth.items(), key=lambda kv: (kv[0][0], str(kv[0][1]))):
        h = unit * 0.8 * d
        if kind == "cap":
            a, b = xs(data[0]), xs(data[1])
            body.append(f'<path d="M {a:g} {y0:g} Q {(a + b) / 2:g} {y0 + 2 * h:g} {b:g} {y0:g}" {style}/>')
        else:
            a = xs(data)
            body.append(f'<path d="M {a:g} {y0:g} Q {a:g} {y0 + h:g} {x0:g} {y0 + h:g}" {style}/>')
    rays = list(c.rays) + list(range(c.width, width))
    if c.up_ray is not None:
        rays.append(c.up_ray)
    for k in sorted(rays):
        body.append(f'<line x1="{xs(k):g}" y1="{y0:g}" x2="{xs(k):g}" y2="{bottom:g}" stroke="black" stroke-width="1.5"/>')
    for k in range(width):
        sym = PRETTY[c.base[k]]
        body.append(f'<text x="{xs(k):g}" y="{y0 - unit * 0.25:g}" text-anchor="middle" '
                    f'font-family="serif" font-size="{unit * 0.5:g}">{sym}</text>')
    return _svg(body, right + unit * 0.5, bottom + unit * 0.3)


def svg_young(lam: Partition, unit: float = 20.0, origin=(0.0, 0.0)) -> list[str]:
    """SVG elements (English convention) for the Young diagram of ``lam``."""
    ox, oy = origin
    out = []
    for i, j in Partition(lam).boxes():
        out.append(f'<rect x="{ox + (j - 1) * unit:g}" y="{oy + (i - 1) * unit:g}" width="{unit:g}" '
                   f'height="{unit:g}" fill="white" stroke="black"/>')
    return out


def svg_figure(lam: Partition, c: CapDiagram, width: int | None = None, unit: float = 40.0) -> str:
    """Young diagram of ``lam`` beside its cap diagram, as one SVG document."""
    lam = Partition(lam)
    cap = svg_cap(c, width, title=f"lambda = ({lam}), delta = {c.base.delta}", unit=unit)
    inner = cap.split("\n")[2:-2]
    box = unit / 2
    shift = box * (max(lam.row(1), 1) + 1)
    young = svg_young(lam, box, (unit * 0.5, unit * 1.2))
    w = float(cap.split('width="')[1].split('"')[0]) + shift
    h = max(float(cap.split('height="')[1].split('"')[0]), unit * 1.5 + box * len(lam))
    body = young + [f'<g transform="translate({shift:g} 0)">'] + ["  " + s.strip() for s in inner] + ["</g>"]
    return _svg(body, w, h)


def svg_weight(x: WeightDiagram, width: int | None = None, unit: float = 40.0) -> str:
    """SVG 1.1 drawing of the labels alone, with the wall as the y-axis."""
    width = max(width or 0, len(x) + 2)
    x0, y0 = unit, unit
    xs = lambda k: x0 + unit * x.pos2(k) / 2
    right = xs(width - 1) + unit
    body = [f'<line x1="{x0:g}" y1="{y0 - unit * 0.6:g}" x2="{x0:g}" y2="{y0 + unit * 0.6:g}" '
            'stroke="black" stroke-width="2"/>',
            f'<line x1="{x0:g}" y1="{y0:g}" x2="{right:g}" y2="{y0:g}" stroke="#999" stroke-dasharray="4 3"/>']
    for k in range(width):
        body.append(f'<text x="{xs(k):g}" y="{y0 - unit * 0.25:g}" text-anchor="middle" '
                    f'font-family="serif" font-size="{unit * 0.5:g}">{PRETTY[x[k]]}</text>')
    return _svg(body, right + unit * 0.5, y0 + unit)
