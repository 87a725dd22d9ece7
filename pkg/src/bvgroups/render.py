"""SVG drawing of braided diagrams.

Each slice gets a fixed-height band; wire ``k`` of a band sits at
``x = MARGIN + (k - 1) * GAP``.  At a crossing the under-strand is broken
around the midpoint.  Output is deterministic (no floats beyond 2 decimals).
"""

from __future__ import annotations

from typing import List, Optional, Union
from xml.sax.saxutils import escape

from .diagrams import Cross, Diagram, Merge, Split, White, from_element
from .elements import Element

GAP = 30.0
BAND = 40.0
MARGIN = 20.0
RADIUS = 6.0
BREAK = 0.18  # fraction of a crossing segment left out on the under-strand


def _x(k: int) -> float:
    return MARGIN + (k - 1) * GAP


def _f(v: float) -> str:
    return f"{v:.2f}".rstrip("0").rstrip(".")


def _line(x0, y0, x1, y1, cls="wire") -> str:
    return f'<line class="{cls}" x1="{_f(x0)}" y1="{_f(y0)}" x2="{_f(x1)}" y2="{_f(y1)}"/>'


def _band(d: Diagram, s, width: int, y0: float) -> List[str]:
    n = d.n
    y1 = y0 + BAND
    out = []
    if isinstance(s, Split):
        for k in range(1, width + 1):
            if k < s.p:
                out.append(_line(_x(k), y0, _x(k), y1))
            elif k > s.p:
                out.append(_line(_x(k), y0, _x(k + n - 1), y1))
            else:
                for j in range(n):
                    out.append(_line(_x(k), y0 + BAND / 2, _x(k + j), y1))
                out.append(_line(_x(k), y0, _x(k), y0 + BAND / 2))
                out.append(f'<circle class="split" cx="{_f(_x(k))}" cy="{_f(y0 + BAND / 2)}" r="3"/>')
    elif isinstance(s, Merge):
        for k in range(1, width + 1):
            if k < s.p:
                out.append(_line(_x(k), y0, _x(k), y1))
            elif k >= s.p + n:
                out.append(_line(_x(k), y0, _x(k - n + 1), y1))
            else:
                out.append(_line(_x(k), y0, _x(s.p), y0 + BAND / 2))
        out.append(_line(_x(s.p), y0 + BAND / 2, _x(s.p), y1))
        out.append(f'<circle class="merge" cx="{_f(_x(s.p))}" cy="{_f(y0 + BAND / 2)}" r="3"/>')
    elif isinstance(s, White):
        from .grammar import format_label

        for k in range(1, width + 1):
            out.append(_line(_x(k), y0, _x(k), y1))
        cx, cy = _x(s.p), y0 + BAND / 2
        out.append(f'<circle class="white" cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(RADIUS)}"/>')
        out.append(f'<text x="{_f(cx + RADIUS + 3)}" y="{_f(cy + 4)}">{escape(format_label(s.label))}</text>')
    elif isinstance(s, Cross):
        for k in range(1, width + 1):
            if k not in (s.p, s.p + 1):
                out.append(_line(_x(k), y0, _x(k), y1))
        a, b = _x(s.p), _x(s.p + 1)
        over = [(a, y0, b, y1)]
        under = (b, y0, a, y1)
        if s.sign < 0:
            over, under = [(b, y0, a, y1)], (a, y0, b, y1)
        out.append(_line(*over[0]))
        ux0, uy0, ux1, uy1 = under
        t0, t1 = 0.5 - BREAK, 0.5 + BREAK
        out.append(_line(ux0, uy0, ux0 + (ux1 - ux0) * t0, uy0 + (uy1 - uy0) * t0))
        out.append(_line(ux0 + (ux1 - ux0) * t1, uy0 + (uy1 - uy0) * t1, ux1, uy1))
    return out


def render_svg(obj: Union[Diagram, Element], title: Optional[str] = None) -> str:
    d = from_element(obj) if isinstance(obj, Element) else obj
    widths = d.widths()
    w = 2 * MARGIN + (max(widths) - 1) * GAP + 60
    h = 2 * MARGIN + max(1, len(d.slices)) * BAND
    body = []
    y = MARGIN
    for s, width in zip(d.slices, widths):
        body.extend(_band(d, s, width, y))
        y += BAND
    if not d.slices:
        for k in range(1, d.sources + 1):
            body.append(_line(_x(k), MARGIN, _x(k), MARGIN + BAND))
    head = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_f(w)}" height="{_f(h)}" '
        f'viewBox="0 0 {_f(w)} {_f(h)}">',
        "<style>.wire{stroke:#222;stroke-width:2;fill:none}.white{fill:#fff;stroke:#222;stroke-width:1.5}"
        ".split,.merge{fill:#222}text{font:11px sans-serif}</style>",
    ]
    if title:
        head.append(f"<title>{escape(title)}</title>")
    return "\n".join(head + body + ["</svg>"]) + "\n"
