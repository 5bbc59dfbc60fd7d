"""Deterministic SVG rendering of curve families.

Coordinates are serialized with four decimal places (rendering only; the
exact values never feed back into computation), the viewBox comes from the
exact bounding box with a 5% margin, and elements are emitted in family
order, so identical inputs produce byte-identical files.
"""

from __future__ import annotations

from fractions import Fraction

from .geom import CurveFamily


def _fmt(v: Fraction) -> str:
    scaled = round(Fraction(v) * 10000)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    whole, frac = divmod(scaled, 10000)
    text = f"{sign}{whole}.{frac:04d}".rstrip("0").rstrip(".")
    return text or "0"


def render_family(fam: CurveFamily, highlight=(), skeleton=None, bracket=None) -> str:
    """Render a family as SVG text.

    ``highlight`` lists curve ids drawn in the highlight stroke; ``skeleton``
    is an optional {"u","v","supports"} dict and ``bracket`` an optional
    {"P","S"} dict; their members get dedicated stroke classes.
    """
    xmin, ymin, xmax, ymax = fam.bounding_box()
    ymin = min(ymin, Fraction(0))
    width = xmax - xmin
    height = ymax - ymin
    mx = width / 20 if width else Fraction(1)
    my = height / 20 if height else Fraction(1)

    classes = {}
    for cid in highlight:
        classes[cid] = "highlight"
    if skeleton:
        classes[skeleton["u"]] = "anchor"
        classes[skeleton["v"]] = "anchor"
        for s in skeleton["supports"]:
            classes[s] = "support"
    if bracket:
        for p in bracket["P"]:
            classes[p] = "anchor"
        for s in bracket["S"]:
            classes[s] = "support"

    # Flip y so the halfplane opens upward on screen.
    def tx(x):
        return _fmt(x)

    def ty(y):
        return _fmt(ymax + my - y)

    view = (f"0 0 {_fmt(width + 2 * mx)} {_fmt(height + 2 * my)}")
    shift = xmin - mx
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{view}">',
        '<style>polyline{fill:none;stroke:#222;stroke-width:0.06}'
        '.highlight{stroke:#c22}.support{stroke:#36c}.anchor{stroke:#d60}'
        '.baseline{stroke:#888;stroke-width:0.03}</style>',
        f'<line class="baseline" x1="{_fmt(Fraction(0))}" y1="{ty(Fraction(0))}"'
        f' x2="{_fmt(width + 2 * mx)}" y2="{ty(Fraction(0))}"/>',
    ]
    for c in fam:
        pts = " ".join(f"{tx(x - shift)},{ty(y)}" for x, y in c.vertices)
        cls = classes.get(c.id)
        attr = f' class="{cls}"' if cls else ""
        lines.append(f'<polyline{attr} id="{c.id}" points="{pts}"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
