"""Chamber tilings of the Euclidean triangle models, with SVG and JSON output."""

from __future__ import annotations

import json
from itertools import combinations
from xml.sax.saxutils import escape

from coxref.qsqrt3 import format_scalar
from coxref.spaces import planar


def tile(model, radius):
    """``[(g, (v1, v2, v3)), ...]`` for every g in the ball, with exact closed-chamber vertices."""
    return [(g, model.chamber(g)) for g in model.group.ball(radius)]


def overlapping_pairs(tiles):
    """Index pairs whose open chambers intersect (empty for a genuine tiling)."""
    return [(i, j) for (i, a), (j, b) in combinations(enumerate(tiles), 2)
            if not planar.interiors_disjoint(a[1], b[1])]


def tiling_json(model, radius, tiles=None):
    tiles = tile(model, radius) if tiles is None else tiles
    return {
        "type": model.kind,
        "radius": radius,
        "count": len(tiles),
        "generators": list(model.generator_names),
        "chambers": [
            {
                "word": model.format_word(g),
                "length": len(g),
                "vertices": [[format_scalar(x), format_scalar(y)] for x, y in tri],
            }
            for g, tri in tiles
        ],
    }


def dumps_json(data):
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


_PALETTE = ("#f4f1de", "#e07a5f", "#81b29a", "#f2cc8f", "#3d405b", "#a8dadc")


def tiling_svg(model, radius, tiles=None, size=640, margin=20):
    tiles = tile(model, radius) if tiles is None else tiles
    pts = [(float(x), float(y)) for _, tri in tiles for x, y in tri]
    xmin = min(p[0] for p in pts)
    xmax = max(p[0] for p in pts)
    ymin = min(p[1] for p in pts)
    ymax = max(p[1] for p in pts)
    span = max(xmax - xmin, ymax - ymin) or 1.0
    k = (size - 2 * margin) / span

    def tx(x, y):
        # SVG y grows downwards
        return margin + (x - xmin) * k, size - margin - (y - ymin) * k

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<title>{escape(model.name)} chambers, radius {radius}</title>',
    ]
    font = max(4.0, min(12.0, k / 8))
    for g, tri in tiles:
        label = model.format_word(g) or "1"
        coords = [tx(float(x), float(y)) for x, y in tri]
        points = " ".join(f"{x:.3f},{y:.3f}" for x, y in coords)
        fill = _PALETTE[len(g) % len(_PALETTE)]
        cx = sum(c[0] for c in coords) / 3
        cy = sum(c[1] for c in coords) / 3
        lines.append(f'<g><polygon points="{points}" fill="{fill}" stroke="#222" stroke-width="0.5"/>'
                     f'<text x="{cx:.3f}" y="{cy:.3f}" font-size="{font:.1f}" text-anchor="middle">'
                     f'{escape(label)}</text></g>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
