"""Deterministic text and SVG rendering of diagrams.

Conventions: source at the bottom, composition bottom-to-top, whiskering
left-to-right.  Text output is a fixed-width grid; diagrams of dimension
3 and up render as filmstrips of their slices.  Colors carry no meaning;
vertices are labeled dots.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from . import diagram as dg
from .diagram import Diagram, SWAP


class UnsupportedDimension(Exception):
    pass


def render(d: Diagram, sig, fmt: str = "txt", slices: bool = False) -> bytes:
    """Render one diagram; filmstrips for dim >= 3 (or when slices=True)."""
    if d.dim > 4:
        raise UnsupportedDimension("relation-side dimension 5 is not renderable")
    if fmt == "txt":
        return render_txt(d, sig, slices=slices).encode("utf-8")
    if fmt == "svg":
        return render_svg(d, sig, slices=slices).encode("utf-8")
    raise ValueError(f"unknown format {fmt!r}")


# -- text --------------------------------------------------------------------


def path_label(d: Diagram) -> str:
    """One-line form of a 0- or 1-diagram."""
    if d.dim == 0:
        return f"({d.base})"
    if not d.atoms:
        return f"({d.base or d.source.base})" if d.dim == 0 else f"(id_{d.source.base})"
    return " ".join(a.gen for a in d.atoms)


def atom_label(a) -> str:
    if a.gen == SWAP:
        return f"~swap @ {a.pos[0]}"
    return f"{a.gen} @ {','.join(map(str, a.pos))}"


def render_txt(d: Diagram, sig, slices: bool = False) -> str:
    if d.dim == 0:
        return d.base + "\n"
    if d.dim == 1:
        return path_label(d) + "\n"
    if d.dim == 2:
        return _render_txt_2d(d, sig)
    frames = dg.slices(d, sig)
    out = []
    for i, frame in enumerate(frames):
        out.append(f"=== slice {i} ===")
        out.append(render_txt(frame, sig, slices=slices).rstrip("\n"))
        if i < len(d.atoms):
            out.append(f"--- {atom_label(d.atoms[i])} -->")
    return "\n".join(out) + "\n"


def _render_txt_2d(d: Diagram, sig) -> str:
    """Slice rows top-to-bottom with event markers between (source last)."""
    rows = []
    level_slices = dg.slices(d, sig)
    for i in range(len(level_slices) - 1, -1, -1):
        rows.append("| " + path_label(level_slices[i]))
        if i > 0:
            rows.append("* " + atom_label(d.atoms[i - 1]))
    return "\n".join(rows) + "\n"


# -- svg ---------------------------------------------------------------------

_CELL_W = 40
_CELL_H = 40
_PAD = 20


def render_svg(d: Diagram, sig, slices: bool = False) -> str:
    if d.dim >= 3:
        frames = dg.slices(d, sig)
        parts = [render_svg_body(f, sig, offset=i * 1000) for i, f in enumerate(frames)]
        body = "\n".join(parts)
        width = 1000 * len(frames)
        return _svg_doc(body, width, 400)
    return _svg_doc(render_svg_body(d, sig), 600, 400)


def _svg_doc(body: str, width: int, height: int) -> str:
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">\n{body}\n</svg>\n'
    )


def render_svg_body(d: Diagram, sig, offset: int = 0) -> str:
    """Strands as polylines bottom-to-top, generator vertices as labeled dots."""
    if d.dim == 0:
        return f'<text x="{offset + _PAD}" y="{_PAD}" font-size="14">{escape(d.base)}</text>'
    if d.dim == 1:
        labels = " ".join(a.gen for a in d.atoms) or f"id_{d.source.base}"
        return f'<text x="{offset + _PAD}" y="{_PAD}" font-size="14">{escape(labels)}</text>'
    rows = dg.slices(d, sig)
    n = len(rows)
    lines = []
    texts = []

    def x(strand: int) -> int:
        return offset + _PAD + strand * _CELL_W + _CELL_W // 2

    def y(level: int) -> int:
        # level 0 (source) at the bottom
        return _PAD + (n - level) * _CELL_H

    for i, a in enumerate(d.atoms):
        y_mid = (y(i) + y(i + 1)) // 2
        lo, hi = rows[i], rows[i + 1]
        if a.gen == SWAP:
            h = a.pos[0]
            in_w = out_w = 2
            pos = h
        else:
            pos = a.pos[0]
            in_w = len(sig.cell_source(a.gen).atoms)
            out_w = len(sig.cell_target(a.gen).atoms)
        cx = x(pos) + (max(in_w, out_w) - 1) * _CELL_W // 2
        # strands below the event
        for s in range(len(lo.atoms)):
            if s < pos:
                lines.append((x(s), y(i), x(s), y(i + 1)))
            elif s >= pos + in_w:
                lines.append((x(s), y(i), x(s - in_w + out_w), y(i + 1)))
            else:
                lines.append((x(s), y(i), cx, y_mid))
        for s in range(pos, pos + out_w):
            lines.append((cx, y_mid, x(s), y(i + 1)))
        label = "X" if a.gen == SWAP else a.gen
        texts.append(
            f'<circle cx="{cx}" cy="{y_mid}" r="4" fill="black"/>'
            f'<text x="{cx + 6}" y="{y_mid - 6}" font-size="12">{escape(label)}</text>'
        )
    body = [
        f'<line x1="{a}" y1="{b}" x2="{c}" y2="{e}" stroke="black" stroke-width="1"/>'
        for a, b, c, e in lines
    ]
    src_label = escape(path_label(rows[0]))
    tgt_label = escape(path_label(rows[-1]))
    texts.append(f'<text x="{offset + _PAD}" y="{y(0) + 16}" font-size="11">{src_label}</text>')
    texts.append(f'<text x="{offset + _PAD}" y="{y(n) - 8}" font-size="11">{tgt_label}</text>')
    return "\n".join(body + texts)
