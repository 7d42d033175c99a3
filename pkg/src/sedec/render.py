"""Deterministic rendering: text-art rasters and SVG documents.

Text art uses '#' for ink and '.' for blank so golden files stay font-
and terminal-independent.  SVG output is byte-identical for identical
inputs: segments are emitted in label order A..G, the high half of a
ligature before the low half, and every number is formatted to three
decimals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

from .digits import Segment
from .geometry import (
    PLAIN,
    CellMatrix,
    LigatureGlyph,
    StyleProfile,
    _EDGE_TO_SEGMENT,
    digit_grid,
    ligature_grid,
)

INK = "#"
BLANK = "."

Glyph = Union[CellMatrix, LigatureGlyph]
SvgDoc = str


class ScaleTooSmall(ValueError):
    """Below scale 2 the middle bar and the rails collide."""


@dataclass(frozen=True)
class Raster:
    """Monochrome cell grid; ink cells are (row, col) pairs."""

    width: int
    height: int
    cells: frozenset


def gap_cells(scale: int) -> int:
    """Blank columns realizing the quarter-box ligature gap at integer
    resolution; never less than one."""
    return max(1, scale // 4)


def _paint(cells: set, edges, scale: int, col0: int = 0) -> None:
    # Grid point (x, y) lands on column x*scale, row (2-y)*scale.
    for (x0, y0), (x1, y1) in edges:
        c0, c1 = sorted((x0 * scale + col0, x1 * scale + col0))
        r0, r1 = sorted(((2 - y0) * scale, (2 - y1) * scale))
        for row in range(r0, r1 + 1):
            for col in range(c0, c1 + 1):
                cells.add((row, col))


def rasterize(glyph: Glyph, scale: int) -> Raster:
    """Draw a digit or ligature glyph as straight runs of ink cells."""
    if scale < 2:
        raise ScaleTooSmall(f"scale must be >= 2, got {scale}")
    cells: set = set()
    if isinstance(glyph, LigatureGlyph):
        _paint(cells, glyph.high_cells.edges, scale)
        _paint(cells, glyph.low_cells.edges, scale, col0=scale + 1 + gap_cells(scale))
        width = 2 * scale + 2 + gap_cells(scale)
    else:
        _paint(cells, glyph.edges, scale)
        width = scale + 1
    return Raster(width=width, height=2 * scale + 1, cells=frozenset(cells))


def to_text_art(raster: Raster) -> list[str]:
    """One string per row, '#' for ink, '.' for blank."""
    return [
        "".join(
            INK if (row, col) in raster.cells else BLANK for col in range(raster.width)
        )
        for row in range(raster.height)
    ]


def parse_text_art(lines: Sequence[str]) -> Raster:
    """Inverse of to_text_art."""
    height = len(lines)
    width = len(lines[0]) if lines else 0
    cells = set()
    for row, line in enumerate(lines):
        if len(line) != width:
            raise ValueError(f"ragged text art at row {row}")
        for col, ch in enumerate(line):
            if ch == INK:
                cells.add((row, col))
            elif ch != BLANK:
                raise ValueError(f"unexpected character {ch!r} at row {row}")
    return Raster(width=width, height=height, cells=frozenset(cells))


def hstack(rasters: Sequence[Raster], gap: int = 1) -> Raster:
    """Join equal-height rasters left to right with blank columns."""
    if not rasters:
        return Raster(width=0, height=0, cells=frozenset())
    height = rasters[0].height
    if any(r.height != height for r in rasters):
        raise ValueError("rasters must share a height")
    cells = set()
    col0 = 0
    for raster in rasters:
        cells.update((row, col + col0) for row, col in raster.cells)
        col0 += raster.width + gap
    return Raster(width=col0 - gap, height=height, cells=frozenset(cells))


# --- SVG -----------------------------------------------------------------

_UNIT = 40.0  # pixels per box unit
_MARGIN = 20.0


def _fmt(value: float) -> str:
    out = f"{value:.3f}"
    return "0.000" if out == "-0.000" else out


def _segment_element(
    seg: Segment,
    edge,
    style: StyleProfile,
    x_shift: float,
    y_shift: float,
    rounded: bool,
) -> str:
    (x0, y0), (x1, y1) = edge
    inset = min(style.corner_rounding, 0.45) if rounded else 0.0
    horizontal = y0 == y1
    if horizontal:
        x0, x1 = x0 + inset, x1 - inset
    else:
        y0, y1 = y0 + inset, y1 - inset

    def px(x: float) -> str:
        return _fmt(_MARGIN + (x + x_shift) * _UNIT)

    def py(y: float) -> str:
        return _fmt(_MARGIN + (2.0 - y + y_shift) * _UNIT)

    cap = "round" if rounded and style.corner_rounding > 0 else "square"
    attrs = (
        f'stroke="#000" stroke-width="{_fmt(style.stroke_width * _UNIT)}" '
        f'stroke-linecap="{cap}" fill="none"'
    )
    if horizontal and style.curvature != 0.0:
        mx = (x0 + x1) / 2.0
        return (
            f'<path class="seg-{seg.value}" d="M {px(x0)} {py(y0)} '
            f'Q {px(mx)} {py(y0 + style.curvature)} {px(x1)} {py(y1)}" {attrs}/>'
        )
    return (
        f'<line class="seg-{seg.value}" x1="{px(x0)}" y1="{py(y0)}" '
        f'x2="{px(x1)}" y2="{py(y1)}" {attrs}/>'
    )


def _glyph_elements(glyph: Glyph, style: StyleProfile) -> list[str]:
    # Ligatures: high half first, superscripted; low half subscripted.
    # Corner rounding alternates by digit position, so only even
    # positions (the high half, or a lone digit) are rounded.
    if isinstance(glyph, LigatureGlyph):
        halves = [
            (glyph.high_cells, 0.0, -style.prolongation, True),
            (glyph.low_cells, 1.0 + glyph.gap, style.prolongation, False),
        ]
    else:
        halves = [(glyph, 0.0, 0.0, True)]
    elements = []
    for matrix, x_shift, y_shift, rounded in halves:
        ordered = sorted(matrix.edges, key=lambda e: _EDGE_TO_SEGMENT[e].value)
        for edge in ordered:
            elements.append(
                _segment_element(
                    _EDGE_TO_SEGMENT[edge], edge, style, x_shift, y_shift, rounded
                )
            )
    return elements


def _box_units(glyph: Glyph) -> float:
    return 2.0 + glyph.gap if isinstance(glyph, LigatureGlyph) else 1.0


def _svg_document(body: list[str], width: float, height: float) -> SvgDoc:
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">'
    )
    return "\n".join([head, *body, "</svg>"]) + "\n"


def to_svg(glyph: Glyph, style: StyleProfile = PLAIN) -> SvgDoc:
    """Standalone SVG for one glyph, one line/path element per segment."""
    shear = math.tan(math.radians(style.slope))
    slack = abs(shear) * 2.0 * _UNIT
    width = 2 * _MARGIN + _box_units(glyph) * _UNIT + slack
    height = 2 * _MARGIN + 2.0 * _UNIT + 2 * abs(style.prolongation) * _UNIT
    transform = ""
    if style.slope != 0.0:
        shift = _fmt(slack if shear > 0 else 0.0)
        transform = f' transform="translate({shift} 0.000) skewX({_fmt(-style.slope)})"'
    body = [f"<g{transform}>", *_glyph_elements(glyph, style), "</g>"]
    return _svg_document(body, width, height)


def glyph_sheet(style: StyleProfile = PLAIN) -> SvgDoc:
    """One document with the 16 digits in a row and the 256 ligatures in
    a 16x16 table (row = high nibble, column = low nibble)."""
    digit_pitch = 2.0 * _UNIT
    ligature_pitch = 3.0 * _UNIT
    row_pitch = 3.0 * _UNIT
    width = 2 * _MARGIN + 16 * ligature_pitch
    height = 2 * _MARGIN + row_pitch + 16 * row_pitch
    body = []
    for n in range(16):
        x = _MARGIN + n * digit_pitch
        body.append(f'<g class="glyph" id="digit-{n:x}" transform="translate({_fmt(x)} {_fmt(_MARGIN)})">')
        body.extend(_glyph_elements(digit_grid(n, style), style))
        body.append("</g>")
    for b in range(256):
        row, col = b >> 4, b & 0xF
        x = _MARGIN + col * ligature_pitch
        y = _MARGIN + row_pitch + row * row_pitch
        body.append(f'<g class="glyph" id="byte-{b:02x}" transform="translate({_fmt(x)} {_fmt(y)})">')
        body.extend(_glyph_elements(ligature_grid(b, style), style))
        body.append("</g>")
    return _svg_document(body, width, height)
