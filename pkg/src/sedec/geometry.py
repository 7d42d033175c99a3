"""Glyph geometry: cell matrices, ligatures, stroke plans, style variants.

A digit is drawn on a unit grid spanning x in [0,1], y in [0,2]: the top
bar sits at y=2, the middle bar at y=1, the bottom bar at y=0, and the
rails at x=0 and x=1.  That grid has 2x3 cell corners; joining two
digits side by side gives the 4x3 = 12-cell matrix a byte glyph needs.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import AbstractSet, Sequence

from .digits import Segment, decode_segments, encode_nibble, split_byte

Point = tuple[int, int]
Edge = tuple[Point, Point]

# Placement of each segment on the digit grid (lower-left endpoint first).
SEGMENT_EDGES: dict[Segment, Edge] = {
    Segment.A: ((0, 2), (1, 2)),
    Segment.B: ((1, 1), (1, 2)),
    Segment.C: ((1, 0), (1, 1)),
    Segment.D: ((0, 0), (1, 0)),
    Segment.E: ((0, 0), (0, 1)),
    Segment.F: ((0, 1), (0, 2)),
    Segment.G: ((0, 1), (1, 1)),
}

_EDGE_TO_SEGMENT = {edge: seg for seg, edge in SEGMENT_EDGES.items()}

#: Horizontal separation between ligature halves, in digit-box widths.
LIGATURE_GAP = 0.25


class EmptyInput(ValueError):
    """Fewer glyphs than a pairwise comparison needs."""


@dataclass(frozen=True)
class StyleProfile:
    """Shape deviations layered over the fixed segment topology.

    Rendering hooks only: corner rounding insets stroke ends and rounds
    the caps, curvature bows the horizontal bars, slope shears the whole
    glyph, prolongation super/subscripts the high/low halves of a
    ligature.  In multi-digit layouts rounding applies to even digit
    positions only, so neighbouring digits alternate sharp and round.
    None of these change which segments are lit.
    """

    corner_rounding: float = 0.0  # endpoint inset radius, box units
    curvature: float = 0.0  # bow height per horizontal bar, box units
    slope: float = 0.0  # shear angle, degrees
    prolongation: float = 0.0  # vertical shift per ligature half, box units
    stroke_width: float = 0.08  # box units

    def __post_init__(self):
        if self.corner_rounding < 0:
            raise ValueError("corner_rounding must be >= 0")
        if self.stroke_width <= 0:
            raise ValueError("stroke_width must be positive")


PLAIN = StyleProfile()


@dataclass(frozen=True)
class CellMatrix:
    """Ink of one digit as edges on the 2x3 grid of cell corners."""

    edges: frozenset  # frozenset of Edge
    style: StyleProfile = PLAIN
    columns: int = 2
    rows: int = 3

    @property
    def cell_count(self) -> int:
        return self.columns * self.rows

    def segments(self) -> frozenset:
        """The segment set this matrix draws."""
        return frozenset(_EDGE_TO_SEGMENT[e] for e in self.edges)


@dataclass(frozen=True)
class LigatureGlyph:
    """A byte glyph: two digit matrices side by side, high half left."""

    byte: int
    high_cells: CellMatrix
    low_cells: CellMatrix
    gap: float = LIGATURE_GAP
    columns: int = 4
    rows: int = 3

    @property
    def cell_count(self) -> int:
        return self.columns * self.rows

    def decode(self) -> int:
        """Read the byte value back off the two halves."""
        high = decode_segments(self.high_cells.segments())
        low = decode_segments(self.low_cells.segments())
        return high * 16 + low


def digit_grid(n: int, style: StyleProfile = PLAIN) -> CellMatrix:
    """Place a digit's segments on the cell grid.

    Styling rides along for renderers; the edge topology is always the
    canonical one for the digit.
    """
    edges = frozenset(SEGMENT_EDGES[seg] for seg in encode_nibble(n))
    return CellMatrix(edges=edges, style=style)


def ligature_grid(b: int, style: StyleProfile = PLAIN) -> LigatureGlyph:
    """Compose the byte glyph from its two digit halves."""
    high, low = split_byte(b)
    return LigatureGlyph(
        byte=b,
        high_cells=digit_grid(high, style),
        low_cells=digit_grid(low, style),
    )


def seven_segment_map(n: int) -> frozenset:
    """The digit's lit segments as display labels (subset of A..G)."""
    return frozenset(seg.value for seg in encode_nibble(n))


def ligature_layout(b: int) -> frozenset:
    """A byte glyph's lit segments tagged by half, for distinctness
    comparisons across the 256 ligatures."""
    high, low = split_byte(b)
    return frozenset(
        [("high", seg.value) for seg in encode_nibble(high)]
        + [("low", seg.value) for seg in encode_nibble(low)]
    )


def distinctness(glyphs: Sequence[AbstractSet]) -> int:
    """Smallest pairwise symmetric difference; 0 means duplicates exist."""
    if len(glyphs) < 2:
        raise EmptyInput("need at least two glyphs to compare")
    sets = [frozenset(g) for g in glyphs]
    best = None
    for i, s in enumerate(sets):
        for t in sets[i + 1 :]:
            d = len(s ^ t)
            if best is None or d < best:
                best = d
                if best == 0:
                    return 0
    return best


@dataclass(frozen=True)
class StrokePlan:
    """Ordered pen strokes, each an ordered run of grid points."""

    strokes: tuple  # tuple of tuple[Point, ...]


def _corner_key(p: Point):
    # Topmost first, then leftmost: the preferred place to set the pen down.
    return (-p[1], p[0])


_DIRECTION_RANK = {(0, -1): 0, (1, 0): 1, (-1, 0): 2, (0, 1): 3}


def _direction_rank(p: Point, q: Point) -> int:
    dx = (q[0] > p[0]) - (q[0] < p[0])
    dy = (q[1] > p[1]) - (q[1] < p[1])
    return _DIRECTION_RANK.get((dx, dy), 4)


def _euler_trail(start: Point, adjacency, used: list) -> list:
    """Hierholzer over a multigraph; returns [(vertex, edge_id_in), ...]
    starting with (start, None).  Assumes 0 or 2 odd vertices remain in
    the component once virtual edges are in place."""
    cursor: dict[Point, int] = defaultdict(int)
    stack: list[tuple[Point, int | None]] = [(start, None)]
    out = []
    while stack:
        vertex, _ = stack[-1]
        options = adjacency[vertex]
        i = cursor[vertex]
        while i < len(options) and used[options[i][1]]:
            i += 1
        cursor[vertex] = i
        if i < len(options):
            neighbour, edge_id = options[i]
            used[edge_id] = True
            stack.append((neighbour, edge_id))
        else:
            out.append(stack.pop())
    out.reverse()
    return out


def _trail_cover(edges: Sequence[Edge]) -> list:
    """Split a connected edge set into the fewest trails.

    With 2k odd-degree corners, k-1 virtual edges pair up the middle odd
    corners, one Eulerian trail covers everything, and cutting it at the
    virtual edges leaves exactly max(1, k) real trails.
    """
    edge_list = list(edges)
    degree: dict[Point, int] = defaultdict(int)
    for p, q in edge_list:
        degree[p] += 1
        degree[q] += 1
    odd = sorted((v for v, d in degree.items() if d % 2), key=_corner_key)

    virtual_from = len(edge_list)
    augmented = edge_list + [
        (odd[i], odd[i + 1]) for i in range(1, len(odd) - 1, 2)
    ]
    adjacency: dict[Point, list] = defaultdict(list)
    for edge_id, (p, q) in enumerate(augmented):
        adjacency[p].append((q, edge_id))
        adjacency[q].append((p, edge_id))
    for vertex, options in adjacency.items():
        options.sort(
            key=lambda item: (
                item[1] >= virtual_from,
                _direction_rank(vertex, item[0]),
                _corner_key(item[0]),
                item[1],
            )
        )

    start = odd[0] if odd else min(adjacency, key=_corner_key)
    walk = _euler_trail(start, adjacency, used=[False] * len(augmented))

    strokes = []
    current = [walk[0][0]]
    for vertex, edge_id in walk[1:]:
        if edge_id >= virtual_from:
            strokes.append(tuple(current))
            current = [vertex]
        else:
            current.append(vertex)
    strokes.append(tuple(current))
    return [s for s in strokes if len(s) > 1]


def stroke_plan(n: int) -> StrokePlan:
    """Decompose a digit's segments into the fewest pen strokes.

    A connected segment graph with 2k odd-degree corners needs
    max(1, k) open/closed trails.  Strokes start at the topmost-leftmost
    available corner and prefer to run downward.
    """
    edges = [SEGMENT_EDGES[seg] for seg in encode_nibble(n)]

    # Group edges into connected components (canonical digits are all
    # connected, but the decomposition does not rely on it).
    adjacency: dict[Point, list] = defaultdict(list)
    for p, q in edges:
        adjacency[p].append(q)
        adjacency[q].append(p)
    component_of: dict[Point, int] = {}
    for root in adjacency:
        if root in component_of:
            continue
        label = len(set(component_of.values()))
        frontier = [root]
        while frontier:
            v = frontier.pop()
            if v in component_of:
                continue
            component_of[v] = label
            frontier.extend(adjacency[v])
    groups: dict[int, list] = defaultdict(list)
    for edge in edges:
        groups[component_of[edge[0]]].append(edge)

    strokes = []
    ordered = sorted(
        groups.values(), key=lambda g: min(_corner_key(p) for e in g for p in e)
    )
    for group in ordered:
        strokes.extend(_trail_cover(group))
    return StrokePlan(strokes=tuple(strokes))


def stroke_edges(plan: StrokePlan) -> list:
    """Flatten a plan back to the edges it draws (order preserved)."""
    drawn = []
    for stroke in plan.strokes:
        for p, q in zip(stroke, stroke[1:]):
            drawn.append((q, p) if (q, p) in _EDGE_TO_SEGMENT else (p, q))
    return drawn
