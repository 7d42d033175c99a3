"""Hand-derived tables and brute-force checkers the tests trust.

Everything here is written out independently of the package: segment
sets spelled from the encoding rule by hand, scale-2 bitmaps drawn by
hand, and a small exhaustive search for minimal trail covers.  Tests
compare package output against these, never the other way around.
"""

from functools import lru_cache

# Segment sets of all sixteen digits, spelled out by hand: right rail
# B+C for 1-7, left rail F+E for 9-15, A/G/D for the 4/2/1 bits, and
# the two squares for 0 and 8.
EXPECTED_SEGMENTS = {
    0: {"G", "E", "C", "D"},
    1: {"B", "C", "D"},
    2: {"B", "C", "G"},
    3: {"B", "C", "G", "D"},
    4: {"B", "C", "A"},
    5: {"B", "C", "A", "D"},
    6: {"B", "C", "A", "G"},
    7: {"B", "C", "A", "G", "D"},
    8: {"A", "F", "B", "G"},
    9: {"F", "E", "D"},
    10: {"F", "E", "G"},
    11: {"F", "E", "G", "D"},
    12: {"F", "E", "A"},
    13: {"F", "E", "A", "D"},
    14: {"F", "E", "A", "G"},
    15: {"F", "E", "A", "G", "D"},
}

# Where each segment lies on the digit grid (x in 0..1, y in 0..2).
SEGMENT_COORDS = {
    "A": ((0, 2), (1, 2)),
    "B": ((1, 1), (1, 2)),
    "C": ((1, 0), (1, 1)),
    "D": ((0, 0), (1, 0)),
    "E": ((0, 0), (0, 1)),
    "F": ((0, 1), (0, 2)),
    "G": ((0, 1), (1, 1)),
}

# Scale-2 bitmaps of all sixteen digits, drawn by hand from the
# segment sets above (3 columns x 5 rows, row 0 on top).
DIGIT_ART = {
    0: ["...", "...", "###", "#.#", "###"],
    1: ["..#", "..#", "..#", "..#", "###"],
    2: ["..#", "..#", "###", "..#", "..#"],
    3: ["..#", "..#", "###", "..#", "###"],
    4: ["###", "..#", "..#", "..#", "..#"],
    5: ["###", "..#", "..#", "..#", "###"],
    6: ["###", "..#", "###", "..#", "..#"],
    7: ["###", "..#", "###", "..#", "###"],
    8: ["###", "#.#", "###", "...", "..."],
    9: ["#..", "#..", "#..", "#..", "###"],
    10: ["#..", "#..", "###", "#..", "#.."],
    11: ["#..", "#..", "###", "#..", "###"],
    12: ["###", "#..", "#..", "#..", "#.."],
    13: ["###", "#..", "#..", "#..", "###"],
    14: ["###", "#..", "###", "#..", "#.."],
    15: ["###", "#..", "###", "#..", "###"],
}

# The sixteen syllables in value order.
SYLLABLE_TABLE = (
    "Ho", "Ha", "He", "Hi", "Bo", "Ba", "Be", "Bi",
    "Ko", "Ka", "Ke", "Ki", "Do", "Da", "De", "Di",
)


def digit_art_edges(n):
    """Glyph edges of a digit per the hand tables, as sorted point pairs."""
    return {tuple(sorted(SEGMENT_COORDS[label])) for label in EXPECTED_SEGMENTS[n]}


def min_trail_cover(edges):
    """Fewest trails covering every edge exactly once, by blunt search.

    States are (remaining edge indices, pen position); putting the pen
    down costs one trail and may start at either end of any remaining
    edge.
    """
    edge_list = [tuple(e) for e in edges]
    index_all = frozenset(range(len(edge_list)))

    @lru_cache(maxsize=None)
    def pen_up(remaining):
        if not remaining:
            return 0
        best = None
        for i in remaining:
            p, q = edge_list[i]
            for end in (p, q):
                candidate = 1 + pen_down(remaining - {i}, end)
                if best is None or candidate < best:
                    best = candidate
        return best

    @lru_cache(maxsize=None)
    def pen_down(remaining, position):
        best = pen_up(remaining)  # lift the pen here
        for i in remaining:
            p, q = edge_list[i]
            if p == position:
                best = min(best, pen_down(remaining - {i}, q))
            elif q == position:
                best = min(best, pen_down(remaining - {i}, p))
        return best

    return pen_up(index_all)


def art_dump_lines(data, scale=2, cols=16):
    """Compose expected art-mode dump text from the hand bitmaps."""
    high_low = [(b >> 4, b & 0xF) for b in data]
    lines = []
    for start in range(0, len(high_low), cols):
        group = high_low[start : start + cols]
        label = f"{start:08x}: "
        for row in range(2 * scale + 1):
            glyphs = [
                DIGIT_ART[hi][row] + "." + DIGIT_ART[lo][row] for hi, lo in group
            ]
            prefix = label if row == 0 else " " * len(label)
            lines.append(prefix + ".".join(glyphs))
        lines.append("")
    return lines
