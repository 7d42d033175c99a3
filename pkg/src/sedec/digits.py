"""Digit model for binary-encoding hexadecimal numerals.

The sixteen digits light subsets of a seven-segment display.  Labels
follow the usual convention: A is the top bar, G the middle bar, D the
bottom bar; F/E are the upper/lower halves of the left rail and B/C the
upper/lower halves of the right rail.

The shape of a digit spells its bits: digits 1-7 hang their bars on the
full right rail, digits 9-15 on the full left rail, so the rail itself
reads as the +8 bit.  The top bar adds 4, the middle bar 2, the bottom
bar 1.  Zero and eight break the rule on purpose, since two bare rails
would be ambiguous with each other and with 1: zero is drawn as a square
in the lower half ("bottom zero") and eight as a square in the upper
half ("top zero").
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence


class Segment(str, Enum):
    """One element of a seven-segment display."""

    A = "A"  # top bar
    B = "B"  # right rail, upper half
    C = "C"  # right rail, lower half
    D = "D"  # bottom bar
    E = "E"  # left rail, lower half
    F = "F"  # left rail, upper half
    G = "G"  # middle bar


SegmentSet = frozenset  # frozenset of Segment

LEFT_RAIL = frozenset({Segment.F, Segment.E})
RIGHT_RAIL = frozenset({Segment.B, Segment.C})
BARS = (Segment.A, Segment.G, Segment.D)

# The two exceptional shapes: squares occupying the lower / upper half.
ZERO_SQUARE = frozenset({Segment.G, Segment.E, Segment.C, Segment.D})
EIGHT_SQUARE = frozenset({Segment.A, Segment.F, Segment.B, Segment.G})


class InvalidGlyph(ValueError):
    """A segment set that is not one of the sixteen canonical digits."""


def check_nibble(n: int) -> int:
    if not 0 <= n <= 15:
        raise ValueError(f"nibble out of range: {n!r}")
    return n


def check_byte(b: int) -> int:
    if not 0 <= b <= 255:
        raise ValueError(f"byte out of range: {b!r}")
    return b


def split_byte(b: int) -> tuple[int, int]:
    """Byte value -> (high nibble, low nibble)."""
    check_byte(b)
    return b >> 4, b & 0xF


def join_nibbles(high: int, low: int) -> int:
    return check_nibble(high) * 16 + check_nibble(low)


def encode_nibble(n: int) -> SegmentSet:
    """Canonical segment set for a digit value.

    One full rail (left for values >= 8, right otherwise) plus the bars
    for the +4/+2/+1 bits; 0 and 8 use their square shapes instead.
    """
    check_nibble(n)
    if n == 0:
        return ZERO_SQUARE
    if n == 8:
        return EIGHT_SQUARE
    lit = set(LEFT_RAIL if n >= 8 else RIGHT_RAIL)
    if n & 4:
        lit.add(Segment.A)
    if n & 2:
        lit.add(Segment.G)
    if n & 1:
        lit.add(Segment.D)
    return frozenset(lit)


_DECODE_TABLE = {encode_nibble(n): n for n in range(16)}


def decode_segments(segments: Iterable[Segment]) -> int:
    """Exact inverse of encode_nibble on the sixteen canonical sets."""
    key = frozenset(segments)
    try:
        return _DECODE_TABLE[key]
    except KeyError:
        labels = "".join(sorted(s.value for s in key))
        raise InvalidGlyph(f"not a canonical digit: {{{labels}}}") from None


@dataclass(frozen=True)
class ConstraintReport:
    """Line counts and pass/fail for the three structural constraints."""

    lines: int
    vertical_lines: int
    has_ink: bool  # at least one line
    vertical_ok: bool  # at most one vertical line, or a permitted square
    within_four_lines: bool
    is_square_exception: bool

    @property
    def ok(self) -> bool:
        return self.has_ink and self.vertical_ok and self.within_four_lines


def count_lines(segments: Iterable[Segment]) -> int:
    """Count drawn lines: a full rail merges into one, everything else
    (bars and lone half-rails, e.g. the square sides) counts singly."""
    s = frozenset(segments)
    lines = sum(1 for bar in BARS if bar in s)
    for rail in (LEFT_RAIL, RIGHT_RAIL):
        present = len(s & rail)
        lines += 1 if present == 2 else present
    return lines


def validate_constraints(segments: Iterable[Segment]) -> ConstraintReport:
    """Report on any segment set; never raises.

    Vertical lines are sides with rail ink; two of them are allowed only
    for the zero/eight squares.
    """
    s = frozenset(segments)
    lines = count_lines(s)
    vertical = (1 if s & LEFT_RAIL else 0) + (1 if s & RIGHT_RAIL else 0)
    exception = s in (ZERO_SQUARE, EIGHT_SQUARE)
    return ConstraintReport(
        lines=lines,
        vertical_lines=vertical,
        has_ink=lines >= 1,
        vertical_ok=vertical < 2 or exception,
        within_four_lines=lines <= 4,
        is_square_exception=exception,
    )


_BIT_POSITIONS = (1, 2, 4, 8)


@dataclass(frozen=True)
class AddStep:
    """One merge during sticks addition: two sticks at ``position``
    became one stick at the next position, or the carry when the merge
    leaves the +8 slot."""

    position: int
    carried: bool


@dataclass(frozen=True)
class AddTrace:
    steps: tuple[AddStep, ...]


def _stick_counts(a: int, b: int) -> dict[int, int]:
    return {p: int(bool(a & p)) + int(bool(b & p)) for p in _BIT_POSITIONS}


def sticks_add(a: int, b: int) -> tuple[int, int, AddTrace]:
    """Add two digits by merging stick representations.

    Returns (sum digit, carry, trace).  Positions are processed lowest
    first; a slot never holds more than three sticks, so at most one
    merge happens per position.
    """
    check_nibble(a)
    check_nibble(b)
    counts = _stick_counts(a, b)
    steps = []
    carry = 0
    for pos in _BIT_POSITIONS:
        if counts[pos] >= 2:
            counts[pos] -= 2
            if pos == 8:
                carry = 1
                steps.append(AddStep(position=8, carried=True))
            else:
                counts[pos * 2] += 1
                steps.append(AddStep(position=pos, carried=False))
    total = sum(pos * counts[pos] for pos in _BIT_POSITIONS)
    return total, carry, AddTrace(steps=tuple(steps))


def replay_trace(a: int, b: int, trace: AddTrace) -> tuple[int, int]:
    """Re-run a recorded trace over the operand sticks.

    Raises ValueError when the trace does not apply cleanly or leaves
    sticks unmerged; used to audit that a trace fully explains the
    result it came from.
    """
    check_nibble(a)
    check_nibble(b)
    counts = _stick_counts(a, b)
    carry = 0
    for step in trace.steps:
        if counts.get(step.position, 0) < 2:
            raise ValueError(f"merge at +{step.position} without two sticks")
        counts[step.position] -= 2
        if step.position == 8:
            if not step.carried:
                raise ValueError("a merge at +8 must carry")
            carry += 1
        else:
            if step.carried:
                raise ValueError(f"a merge at +{step.position} cannot carry")
            counts[step.position * 2] += 1
    if carry > 1 or any(c > 1 for c in counts.values()):
        raise ValueError("trace leaves sticks unmerged")
    return sum(pos * counts[pos] for pos in _BIT_POSITIONS), carry


def add_numerals(xs: Sequence[int], ys: Sequence[int]) -> list[int]:
    """Add two base-16 numerals, most-significant digit first.

    Digit positions are summed with sticks_add, chaining carries; the
    result is normalized to no leading zeros (but at least one digit).
    """
    if not xs or not ys:
        raise ValueError("numerals must be non-empty")
    for d in itertools.chain(xs, ys):
        check_nibble(d)
    out = []
    carry = 0
    for a, b in itertools.zip_longest(reversed(xs), reversed(ys), fillvalue=0):
        digit, c1, _ = sticks_add(a, b)
        digit, c2, _ = sticks_add(digit, carry)
        carry = c1 + c2  # a+b+carry <= 31, so never both
        out.append(digit)
    if carry:
        out.append(carry)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    out.reverse()
    return out
