"""Bibi-binary syllable names for digits and bytes.

Each hexadecimal digit gets a two-letter syllable (Ho, Ha, He, Hi, Bo,
... Di); a byte name joins the high and low syllables into one word
with a single leading capital, e.g. 0x89 -> "Koka".
"""

from __future__ import annotations

from dataclasses import dataclass

from .digits import check_byte, check_nibble, split_byte

SYLLABLES = (
    "Ho", "Ha", "He", "Hi",
    "Bo", "Ba", "Be", "Bi",
    "Ko", "Ka", "Ke", "Ki",
    "Do", "Da", "De", "Di",
)

_VALUE_OF = {syllable.lower(): value for value, syllable in enumerate(SYLLABLES)}


class ParseError(ValueError):
    """Input text that is not syllable-name material; carries the offset
    of the first offending character."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


def digit_syllable(n: int) -> str:
    """Syllable for one digit, e.g. 5 -> "Ba"."""
    check_nibble(n)
    return SYLLABLES[n]


@dataclass(frozen=True)
class ByteName:
    """Two-syllable name of a byte value."""

    high: str
    low: str

    @property
    def text(self) -> str:
        return (self.high + self.low).capitalize()


def byte_name(b: int) -> ByteName:
    """Name a byte: syllable of the high nibble then of the low one."""
    check_byte(b)
    high, low = split_byte(b)
    return ByteName(high=SYLLABLES[high], low=SYLLABLES[low])


def parse_name(text: str) -> list[int]:
    """Parse syllable text back to nibble values, case-insensitively.

    Greedy two-character scan; whitespace separates words.  Raises
    ParseError pointing at the first residue that is not a syllable.
    """
    values = []
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        pair = text[i : i + 2]
        value = _VALUE_OF.get(pair.lower())
        if value is None:
            raise ParseError(f"not a syllable: {pair!r}", offset=i)
        values.append(value)
        i += 2
    return values
