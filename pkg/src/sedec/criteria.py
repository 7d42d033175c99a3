"""Quality criteria for hexadecimal symbol sets.

Nine boolean criteria grade a symbol set: MNE mnemonic shapes, STR
writable in at most two strokes, LIG combinable into base-256
ligatures, AMB low ambiguity when drawn quickly, DSP displayable on a
seven-segment element, BIN binary-encoded shapes, ZERO/ONE preservation
of the familiar 0 and 1, and TRN easy translation to and from binary.
The shipped comparison table grades nine historic and current symbol
sets; the machine-checkable flags for this package's own set can also
be recomputed straight from the glyph model.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Mapping

from .digits import decode_segments, encode_nibble
from .geometry import (
    distinctness,
    ligature_grid,
    ligature_layout,
    seven_segment_map,
    stroke_plan,
)

CRITERIA = ("MNE", "STR", "LIG", "AMB", "DSP", "BIN", "ZERO", "ONE", "TRN")

#: Table row describing the symbol set this package implements.
PROPOSED_SET = "Vītolīņš and Cumings 2017"

#: Criteria that can be recomputed from the glyph model; the rest are
#: judgement calls and stay manual fixture data.
COMPUTED_CRITERIA = ("STR", "LIG", "DSP", "BIN")

_SEVEN_LABELS = frozenset("ABCDEFG")


class ModelContradiction(Exception):
    """A recomputed flag came out false where the table asserts true."""


@dataclass(frozen=True)
class SymbolSetProfile:
    """Nine quality flags plus per-flag provenance (manual or computed)."""

    name: str
    flags: Mapping[str, bool]
    provenance: Mapping[str, str]

    def __post_init__(self):
        if set(self.flags) != set(CRITERIA):
            raise ValueError(f"profile must carry exactly the criteria {CRITERIA}")
        if set(self.provenance) != set(CRITERIA):
            raise ValueError("provenance must cover every criterion")
        bad = {v for v in self.provenance.values()} - {"manual", "computed"}
        if bad:
            raise ValueError(f"unknown provenance values: {bad}")


def score(profile: SymbolSetProfile) -> int:
    """Number of satisfied criteria, 0..9."""
    return sum(1 for value in profile.flags.values() if value)


@lru_cache(maxsize=1)
def _load_rows() -> tuple:
    raw = resources.files("sedec.data").joinpath("table1.json").read_text("utf-8")
    rows = json.loads(raw)
    for row in rows:
        if sum(row["flags"].values()) != row["score"]:
            raise ValueError(f"fixture score mismatch for {row['name']!r}")
    return tuple(rows)


def table1() -> list[SymbolSetProfile]:
    """The stored comparison table, one profile per symbol set."""
    manual = {key: "manual" for key in CRITERIA}
    return [
        SymbolSetProfile(name=row["name"], flags=dict(row["flags"]), provenance=manual)
        for row in _load_rows()
    ]


def _compute_model_flags() -> dict[str, bool]:
    return {
        "STR": all(len(stroke_plan(n).strokes) <= 2 for n in range(16)),
        "DSP": all(seven_segment_map(n) <= _SEVEN_LABELS for n in range(16)),
        "BIN": all(decode_segments(encode_nibble(n)) == n for n in range(16)),
        "LIG": (
            all(ligature_grid(b).cell_count == 12 for b in range(256))
            and distinctness([ligature_layout(b) for b in range(256)]) >= 1
        ),
    }


def _merge_with_manual(
    computed: Mapping[str, bool], manual_row: SymbolSetProfile
) -> SymbolSetProfile:
    flags = {}
    provenance = {}
    for key in CRITERIA:
        if key in computed:
            if manual_row.flags[key] and not computed[key]:
                raise ModelContradiction(
                    f"{key} computed false but the table asserts true"
                )
            flags[key] = computed[key]
            provenance[key] = "computed"
        else:
            flags[key] = manual_row.flags[key]
            provenance[key] = "manual"
    return SymbolSetProfile(name=manual_row.name, flags=flags, provenance=provenance)


def auto_evaluate_proposed() -> SymbolSetProfile:
    """Re-grade this package's symbol set from the glyph model.

    STR, DSP, BIN and LIG are recomputed; the judgement criteria keep
    their stored values.  Raises ModelContradiction if a recomputed flag
    falls short of the stored table.
    """
    manual_row = next(row for row in table1() if row.name == PROPOSED_SET)
    return _merge_with_manual(_compute_model_flags(), manual_row)
