"""Workbench for binary-encoding hexadecimal and base-256 numerals."""

from .digits import (
    AddStep,
    AddTrace,
    ConstraintReport,
    InvalidGlyph,
    Segment,
    add_numerals,
    decode_segments,
    encode_nibble,
    replay_trace,
    sticks_add,
    validate_constraints,
)
from .geometry import (
    CellMatrix,
    EmptyInput,
    LigatureGlyph,
    StrokePlan,
    StyleProfile,
    digit_grid,
    distinctness,
    ligature_grid,
    seven_segment_map,
    stroke_plan,
)
from .naming import ByteName, ParseError, byte_name, digit_syllable, parse_name
from .render import (
    Raster,
    ScaleTooSmall,
    glyph_sheet,
    parse_text_art,
    rasterize,
    to_svg,
    to_text_art,
)
from .criteria import (
    ModelContradiction,
    SymbolSetProfile,
    auto_evaluate_proposed,
    score,
    table1,
)

__version__ = "0.1.0"

__all__ = [
    "AddStep",
    "AddTrace",
    "ByteName",
    "CellMatrix",
    "ConstraintReport",
    "EmptyInput",
    "InvalidGlyph",
    "LigatureGlyph",
    "ModelContradiction",
    "ParseError",
    "Raster",
    "ScaleTooSmall",
    "Segment",
    "StrokePlan",
    "StyleProfile",
    "SymbolSetProfile",
    "add_numerals",
    "auto_evaluate_proposed",
    "byte_name",
    "decode_segments",
    "digit_grid",
    "digit_syllable",
    "distinctness",
    "encode_nibble",
    "glyph_sheet",
    "ligature_grid",
    "parse_name",
    "parse_text_art",
    "rasterize",
    "replay_trace",
    "score",
    "seven_segment_map",
    "sticks_add",
    "stroke_plan",
    "table1",
    "to_svg",
    "to_text_art",
    "validate_constraints",
]
