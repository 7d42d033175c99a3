"""Command-line front door: dumps, conversions, names, sheets, scores.

Exit codes: 0 success, 1 usage error, 2 I/O error, 3 parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .criteria import CRITERIA, score, table1
from .geometry import PLAIN, StyleProfile, digit_grid, ligature_grid
from .naming import ParseError, byte_name, parse_name
from .render import glyph_sheet, hstack, rasterize, to_text_art

_READ_CHUNK_LINES = 512  # dump streams this many lines worth of bytes at once

HEX_DIGITS = "0123456789ABCDEF"


@dataclass
class DumpConfig:
    bytes_per_line: int = 16
    mode: str = "names"  # names | art | std
    scale: int = 2  # art mode only
    offsets: str = "std"  # std | glyph
    ascii_gutter: bool = True

    def validate(self) -> None:
        if self.bytes_per_line < 1:
            raise ValueError("bytes_per_line must be >= 1")
        if self.mode not in ("names", "art", "std"):
            raise ValueError(f"unknown dump mode: {self.mode!r}")
        if self.offsets not in ("std", "glyph"):
            raise ValueError(f"unknown offset style: {self.offsets!r}")
        if self.mode == "art" and self.scale < 2:
            raise ValueError("art mode needs scale >= 2")


def _printable(chunk: bytes) -> str:
    return "".join(chr(b) if 32 <= b <= 126 else "." for b in chunk)


def _offset_field(offset: int, cfg: DumpConfig) -> str:
    if cfg.offsets == "glyph":
        return "".join(byte_name(b).text for b in offset.to_bytes(4, "big"))
    return f"{offset:08x}"


def _line_dump(chunk: bytes, offset: int, cfg: DumpConfig, render_byte, cell: int) -> str:
    field = " ".join(render_byte(b) for b in chunk)
    line = f"{_offset_field(offset, cfg)}: {field}"
    if cfg.ascii_gutter:
        pad = (cell + 1) * cfg.bytes_per_line - 1 - len(field)
        line += " " * pad + f"  |{_printable(chunk)}|"
    return line


def _art_dump(chunk: bytes, offset: int, cfg: DumpConfig) -> list[str]:
    block = hstack([rasterize(ligature_grid(b), cfg.scale) for b in chunk])
    rows = to_text_art(block)
    if cfg.offsets == "glyph":
        gutter = hstack([rasterize(ligature_grid(b), cfg.scale) for b in offset.to_bytes(4, "big")])
        gutter_rows = to_text_art(gutter)
        return [f"{g}...{r}" for g, r in zip(gutter_rows, rows)] + [""]
    label = f"{_offset_field(offset, cfg)}: "
    pad = " " * len(label)
    return [(label if i == 0 else pad) + row for i, row in enumerate(rows)] + [""]


def dump_bytes(data: bytes, cfg: DumpConfig, start_offset: int = 0) -> str:
    """Dump a byte run per the config; empty input gives empty output.

    names mode: one line per group of bytes_per_line bytes, an 8-digit
    offset, the two-syllable name of each byte, and optionally an
    |ascii| gutter.  std mode: conventional two-digit hex instead of
    names.  art mode: 2*scale+1 text rows of ligature rasters separated
    by one blank column, then a blank row.
    """
    cfg.validate()
    out: list[str] = []
    for i in range(0, len(data), cfg.bytes_per_line):
        chunk = data[i : i + cfg.bytes_per_line]
        offset = start_offset + i
        if cfg.mode == "names":
            out.append(_line_dump(chunk, offset, cfg, lambda b: byte_name(b).text, 4))
        elif cfg.mode == "std":
            out.append(_line_dump(chunk, offset, cfg, lambda b: f"{b:02x}", 2))
        else:
            out.extend(_art_dump(chunk, offset, cfg))
    return "\n".join(out) + ("\n" if out else "")


def _scan_error(text: str, allowed: str) -> int:
    for i, ch in enumerate(text):
        if ch not in allowed:
            return i
    return len(text)


def parse_value(text: str, base: str) -> int:
    """Parse a non-negative value written as dec, hex or syllable names."""
    if base == "dec":
        if not text or not text.isascii() or not text.isdigit():
            raise ParseError("not a decimal numeral", offset=_scan_error(text, "0123456789"))
        return int(text, 10)
    if base == "hex":
        body = text[2:] if text[:2].lower() == "0x" else text
        skip = len(text) - len(body)
        if not body or _scan_error(body.lower(), "0123456789abcdef") != len(body):
            raise ParseError(
                "not a hexadecimal numeral",
                offset=skip + _scan_error(body.lower(), "0123456789abcdef"),
            )
        return int(body, 16)
    if base == "names":
        nibbles = parse_name(text)
        if not nibbles:
            raise ParseError("empty name", offset=0)
        return int("".join(HEX_DIGITS[n] for n in nibbles), 16)
    raise ValueError(f"unknown base: {base!r}")


def _value_bytes(value: int) -> bytes:
    return value.to_bytes(max(1, (value.bit_length() + 7) // 8), "big")


def convert(value: str, source: str, target: str, scale: int = 2) -> str:
    """Value-preserving re-rendering between dec, hex, names and art."""
    n = parse_value(value, source)
    if target == "dec":
        return str(n)
    if target == "hex":
        return f"{n:X}"
    if target == "names":
        return " ".join(byte_name(b).text for b in _value_bytes(n))
    if target == "art":
        digits = [HEX_DIGITS.index(d) for d in f"{n:X}"]
        block = hstack([rasterize(digit_grid(d), scale) for d in digits])
        return "\n".join(to_text_art(block)) + "\n"
    raise ValueError(f"unknown target: {target!r}")


def detect_base(text: str) -> str:
    """Classify a bare value argument as dec or hex."""
    if text[:2].lower() == "0x":
        return "hex"
    if text.isascii() and text.isdigit():
        return "dec"
    return "hex"


def load_style(path: str) -> StyleProfile:
    """Read StyleProfile fields from a JSON config file."""
    try:
        raw = json.loads(Path(path).read_text("utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad style config: {exc}", offset=exc.pos) from None
    if not isinstance(raw, dict):
        raise ParseError("style config must be a JSON object", offset=0)
    known = set(StyleProfile.__dataclass_fields__)
    unknown = set(raw) - known
    if unknown:
        raise ParseError(f"unknown style fields: {sorted(unknown)}", offset=0)
    try:
        return StyleProfile(**{key: float(val) for key, val in raw.items()})
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad style config: {exc}", offset=0) from None


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sedec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dump", help="dump a file byte by byte")
    p.add_argument("file")
    p.add_argument("--mode", choices=("art", "names", "std"), default="names")
    p.add_argument("--scale", type=int, default=2, help="glyph size in art mode")
    p.add_argument("--cols", type=int, default=16, help="bytes per line")
    p.add_argument("--offsets", choices=("std", "glyph"), default="std")
    p.add_argument("--no-ascii", action="store_true", help="drop the ascii gutter")
    p.set_defaults(func=_cmd_dump)

    p = sub.add_parser("convert", help="re-render a value in another notation")
    p.add_argument("value")
    p.add_argument("--from", dest="source", required=True, choices=("dec", "hex", "names"))
    p.add_argument("--to", dest="target", required=True, choices=("dec", "hex", "names", "art"))
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("name", help="print the syllable name of a value")
    p.add_argument("value", help="hexadecimal (0x... or bare) or decimal")
    p.set_defaults(func=_cmd_name)

    p = sub.add_parser("sheet", help="write the full SVG glyph atlas")
    p.add_argument("--out", required=True)
    p.add_argument("--style", help="JSON file with style profile fields")
    p.set_defaults(func=_cmd_sheet)

    p = sub.add_parser("score", help="print the symbol-set comparison table")
    p.set_defaults(func=_cmd_score)
    return parser


def _cmd_dump(args) -> int:
    cfg = DumpConfig(
        bytes_per_line=args.cols,
        mode=args.mode,
        scale=args.scale,
        offsets=args.offsets,
        ascii_gutter=not args.no_ascii,
    )
    try:
        cfg.validate()
    except ValueError as exc:
        print(f"sedec dump: error: {exc}", file=sys.stderr)
        return 1
    chunk_size = cfg.bytes_per_line * _READ_CHUNK_LINES
    offset = 0
    with open(args.file, "rb") as handle:
        while True:
            chunk = handle.read(chunk_size)
            if not chunk:
                break
            sys.stdout.write(dump_bytes(chunk, cfg, start_offset=offset))
            offset += len(chunk)
    return 0


def _cmd_convert(args) -> int:
    print(convert(args.value, args.source, args.target), end="")
    if args.target != "art":  # art already ends with a newline
        print()
    return 0


def _cmd_name(args) -> int:
    value = parse_value(args.value, detect_base(args.value))
    print(" ".join(byte_name(b).text for b in _value_bytes(value)))
    return 0


def _cmd_sheet(args) -> int:
    style = load_style(args.style) if args.style else PLAIN
    Path(args.out).write_text(glyph_sheet(style), encoding="utf-8")
    return 0


def _cmd_score(args) -> int:
    name_width = max(len(row.name) for row in table1())
    header = "  ".join(f"{key:>4}" for key in CRITERIA)
    print(f"{'symbol set':<{name_width}}  {header}  score")
    for row in table1():
        marks = "  ".join(f"{'x' if row.flags[key] else '-':>4}" for key in CRITERIA)
        print(f"{row.name:<{name_width}}  {marks}  {score(row):>5}")
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse has already written its message
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"sedec: error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"sedec: error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())
