import random
from pathlib import Path

import pytest

from sedec.cli import DumpConfig, convert, detect_base, dump_bytes, load_style, main, parse_value
from sedec.naming import ParseError, parse_name

GOLDEN = Path(__file__).parent / "golden"


def test_names_dump_matches_golden():
    text = dump_bytes(bytes(range(16)), DumpConfig(ascii_gutter=False))
    assert text == (GOLDEN / "names_dump.txt").read_text()


def test_art_dump_matches_golden():
    text = dump_bytes(bytes(range(16)), DumpConfig(mode="art", scale=2))
    assert text == (GOLDEN / "art_dump.txt").read_text()


def test_dump_empty_input():
    assert dump_bytes(b"", DumpConfig()) == ""


def test_dump_ascii_gutter():
    line = dump_bytes(b"\x41", DumpConfig()).rstrip("\n")
    assert line.endswith("|A|")
    assert "Boha" in line  # 0x41
    dotted = dump_bytes(b"\x00", DumpConfig()).rstrip("\n")
    assert dotted.endswith("|.|")


def test_dump_std_mode():
    text = dump_bytes(bytes([0x00, 0xFF, 0x41]), DumpConfig(mode="std"))
    assert text == "00000000: 00 ff 41" + " " * 39 + "  |..A|\n"


def test_dump_gutter_column_alignment():
    lines = dump_bytes(bytes(range(20)), DumpConfig()).splitlines()
    assert len(lines) == 2
    assert lines[0].index("|") == lines[1].index("|")


def test_dump_respects_cols_and_offsets():
    text = dump_bytes(bytes(range(8)), DumpConfig(bytes_per_line=4, ascii_gutter=False))
    lines = text.splitlines()
    assert lines[0].startswith("00000000: ")
    assert lines[1].startswith("00000004: ")
    offset_64k = dump_bytes(b"\x00", DumpConfig(ascii_gutter=False), start_offset=0x10000)
    assert offset_64k.startswith("00010000: ")


def test_dump_glyph_offsets():
    text = dump_bytes(b"\x00", DumpConfig(offsets="glyph", ascii_gutter=False))
    assert text == "HohoHohoHohoHoho: Hoho\n"


def test_dump_art_glyph_offsets():
    text = dump_bytes(b"\x00", DumpConfig(mode="art", offsets="glyph"))
    lines = text.splitlines()
    assert len(lines) == 6  # five raster rows and a blank spacer
    # four offset ligatures, a three-column gap, then the data glyph
    assert len(lines[0]) == 4 * 7 + 3 + 3 + 7


def test_names_dump_reparses_to_original_bytes():
    rng = random.Random(7)
    data = bytes(rng.randrange(256) for _ in range(100))
    text = dump_bytes(data, DumpConfig(ascii_gutter=False))
    recovered = bytearray()
    for line in text.splitlines():
        _, names = line.split(": ", 1)
        nibbles = parse_name(names)
        recovered.extend(
            nibbles[i] * 16 + nibbles[i + 1] for i in range(0, len(nibbles), 2)
        )
    assert bytes(recovered) == data


def test_dump_config_validation():
    with pytest.raises(ValueError):
        DumpConfig(bytes_per_line=0).validate()
    with pytest.raises(ValueError):
        DumpConfig(mode="art", scale=1).validate()
    with pytest.raises(ValueError):
        DumpConfig(mode="wat").validate()


@pytest.mark.parametrize(
    "value,source,target,expected",
    [
        ("255", "dec", "names", "Didi"),
        ("Koka", "names", "dec", "137"),
        ("0", "dec", "hex", "0"),
        ("0x178", "hex", "dec", "376"),
        ("ab", "hex", "names", "Keki"),
        ("65534", "dec", "hex", "FFFE"),
        ("Didi Didi", "names", "hex", "FFFF"),
    ],
)
def test_convert(value, source, target, expected):
    assert convert(value, source, target) == expected


def test_convert_to_art():
    art = convert("F", "hex", "art")
    assert art == "###\n#..\n###\n#..\n###\n"


def test_convert_parse_errors():
    with pytest.raises(ParseError) as err:
        convert("12x4", "dec", "hex")
    assert err.value.offset == 2
    with pytest.raises(ParseError) as err:
        convert("0xZZ", "hex", "dec")
    assert err.value.offset == 2
    with pytest.raises(ParseError):
        convert("", "names", "dec")


def test_parse_value_and_detect_base():
    assert parse_value("ff", "hex") == 255
    assert detect_base("0x10") == "hex"
    assert detect_base("10") == "dec"
    assert detect_base("fe") == "hex"


# -- command level ---------------------------------------------------------


def test_main_dump_names(tmp_path, capsys):
    target = tmp_path / "data.bin"
    target.write_bytes(bytes(range(16)))
    assert main(["dump", str(target), "--no-ascii"]) == 0
    out = capsys.readouterr().out
    assert out == (GOLDEN / "names_dump.txt").read_text()


def test_main_dump_streams_in_chunks(tmp_path, capsys):
    target = tmp_path / "big.bin"
    target.write_bytes(bytes(range(256)) * 40)  # crosses the read-chunk boundary
    assert main(["dump", str(target), "--no-ascii"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 640
    assert lines[-1].startswith(f"{640 * 16 - 16:08x}: ")


def test_main_usage_error_exits_1(capsys):
    assert main(["dump"]) == 1
    assert main(["wat"]) == 1
    assert main([]) == 1
    capsys.readouterr()


def test_main_missing_file_exits_2(tmp_path, capsys):
    assert main(["dump", str(tmp_path / "absent.bin")]) == 2
    assert "error" in capsys.readouterr().err


def test_main_parse_error_exits_3(capsys):
    assert main(["convert", "zz!", "--from", "dec", "--to", "hex"]) == 3
    assert "offset" in capsys.readouterr().err


def test_main_name_command(capsys):
    assert main(["name", "0x89"]) == 0
    assert capsys.readouterr().out == "Koka\n"
    assert main(["name", "137"]) == 0
    assert capsys.readouterr().out == "Koka\n"
    assert main(["name", "ffff"]) == 0
    assert capsys.readouterr().out == "Didi Didi\n"


def test_main_convert_command(capsys):
    assert main(["convert", "255", "--from", "dec", "--to", "names"]) == 0
    assert capsys.readouterr().out == "Didi\n"


def test_main_sheet_command(tmp_path, capsys):
    out_file = tmp_path / "atlas.svg"
    assert main(["sheet", "--out", str(out_file)]) == 0
    sheet = out_file.read_text()
    assert sheet.count('class="glyph"') == 272

    style_file = tmp_path / "style.json"
    style_file.write_text('{"corner_rounding": 0.1, "slope": 5}')
    assert main(["sheet", "--out", str(out_file), "--style", str(style_file)]) == 0
    assert out_file.read_text() != sheet

    style_file.write_text('{"wat": 1}')
    assert main(["sheet", "--out", str(out_file), "--style", str(style_file)]) == 3
    capsys.readouterr()


def test_load_style_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    with pytest.raises(ParseError):
        load_style(str(bad))
    listy = tmp_path / "list.json"
    listy.write_text("[1]")
    with pytest.raises(ParseError):
        load_style(str(listy))


def test_main_score_command(capsys):
    assert main(["score"]) == 0
    out = capsys.readouterr().out
    lines = out.splitlines()
    assert len(lines) == 10  # header + nine rows
    assert lines[0].split()[-1] == "score"
    assert lines[1].endswith("5")
    assert "Trismarck 2012" in out
