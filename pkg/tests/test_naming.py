import pytest

from sedec.naming import SYLLABLES, ParseError, byte_name, digit_syllable, parse_name

from oracles import SYLLABLE_TABLE

# Byte names printed in two-syllable form, value order.
PAPER_NAMES = {
    0x23: "Hehi",
    0x45: "Boba",
    0x67: "Bebi",
    0x89: "Koka",
    0xAB: "Keki",
    0xCD: "Doda",
    0xEF: "Dedi",
}


def test_syllable_table_matches_oracle():
    assert SYLLABLES == SYLLABLE_TABLE


@pytest.mark.parametrize("n,syllable", [(5, "Ba"), (0, "Ho"), (15, "Di")])
def test_digit_syllable(n, syllable):
    assert digit_syllable(n) == syllable


@pytest.mark.parametrize("value,text", sorted(PAPER_NAMES.items()))
def test_byte_name_paper_examples(value, text):
    assert byte_name(value).text == text


def test_byte_name_capitalization():
    name = byte_name(0x89)
    assert (name.high, name.low) == ("Ko", "Ka")
    assert name.text == "Koka"  # single leading capital
    assert byte_name(0x00).text == "Hoho"


def test_names_are_distinct():
    assert len({byte_name(b).text for b in range(256)}) == 256


def test_parse_round_trip_all_bytes():
    for b in range(256):
        assert parse_name(byte_name(b).text) == [b >> 4, b & 0xF]


def test_parse_examples():
    assert parse_name("Dedi Koka") == [14, 15, 8, 9]
    assert parse_name("hoho") == [0, 0]
    assert parse_name("HOHO") == [0, 0]
    assert parse_name("") == []
    assert parse_name("  Di \n Ho ") == [15, 0]


@pytest.mark.parametrize(
    "text,offset",
    [("Hox", 2), ("xHo", 0), ("Ho Ha q", 6), ("H o", 0), ("Didi!", 4)],
)
def test_parse_errors_carry_offsets(text, offset):
    with pytest.raises(ParseError) as err:
        parse_name(text)
    assert err.value.offset == offset
