from pathlib import Path

import pytest

from codedshifts import regex as rx
from codedshifts.catalog import even_sft_cover, even_shift
from codedshifts.codes import FiniteCode
from codedshifts.errors import ParseError
from codedshifts.formats import (
    format_automaton,
    format_code,
    format_edge_automaton,
    format_morphism,
    looks_like_automaton,
    parse_automaton,
    parse_code,
    parse_edge_automaton,
    parse_morphism,
)
from codedshifts.morphisms import thue_morse

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"


@pytest.mark.parametrize("path", sorted(DATA.glob("*.code")), ids=lambda p: p.name)
def test_code_files_round_trip(path):
    text = path.read_text()
    assert format_code(parse_code(text)) == text


@pytest.mark.parametrize("path", sorted(DATA.glob("*.aut")), ids=lambda p: p.name)
def test_automaton_files_round_trip(path):
    text = path.read_text()
    assert looks_like_automaton(text)
    assert format_automaton(parse_automaton(text)) == text


@pytest.mark.parametrize("path", sorted(DATA.glob("*.morphism")), ids=lambda p: p.name)
def test_morphism_files_round_trip(path):
    text = path.read_text()
    assert format_morphism(parse_morphism(text)) == text


@pytest.mark.parametrize("path", sorted(DATA.glob("*.edges")), ids=lambda p: p.name)
def test_edge_files_round_trip(path):
    text = path.read_text()
    b = parse_edge_automaton(text, even_shift())
    # edge names are not kept, so compare automata and check the canonical text
    canonical = format_edge_automaton(b)
    again = parse_edge_automaton(canonical, even_shift())
    assert again.edges == b.edges
    assert format_edge_automaton(again) == canonical


def test_thue_morse_file():
    assert parse_morphism((DATA / "thue-morse.morphism").read_text()) == thue_morse()


def test_cover_file_is_the_catalog_cover():
    b = parse_edge_automaton((DATA / "even-cover.edges").read_text(), even_shift())
    assert set(b.edges) == set(even_sft_cover().edges)


def test_duplicate_word_reports_line():
    with pytest.raises(ParseError, match="line 2") as info:
        parse_code("ab\nab\n")
    assert "first on line 1" in str(info.value)


def test_comments_and_blank_lines():
    assert parse_code("# even shift\na\n\nbb  # two b's\n") == FiniteCode(["a", "bb"])
    with pytest.raises(ParseError):
        parse_code("# nothing\n")


def test_alphabet_header():
    c = parse_code("@alphabet abc\na\nbb\n")
    assert c.alphabet == ("a", "b", "c")
    assert format_code(c) == "@alphabet abc\na\nbb\n"
    assert parse_code("@alphabet ab\na\nbb\n").alphabet == ("a", "b")
    with pytest.raises(ParseError, match="line 2"):
        parse_code("@alphabet ab\nac\n")
    with pytest.raises(ParseError):
        parse_code("@alphabet a b\na\n")


def test_expression_code_file():
    r = parse_code("(bb)*a\n")
    assert isinstance(r, rx.Regex)
    assert rx.same_language(parse_code("a\n(bb)*bba\n"), rx.parse_regex("a|(bb)*bba"))
    assert not looks_like_automaton("a\nbb\n")


def test_edge_file_errors():
    with pytest.raises(ParseError, match="not an edge"):
        parse_edge_automaton("@edge e 0 b 0\n0 e 0\n", even_shift())
    with pytest.raises(ParseError, match="not declared"):
        parse_edge_automaton("@edge e 0 a 0\n0 f 0\n", even_shift())
