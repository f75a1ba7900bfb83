import pytest

from codedshifts import regex as rx
from codedshifts.automata import Automaton
from codedshifts.errors import ParseError


def test_parse_and_print():
    r = rx.parse_regex("a(ba)*ab(ab)*b")
    assert str(r) == "a(ba)*ab(ab)*b"
    assert str(rx.parse_regex("(bb)*a")) == "(bb)*a"
    assert str(rx.parse_regex("a | b c")) == "a|bc"


def test_epsilon_and_empty():
    assert rx.parse_regex("~").nullable()
    assert rx.enumerate_words(rx.parse_regex("∅"), 3) == set()
    assert rx.enumerate_words(rx.parse_regex("a~"), 2) == {"a"}


def test_smart_constructors_simplify():
    assert rx.star(rx.star(rx.Letter("a"))) == rx.star(rx.Letter("a"))
    assert rx.concat(rx.EPSILON, rx.Letter("a")) == rx.Letter("a")
    assert rx.union(rx.EMPTY, rx.Letter("a")) == rx.Letter("a")
    assert rx.concat(rx.EMPTY, rx.Letter("a")) == rx.EMPTY


@pytest.mark.parametrize("bad", ["(a", "a)", "*a", "a||b", ""])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        rx.parse_regex(bad)


def test_glushkov_language():
    r = rx.parse_regex("(bb)*a")
    assert rx.enumerate_words(r, 5) == {"a", "bba", "bbbba"}


def test_state_elimination_round_trip():
    a = Automaton(3, [(0, "a", 1), (1, "b", 0), (0, "b", 2), (2, "a", 0)], {0}, {0})
    r = rx.from_automaton(a)
    assert rx.same_language(r, rx.parse_regex("(ab|ba)*"))


def test_same_language_is_semantic():
    assert rx.same_language(rx.parse_regex("(a|b)*"), rx.parse_regex("(a*b*)*"))
    assert not rx.same_language(rx.parse_regex("a*"), rx.parse_regex("(aa)*"))


def test_shortest_words():
    assert rx.shortest_words(rx.parse_regex("b(ab)*"), 3) == ["b", "bab", "babab"]
