import numpy as np
import pytest

from codedshifts.codes import check_circular_witness, FiniteCode
from codedshifts.errors import ParseError
from codedshifts.morphisms import (
    Morphism,
    alpha_presentation,
    bouquet,
    fibonacci,
    format_morphism,
    incidence_matrix,
    is_circular_morphism,
    is_indecomposable_two_letter,
    is_primitive,
    morphic_language,
    parse_morphism,
    period_doubling,
    recognizability_bounded,
    thue_morse,
)
from codedshifts.shifts import sofic_overapprox


def test_morphism_validation():
    with pytest.raises(ValueError):
        Morphism({"a": ""})
    with pytest.raises(ValueError):
        Morphism({"a": "b"}, source=("a", "b"))
    m = fibonacci()
    assert m("ab") == "aba"
    assert m.power("a", 4) == "abaababa"
    assert m.is_endomorphism


def test_text_round_trip():
    m = parse_morphism("a -> ab\nb -> ba\n")
    assert m == thue_morse()
    assert parse_morphism(format_morphism(m)) == m
    with pytest.raises(ParseError, match="line 2"):
        parse_morphism("a -> ab\na -> b\n")


def test_bouquet_shape():
    bq = bouquet(thue_morse())
    assert bq.vertices == ("ω", ("a", 1), ("b", 1))
    a = bq.automaton
    assert a.accepts("abba") and not a.accepts("aa")
    assert bq.edge_names[bq.edge_of("b", 0)] == ("b", 0)
    fib = bouquet(fibonacci())
    assert fib.automaton.n_states == 2
    assert set(fib.automaton.edges) == {(0, "a", 1), (1, "b", 0), (0, "a", 0)}


def test_incidence_and_primitivity():
    assert np.array_equal(incidence_matrix(fibonacci()), np.array([[1, 1], [1, 0]]))
    assert is_primitive(fibonacci()).witness == 2
    assert is_primitive(thue_morse()).witness == 1
    assert is_primitive(Morphism({"a": "ab", "b": "b"})).value is False


def test_circular_morphisms():
    assert is_circular_morphism(fibonacci())
    for m in (thue_morse(), period_doubling()):
        v = is_circular_morphism(m)
        assert v.value is False
        images = FiniteCode([m.images[b] for b in m.source])
        assert check_circular_witness(images, *v.witness)
    v = is_circular_morphism(Morphism({"a": "aa", "b": "a"}))
    assert v.value is False and v.note == "not injective"


def test_morphic_language_stabilizes():
    lang = morphic_language(fibonacci(), 3)
    assert lang.stabilized
    assert "bb" not in lang.words and "aaa" not in lang.words
    assert {"aab", "aba", "baa", "bab"} <= lang.words


def test_alpha_presentation_reads_bouquet_edges():
    x = sofic_overapprox(morphic_language(fibonacci(), 3).words, 3)
    bq, b = alpha_presentation(fibonacci(), x)
    assert set(b.alphabet) <= set(bq.edge_names)


def test_recognizability_windows():
    assert recognizability_bounded(fibonacci(), 2)
    v = recognizability_bounded(thue_morse(), 2)
    assert v.value is None and v.witness.replay(bouquet(thue_morse()).automaton)
    assert recognizability_bounded(thue_morse(), 3)
    with pytest.raises(ValueError):
        recognizability_bounded(fibonacci(), 1)


def test_two_letter_indecomposability():
    assert is_indecomposable_two_letter(fibonacci())
    assert not is_indecomposable_two_letter(Morphism({"a": "abab", "b": "ab"}))
