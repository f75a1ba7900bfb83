import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import is_unambiguous_bruteforce, random_automaton, seeded

from codedshifts.automata import Automaton
from codedshifts.catalog import EVEN_E, EVEN_F, EVEN_G, even_sft_cover, even_shift, golden_mean
from codedshifts.errors import HypothesisError
from codedshifts.unambiguity import (
    edge_shift,
    is_strongly_unambiguous,
    is_strongly_unambiguous_at,
    is_unambiguous,
    relative_graph,
    unambiguous_on_sft_relabel,
    unambiguous_on_sofic,
)


def diamond():
    # an a-loop on 0 and a d-loop on 3 joined by two paths labeled bc
    return Automaton(4, [(0, "a", 0), (0, "b", 1), (0, "b", 2), (1, "c", 3), (2, "c", 3), (3, "d", 3)],
                     {0, 1, 2, 3}, {0, 1, 2, 3})


def test_even_shift_unambiguous_not_strong():
    a = even_shift()
    assert is_unambiguous(a)
    v = is_strongly_unambiguous(a)
    assert v.value is False
    assert v.witness.kind == "pair-cycle"
    assert v.witness.word == "bb"
    assert v.witness.replay(a)


def test_golden_mean_is_strongly_unambiguous():
    assert is_strongly_unambiguous(golden_mean())


def test_same_label_loops_on_two_states():
    a = Automaton(2, [(0, "a", 0), (1, "a", 1)], {0, 1}, {0, 1})
    assert is_unambiguous(a)
    v = is_strongly_unambiguous(a)
    assert v.value is False and v.witness.paths == ((0, 0), (1, 1))


def test_finite_ambiguity_between_cycles():
    a = diamond()
    v = is_unambiguous(a)
    assert v.value is False and v.witness.replay(a)
    s = is_strongly_unambiguous(a)
    assert s.value is False
    assert s.witness.kind == "two-finite-paths"
    assert s.witness.word == "bc"
    assert s.witness.replay(a)


def test_strong_at_anchor():
    a = even_shift()
    # the b-blocks can be paired up in two ways around 0
    assert is_strongly_unambiguous_at(a.with_ends({0}, {0}), 0).value is False
    assert is_strongly_unambiguous_at(golden_mean(), 0)


def test_edge_shift_labels_are_edges():
    b = edge_shift(even_shift())
    assert set(b.alphabet) == {EVEN_E, EVEN_F, EVEN_G}
    assert is_strongly_unambiguous(b)


def test_relative_graph_tuples():
    g = relative_graph(even_shift(), even_sft_cover())
    assert all(len(v) == 4 for v in g.names)
    with pytest.raises(ValueError):
        relative_graph(even_shift(), golden_mean())


def test_relative_unambiguity():
    a = even_shift()
    assert unambiguous_on_sofic(a, even_sft_cover())
    v = unambiguous_on_sofic(a, edge_shift(a))
    assert v.value is False
    w = v.witness
    assert w.kind == "relative-pair-path" and w.replay(a)
    assert set(w.word) == {"b"}


def test_sft_relabel_requires_strong_unambiguity():
    b = even_sft_cover()
    assert unambiguous_on_sft_relabel(b, lambda e: e[1])
    with pytest.raises(HypothesisError):
        unambiguous_on_sft_relabel(even_shift(), {"a": "a", "b": "b"})


def test_unambiguity_matches_path_counts():
    rng = seeded(21)
    for _ in range(80):
        a = random_automaton(rng, rng.randint(1, 4))
        v = is_unambiguous(a)
        brute, word = is_unambiguous_bruteforce(a, 10)
        assert bool(v) == brute
        if not v:
            assert v.witness.replay(a)


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=0, max_value=100_000), st.integers(min_value=1, max_value=4))
def test_strong_implies_plain(seed, n):
    a = random_automaton(seeded(seed), n).with_ends("all", "all")
    s = is_strongly_unambiguous(a)
    if not s:
        assert s.witness.replay(a)
