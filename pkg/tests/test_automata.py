import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import accepted_upto, random_automaton, random_dfa, residual_count, seeded

from codedshifts.automata import (
    Automaton,
    Dfa,
    determinize,
    equivalent,
    format_automaton,
    is_codeterministic,
    is_deterministic,
    is_strongly_connected,
    iter_accepted,
    join,
    minimal_dfa,
    minimize,
    parse_automaton,
    path_labels,
    reverse,
    scc,
    shortest_cycle,
    shortest_path,
    square,
    to_dot,
    trim,
)
from codedshifts.catalog import even_language_min, even_shift
from codedshifts.errors import ParseError


def test_duplicate_edge_rejected():
    with pytest.raises(ValueError):
        Automaton(1, [(0, "a", 0), (0, "a", 0)], {0}, {0})


def test_state_out_of_range_rejected():
    with pytest.raises(ValueError):
        Automaton(1, [(0, "a", 1)], {0}, {0})


def test_join_keeps_strings_and_tuples():
    assert join(["a", "b"]) == "ab"
    e = (0, "a", 0)
    assert join([e, e]) == (e, e)


def test_read_and_accepts():
    a = even_shift()
    assert a.accepts("abba")
    assert a.read({0}, "b") == {1}
    assert not a.read({1}, "a")


def test_subset_construction_tracks_sets():
    a = Automaton(2, [(0, "a", 0), (0, "a", 1), (1, "b", 1)], {0}, {1})
    d = determinize(a)
    assert d.accepts("aab") and not d.accepts("b")
    assert (0, 1) in d.names


def test_minimal_automaton_of_abba_star():
    a = Automaton(3, [(0, "a", 1), (1, "b", 0), (0, "b", 2), (2, "a", 0)], {0}, {0})
    m = minimal_dfa(a)
    assert m.n_states == 3
    assert m.delta == {(0, "a"): 1, (0, "b"): 2, (1, "b"): 0, (2, "a"): 0}


def test_even_language_minimal_figure():
    # factors of the shift with even a-blocks between b's
    a = Automaton(2, [(0, "b", 0), (0, "a", 1), (1, "a", 0)], {0, 1}, {0, 1})
    m = minimal_dfa(a)
    assert set(m.to_automaton().edges) == set(even_language_min().edges)


def test_minimize_empty_language():
    d = Dfa(2, {(0, "a"): 1}, 0, frozenset())
    m = minimize(d)
    assert m.n_states == 1 and not m.terminal and not m.delta


def test_minimize_is_canonical():
    rng = seeded(3)
    for _ in range(40):
        d = random_dfa(rng, 4)
        m1 = minimize(d)
        m2 = minimal_dfa(reverse(reverse(d.to_automaton())))
        assert m1.signature() == m2.signature()


def test_minimize_against_residuals():
    rng = seeded(5)
    for _ in range(60):
        d = random_dfa(rng, rng.randint(1, 5))
        m = minimize(d)
        assert m.n_states == max(residual_count(d.to_automaton(), 8), 1)


def test_equivalent_distinguishes():
    a = Automaton(1, [(0, "a", 0)], {0}, {0})
    b = Automaton(2, [(0, "a", 1), (1, "a", 0)], {0}, {0})
    assert equivalent(a, a)
    assert not equivalent(a, b)


def test_scc_and_connectivity():
    a = Automaton(4, [(0, "a", 1), (1, "a", 0), (1, "b", 2), (3, "a", 3)], {0}, {0})
    comps = scc(a)
    assert comps.index[0] == comps.index[1]
    assert comps.trivial[comps.index[2]]
    assert not comps.trivial[comps.index[3]]
    assert is_strongly_connected(even_shift())
    assert not is_strongly_connected(a)


def test_trim_drops_dead_states():
    a = Automaton(3, [(0, "a", 1), (0, "b", 2)], {0}, {1})
    assert trim(a).n_states == 2


def test_shortest_path_and_cycle():
    a = even_shift()
    states, labels = shortest_path(a, [0], [1])
    assert states == [0, 1] and labels == ["b"]
    states, labels = shortest_cycle(a, [1])
    assert states[0] == states[-1] == 1 and labels == ["b", "b"]


def test_square_names_pairs():
    a = even_shift()
    sq = square(a)
    assert sq.n_states == 4
    assert sq.name(1) == (0, 1)


def test_determinism_flags():
    a = even_shift().with_ends({0}, {0})
    assert is_deterministic(a) and is_codeterministic(a)
    b = Automaton(2, [(0, "a", 0), (0, "a", 1)], {0}, {0})
    assert not is_deterministic(b)


def test_path_labels_and_iteration():
    a = even_shift()
    assert path_labels(a, 2) == {"aa", "ab", "ba", "bb"}
    words = []
    for w in iter_accepted(a.with_ends({0}, {0})):
        words.append(w)
        if len(words) == 5:
            break
    assert words == ["", "a", "aa", "bb", "aaa"]


def test_text_format_round_trip():
    a = even_shift()
    text = format_automaton(a)
    b = parse_automaton(text)
    assert format_automaton(b) == text
    assert b.edges == a.edges


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError, match="line 3"):
        parse_automaton("@alphabet ab\n0 a 0\n0 c 1\n")
    with pytest.raises(ParseError, match="line 2: duplicate edge"):
        parse_automaton("0 a 0\n0 a 0\n")
    with pytest.raises(ParseError, match="line 1"):
        parse_automaton("0 a\n")


def test_dot_is_deterministic():
    a = even_shift()
    assert to_dot(a) == to_dot(Automaton(2, list(reversed(a.edges)), {1, 0}, {0, 1}, ("a", "b")))
    assert '"0" -> "1" [label="b"];' in to_dot(a)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=10_000), st.integers(min_value=1, max_value=4))
def test_determinize_preserves_language(seed, n):
    a = random_automaton(seeded(seed), n)
    d = determinize(a)
    assert accepted_upto(a, 6) == accepted_upto(d.to_automaton(), 6)
