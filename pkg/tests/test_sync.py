import pytest
from oracles import random_prefix_code, seeded

from codedshifts import regex as rx
from codedshifts.automata import Automaton, Dfa, is_deterministic
from codedshifts.catalog import even_shift, golden_mean
from codedshifts.codes import FiniteCode, is_circular, is_prefix_code, star_min_automaton
from codedshifts.errors import BudgetExceeded, NotSynchronizedError
from codedshifts.sync import (
    find_constant,
    first_returns_expression,
    fischer_subset,
    image,
    is_constant,
    is_synchronized_code,
    is_synchronized_shift,
    language_dfa,
    maximal_components,
    recode_unambiguous,
    shortest_constants,
)
from codedshifts.unambiguity import is_strongly_unambiguous_at


def test_constants_of_abba_star():
    d = star_min_automaton(FiniteCode(["ab", "ba"]))
    assert [c.word for c in shortest_constants(d)] == ["aa", "bb"]
    c = find_constant(d)
    assert (c.word, c.sink) == ("bb", 2)
    assert is_constant(d, "aa")
    assert not is_constant(d, "ab")
    assert image(d, range(d.n_states), "bb") == {2}


def test_no_constant_in_cyclic_group():
    # a permutation automaton never merges states
    d = Dfa(2, {(0, "a"): 1, (1, "a"): 0}, 0, frozenset({0}))
    assert find_constant(d) is None


def test_synchronized_code_verdicts():
    assert is_synchronized_code(FiniteCode(["a", "bb"]))
    v = is_synchronized_code(FiniteCode(["a", "ab"]))
    assert v.value is False and v.note == "not a prefix code"
    v = is_synchronized_code(FiniteCode(["aa"]))
    assert v.value is False
    v = is_synchronized_code(FiniteCode(["ab", "ba"]), max_len=1)
    assert v.value is None


def test_fischer_subset_even_shift():
    d = language_dfa(even_shift())
    f = fischer_subset(d, "a")
    assert is_deterministic(f)
    assert f.names == ((1,), (2,))
    with pytest.raises(ValueError):
        fischer_subset(d, "c")


def test_synchronized_shifts():
    v = is_synchronized_shift(even_shift())
    assert v.value is True and len(v.witness["component"]) >= 2
    assert is_synchronized_shift(golden_mean())
    d = Dfa(2, {(0, "a"): 1, (1, "a"): 0}, 0, frozenset({0, 1}))
    assert maximal_components(d) == [(0, 1)]


def test_recode_even_shift():
    r = recode_unambiguous(FiniteCode(["a", "bb"]))
    assert rx.same_language(r.code, rx.parse_regex("(bb)*a"))
    assert r.constant.word == "a"


def test_recode_abba():
    r = recode_unambiguous(FiniteCode(["ab", "ba"]))
    assert str(r.code) == "a(ba)*ab(ab)*b"
    assert r.anchor_name == ("bb", 2)
    assert r.product.n_states == 6
    other = recode_unambiguous(FiniteCode(["ab", "ba"]), constant="aa")
    assert other.constant.word == "aa"
    assert is_circular(other.code)


def test_recode_rejects_bad_input():
    with pytest.raises(ValueError):
        recode_unambiguous(FiniteCode(["a", "ab"]))
    with pytest.raises(NotSynchronizedError):
        recode_unambiguous(FiniteCode(["aa"]))
    with pytest.raises(ValueError):
        recode_unambiguous(FiniteCode(["ab", "ba"]), constant="ab")
    with pytest.raises(BudgetExceeded):
        recode_unambiguous(FiniteCode(["ab", "ba"]), budget=2)


def test_first_returns_rejects_trivial_component():
    a = Automaton(2, [(0, "a", 1), (1, "b", 1)], (), ())
    with pytest.raises(ValueError):
        first_returns_expression(a, 0)
    assert str(first_returns_expression(a, 1)) == "b"


def test_recoded_codes_are_strong():
    rng = seeded(17)
    done = 0
    while done < 30:
        c = random_prefix_code(rng, total=8)
        if not is_synchronized_code(c):
            continue
        done += 1
        r = recode_unambiguous(c)
        assert is_prefix_code(r.code)
        assert is_strongly_unambiguous_at(r.first_return_automaton, r.anchor_in_component)
