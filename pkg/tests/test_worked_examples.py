"""Small worked examples, one assertion group each, across modules."""
import itertools

from oracles import factors_upto

from codedshifts import regex as rx
from codedshifts.automata import Automaton, determinize, minimal_dfa, scc, square_nondiagonal
from codedshifts.catalog import even_shift, golden_mean
from codedshifts.codes import FiniteCode, devolder_code, dyck_code, is_code, is_prefix_code, is_very_thin
from codedshifts.countable import BetaSpec, SingleWordCase, beta_admissible, beta_automaton, construction, fiebig_seed, window
from codedshifts.morphisms import (
    Morphism,
    bouquet,
    fibonacci,
    is_indecomposable_two_letter,
    is_primitive,
    morphic_language,
    recognizability_bounded,
    thue_morse,
)
from codedshifts.shifts import BlockMap, apply_block_map, full_shift, language, same_shift, sft_from_forbidden, sofic_overapprox
from codedshifts.sync import (
    find_constant,
    first_returns_expression,
    fischer_subset,
    is_synchronized_shift,
    language_dfa,
    recode_unambiguous,
)
from codedshifts.unambiguity import is_strongly_unambiguous, is_unambiguous, unambiguous_on_sft_relabel


def test_subsets_of_even_shift():
    d = determinize(even_shift())
    assert d.names == ((0, 1), (0,), (1,))


def test_minimal_automaton_of_prefix_language():
    # every a-block but the last has even length
    a = rx.to_automaton(rx.parse_regex("(b|aa)*(~|a)"))
    assert set(minimal_dfa(a).to_automaton().edges) == {(0, "a", 1), (0, "b", 0), (1, "a", 0)}


def test_square_of_even_shift():
    sq = square_nondiagonal(even_shift())
    assert sq.names == ((0, 1), (1, 0))
    assert set(sq.edges) == {(0, "b", 1), (1, "b", 0)}
    assert not scc(square_nondiagonal(golden_mean())).nontrivial()


def test_small_codes():
    assert is_code(FiniteCode(["b", "aa"]))
    assert is_prefix_code(FiniteCode(["aba"]))
    assert is_very_thin(dyck_code(2))
    assert is_very_thin(rx.parse_regex("a(ba)*ab(ab)*b"))


def test_devolder_words():
    assert devolder_code(1).words == ("ab", "ababb")
    assert devolder_code(2).words == ("ab", "ababb", "abbabbb")


def test_unambiguity_examples():
    loop = Automaton(1, [(0, "a", 0)], {0}, {0})
    assert is_strongly_unambiguous(loop)
    parallel = Automaton(4, [(0, "a", 1), (0, "a", 2), (1, "b", 3), (2, "b", 3)], {0}, {3})
    v = is_unambiguous(parallel)
    assert v.value is False and v.witness.kind == "two-finite-paths" and v.witness.word == "ab"
    cycle = Automaton(2, [(0, "a", 1), (1, "b", 0)], (), ())
    assert unambiguous_on_sft_relabel(cycle, {"a": "a", "b": "b"})
    assert unambiguous_on_sft_relabel(cycle, {"a": "c", "b": "c"}).value is False


def test_forbidden_words():
    assert set(sft_from_forbidden({"ab", "ba"}, "ab").presentation.edges) == {(0, "a", 0), (1, "b", 1)}
    digits = sft_from_forbidden({"11"}, "01")
    assert same_shift(digits, beta_automaton(BetaSpec((), (1, 0))))


def test_languages():
    assert language(even_shift(), 0) == {""}
    assert language(golden_mean(), 2) == {"aa", "ab", "ba"}
    assert language(even_shift(), 3) == {"aaa", "aab", "abb", "baa", "bab", "bba", "bbb"}


def test_trivial_block_maps():
    assert same_shift(apply_block_map(even_shift(), BlockMap.from_table({"a": "a", "b": "b"})), even_shift())
    constant = apply_block_map(even_shift(), BlockMap.from_table({"a": "a", "b": "a"}))
    assert same_shift(constant, full_shift("a"))


def test_overapproximations():
    tm = thue_morse().power("a", 8)
    sample = {tm[i:i + 5] for i in range(len(tm) - 4)}
    x = sofic_overapprox(sample, 5)
    assert language(x, 5) == sample
    assert same_shift(sofic_overapprox(["aaaa"], 2), full_shift("a"))
    golden3 = {w for w in map("".join, itertools.product("ab", repeat=3)) if "bb" not in w}
    assert same_shift(sofic_overapprox(golden3, 3), golden_mean())


def test_subset_automata():
    f = fischer_subset(language_dfa(golden_mean()), "b")
    assert f.n_states == 2 and all(len(s) == 1 for s in f.names)
    assert same_shift(fischer_subset(language_dfa(even_shift()), "a"), even_shift())


def test_synchronized_shifts():
    assert is_synchronized_shift(FiniteCode(["ab", "ba"]).flower)
    assert is_synchronized_shift(full_shift("a"))


def test_recoding_small_cases():
    assert str(recode_unambiguous(FiniteCode(["a"])).code) == "a"
    c = find_constant(language_dfa(FiniteCode(["a", "bb"]).flower))
    assert c is not None
    assert str(first_returns_expression(Automaton(1, [(0, "a", 0)], (), ()), 0)) == "a"
    assert str(first_returns_expression(Automaton(2, [(0, "a", 1), (1, "b", 0)], (), ()), 0)) == "ab"


def test_bouquets():
    assert bouquet(Morphism({"a": "a"})).automaton.edges == ((0, "a", 0),)
    assert not is_primitive(Morphism({"a": "aa", "b": "bb"}))


def test_morphic_languages():
    five = [w for w in morphic_language(thue_morse(), 5).words if len(w) == 5]
    assert five and all("aa" in w or "bb" in w for w in five)
    assert {w for w in morphic_language(fibonacci(), 2).words if len(w) == 2} == {"aa", "ab", "ba"}
    assert morphic_language(fibonacci(), 0).words == {""}


def test_recognizability_examples():
    assert recognizability_bounded(thue_morse(), 5)
    assert recognizability_bounded(fibonacci(), 3)
    v = recognizability_bounded(Morphism({"a": "aa"}), 3)
    assert v.value is None and set(v.witness.word) == {"a"}


def test_indecomposability_examples():
    assert is_indecomposable_two_letter(thue_morse())
    assert is_indecomposable_two_letter(Morphism({"a": "a", "b": "b"}))


def test_seed_examples():
    assert fiebig_seed(Automaton(1, [(0, "a", 0)], (), ())) == SingleWordCase("a")
    s = fiebig_seed(golden_mean())
    assert s.y == "" and (s.a, s.b) == ("a", "b")


def test_even_code_window_is_unambiguous():
    w = window(construction(fiebig_seed(FiniteCode(["a", "bb"]).flower), "strong"), 60)
    assert is_unambiguous(w.automaton.with_ends("all", "all"))


def test_windows_grow_monotonically():
    la = construction(fiebig_seed(golden_mean()), "reversible")
    assert window(la, 0).automaton.n_states == 1
    small, big = window(la, 7), window(la, 15)
    index = {s: k for k, s in enumerate(big.states)}
    mapped = {(index[small.states[p]], x, index[small.states[q]]) for p, x, q in small.automaton.edges}
    inside = {index[s] for s in small.states}
    assert mapped == {(p, x, q) for p, x, q in big.automaton.edges if p in inside and q in inside}


def test_preperiodic_beta_shift():
    spec = BetaSpec((2, 1), (1,))
    a = beta_automaton(spec)
    assert a.n_states == 3
    words = {"".join(w) for n in range(7) for w in itertools.product("012", repeat=n)}
    assert factors_upto(a, 6) == {w for w in words if beta_admissible(w, spec)}
    assert beta_automaton(BetaSpec((), (1,))).n_states == 1
