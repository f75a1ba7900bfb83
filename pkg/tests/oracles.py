"""Brute-force reference implementations and random instance generators.

Each oracle works by enumeration up to a length bound and uses the package
only for its data types.
"""
from __future__ import annotations

import itertools
import random

from codedshifts.automata import Automaton, Dfa
from codedshifts.codes import FiniteCode, is_code


def words_upto(alphabet, n):
    for k in range(n + 1):
        for t in itertools.product(alphabet, repeat=k):
            yield "".join(t)


def factorization_counts(words, max_len):
    """Number of factorizations of every word of length <= max_len over ``words``."""
    counts = {"": 1}
    frontier = {"": 1}
    while frontier:
        nxt = {}
        for w, c in frontier.items():
            for x in words:
                v = w + x
                if len(v) <= max_len:
                    nxt[v] = nxt.get(v, 0) + c
        for v, c in nxt.items():
            counts[v] = counts.get(v, 0) + c
        frontier = nxt
    return counts


def is_code_bruteforce(words, max_len):
    return all(c <= 1 for c in factorization_counts(words, max_len).values())


def star_members(words, max_len):
    return set(factorization_counts(words, max_len))


def circular_bruteforce(words, max_len):
    """Search ``u, v`` nonempty with ``|u| + |v| <= max_len``, ``uv, vu`` in
    C* and not both ``u, v`` in C*."""
    star = star_members(words, max_len)
    for w in star:
        for k in range(1, len(w)):
            u, v = w[:k], w[k:]
            if v + u in star and not (u in star and v in star):
                return False, (u, v)
    return True, None


def path_counts(a, word):
    """``counts[p][q]``: number of paths from p to q labeled ``word``."""
    n = a.n_states
    counts = [[int(p == q) for q in range(n)] for p in range(n)]
    for x in word:
        step = [[0] * n for _ in range(n)]
        for p in range(n):
            for r in range(n):
                if counts[p][r]:
                    for lab, q in a.out[r]:
                        if lab == x:
                            step[p][q] += counts[p][r]
        counts = step
    return counts


def is_unambiguous_bruteforce(a, max_len):
    for w in words_upto(a.alphabet, max_len):
        if any(c > 1 for row in path_counts(a, w) for c in row):
            return False, w
    return True, None


def _accepted_from(a, states, max_len):
    """Words of length <= max_len leading from ``states`` to a terminal state,
    found by expanding the tree of all words."""
    out = set()
    frontier = [("", frozenset(states))]
    for _ in range(max_len + 1):
        nxt = []
        for w, s in frontier:
            if s & a.terminal:
                out.add(w)
            for x in a.alphabet:
                t = frozenset(q for p in s for lab, q in a.out[p] if lab == x)
                if t:
                    nxt.append((w + x, t))
        frontier = nxt
    return frozenset(out)


def residual_count(a, max_len):
    """Number of distinct nonempty residuals ``u^-1 L`` (u up to max_len),
    each residual cut to words of length <= max_len."""
    reached = {frozenset(a.read(a.initial, u)) for u in words_upto(a.alphabet, max_len)}
    residuals = {_accepted_from(a, s, max_len) for s in reached if s}
    return len(residuals - {frozenset()})


def accepted_upto(a, max_len):
    return {w for w in words_upto(a.alphabet, max_len) if a.read(a.initial, w) & a.terminal}


def factors_upto(a, max_len):
    """Labels of paths of a trim automaton (all states used), length <= max_len."""
    every = range(a.n_states)
    return {w for w in words_upto(a.alphabet, max_len) if a.read(every, w)}


# ---------------------------------------------------------------------------
# Random instances


def random_words(rng, alphabet, total, max_word=None):
    """Distinct nonempty words of total length at most ``total``."""
    out = []
    budget = total
    while budget > 0:
        n = rng.randint(1, min(budget, max_word or budget))
        w = "".join(rng.choice(alphabet) for _ in range(n))
        if w not in out:
            out.append(w)
        budget -= n
        if rng.random() < 0.3:
            break
    return out


def random_code(rng, alphabet="ab", total=12, max_word=5):
    """A random code.  Selection uses the exact test of the package, which is
    checked against :func:`is_code_bruteforce` on its own."""
    while True:
        words = random_words(rng, alphabet, total, max_word)
        if len(words) >= 2 and is_code(FiniteCode(words)):
            return FiniteCode(words)


def random_prefix_code(rng, alphabet="ab", total=10, max_word=4):
    while True:
        words = random_words(rng, alphabet, total, max_word)
        if any(x != y and y.startswith(x) for x in words for y in words):
            continue
        return FiniteCode(words)


def random_automaton(rng, n_states, alphabet="ab", density=0.35):
    edges = [(p, x, q) for p in range(n_states) for x in alphabet for q in range(n_states)
             if rng.random() < density]
    initial = {p for p in range(n_states) if rng.random() < 0.5} or {0}
    terminal = {p for p in range(n_states) if rng.random() < 0.5} or {0}
    return Automaton(n_states, edges, initial, terminal, tuple(alphabet))


def random_dfa(rng, n_states, alphabet="ab", density=0.8):
    delta = {}
    for p in range(n_states):
        for x in alphabet:
            if rng.random() < density:
                delta[(p, x)] = rng.randrange(n_states)
    terminal = {p for p in range(n_states) if rng.random() < 0.5}
    return Dfa(n_states, delta, 0, frozenset(terminal), tuple(alphabet))


def seeded(seed):
    return random.Random(seed)
