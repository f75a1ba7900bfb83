"""Finite and rational codes.

A finite code is a :class:`FiniteCode`; a rational one is given as a
:class:`~codedshifts.regex.Regex`.  Most tests route through automata:
unique decipherability of a rational set is unambiguity of its normalized
automaton, circularity is strong unambiguity of the flower automaton.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from . import regex as rx
from .automata import (
    Automaton,
    determinize,
    minimal_dfa,
    reachable,
    shortest_path,
    sort_labels,
    trim,
)
from .errors import InvariantError, NotACodeError
from .unambiguity import is_strongly_unambiguous, is_strongly_unambiguous_at, is_unambiguous
from .verdict import Verdict


def length_lex(w):
    return (len(w), w)


@dataclass(frozen=True)
class FiniteCode:
    """A finite set of nonempty words, stored in length-lexicographic order."""

    words: tuple
    alphabet: tuple = ()

    def __init__(self, words, alphabet=()):
        words = list(words)
        if any(len(w) == 0 for w in words):
            raise ValueError("empty word in code")
        if len(set(words)) != len(words):
            dup = next(w for w in words if words.count(w) > 1)
            raise ValueError(f"duplicate word {dup!r}")
        letters = set("".join(words))
        if alphabet:
            alphabet = tuple(alphabet)
            extra = letters - set(alphabet)
            if extra:
                raise ValueError(f"letters {sorted(extra)} outside alphabet")
        else:
            alphabet = tuple(sorted(letters))
        object.__setattr__(self, "words", tuple(sorted(words, key=length_lex)))
        object.__setattr__(self, "alphabet", alphabet)

    def __iter__(self):
        return iter(self.words)

    def __len__(self):
        return len(self.words)

    def __contains__(self, w):
        return w in self.words

    def __str__(self):
        return "{" + ", ".join(self.words) + "}"

    @property
    def max_len(self):
        return max(map(len, self.words), default=0)

    @property
    def total_length(self):
        return sum(map(len, self.words))

    def to_regex(self):
        return rx.words(self.words)

    @cached_property
    def flower(self):
        return flower_automaton(self.words, self.alphabet)


def flower_automaton(words, alphabet=()):
    """Bouquet of one cycle per word, all through state 0.

    Word ``k`` of length ``L`` uses fresh states for its inner positions
    ``1 .. L-1``, numbered in the order the words are given.  State 0 is
    both initial and terminal.
    """
    edges = []
    names = ["ω"]
    for w in words:
        prev = 0
        for i, x in enumerate(w):
            if i + 1 < len(w):
                names.append((w, i + 1))
                nxt = len(names) - 1
            else:
                nxt = 0
            edges.append((prev, x, nxt))
            prev = nxt
    return Automaton(len(names), edges, {0}, {0}, tuple(alphabet), tuple(names))


def as_code(c):
    """Accept a FiniteCode, a Regex, an iterable of words, or expression text."""
    if isinstance(c, (FiniteCode, rx.Regex)):
        return c
    if isinstance(c, str):
        return rx.parse_regex(c) if rx.has_operators(c) else FiniteCode([c])
    return FiniteCode(c)


def normalized_automaton(c):
    """Automaton with a distinguished state ``omega`` (index 0) whose simple
    cycles through ``omega`` are labeled exactly by the words of ``c``.

    For a FiniteCode this is the flower automaton.  For an expression the
    minimal automaton of the set is used, with a fresh state standing for
    the initial one at the start and for the terminal ones at the end.
    """
    c = as_code(c)
    if isinstance(c, FiniteCode):
        return c.flower
    if c.nullable():
        raise ValueError("empty word in code")
    d = minimal_dfa(rx.to_automaton(c))
    a = d.to_automaton()
    live = reachable(a, a.terminal, backward=True)
    edges = []
    for p, x, q in a.edges:
        sources = [p + 1] + ([0] if p == d.initial else [])
        for s in sources:
            if q in a.terminal:
                edges.append((s, x, 0))
            if q in live and a.out[q]:
                edges.append((s, x, q + 1))
    edges = sorted(set(edges), key=lambda e: (e[0], e[1], e[2]))
    names = ("ω",) + tuple(range(a.n_states))
    n = Automaton(a.n_states + 1, edges, {0}, {0}, d.alphabet, names)
    return trim(n)


# ---------------------------------------------------------------------------
# Unique decipherability


def _dangling_suffixes(c):
    """Dangling-suffix search with both factorizations kept along."""
    words = c.words
    queue = deque()
    seen = set()
    for x in words:
        for y in words:
            if x != y and y.startswith(x):
                s = y[len(x):]
                if s not in seen:
                    seen.add(s)
                    queue.append((s, (x,), (y,)))
    while queue:
        s, behind, ahead = queue.popleft()
        for z in words:
            if z == s:
                top = behind + (z,)
                return "".join(top), top, ahead
            if s.startswith(z):
                nxt, behind2, ahead2 = s[len(z):], behind + (z,), ahead
            elif z.startswith(s):
                nxt, behind2, ahead2 = z[len(s):], ahead, behind + (z,)
            else:
                continue
            if nxt not in seen:
                seen.add(nxt)
                queue.append((nxt, behind2, ahead2))
    return None


def _factorizations_from_paths(word, paths):
    out = []
    for path in paths:
        cuts = [k for k, s in enumerate(path) if s == 0]
        out.append(tuple(word[i:j] for i, j in zip(cuts, cuts[1:])))
    return tuple(out)


def is_code(c):
    """Does every word have at most one factorization into words of ``c``?

    On False the witness is ``{"word", "factorizations"}``.
    """
    c = as_code(c)
    if isinstance(c, FiniteCode):
        found = _dangling_suffixes(c)
        if found is None:
            return Verdict(True)
        word, f1, f2 = found
        return Verdict(False, {"word": word, "factorizations": (f1, f2)})
    if c.nullable():
        return Verdict(False, {"word": "", "factorizations": ((), ("",))}, "empty word in code")
    n = normalized_automaton(c)
    v = is_unambiguous(n)
    if v:
        return Verdict(True)
    w = v.witness
    # extend the two paths to omega on both sides
    pre = shortest_path(n, [0], [w.paths[0][0]])
    post = shortest_path(n, [w.paths[0][-1]], [0])
    word = "".join(pre[1]) + w.word + "".join(post[1])
    p1 = pre[0][:-1] + list(w.paths[0]) + post[0][1:]
    p2 = pre[0][:-1] + list(w.paths[1]) + post[0][1:]
    return Verdict(False, {"word": word, "factorizations": _factorizations_from_paths(word, (p1, p2))})


def is_prefix_code(c):
    """No word is a proper prefix of another.  Witness: ``(prefix, word)``."""
    c = as_code(c)
    if isinstance(c, FiniteCode):
        for x in c.words:
            for y in c.words:
                if x != y and y.startswith(x):
                    return Verdict(False, (x, y))
        return Verdict(True)
    a = minimal_dfa(rx.to_automaton(c)).to_automaton()
    bad = [q for q in sorted(a.terminal) if a.out[q]]
    if not bad:
        return Verdict(True)
    states, labels = shortest_path(a, a.initial, bad)
    x = "".join(labels)
    _, rest = shortest_path(a, [a.out[states[-1]][0][1]], a.terminal)
    y = x + a.out[states[-1]][0][0] + "".join(rest)
    return Verdict(False, (x, y))


def star_min_automaton(c):
    """Minimal automaton of ``c*``.  Its only terminal state is the initial one
    when ``c`` is a prefix code."""
    c = as_code(c)
    if isinstance(c, rx.Regex) and c.nullable():
        raise ValueError("empty word in code")
    return minimal_dfa(normalized_automaton(c))


def star_accepts(c, word):
    return star_min_automaton(c).accepts(word)


# ---------------------------------------------------------------------------
# Circularity


def _split_pair_cycle(word, top, bottom, omega=0):
    """Turn a pair cycle into ``(u, v)`` with ``uv, vu`` in C* and not both
    ``u, v`` in C*.  Cut points are positions where a track visits omega."""
    n = len(word)
    cuts_top = {k % n for k, s in enumerate(top) if s == omega}
    cuts_bottom = {k % n for k, s in enumerate(bottom) if s == omega}
    best = None
    for first, second in ((cuts_top, cuts_bottom), (cuts_bottom, cuts_top)):
        for i in first:
            for j in second - first:
                length = (j - i) % n
                doubled = word + word
                u = doubled[i:i + length]
                v = doubled[i + length:i + n]
                key = (len(u), u, v)
                if best is None or key < best[0]:
                    best = (key, u, v)
    if best is None:
        return None
    return best[1], best[2]


def is_circular(c):
    """``uv, vu`` in C* implies ``u, v`` in C*.

    Decided as strong unambiguity of the flower automaton (finite codes) or
    of the normalized automaton restricted to cycles through its base state
    (rational codes).  On False the witness is ``(u, v)``.  Raises
    NotACodeError when ``c`` is not a code.
    """
    c = as_code(c)
    check = is_code(c)
    if not check:
        raise NotACodeError("not a code", check.witness)
    n = normalized_automaton(c)
    if isinstance(c, FiniteCode):
        v = is_strongly_unambiguous(n)
    else:
        v = is_strongly_unambiguous_at(n, 0)
    if v:
        return Verdict(True)
    w = v.witness
    top, bottom = w.paths
    split = _split_pair_cycle(w.word, top, bottom)
    if split is None:
        raise InvariantError("pair cycle without cut points")
    return Verdict(False, split)


def check_circular_witness(c, u, v):
    """True if ``(u, v)`` refutes circularity of ``c``."""
    d = star_min_automaton(c)
    return d.accepts(u + v) and d.accepts(v + u) and not (d.accepts(u) and d.accepts(v))


# ---------------------------------------------------------------------------
# Very thin codes


def factor_automaton(c):
    """Dfa of the set of factors of words of ``c``."""
    c = as_code(c)
    a = rx.to_automaton(c.to_regex() if isinstance(c, FiniteCode) else c)
    a = trim(a).with_ends("all", "all")
    return determinize(a)


def is_very_thin(c):
    """Is some word of C* not a factor of any word of ``c``?

    Witness: the length-lexicographically least such word.
    """
    c = as_code(c)
    star = star_min_automaton(c)
    fact = factor_automaton(c)
    labels = sort_labels(set(star.alphabet) | set(fact.alphabet))
    start = (star.initial, fact.initial)
    parent = {start: None}
    queue = deque([start])
    while queue:
        s, f = queue.popleft()
        if s in star.terminal and f is None:
            out, node = [], (s, f)
            while parent[node] is not None:
                node, x = parent[node]
                out.append(x)
            return Verdict(True, "".join(reversed(out)))
        for x in labels:
            s2 = star.step(s, x)
            if s2 is None:
                continue
            f2 = None if f is None else fact.step(f, x)
            if (s2, f2) not in parent:
                parent[(s2, f2)] = ((s, f), x)
                queue.append((s2, f2))
    return Verdict(False, note="every word of C* is a factor of a code word")


# ---------------------------------------------------------------------------
# Generators


def dyck_code(depth, letters="ab", bars="AB"):
    """Words of the Dyck code ``D = a D* A | b D* B`` of length at most ``2 * depth``.

    Capital letters stand for the barred letters.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    max_len = 2 * depth
    # by_len[L]: words of D of length L; star_by_len[L]: words of D* of length L
    by_len = {}
    star_by_len = {0: [""]}
    for length in range(2, max_len + 1, 2):
        inner = star_by_len.get(length - 2, [])
        by_len[length] = sorted(x + d + y for x, y in zip(letters, bars) for d in inner)
        star_by_len[length] = sorted(
            d + rest
            for first in range(2, length + 1, 2)
            for d in by_len[first]
            for rest in star_by_len[length - first]
        )
    words = [w for length in sorted(by_len) for w in by_len[length]]
    return FiniteCode(words, tuple(letters) + tuple(bars))


def devolder_code(n_max):
    """``{ab} | {a b^n a b^(n+1) : 1 <= n <= n_max}``."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    return FiniteCode(["ab"] + ["a" + "b" * n + "a" + "b" * (n + 1) for n in range(1, n_max + 1)])

