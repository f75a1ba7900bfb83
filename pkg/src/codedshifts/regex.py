"""Rational expressions over one-character letters.

Syntax: ``|`` for union, juxtaposition for product, postfix ``*`` for star,
parentheses, ``~`` for the empty word and ``∅`` for the empty set.  Trees are
built through :func:`union`, :func:`concat` and :func:`star`, which flatten
and simplify, so structurally equal languages often print identically.
Equality of languages is decided on minimal automata, never on syntax.
"""
from __future__ import annotations

from dataclasses import dataclass

from .automata import Automaton, accepted_words, equivalent, iter_accepted, minimal_dfa, sort_labels
from .errors import ParseError

EPSILON_CHAR = "~"
EMPTY_CHAR = "∅"
OPERATORS = set("|*()") | {EPSILON_CHAR, EMPTY_CHAR}


class Regex:
    """Base class of expression nodes."""

    def __str__(self):
        return _show(self, 0)

    def __repr__(self):
        return f"Regex({str(self)!r})"

    def nullable(self):
        raise NotImplementedError

    def letters(self):
        raise NotImplementedError


@dataclass(frozen=True, repr=False)
class Empty(Regex):
    def nullable(self):
        return False

    def letters(self):
        return set()


@dataclass(frozen=True, repr=False)
class Epsilon(Regex):
    def nullable(self):
        return True

    def letters(self):
        return set()


@dataclass(frozen=True, repr=False)
class Letter(Regex):
    symbol: str

    def nullable(self):
        return False

    def letters(self):
        return {self.symbol}


@dataclass(frozen=True, repr=False)
class Union(Regex):
    parts: tuple

    def nullable(self):
        return any(p.nullable() for p in self.parts)

    def letters(self):
        return set().union(*(p.letters() for p in self.parts))


@dataclass(frozen=True, repr=False)
class Concat(Regex):
    parts: tuple

    def nullable(self):
        return all(p.nullable() for p in self.parts)

    def letters(self):
        return set().union(*(p.letters() for p in self.parts))


@dataclass(frozen=True, repr=False)
class Star(Regex):
    inner: Regex

    def nullable(self):
        return True

    def letters(self):
        return self.inner.letters()


EMPTY = Empty()
EPSILON = Epsilon()


def union(*parts):
    flat = []
    for p in parts:
        if isinstance(p, Union):
            flat.extend(p.parts)
        elif not isinstance(p, Empty):
            flat.append(p)
    if sum(p.nullable() for p in flat) > 1:
        # ~ is redundant next to another nullable branch
        flat = [p for p in flat if not isinstance(p, Epsilon)]
    unique = sorted(set(flat), key=lambda r: (isinstance(r, Epsilon) is False, str(r)))
    if not unique:
        return EMPTY
    if len(unique) == 1:
        return unique[0]
    return Union(tuple(unique))


def concat(*parts):
    flat = []
    for p in parts:
        if isinstance(p, Empty):
            return EMPTY
        if isinstance(p, Concat):
            flat.extend(p.parts)
        elif not isinstance(p, Epsilon):
            flat.append(p)
    if not flat:
        return EPSILON
    if len(flat) == 1:
        return flat[0]
    return Concat(tuple(flat))


def star(r):
    if isinstance(r, (Empty, Epsilon)):
        return EPSILON
    if isinstance(r, Star):
        return r
    return Star(r)


def word(w):
    """Expression for a single word."""
    return concat(*(Letter(x) for x in w))


def words(ws):
    return union(*(word(w) for w in ws))


def _show(r, prec):
    # prec: 0 union context, 1 concat context, 2 star operand
    if isinstance(r, Empty):
        return EMPTY_CHAR
    if isinstance(r, Epsilon):
        return EPSILON_CHAR
    if isinstance(r, Letter):
        return r.symbol
    if isinstance(r, Union):
        s = "|".join(_show(p, 0) for p in r.parts)
        return f"({s})" if prec > 0 else s
    if isinstance(r, Concat):
        s = "".join(_show(p, 1) for p in r.parts)
        return f"({s})" if prec > 1 else s
    if isinstance(r, Star):
        return _show(r.inner, 2) + "*"
    raise TypeError(r)


# ---------------------------------------------------------------------------
# Parsing


def parse_regex(text, line=None):
    """Parse an expression; whitespace is ignored."""
    tokens = [c for c in text if not c.isspace()]
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def fail(msg):
        raise ParseError(f"{msg} at position {pos} in {text.strip()!r}", line)

    def parse_union():
        nonlocal pos
        branches = [parse_concat()]
        while peek() == "|":
            pos += 1
            branches.append(parse_concat())
        return union(*branches)

    def parse_concat():
        items = []
        while peek() is not None and peek() not in "|)":
            items.append(parse_postfix())
        if not items:
            fail("empty branch")
        return concat(*items)

    def parse_postfix():
        nonlocal pos
        r = parse_atom()
        while peek() == "*":
            pos += 1
            r = star(r)
        return r

    def parse_atom():
        nonlocal pos
        c = peek()
        if c == "(":
            pos += 1
            r = parse_union()
            if peek() != ")":
                fail("missing ')'")
            pos += 1
            return r
        if c == "*":
            fail("'*' without operand")
        pos += 1
        if c == EPSILON_CHAR:
            return EPSILON
        if c == EMPTY_CHAR:
            return EMPTY
        return Letter(c)

    if not tokens:
        raise ParseError("empty expression", line)
    result = parse_union()
    if pos != len(tokens):
        fail(f"unexpected {peek()!r}")
    return result


# ---------------------------------------------------------------------------
# Automata


def _positions(r):
    """Return (nullable, first, last, follow, letter_of_position)."""
    positions = []

    def walk(node):
        if isinstance(node, (Empty, Epsilon)):
            return isinstance(node, Epsilon), set(), set(), {}
        if isinstance(node, Letter):
            k = len(positions)
            positions.append(node.symbol)
            return False, {k}, {k}, {}
        if isinstance(node, Union):
            null, first, last, follow = False, set(), set(), {}
            for p in node.parts:
                n2, f2, l2, fo2 = walk(p)
                null |= n2
                first |= f2
                last |= l2
                follow.update(fo2)
            return null, first, last, follow
        if isinstance(node, Concat):
            null, first, last, follow = True, set(), set(), {}
            for p in node.parts:
                n2, f2, l2, fo2 = walk(p)
                follow.update(fo2)
                for k in last:
                    follow.setdefault(k, set()).update(f2)
                if null:
                    first |= f2
                last = l2 | last if n2 else set(l2)
                null = null and n2
            return null, first, last, follow
        if isinstance(node, Star):
            n2, first, last, follow = walk(node.inner)
            for k in last:
                follow.setdefault(k, set()).update(first)
            return True, first, last, follow
        raise TypeError(node)

    null, first, last, follow = walk(r)
    return null, first, last, follow, positions


def to_automaton(r, alphabet=()):
    """Position automaton: state 0 is initial, state k+1 is position k."""
    null, first, last, follow, positions = _positions(r)
    edges = [(0, positions[k], k + 1) for k in sorted(first)]
    for k in sorted(follow):
        edges.extend((k + 1, positions[j], j + 1) for j in sorted(follow[k]))
    terminal = {k + 1 for k in last} | ({0} if null else set())
    alphabet = tuple(alphabet) or sort_labels(positions)
    return Automaton(len(positions) + 1, edges, {0}, terminal, alphabet)


def from_automaton(a, order=None):
    """Expression for the language of ``a`` by state elimination.

    Fresh source and sink states are added; original states are removed in
    ``order`` (default: increasing index).
    """
    n = a.n_states
    src, dst = n, n + 1
    table = {}

    def add(p, q, r):
        table[(p, q)] = union(table.get((p, q), EMPTY), r)

    for p, x, q in a.edges:
        add(p, q, Letter(x) if isinstance(x, str) else Letter(str(x)))
    for p in a.initial:
        add(src, p, EPSILON)
    for p in a.terminal:
        add(p, dst, EPSILON)
    for k in (range(n) if order is None else order):
        loop = table.pop((k, k), EMPTY)
        loop_star = star(loop)
        ins = [(p, r) for (p, q), r in table.items() if q == k]
        outs = [(q, r) for (p, q), r in table.items() if p == k]
        for p, _ in ins:
            del table[(p, k)]
        for q, _ in outs:
            del table[(k, q)]
        for p, r_in in ins:
            for q, r_out in outs:
                add(p, q, concat(r_in, loop_star, r_out))
    return table.get((src, dst), EMPTY)


def same_language(r, s):
    """Exact equality of the languages of two expressions."""
    alphabet = sort_labels(r.letters() | s.letters())
    return equivalent(to_automaton(r, alphabet), to_automaton(s, alphabet))


def min_dfa(r):
    return minimal_dfa(to_automaton(r))


def enumerate_words(r, max_len):
    """Words of the language with length at most ``max_len``."""
    return accepted_words(to_automaton(r), max_len)


def shortest_words(r, count):
    out = []
    for w in iter_accepted(to_automaton(r)):
        out.append(w)
        if len(out) == count:
            break
    return out


def has_operators(text):
    return any(c in OPERATORS for c in text)

