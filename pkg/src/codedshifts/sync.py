"""Constants, synchronized automata and the recoding of a synchronized
prefix code into an unambiguous one.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from . import regex as rx
from .automata import (
    Automaton,
    Dfa,
    minimal_dfa,
    path_labels,
    reachable,
    scc,
    sort_labels,
)
from .codes import as_code, is_prefix_code, star_min_automaton
from .errors import BudgetExceeded, InvariantError, NotSynchronizedError
from .shifts import SoficShift
from .unambiguity import is_strongly_unambiguous_at
from .verdict import Verdict


EXHAUSTIVE_ORDER = 6


@dataclass(frozen=True)
class Constant:
    """A word all of whose paths in the automaton end in ``sink``."""

    word: str
    sink: int


def image(d, states, w):
    """Set ``{p . w : p in states, p . w defined}`` for a Dfa."""
    out = set()
    for p in states:
        q = d.run(w, p)
        if q is not None:
            out.add(q)
    return frozenset(out)


def is_constant(d, w):
    """True if ``w`` labels some path of ``d`` and all such paths end in one state."""
    return len(image(d, range(d.n_states), w)) == 1


def default_max_len(d):
    return 2 * d.n_states ** 2


def _merge_search(d, states, max_len):
    """Shortest nonempty word sending ``states`` to a single state, by
    breadth-first search over image sets.  Letters are tried in decreasing
    order, so among the shortest words the lexicographically greatest wins."""
    labels = sort_labels(d.alphabet)[::-1]
    start = frozenset(states)
    parent = {start: None}
    queue = deque([(start, 0)])
    while queue:
        s, depth = queue.popleft()
        if depth == max_len:
            continue
        for x in labels:
            t = frozenset(q for q in (d.step(p, x) for p in s) if q is not None)
            if not t:
                continue
            if len(t) == 1:
                word, node = [x], s
                while parent[node] is not None:
                    node, lab = parent[node]
                    word.append(lab)
                return "".join(reversed(word)), next(iter(t))
            if t not in parent:
                parent[t] = (s, x)
                queue.append((t, depth + 1))
    return None


def find_constant(d, max_len=None):
    """A shortest constant of ``d``, or None.

    Image sets of all states are explored breadth first.  Ties between
    constants of minimal length go to the lexicographically greatest one
    (for ``{ab, ba}`` this is ``bb``).  ``max_len`` defaults to ``2 * n**2``.
    """
    if max_len is None:
        max_len = default_max_len(d)
    found = _merge_search(d, range(d.n_states), max_len)
    if found is None:
        return None
    return Constant(*found)


def shortest_constants(d, max_len=None):
    """All constants of minimal length, in lexicographic order."""
    first = find_constant(d, max_len)
    if first is None:
        return []
    n = len(first.word)
    a = d.to_automaton()
    out = []
    for w in sorted(path_labels(a, n)):
        s = image(d, range(d.n_states), w)
        if len(s) == 1:
            out.append(Constant(w, next(iter(s))))
    return out


def is_synchronized_code(c, max_len=None):
    """Is ``c`` a prefix code whose minimal automaton of C* has a constant?

    With ``max_len`` None all image sets are explored, so False is exact.
    Witness: the :class:`Constant` found, or the prefix pair when ``c`` is
    not a prefix code.
    """
    c = as_code(c)
    prefix = is_prefix_code(c)
    if not prefix:
        return Verdict(False, prefix.witness, "not a prefix code")
    d = star_min_automaton(c)
    found = _merge_search(d, range(d.n_states), float("inf") if max_len is None else max_len)
    if found is not None:
        return Verdict(True, Constant(*found))
    if max_len is None:
        return Verdict(False, note="no word merges all states")
    return Verdict(None, note=f"no constant of length <= {max_len}")


def fischer_subset(d, w):
    """Deterministic automaton on the minimal-size subsets ``I(wu)``.

    ``I(w)`` is the set of states ending a path labeled ``w``.  Subsets
    reachable from it are explored; those of minimal cardinality form the
    states of the result, started from the first one found.  ``names`` are
    the subsets as sorted tuples; the start subset is initial and terminal.
    """
    start = image(d, range(d.n_states), w)
    if not start:
        raise ValueError(f"no path labeled {w!r}")
    labels = sort_labels(d.alphabet)
    order = [start]
    seen = {start}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        for x in labels:
            t = image(d, s, x)
            if t and t not in seen:
                seen.add(t)
                order.append(t)
                queue.append(t)
    size = min(len(s) for s in order)
    base = next(s for s in order if len(s) == size)
    states = [base]
    index = {base: 0}
    queue = deque([base])
    edges = []
    while queue:
        s = queue.popleft()
        for x in labels:
            t = image(d, s, x)
            if not t:
                continue
            if len(t) != size:
                raise InvariantError("minimal subsets are not closed under transitions")
            if t not in index:
                index[t] = len(states)
                states.append(t)
                queue.append(t)
            edges.append((index[s], x, index[t]))
    names = tuple(tuple(sorted(s)) for s in states)
    return Automaton(len(states), edges, {0}, {0}, labels, names)


def language_dfa(x):
    """Minimal automaton of the language of a shift."""
    if isinstance(x, Dfa):
        return x
    a = x.presentation if isinstance(x, SoficShift) else x
    return minimal_dfa(a.with_ends("all", "all"))


def maximal_components(d):
    """Strongly connected components closed under transitions."""
    a = d.to_automaton()
    comps = scc(a)
    out = []
    for k, members in enumerate(comps.components):
        if comps.trivial[k]:
            continue
        if all(comps.index[q] == k for p in members for _, q in a.out[p]):
            out.append(members)
    return out


def is_synchronized_shift(x):
    """Is the shift a synchronized coded shift?

    True iff the minimal automaton of its language has exactly one maximal
    strongly connected component and some word merges all of its states.
    Witness: ``{"component": states, "word": merging word}``.
    """
    d = language_dfa(x)
    maximal = maximal_components(d)
    if len(maximal) != 1:
        return Verdict(False, {"components": maximal}, f"{len(maximal)} maximal components")
    comp = maximal[0]
    found = _merge_search(d, comp, default_max_len(d) + len(comp))
    if found is None:
        return Verdict(False, {"component": comp}, "no merging word")
    return Verdict(True, {"component": comp, "word": found[0], "state": found[1]})


# ---------------------------------------------------------------------------
# Recoding


@dataclass(frozen=True)
class RecodedPresentation:
    """Result of :func:`recode_unambiguous`.

    ``product`` has states ``(u, p)`` (its ``names``) with ``u`` a word of
    length ``len(constant.word)`` and ``p`` a state of ``star_dfa``.
    ``first_return_automaton`` is the strongly connected component of the
    anchor with the anchor as only initial and terminal state; its accepted
    language is ``code*``.
    """

    constant: Constant
    star_dfa: Dfa
    product: Automaton
    anchor: int
    first_return_automaton: Automaton
    anchor_in_component: int
    code: rx.Regex

    @property
    def anchor_name(self):
        return self.product.names[self.anchor]


def first_returns_expression(a, anchor):
    """Expression for labels of paths ``anchor -> anchor`` that do not visit
    ``anchor`` in between.

    With at most ``EXHAUSTIVE_ORDER`` other states every elimination order
    is tried and the shortest result kept (ties by text).
    """
    comps = scc(a)
    if comps.trivial[comps.index[anchor]]:
        raise ValueError(f"state {anchor} lies in a trivial component")
    n = a.n_states
    # split the anchor: keep its out-edges, send its in-edges to a fresh state
    edges = []
    for p, x, q in a.edges:
        edges.append((p, x, n if q == anchor else q))
    split = Automaton(n + 1, edges, {anchor}, {n}, a.alphabet)
    order = [k for k in range(n) if k != anchor]
    if len(order) > EXHAUSTIVE_ORDER:
        return rx.from_automaton(split, order=order + [anchor, n])
    found = (rx.from_automaton(split, order=list(o) + [anchor, n]) for o in itertools.permutations(order))
    return min(found, key=lambda r: (len(str(r)), str(r)))


def recode_unambiguous(c, max_constant_len=None, constant=None, budget=None):
    """Re-present the shift coded by the prefix code ``c`` with a code C'
    coding it unambiguously.

    A constant ``w`` of the minimal automaton of C* is found (or taken from
    ``constant``).  The product automaton on pairs ``(u, p)`` tracks the last
    ``len(w)`` letters next to the state of C*; the pair ``(w, q_w)`` is
    entered exactly after reading ``w``, and C' is the set of first returns
    to it.  ``budget`` caps the number of product states.
    """
    c = as_code(c)
    prefix = is_prefix_code(c)
    if not prefix:
        raise ValueError(f"not a prefix code: {prefix.witness[0]!r} is a prefix of {prefix.witness[1]!r}")
    d = star_min_automaton(c)
    if constant is None:
        found = find_constant(d, max_constant_len)
        if found is None:
            bound = default_max_len(d) if max_constant_len is None else max_constant_len
            raise NotSynchronizedError(f"not synchronized within bound {bound}")
    else:
        s = image(d, range(d.n_states), constant)
        if len(s) != 1:
            raise ValueError(f"{constant!r} is not a constant")
        found = Constant(constant, next(iter(s)))
    w = found.word
    n = len(w)
    labels = sort_labels(d.alphabet)
    # pairs (u, p) such that a path labeled u ends in p
    pairs = {("", p) for p in range(d.n_states)}
    for _ in range(n):
        pairs = {(u + x, q) for u, p in pairs for x in labels for q in [d.step(p, x)] if q is not None}
    if budget is not None and len(pairs) > budget:
        raise BudgetExceeded(f"{len(pairs)} product states exceed budget {budget}")
    states = sorted(pairs, key=lambda s: (s[0], s[1]))
    index = {s: i for i, s in enumerate(states)}
    edges = []
    for u, p in states:
        for x in labels:
            q = d.step(p, x)
            if q is not None:
                edges.append((index[(u, p)], x, index[((u + x)[1:], q)]))
    anchors = [s for s in states if s[0] == w]
    if len(anchors) != 1 or anchors[0][1] != found.sink:
        raise InvariantError(f"expected one anchor for constant {w!r}, found {anchors}")
    product = Automaton(len(states), edges, (), (), labels, tuple(states))
    anchor = index[anchors[0]]
    if len(reachable(product, [anchor], backward=True)) != product.n_states:
        raise InvariantError("anchor is not reachable from every state")
    component = sorted(reachable(product, [anchor]) & reachable(product, [anchor], backward=True))
    first = product.restrict(component, initial={anchor}, terminal={anchor})
    local = component.index(anchor)
    expression = first_returns_expression(first, local)
    check = is_strongly_unambiguous_at(first, local)
    if not check:
        raise InvariantError(f"first-return automaton is ambiguous: {check.witness}")
    return RecodedPresentation(found, d, product, anchor, first, local, expression)
