"""Countable automata given lazily, two countable presentations of a sofic
shift, and the automata of beta-shifts.

A :class:`LazyAutomaton` is described by two functions giving the incoming
and outgoing edges of a state.  Finite pieces are cut out with
:func:`window`.  The Fiebig constructions start from a :class:`FiebigSeed`
computed on a finite strongly connected automaton and lay a bi-infinite
word along the integers, adding extra paths between chosen positions.

Line states are integers; states on the added paths are tuples
``("branch", n, offset)``.
"""
from __future__ import annotations

import bisect
import itertools
import threading
from collections import deque
from dataclasses import dataclass, field

from .automata import (
    Automaton,
    is_codeterministic,
    is_deterministic,
    is_strongly_connected,
    iter_accepted,
    path_labels,
    scc,
    shortest_cycle,
    shortest_path,
    sort_labels,
    square_nondiagonal,
)
from .errors import InvariantError


# ---------------------------------------------------------------------------
# Lazy automata


class LazyAutomaton:
    """A countable automaton explored on demand.

    ``successors(s)`` and ``predecessors(s)`` return tuples of
    ``(label, state)``.  Results are memoized behind a lock, so several
    threads may extract windows concurrently.
    """

    def __init__(self, basepoint, successors, predecessors, name=""):
        self.basepoint = basepoint
        self._succ = successors
        self._pred = predecessors
        self._out = {}
        self._in = {}
        self._lock = threading.Lock()
        self.name = name

    def out(self, s):
        with self._lock:
            if s not in self._out:
                self._out[s] = tuple(self._succ(s))
            return self._out[s]

    def into(self, s):
        with self._lock:
            if s not in self._in:
                self._in[s] = tuple(self._pred(s))
            return self._in[s]

    def neighbors(self, s):
        return [q for _, q in self.out(s)] + [p for _, p in self.into(s)]


@dataclass(frozen=True)
class Window:
    """A finite piece of a lazy automaton.

    ``automaton`` has the basepoint as state 0 (its only initial and terminal
    state) and ``names`` giving the lazy states.  ``boundary`` holds indices
    of states having a neighbor outside the window.
    """

    automaton: Automaton
    boundary: frozenset
    radius: int

    @property
    def states(self):
        return self.automaton.names

    def interior(self):
        keep = [k for k in range(self.automaton.n_states) if k not in self.boundary]
        return self.automaton.restrict(keep)


def _state_key(s):
    return (1, s[1], s[2]) if isinstance(s, tuple) else (0, s, 0)


def window(la, radius):
    """States within undirected distance ``radius`` of the basepoint, with all
    edges among them."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    dist = {la.basepoint: 0}
    queue = deque([la.basepoint])
    while queue:
        s = queue.popleft()
        if dist[s] == radius:
            continue
        for t in la.neighbors(s):
            if t not in dist:
                dist[t] = dist[s] + 1
                queue.append(t)
    order = sorted(dist, key=lambda s: (s != la.basepoint, _state_key(s)))
    index = {s: k for k, s in enumerate(order)}
    edges = []
    boundary = set()
    for s in order:
        for x, t in la.out(s):
            if t in index:
                edges.append((index[s], x, index[t]))
            else:
                boundary.add(index[s])
        for _, p in la.into(s):
            if p not in index:
                boundary.add(index[s])
    a = Automaton(len(order), edges, {0}, {0}, (), tuple(order))
    return Window(a, frozenset(boundary), radius)


@dataclass(frozen=True)
class WindowReport:
    """Checks run on a window.

    ``pair_cycles`` counts non-trivial strongly connected components of the
    non-diagonal square of the interior; ``foreign`` lists interior path
    labels (up to ``max_len``) missing from the reference language.
    """

    deterministic: bool
    codeterministic: bool
    pair_cycles: int
    foreign: tuple
    max_len: int

    @property
    def violations(self):
        return (not self.deterministic) + (not self.codeterministic) + self.pair_cycles + len(self.foreign)


def check_window(w, reference=None, max_len=8):
    """Determinism and co-determinism of the window, pair cycles in the
    interior, and (when ``reference`` is a finite automaton) inclusion of
    interior path labels in its factor language.

    Only states on cycles of the interior can project a pair cycle, so the
    square is built on those alone.
    """
    a = w.automaton.with_ends((), ())
    inner = w.interior()
    comps = scc(inner)
    cyclic = sorted(p for c in comps.nontrivial() for p in c)
    pairs = len(scc(square_nondiagonal(inner.restrict(cyclic))).nontrivial()) if cyclic else 0
    foreign = []
    if reference is not None:
        for n in range(1, max_len + 1):
            foreign += sorted(x for x in path_labels(inner, n) if not reference.has_path(x))
    return WindowReport(is_deterministic(a), is_codeterministic(a), pairs, tuple(foreign), max_len)


# ---------------------------------------------------------------------------
# Seeds


@dataclass(frozen=True)
class SingleWordCase:
    """Every infinite path of the base automaton carries the same label: the
    shift is coded by the single word ``word``."""

    word: str


@dataclass(frozen=True)
class FiebigSeed:
    """Words cut out of a strongly connected automaton around ``state``.

    ``y a`` and ``y b`` label paths from ``state``, ``c t`` and ``d t`` label
    paths into it, and ``y a u1 c t`` and ``y b u2 d t`` label cycles at it.
    """

    base: Automaton
    state: int
    y: str
    a: str
    b: str
    t: str
    c: str
    d: str
    u1: str
    u2: str

    @property
    def u(self):
        return self.a + self.u1 + self.c

    @property
    def v(self):
        return self.b + self.u2 + self.d

    @property
    def w(self):
        return self.t + self.y

    def cycle_labels(self):
        """Labels of all paths from ``state`` to itself, length-lexicographic."""
        a = self.base.with_ends({self.state}, {self.state})
        return iter_accepted(a)

    def check(self):
        """Replay the defining paths on the base automaton."""
        base, q = self.base, self.state
        ok = self.a != self.b and self.c != self.d
        ok &= q in base.read({q}, self.y + self.u + self.t)
        ok &= q in base.read({q}, self.y + self.v + self.t)
        return bool(ok)


def _subset_search(a, start, backward):
    """Shortest word ``z`` (read forward, or backward into ``start``) such
    that the set reached has edges with two distinct labels."""
    labels = sort_labels(a.alphabet)
    adj = a.into if backward else a.out

    def step(states, x):
        return frozenset(q for p in states for lab, q in adj[p] if lab == x)

    start = frozenset(start)
    parent = {start: None}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        present = sort_labels({lab for p in s for lab, _ in adj[p]})
        if len(present) >= 2:
            word, node = [], s
            while parent[node] is not None:
                node, x = parent[node]
                word.append(x)
            word.reverse()
            return s, word, present[0], present[1]
        for x in labels:
            t = step(s, x)
            if t and t not in parent:
                parent[t] = (s, x)
                queue.append(t)
    return None


def fiebig_seed(base, state=0):
    """Compute a seed at ``state`` of a strongly connected automaton.

    ``y`` is the shortest word after which two letters ``a < b`` can follow,
    ``t`` the shortest word before which two letters ``c < d`` can come, and
    ``u1``, ``u2`` shortest connecting words.  Reading is done on sets of
    states, so a nondeterministic base is handled too.
    """
    if not is_strongly_connected(base):
        raise ValueError("base automaton must be strongly connected")
    fwd = _subset_search(base, {state}, backward=False)
    if fwd is None:
        _, labels = shortest_cycle(base, [state])
        return SingleWordCase("".join(labels))
    after_y, y, a, b = fwd
    bwd = _subset_search(base, {state}, backward=True)
    if bwd is None:
        raise InvariantError("branching forward but not backward")
    before_t, t_rev, c, d = bwd
    t = "".join(reversed(t_rev))
    y = "".join(y)

    def connector(first, last):
        sources = {q for p in after_y for x, q in base.out[p] if x == first}
        targets = {p for s in before_t for x, p in base.into[s] if x == last}
        found = shortest_path(base, sources, targets)
        if found is None:
            raise InvariantError("base automaton is not strongly connected")
        return "".join(found[1])

    seed = FiebigSeed(base, state, y, a, b, t, c, d, connector(a, c), connector(b, d))
    if not seed.check():
        raise InvariantError("seed paths do not replay")
    return seed


# ---------------------------------------------------------------------------
# Words laid along the integers


class _Line:
    """A bi-infinite word stored as segments.

    The right part is ``right_period`` repeated forever, or segments from
    ``right_source``.  The left part comes from ``left_source``: segments
    listed from position 0 going left.  Each source yields ``(word, repeat,
    tag)``; tags are kept to locate marked segments.
    """

    def __init__(self, left_source, right_source=None, right_period=None):
        self._left = left_source
        self._right = right_source
        self.right_period = right_period
        # left segment k occupies [left_start[k], left_end[k])
        self.left_segments = []
        self.left_start = []
        self._neg_start = []
        self.right_segments = []
        self.right_start = []
        self._right_end = 0
        self._lock = threading.RLock()

    def _extend_left(self, position):
        while not self.left_start or self.left_start[-1] > position:
            word, repeat, tag = next(self._left)
            end = self.left_start[-1] if self.left_start else 0
            start = end - len(word) * repeat
            self.left_segments.append((word, repeat, tag, start, end))
            self.left_start.append(start)
            self._neg_start.append(-start)

    def _extend_right(self, position):
        while self._right_end <= position:
            word, repeat, tag = next(self._right)
            start = self._right_end
            self._right_end = start + len(word) * repeat
            self.right_segments.append((word, repeat, tag, start, self._right_end))
            self.right_start.append(start)

    def letter(self, i):
        """Label of the edge from ``i`` to ``i + 1``."""
        with self._lock:
            if i >= 0:
                if self.right_period is not None:
                    return self.right_period[i % len(self.right_period)]
                self._extend_right(i)
                k = bisect.bisect_right(self.right_start, i) - 1
                while self.right_segments[k][3] == self.right_segments[k][4]:
                    k += 1
                word, _, _, start, _ = self.right_segments[k]
                return word[(i - start) % len(word)]
            self._extend_left(i)
            # starts decrease; the segment holding i is the first with start <= i
            k = bisect.bisect_left(self._neg_start, -i)
            word, _, _, start, _ = self.left_segments[k]
            return word[(i - start) % len(word)]

    def ensure_left(self, position):
        with self._lock:
            self._extend_left(position)

    def ensure_right(self, position):
        with self._lock:
            self._extend_right(position)


class _ZigzagCycles:
    """``w(n)`` for integer ``n``: the cycle labels laid out 0, 1, -1, 2, -2, ..."""

    def __init__(self, seed):
        self._it = iter(seed.cycle_labels())
        self._seen = []
        self._lock = threading.Lock()

    def __call__(self, n):
        k = 2 * n - 1 if n > 0 else -2 * n
        with self._lock:
            while len(self._seen) <= k:
                self._seen.append(next(self._it))
            return self._seen[k]


class _Cycles:
    """``w(i)`` for ``i >= 1``: the i-th cycle label in length-lexicographic order."""

    def __init__(self, seed):
        self._it = iter(seed.cycle_labels())
        self._seen = []
        self._lock = threading.Lock()

    def __call__(self, i):
        with self._lock:
            while len(self._seen) < i:
                self._seen.append(next(self._it))
            return self._seen[i - 1]


class _LineAutomaton:
    """Shared plumbing: a line plus finitely-branching added paths."""

    def __init__(self, line, v):
        self.line = line
        self.v = v

    # to be provided: branch_from(i) -> n or None, branch_to(i) -> n or None,
    # endpoints(n) -> (src, dst)

    def successors(self, s):
        v = self.v
        if isinstance(s, tuple):
            _, n, k = s
            src, dst = self.endpoints(n)
            nxt = ("branch", n, k + 1) if k + 1 < len(v) else dst
            return [(v[k], nxt)]
        out = [(self.line.letter(s), s + 1)]
        n = self.branch_from(s)
        if n is not None:
            _, dst = self.endpoints(n)
            out.append((v[0], ("branch", n, 1) if len(v) > 1 else dst))
        return sorted(out, key=lambda e: e[0])

    def predecessors(self, s):
        v = self.v
        if isinstance(s, tuple):
            _, n, k = s
            src, _ = self.endpoints(n)
            prev = ("branch", n, k - 1) if k > 1 else src
            return [(v[k - 1], prev)]
        out = [(self.line.letter(s - 1), s - 1)]
        n = self.branch_to(s)
        if n is not None:
            src, _ = self.endpoints(n)
            out.append((v[-1], ("branch", n, len(v) - 1) if len(v) > 1 else src))
        return sorted(out, key=lambda e: e[0])

    def lazy(self, name):
        return LazyAutomaton(0, self.successors, self.predecessors, name)


class ReversibleConstruction(_LineAutomaton):
    """Line ``... u w'(-1) u . w'(0) u w'(1) u ...`` with ``w'(n) = t w(n) y``,
    and for each ``n >= 0`` a path labeled ``v`` from the end of ``w'(n)`` to
    the start of ``w'(-n)``."""

    def __init__(self, seed):
        self.seed = seed
        self.cycles = _ZigzagCycles(seed)
        u, t, y = seed.u, seed.t, seed.y

        def right():
            for n in itertools.count(0):
                yield t + self.cycles(n) + y, 1, ("w", n)
                yield u, 1, ("u", n)

        def left():
            for n in itertools.count(1):
                yield u, 1, ("u", -n)
                yield t + self.cycles(-n) + y, 1, ("w", -n)

        super().__init__(_Line(left(), right()), seed.v)
        self._p = {}
        self._q = {0: 0}
        self._p_at = {}
        self._q_at = {0: 0}

    def _grow_right(self, position):
        line = self.line
        line.ensure_right(position)
        for _, _, tag, _, end in line.right_segments:
            if tag[0] == "w" and tag[1] not in self._p:
                self._p[tag[1]] = end
                self._p_at[end] = tag[1]

    def _grow_left(self, position):
        line = self.line
        line.ensure_left(position)
        for _, _, tag, start, _ in line.left_segments:
            if tag[0] == "w" and -tag[1] not in self._q:
                self._q[-tag[1]] = start
                self._q_at[start] = -tag[1]

    def p(self, n):
        """Position right after ``w'(n)``."""
        while n not in self._p:
            self._grow_right(self.line._right_end)
        return self._p[n]

    def q(self, n):
        """Position right before ``w'(-n)``."""
        while n not in self._q:
            self._grow_left(self.line.left_start[-1] - 1 if self.line.left_start else -1)
        return self._q[n]

    def branch_from(self, i):
        if i < 0:
            return None
        self._grow_right(i)
        return self._p_at.get(i)

    def branch_to(self, i):
        if i > 0:
            return None
        self._grow_left(i - 1)
        return self._q_at.get(i)

    def endpoints(self, n):
        return self.p(n), self.q(n)


def fiebig_reversible(seed):
    """Countable strongly connected reversible automaton for the shift of the
    seed's base automaton.  Basepoint: position 0."""
    return ReversibleConstruction(seed).lazy("reversible")


@dataclass
class Schedule:
    """Exponents and positions of the strongly unambiguous construction.

    Lists are indexed from 0 for ``i = 1``.  ``s_len[i-1]`` is ``|s_i|``,
    ``m[i-1]`` the least ``m_i`` with ``(m_i - 1)|uw| >= 2|s_i|``,
    ``k[i-1] = m_1 + i - 1``, ``N`` and ``M`` the endpoints of the added
    ``v``-paths.
    """

    uw_len: int
    m: list = field(default_factory=list)
    k: list = field(default_factory=list)
    s_len: list = field(default_factory=list)
    N: list = field(default_factory=list)
    M: list = field(default_factory=list)


class StrongConstruction(_LineAutomaton):
    """Line ``... (uw)^m2 v w(-2) (uw)^m1 v w(-1) u . (wu)^oo`` with paths
    labeled ``v`` from ``M_i`` to ``N_i``."""

    def __init__(self, seed):
        self.seed = seed
        self.cycles = _Cycles(seed)
        u, v, w = seed.u, seed.v, seed.w
        self.schedule = Schedule(len(u) + len(w))
        sched = self.schedule
        self._n_at = {}

        def block(i):
            return seed.t + self.cycles(i) + seed.y

        def left():
            yield u, 1, ("u", 0)
            i = 1
            s_len = 2 * len(v) + len(block(1))
            while True:
                yield block(i), 1, ("w", i)
                yield v, 1, ("v", i)
                m = 1 + -(-2 * s_len // sched.uw_len)
                sched.s_len.append(s_len)
                sched.m.append(m)
                sched.k.append(sched.m[0] + i - 1)
                sched.M.append(sched.k[-1] * sched.uw_len + len(w))
                yield u + w, m, ("uw", i)
                s_len = len(v) + len(block(i + 1)) + m * sched.uw_len + s_len
                i += 1

        super().__init__(_Line(left(), right_period=w + u), v)

    def _grow(self, count):
        """Generate the schedule up to ``i = count``."""
        line = self.line
        while len(self.schedule.N) < count:
            line.ensure_left(line.left_start[-1] - 1 if line.left_start else -1)
            self._collect()

    def _collect(self):
        for word, rep, tag, start, end in self.line.left_segments:
            if tag[0] == "uw" and tag[1] > len(self.schedule.N):
                n_pos = start + len(self.seed.u)
                self.schedule.N.append(n_pos)
                self._n_at[n_pos] = tag[1]

    def N(self, i):
        self._grow(i)
        return self.schedule.N[i - 1]

    def M(self, i):
        self._grow(i)
        return self.schedule.M[i - 1]

    def branch_from(self, pos):
        if pos <= 0:
            return None
        period = self.schedule.uw_len
        self._grow(1)
        rest = pos - len(self.seed.w)
        if rest < 0 or rest % period:
            return None
        i = rest // period - self.schedule.m[0] + 1
        return i if i >= 1 else None

    def branch_to(self, pos):
        if pos >= 0:
            return None
        while not self.schedule.N or self.schedule.N[-1] > pos:
            self._grow(len(self.schedule.N) + 1)
        return self._n_at.get(pos)

    def endpoints(self, n):
        return self.M(n), self.N(n)


def fiebig_strongly_unambiguous(seed):
    """Countable strongly connected automaton, reversible and strongly
    unambiguous, for the shift of the seed's base automaton.  Basepoint:
    position 0, the start of ``(wu)^oo``."""
    return StrongConstruction(seed).lazy("strong")


def schedule(seed, count):
    """First ``count`` entries of the schedule of the strong construction."""
    c = StrongConstruction(seed)
    c._grow(count)
    s = c.schedule
    return Schedule(s.uw_len, s.m[:count], s.k[:count], s.s_len[:count], s.N[:count], s.M[:count])


def construction(seed, mode):
    if isinstance(seed, SingleWordCase):
        w = seed.word
        edges = [(k, w[k], (k + 1) % len(w)) for k in range(len(w))]
        a = Automaton(len(w), edges, {0}, {0})
        return LazyAutomaton(0, lambda s: [(x, q) for x, q in a.out[s]],
                             lambda s: [(x, p) for x, p in a.into[s]], "single word")
    if mode == "reversible":
        return fiebig_reversible(seed)
    if mode == "strong":
        return fiebig_strongly_unambiguous(seed)
    raise ValueError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# Beta-shifts


@dataclass(frozen=True)
class BetaSpec:
    """Generating sequence ``preperiod`` followed by ``period`` repeated."""

    preperiod: tuple
    period: tuple

    def __post_init__(self):
        pre = tuple(int(x) for x in self.preperiod)
        per = tuple(int(x) for x in self.period)
        if not per:
            raise ValueError("period must not be empty")
        if not any(per):
            raise ValueError("period must not be all zeros")
        if any(x < 0 or x > 9 for x in pre + per):
            raise ValueError("digits must be between 0 and 9")
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)
        # every shift of the sequence must be lexicographically <= itself
        span = 2 * len(pre) + 3 * len(per)
        g = self.digits(span + len(pre) + len(per))
        for k in range(1, len(pre) + len(per)):
            if g[k:k + span] > g[:span]:
                raise ValueError("sequence is not the expansion of 1 for any beta > 1")

    @classmethod
    def from_expansion(cls, digits, period=()):
        """Generating sequence from an expansion of 1.

        A finite expansion ``x1 ... xk`` (trailing zeros dropped, ``xk != 0``)
        gives ``(x1 ... x(k-1) (xk - 1))`` repeated; an eventually periodic
        one is used as given.
        """
        digits = tuple(int(x) for x in digits)
        period = tuple(int(x) for x in period)
        if period and any(period):
            return cls(digits, period)
        while digits and digits[-1] == 0:
            digits = digits[:-1]
        if not digits:
            raise ValueError("expansion of 1 cannot be zero")
        return cls((), digits[:-1] + (digits[-1] - 1,))

    def digits(self, n):
        """First ``n`` terms of the generating sequence."""
        out = list(self.preperiod)
        while len(out) < n:
            out.extend(self.period)
        return tuple(out[:n])

    @property
    def max_digit(self):
        return max(self.preperiod + self.period)


def beta_automaton(spec):
    """Chain ``0 -> 1 -> ...`` folded onto the period.

    State ``i`` has a forward edge labeled ``g(i+1)`` to ``i + 1`` (the last
    state goes back to the start of the period) and edges labeled
    ``0 .. g(i+1) - 1`` back to state 0.  Labels are digit characters.
    """
    g = spec.preperiod + spec.period
    n = len(g)
    edges = []
    for i, digit in enumerate(g):
        nxt = i + 1 if i + 1 < n else len(spec.preperiod)
        edges.append((i, str(digit), nxt))
        edges.extend((i, str(x), 0) for x in range(digit))
    alphabet = tuple(str(x) for x in range(spec.max_digit + 1))
    every = range(n)
    return Automaton(n, edges, every, every, alphabet)


def beta_admissible(word, spec):
    """Every suffix of ``word`` is at most the prefix of the generating
    sequence of the same length, in lexicographic order."""
    digits = tuple(int(x) for x in word)
    g = spec.digits(len(digits))
    return all(digits[k:] <= g[:len(digits) - k] for k in range(len(digits)))
