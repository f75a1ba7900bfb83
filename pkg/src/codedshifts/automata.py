"""Finite labeled automata and the graph algorithms built on them.

States are dense integers ``0 .. n_states - 1``.  Labels are any hashable
value; in practice they are one-character strings, except for automata over
the edge alphabet of another automaton, whose labels are edge triples.  A word
over one-character labels is a ``str``; helpers that build words from labels
go through :func:`join` so that other label types produce tuples instead.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .errors import ParseError

Edge = tuple  # (src, label, dst)


def label_key(label):
    """Sort key putting labels of mixed types in a stable order."""
    return (type(label).__name__, label) if isinstance(label, (str, int)) else ("~", repr(label))


def sort_labels(labels):
    return tuple(sorted(set(labels), key=label_key))


def join(labels):
    """Build a word from a sequence of labels."""
    labels = tuple(labels)
    if all(isinstance(x, str) for x in labels):
        return "".join(labels)
    return labels


@dataclass(frozen=True)
class Automaton:
    """A finite labeled multigraph with sets of initial and terminal states.

    Parallel edges are allowed only when their labels differ; an exact
    duplicate ``(src, label, dst)`` raises ``ValueError``.  ``names`` is
    optional display metadata, one entry per state.
    """

    n_states: int
    edges: tuple
    initial: frozenset = frozenset()
    terminal: frozenset = frozenset()
    alphabet: tuple = ()
    names: tuple | None = None

    def __post_init__(self):
        edges = tuple((int(p), x, int(q)) for p, x, q in self.edges)
        set_ = object.__setattr__
        set_(self, "edges", edges)
        set_(self, "initial", frozenset(self.initial))
        set_(self, "terminal", frozenset(self.terminal))
        labels = {x for _, x, _ in edges}
        if self.alphabet:
            alphabet = tuple(self.alphabet)
            missing = labels - set(alphabet)
            if missing:
                raise ValueError(f"labels {sorted(map(repr, missing))} not in alphabet")
            if len(set(alphabet)) != len(alphabet):
                raise ValueError("duplicate symbols in alphabet")
        else:
            alphabet = sort_labels(labels)
        set_(self, "alphabet", alphabet)
        n = self.n_states
        if n < 0:
            raise ValueError("negative state count")
        seen = set()
        for e in edges:
            p, _, q = e
            if not (0 <= p < n and 0 <= q < n):
                raise ValueError(f"edge {e} has an endpoint outside 0..{n - 1}")
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        for s in self.initial | self.terminal:
            if not 0 <= s < n:
                raise ValueError(f"state {s} outside 0..{n - 1}")
        if self.names is not None:
            if len(self.names) != n:
                raise ValueError("names must have one entry per state")
            set_(self, "names", tuple(self.names))

    @cached_property
    def out(self):
        """``out[p]`` lists ``(label, dst)`` pairs sorted by label."""
        out = [[] for _ in range(self.n_states)]
        for p, x, q in self.edges:
            out[p].append((x, q))
        for lst in out:
            lst.sort(key=lambda e: (label_key(e[0]), e[1]))
        return out

    @cached_property
    def into(self):
        """``into[q]`` lists ``(label, src)`` pairs sorted by label."""
        into = [[] for _ in range(self.n_states)]
        for p, x, q in self.edges:
            into[q].append((x, p))
        for lst in into:
            lst.sort(key=lambda e: (label_key(e[0]), e[1]))
        return into

    @cached_property
    def _delta(self):
        d = {}
        for p, x, q in self.edges:
            d.setdefault((p, x), []).append(q)
        return d

    def targets(self, p, label):
        return self._delta.get((p, label), [])

    def name(self, p):
        return self.names[p] if self.names is not None else p

    def index_of(self, name):
        """State index carrying display name ``name``."""
        if self.names is None:
            return name
        return self.names.index(name)

    def step_set(self, states, label):
        return frozenset(q for p in states for q in self.targets(p, label))

    def read(self, states, word):
        """Set of states reached from ``states`` along ``word``."""
        current = frozenset(states)
        for x in word:
            current = self.step_set(current, x)
            if not current:
                break
        return current

    def accepts(self, word):
        return bool(self.read(self.initial, word) & self.terminal)

    def has_path(self, word, start=None):
        """True if ``word`` labels a path (from ``start`` or from anywhere)."""
        states = range(self.n_states) if start is None else [start]
        return bool(self.read(states, word)) or (len(word) == 0 and self.n_states > 0)

    def restrict(self, states, initial=None, terminal=None):
        """Induced sub-automaton on ``states``, renumbered in the given order."""
        states = list(states)
        index = {s: k for k, s in enumerate(states)}
        edges = [(index[p], x, index[q]) for p, x, q in self.edges if p in index and q in index]
        initial = self.initial if initial is None else initial
        terminal = self.terminal if terminal is None else terminal
        names = tuple(self.name(s) for s in states)
        return Automaton(
            len(states), edges,
            frozenset(index[s] for s in initial if s in index),
            frozenset(index[s] for s in terminal if s in index),
            self.alphabet, names,
        )

    def with_ends(self, initial=None, terminal=None):
        """Copy with new initial/terminal sets; ``"all"`` selects every state."""
        every = frozenset(range(self.n_states))
        initial = every if initial == "all" else (self.initial if initial is None else initial)
        terminal = every if terminal == "all" else (self.terminal if terminal is None else terminal)
        return Automaton(self.n_states, self.edges, initial, terminal, self.alphabet, self.names)

    def relabel(self, mapping, alphabet=None):
        """Replace every label ``x`` with ``mapping[x]``."""
        edges = [(p, mapping[x], q) for p, x, q in self.edges]
        return Automaton(self.n_states, edges, self.initial, self.terminal, alphabet or (), self.names)


@dataclass(frozen=True)
class Dfa:
    """A deterministic automaton: partial transition map, one initial state."""

    n_states: int
    delta: dict
    initial: int
    terminal: frozenset
    alphabet: tuple = ()
    names: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "terminal", frozenset(self.terminal))
        if not 0 <= self.initial < self.n_states:
            raise ValueError("initial state out of range")
        if not self.alphabet:
            object.__setattr__(self, "alphabet", sort_labels(x for _, x in self.delta))
        for (p, x), q in self.delta.items():
            if not (0 <= p < self.n_states and 0 <= q < self.n_states):
                raise ValueError(f"transition {(p, x)} -> {q} out of range")

    def step(self, p, x):
        return self.delta.get((p, x))

    def run(self, word, start=None):
        """State reached from ``start`` (default: initial) or None."""
        p = self.initial if start is None else start
        for x in word:
            p = self.delta.get((p, x))
            if p is None:
                return None
        return p

    def accepts(self, word):
        return self.run(word) in self.terminal

    def to_automaton(self):
        edges = [(p, x, q) for (p, x), q in sorted(self.delta.items(), key=lambda t: (t[0][0], label_key(t[0][1])))]
        return Automaton(self.n_states, edges, {self.initial}, self.terminal, self.alphabet, self.names)

    def signature(self):
        """Hashable form used to compare canonical DFAs."""
        return (self.n_states, self.initial, self.terminal, frozenset(self.delta.items()))


# ---------------------------------------------------------------------------
# Determinism


def is_deterministic(a):
    if len(a.initial) > 1:
        return False
    return all(len(v) <= 1 for v in a._delta.values())


def is_codeterministic(a):
    return is_deterministic(reverse(a))


def is_reversible(a):
    return is_deterministic(a) and is_codeterministic(a)


def to_dfa(a):
    """View a deterministic automaton as a :class:`Dfa`."""
    if not is_deterministic(a) or not a.initial:
        raise ValueError("automaton is not deterministic with one initial state")
    delta = {(p, x): q for p, x, q in a.edges}
    return Dfa(a.n_states, delta, next(iter(a.initial)), a.terminal, a.alphabet, a.names)


def reverse(a):
    edges = [(q, x, p) for p, x, q in a.edges]
    return Automaton(a.n_states, edges, a.terminal, a.initial, a.alphabet, a.names)


# ---------------------------------------------------------------------------
# Subset construction and minimization


def determinize(a, start=None):
    """Accessible subset construction.

    ``start`` overrides the initial set.  The Dfa's ``names`` are the subsets
    as sorted tuples of original states.
    """
    start = frozenset(a.initial if start is None else start)
    if not start:
        raise ValueError("determinize needs at least one initial state")
    index = {start: 0}
    order = [start]
    delta = {}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        for x in a.alphabet:
            t = a.step_set(s, x)
            if not t:
                continue
            if t not in index:
                index[t] = len(order)
                order.append(t)
                queue.append(t)
            delta[(index[s], x)] = index[t]
    terminal = {index[s] for s in order if s & a.terminal}
    names = tuple(tuple(sorted(s)) for s in order)
    return Dfa(len(order), delta, 0, terminal, a.alphabet, names)


def _canonical(n, delta, initial, terminal, alphabet, names=None):
    """Renumber states in breadth-first order from the initial state."""
    order = [initial]
    index = {initial: 0}
    queue = deque([initial])
    labels = sort_labels(alphabet)
    while queue:
        p = queue.popleft()
        for x in labels:
            q = delta.get((p, x))
            if q is not None and q not in index:
                index[q] = len(order)
                order.append(q)
                queue.append(q)
    new_delta = {(index[p], x): index[q] for (p, x), q in delta.items() if p in index}
    new_names = tuple(names[p] for p in order) if names is not None else None
    return Dfa(len(order), new_delta, 0, {index[p] for p in terminal if p in index}, tuple(alphabet), new_names)


def minimize(d):
    """Minimal automaton of the language of ``d``.

    Only states with a nonempty residual are kept, so missing transitions stay
    missing.  The result is numbered canonically (breadth first from the
    initial state, labels in sorted order): two Dfas for the same language
    minimize to equal objects.  The empty language gives a single
    non-terminal state with no transitions.
    """
    n = d.n_states
    reach = {d.initial}
    stack = [d.initial]
    succ = [[] for _ in range(n)]
    pred = [[] for _ in range(n)]
    for (p, x), q in d.delta.items():
        succ[p].append(q)
        pred[q].append(p)
    while stack:
        p = stack.pop()
        for q in succ[p]:
            if q not in reach:
                reach.add(q)
                stack.append(q)
    live = set(s for s in d.terminal if s in reach)
    stack = list(live)
    while stack:
        q = stack.pop()
        for p in pred[q]:
            if p in reach and p not in live:
                live.add(p)
                stack.append(p)
    if d.initial not in live:
        return Dfa(1, {}, 0, frozenset(), d.alphabet)
    states = sorted(live)
    delta = {(p, x): q for (p, x), q in d.delta.items() if p in live and q in live}
    labels = sort_labels(d.alphabet)
    block = {p: (1 if p in d.terminal else 0) for p in states}
    n_blocks = len(set(block.values()))
    while True:
        sigs = {}
        new_block = {}
        for p in states:
            sig = (block[p],) + tuple(block.get(delta.get((p, x)), -1) if (p, x) in delta else -1 for x in labels)
            new_block[p] = sigs.setdefault(sig, len(sigs))
        block = new_block
        if len(sigs) == n_blocks:
            break
        n_blocks = len(sigs)
    qdelta = {(block[p], x): block[q] for (p, x), q in delta.items()}
    qterm = {block[p] for p in states if p in d.terminal}
    return _canonical(n_blocks, qdelta, block[d.initial], qterm, d.alphabet)


def minimal_dfa(a):
    """Minimal Dfa of the language accepted by automaton ``a``."""
    if not a.initial:
        return Dfa(1, {}, 0, frozenset(), a.alphabet)
    return minimize(determinize(a))


def equivalent(a, b):
    """Exact language equality of two automata or Dfas."""
    da = minimize(a) if isinstance(a, Dfa) else minimal_dfa(a)
    db = minimize(b) if isinstance(b, Dfa) else minimal_dfa(b)
    return da.signature() == db.signature()


# ---------------------------------------------------------------------------
# Graph structure


@dataclass(frozen=True)
class Components:
    """Strongly connected components.

    ``components`` is in reverse topological order (sinks first), each a
    sorted tuple of states; ``index[p]`` is the component of ``p``;
    ``trivial[k]`` is True when component ``k`` carries no edge.
    """

    components: tuple
    index: tuple
    trivial: tuple
    dag: frozenset

    def nontrivial(self):
        return [c for c, t in zip(self.components, self.trivial) if not t]


def scc(a):
    """Tarjan's algorithm, iterative."""
    n = a.n_states
    succ = [sorted({q for _, q in a.out[p]}) for p in range(n)]
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack = []
    comp = [-1] * n
    comps = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(succ[v]):
                work[-1] = (v, i + 1)
                w = succ[v][i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                members = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = len(comps)
                    members.append(w)
                    if w == v:
                        break
                comps.append(tuple(sorted(members)))
    trivial = [True] * len(comps)
    dag = set()
    for p, _, q in a.edges:
        if comp[p] == comp[q]:
            trivial[comp[p]] = False
        else:
            dag.add((comp[p], comp[q]))
    return Components(tuple(comps), tuple(comp), tuple(trivial), frozenset(dag))


def reachable(a, sources, backward=False):
    adj = a.into if backward else a.out
    seen = set(sources)
    stack = list(seen)
    while stack:
        p = stack.pop()
        for _, q in adj[p]:
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return seen


def trim(a):
    """Restrict to states both accessible and co-accessible."""
    keep = reachable(a, a.initial) & reachable(a, a.terminal, backward=True)
    return a.restrict(sorted(keep))


def cyclic_states(a):
    """States lying in a non-trivial strongly connected component."""
    comps = scc(a)
    return {p for c in comps.nontrivial() for p in c}


def essential_states(a):
    """States lying on some bi-infinite path."""
    cyc = cyclic_states(a)
    return reachable(a, cyc) & reachable(a, cyc, backward=True)


def essential(a):
    """Restrict to the states lying on bi-infinite paths."""
    return a.restrict(sorted(essential_states(a)))


def is_strongly_connected(a):
    return a.n_states > 0 and len(scc(a).components) == 1


def shortest_path(a, sources, targets, within=None):
    """Length-lexicographically least path from ``sources`` to ``targets``.

    Returns ``(states, labels)`` or None.  An empty path is returned when a
    source is already a target.  ``within`` restricts intermediate states.
    """
    targets = set(targets)
    sources = sorted(set(sources))
    parent = {}
    queue = deque()
    for s in sources:
        if s in targets:
            return [s], []
        parent[s] = None
        queue.append(s)
    while queue:
        p = queue.popleft()
        for x, q in a.out[p]:
            if within is not None and q not in within:
                continue
            if q in parent:
                continue
            parent[q] = (p, x)
            if q in targets:
                states, labels = [q], []
                while parent[states[-1]] is not None:
                    prev, lab = parent[states[-1]]
                    states.append(prev)
                    labels.append(lab)
                return states[::-1], labels[::-1]
            queue.append(q)
    return None


def shortest_cycle(a, states=None):
    """Shortest cycle through any of ``states``, ties broken by label.

    Returns ``(states, labels)`` with ``states[0] == states[-1]``, or None.
    """
    best = None
    candidates = range(a.n_states) if states is None else sorted(states)
    for s in candidates:
        found = None
        parent = {}
        queue = deque()
        for x, q in a.out[s]:
            if q == s:
                found = ([s, s], [x])
                break
            if q not in parent:
                parent[q] = (s, x)
                queue.append(q)
        while found is None and queue:
            p = queue.popleft()
            for x, q in a.out[p]:
                if q == s:
                    path, labels = [p], [x]
                    while path[-1] != s:
                        prev, lab = parent[path[-1]]
                        path.append(prev)
                        labels.append(lab)
                    found = (path[::-1] + [s], labels[::-1])
                    break
                if q not in parent:
                    parent[q] = (p, x)
                    queue.append(q)
        if found is None:
            continue
        key = (len(found[1]), [label_key(x) for x in found[1]])
        if best is None or key < best[0]:
            best = (key, found)
    return None if best is None else best[1]


# ---------------------------------------------------------------------------
# Products


def square(a):
    """Full square ``a x a``; state ``(p, q)`` has index ``p * n + q``."""
    n = a.n_states
    edges = []
    for p, q in product(range(n), repeat=2):
        for x, r in a.out[p]:
            for s in a.targets(q, x):
                edges.append((p * n + q, x, r * n + s))
    names = tuple(product(range(n), repeat=2))
    return Automaton(n * n, edges, (), (), a.alphabet, names)


def square_nondiagonal(a):
    """Restriction of ``a x a`` to pairs ``(p, q)`` with ``p != q``.

    ``names`` holds the pairs.
    """
    n = a.n_states
    pairs = [(p, q) for p in range(n) for q in range(n) if p != q]
    index = {pq: k for k, pq in enumerate(pairs)}
    edges = []
    for p, q in pairs:
        for x, r in a.out[p]:
            for s in a.targets(q, x):
                if r != s:
                    edges.append((index[(p, q)], x, index[(r, s)]))
    return Automaton(len(pairs), edges, (), (), a.alphabet, tuple(pairs))


def intersect(a, b):
    """Product automaton recognizing the intersection, accessible part only."""
    start = [(p, q) for p in sorted(a.initial) for q in sorted(b.initial)]
    index = {pq: k for k, pq in enumerate(start)}
    queue = deque(start)
    edges = []
    while queue:
        p, q = queue.popleft()
        for x, r in a.out[p]:
            for s in b.targets(q, x):
                if (r, s) not in index:
                    index[(r, s)] = len(index)
                    queue.append((r, s))
                edges.append((index[(p, q)], x, index[(r, s)]))
    names = [None] * len(index)
    for pq, k in index.items():
        names[k] = pq
    terminal = {k for (p, q), k in index.items() if p in a.terminal and q in b.terminal}
    alphabet = sort_labels(set(a.alphabet) | set(b.alphabet))
    return Automaton(len(index), edges, range(len(start)), terminal, alphabet, tuple(names))


# ---------------------------------------------------------------------------
# Languages


def path_labels(a, n, starts=None):
    """Labels of all paths of length ``n`` (from ``starts`` if given)."""
    starts = range(a.n_states) if starts is None else starts
    if a.n_states == 0:
        return set()
    result = set()
    frontier = {(): frozenset(starts)}
    for _ in range(n):
        nxt = {}
        for word, states in frontier.items():
            for x in a.alphabet:
                t = a.step_set(states, x)
                if t:
                    nxt[word + (x,)] = t
        frontier = nxt
    for word in frontier:
        result.add(join(word))
    return result


def factor_words(a, max_len):
    """All path labels of length at most ``max_len`` (any start, any end)."""
    words = set()
    for n in range(max_len + 1):
        words |= path_labels(a, n)
    return words


def accepted_words(a, max_len):
    """Accepted words of length at most ``max_len``."""
    result = set()
    frontier = {(): frozenset(a.initial)}
    for n in range(max_len + 1):
        for word, states in frontier.items():
            if states & a.terminal:
                result.add(join(word))
        if n == max_len:
            break
        nxt = {}
        for word, states in frontier.items():
            for x in a.alphabet:
                t = a.step_set(states, x)
                if t:
                    nxt[word + (x,)] = t
        frontier = nxt
    return result


def iter_accepted(a, start=None):
    """Accepted words in length-lexicographic order (possibly infinite)."""
    start = frozenset(a.initial if start is None else start)
    if not start:
        return
    live = reachable(a, a.terminal, backward=True)
    frontier = [((), start & live)]
    while frontier:
        nxt = []
        for word, states in frontier:
            if states & a.terminal:
                yield join(word)
            for x in a.alphabet:
                t = a.step_set(states, x) & live
                if t:
                    nxt.append((word + (x,), t))
        frontier = nxt


# ---------------------------------------------------------------------------
# Text and DOT formats


def parse_automaton(text):
    """Parse the line-oriented automaton format.

    ``@alphabet``, ``@initial`` and ``@terminal`` headers; optional
    ``@states N``; then one ``src label dst`` edge per line.  ``#`` starts a
    comment.
    """
    alphabet = None
    initial, terminal = set(), set()
    n_states = None
    edges = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("@"):
            key, _, rest = line.partition(" ")
            rest = rest.strip()
            try:
                if key == "@alphabet":
                    alphabet = tuple(rest.replace(" ", ""))
                    if len(set(alphabet)) != len(alphabet):
                        raise ParseError("duplicate symbol in @alphabet", lineno)
                elif key == "@initial":
                    initial |= {int(t) for t in rest.split()}
                elif key == "@terminal":
                    terminal |= {int(t) for t in rest.split()}
                elif key == "@states":
                    n_states = int(rest)
                elif key == "@edge":
                    continue
                else:
                    raise ParseError(f"unknown header {key}", lineno)
            except ValueError as exc:
                if isinstance(exc, ParseError):
                    raise
                raise ParseError(f"bad state index in {key}", lineno) from None
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"expected 'src label dst', got {raw.strip()!r}", lineno)
        try:
            p, q = int(parts[0]), int(parts[2])
        except ValueError:
            raise ParseError("state indices must be integers", lineno) from None
        label = parts[1]
        if len(label) != 1:
            raise ParseError(f"label {label!r} is not a single character", lineno)
        if alphabet is not None and label not in alphabet:
            raise ParseError(f"invalid character {label!r}", lineno)
        if p < 0 or q < 0:
            raise ParseError("negative state index", lineno)
        if (p, label, q) in seen:
            raise ParseError(f"duplicate edge {p} {label} {q} (first on line {seen[(p, label, q)]})", lineno)
        seen[(p, label, q)] = lineno
        edges.append((p, label, q))
    top = max([p for p, _, q in edges] + [q for p, _, q in edges] + list(initial) + list(terminal), default=-1)
    if n_states is None:
        n_states = top + 1
    elif top >= n_states:
        raise ParseError(f"state {top} exceeds @states {n_states}")
    return Automaton(n_states, edges, initial, terminal, alphabet or ())


def format_automaton(a, boundary=None):
    """Serialize to the text format; round-trips through :func:`parse_automaton`."""
    lines = ["@alphabet " + "".join(a.alphabet), f"@states {a.n_states}"]
    lines.append("@initial " + " ".join(map(str, sorted(a.initial))))
    lines.append("@terminal " + " ".join(map(str, sorted(a.terminal))))
    if boundary:
        lines.append("# boundary " + " ".join(map(str, sorted(boundary))))
    for p, x, q in sorted(a.edges, key=lambda e: (e[0], label_key(e[1]), e[2])):
        lines.append(f"{p} {x} {q}")
    return "\n".join(line.rstrip() for line in lines) + "\n"


def _dot_id(a, p):
    name = a.name(p)
    return '"' + str(name).replace('"', r"\"") + '"'


def to_dot(a, boundary=None):
    """Deterministic Graphviz rendering; states and edges are sorted."""
    lines = ["digraph {", "  rankdir=LR;", "  node [shape=circle];"]
    for p in range(a.n_states):
        attrs = []
        if p in a.terminal:
            attrs.append("shape=doublecircle")
        if boundary and p in boundary:
            attrs.append("style=dashed")
        suffix = " [" + ", ".join(attrs) + "]" if attrs else ""
        lines.append(f"  {_dot_id(a, p)}{suffix};")
    for k, p in enumerate(sorted(a.initial)):
        lines.append(f"  __start{k} [shape=point];")
        lines.append(f"  __start{k} -> {_dot_id(a, p)};")
    for p, x, q in sorted(a.edges, key=lambda e: (e[0], label_key(e[1]), e[2])):
        label = str(x).replace('"', r"\"")
        lines.append(f'  {_dot_id(a, p)} -> {_dot_id(a, q)} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def automaton_from_word_edges(spec, initial=(), terminal=(), alphabet=()):
    """Build from a compact string like ``"0a0 0b1 1b0"`` (single-digit states)."""
    edges = [(int(t[0]), t[1], int(t[2])) for t in spec.split()]
    n = 1 + max([max(p, q) for p, _, q in edges] + list(initial) + list(terminal), default=-1)
    return Automaton(n, edges, initial, terminal, alphabet)


def from_dfa(d):
    return d.to_automaton()


def words_over(alphabet, n):
    """All words of length ``n`` over ``alphabet``."""
    return ["".join(w) for w in product(alphabet, repeat=n)]

