"""Unambiguity of automata: on finite paths, on bi-infinite paths, and
relative to a sofic subshift of the path shift.
"""
from __future__ import annotations

from collections import deque

from .automata import Automaton, join, reachable, scc, shortest_cycle, square
from .errors import HypothesisError
from .verdict import AmbiguityWitness, Verdict


def edge_shift(a):
    """Automaton recognizing the shift of bi-infinite paths of ``a``.

    Same states; each edge ``e = (p, x, q)`` becomes ``p --e--> q``.
    """
    edges = [(p, (p, x, q), q) for p, x, q in a.edges]
    return Automaton(a.n_states, edges, a.initial, a.terminal, (), a.names)


def _decode(n, states):
    return tuple(s // n for s in states), tuple(s % n for s in states)


def _pair_path(sq, n, sources, targets, allowed=None):
    """Shortest path in the square from ``sources`` to ``targets`` that
    visits at least one off-diagonal state.  Returns (states, labels) or None.
    """
    start = [(s, s % n != s // n) for s in sorted(sources)]
    parent = {node: None for node in start}
    queue = deque(start)
    while queue:
        node = queue.popleft()
        state, seen_off = node
        for x, t in sq.out[state]:
            if allowed is not None and t not in allowed:
                continue
            nxt = (t, seen_off or t % n != t // n)
            if nxt in parent:
                continue
            parent[nxt] = (node, x)
            if nxt[1] and t in targets:
                states, labels = [t], []
                cur = nxt
                while parent[cur] is not None:
                    cur, lab = parent[cur]
                    states.append(cur[0])
                    labels.append(lab)
                return states[::-1], labels[::-1]
            queue.append(nxt)
    return None


def _diagonal(n):
    return {p * n + p for p in range(n)}


def is_unambiguous(a):
    """At most one path with a given label between any two states.

    Decided on the square: no off-diagonal state is reachable from the
    diagonal and co-reachable to it.
    """
    n = a.n_states
    if n == 0:
        return Verdict(True)
    sq = square(a)
    diag = _diagonal(n)
    co = reachable(sq, diag, backward=True)
    found = _pair_path(sq, n, diag, diag, allowed=co)
    if found is None:
        return Verdict(True)
    states, labels = found
    top, bottom = _decode(n, states)
    return Verdict(False, AmbiguityWitness("two-finite-paths", join(labels), (top, bottom)))


def _bi_infinite_states(sq):
    comps = scc(sq)
    cyclic = {p for c in comps.nontrivial() for p in c}
    return cyclic, reachable(sq, cyclic) & reachable(sq, cyclic, backward=True), comps


def is_strongly_unambiguous(a):
    """At most one bi-infinite path with a given bi-infinite label.

    True iff no off-diagonal state of the square lies on a bi-infinite path.
    On unambiguous automata this is the same as asking that the non-diagonal
    part of the square has only trivial strongly connected components.  The
    witness is a pair cycle through an off-diagonal state when one exists,
    otherwise two finite paths joining diagonal cycles.
    """
    n = a.n_states
    if n == 0:
        return Verdict(True)
    sq = square(a)
    cyclic, on_path, _ = _bi_infinite_states(sq)
    off = {s for s in on_path if s % n != s // n}
    if not off:
        return Verdict(True)
    cyc_off = sorted(off & cyclic)
    if cyc_off:
        states, labels = shortest_cycle(sq, cyc_off)
        top, bottom = _decode(n, states)
        return Verdict(False, AmbiguityWitness("pair-cycle", join(labels), (top, bottom)))
    # every cycle of the square is diagonal: ambiguity between diagonal cycles
    diag_cyc = cyclic & _diagonal(n)
    states, labels = _pair_path(sq, n, diag_cyc, diag_cyc, allowed=on_path)
    top, bottom = _decode(n, states)
    return Verdict(False, AmbiguityWitness("two-finite-paths", join(labels), (top, bottom),
                                           {"between_cycles": True}))


def is_strongly_unambiguous_at(a, anchor):
    """Strong unambiguity restricted to paths through ``anchor``.

    Considers only bi-infinite paths visiting ``anchor`` infinitely often in
    both directions (factorizations into first returns to ``anchor``).  Two
    such paths with the same label exist iff some off-diagonal state of the
    square lies between two non-trivial components that each contain a state
    ``(anchor, x)`` and a state ``(y, anchor)``.
    """
    n = a.n_states
    sq = square(a)
    comps = scc(sq)
    good = set()
    for k, members in enumerate(comps.components):
        if comps.trivial[k]:
            continue
        if any(s // n == anchor for s in members) and any(s % n == anchor for s in members):
            good.update(members)
    if not good:
        return Verdict(True)
    between = reachable(sq, good) & reachable(sq, good, backward=True)
    off = sorted(s for s in between if s % n != s // n)
    if not off:
        return Verdict(True)
    in_good = [s for s in off if s in good]
    if in_good:
        states, labels = shortest_cycle(sq, in_good)
        top, bottom = _decode(n, states)
        return Verdict(False, AmbiguityWitness("pair-cycle", join(labels), (top, bottom), {"anchor": anchor}))
    states, labels = _pair_path(sq, n, good, good, allowed=between)
    top, bottom = _decode(n, states)
    return Verdict(False, AmbiguityWitness("two-finite-paths", join(labels), (top, bottom),
                                           {"anchor": anchor, "between_cycles": True}))


def relative_graph(a, b):
    """The graph on tuples ``(p, q, r, s)`` used for relative unambiguity.

    ``p, q`` are states of ``b`` and ``r, s`` states of ``a``.  There is an
    edge labeled ``x`` from ``(p, q, r, s)`` to ``(p', q', r', s')`` when
    ``p --e--> p'`` and ``q --f--> q'`` are edges of ``b`` and ``e``, ``f``
    are the edges ``r --x--> r'`` and ``s --x--> s'`` of ``a``.  Only tuples
    reachable from some edge pair are built.  Returns an Automaton whose
    ``names`` are the tuples.
    """
    edges_a = set(a.edges)
    for _, e, _ in b.edges:
        if not (isinstance(e, tuple) and e in edges_a):
            raise ValueError(f"label {e!r} of the second automaton is not an edge of the first")
    index = {}
    order = []

    def vid(v):
        if v not in index:
            index[v] = len(order)
            order.append(v)
            queue.append(v)
        return index[v]

    queue = deque()
    for p, e, _ in b.edges:
        for q, f, _ in b.edges:
            if e[1] == f[1]:
                vid((p, q, e[0], f[0]))
    edges = []
    while queue:
        v = queue.popleft()
        p, q, r, s = v
        src = index[v]
        for e, p2 in b.out[p]:
            if e[0] != r:
                continue
            for f, q2 in b.out[q]:
                if f[0] == s and f[1] == e[1]:
                    edges.append((src, e[1], vid((p2, q2, e[2], f[2]))))
    return Automaton(len(order), edges, (), (), a.alphabet, tuple(order))


def unambiguous_on_sofic(a, b):
    """Is ``a`` unambiguous on the sofic shift of paths recognized by ``b``?

    ``b`` is labeled by edges ``(src, label, dst)`` of ``a``.  Ambiguity
    holds iff some tuple ``(p, q, r, s)`` with ``r != s`` lies on a
    bi-infinite path of :func:`relative_graph`.
    """
    g = relative_graph(a, b)
    names = g.names
    comps = scc(g)
    cyclic = {v for c in comps.nontrivial() for v in c}
    on_path = reachable(g, cyclic) & reachable(g, cyclic, backward=True)
    bad = sorted(v for v in on_path if names[v][2] != names[v][3])
    if not bad:
        return Verdict(True)
    # shortest segment from a cycle to a cycle through a bad vertex
    bad_set = set(bad)
    start = [(v, v in bad_set) for v in sorted(cyclic)]
    parent = {node: None for node in start}
    queue = deque(start)
    found = None
    for node in start:
        if node[1]:
            found = node
            break
    while found is None and queue:
        node = queue.popleft()
        v, seen = node
        for x, t in g.out[v]:
            if t not in on_path:
                continue
            nxt = (t, seen or t in bad_set)
            if nxt in parent:
                continue
            parent[nxt] = (node, x)
            if nxt[1] and t in cyclic:
                found = nxt
                break
            queue.append(nxt)
    vertices, labels = [found[0]], []
    cur = found
    while parent[cur] is not None:
        cur, lab = parent[cur]
        vertices.append(cur[0])
        labels.append(lab)
    vertices.reverse()
    labels.reverse()
    # close the segment with a cycle on each side so the witness shows the
    # periodic parts of two bi-infinite paths
    left = shortest_cycle(g, [vertices[0]])
    right = shortest_cycle(g, [vertices[-1]])
    vertices = left[0][:-1] + vertices + right[0][1:]
    labels = list(left[1]) + labels + list(right[1])
    tuples = [names[v] for v in vertices]
    top = tuple(t[2] for t in tuples)
    bottom = tuple(t[3] for t in tuples)
    extra = {
        "vertices": tuples,
        "b_paths": (tuple(t[0] for t in tuples), tuple(t[1] for t in tuples)),
        "left_cycle": join(left[1]),
        "right_cycle": join(right[1]),
    }
    return Verdict(False, AmbiguityWitness("relative-pair-path", join(labels), (top, bottom), extra))


def unambiguous_on_sft_relabel(b, labeling):
    """Relative unambiguity on a shift of finite type.

    ``b`` must be strongly unambiguous.  Its labels are replaced through
    ``labeling`` (a dict, or a callable) and strong unambiguity of the result
    is returned.
    """
    check = is_strongly_unambiguous(b)
    if not check:
        raise HypothesisError("hypothesis violated: automaton is not strongly unambiguous", check.witness)
    relabel = labeling if callable(labeling) else labeling.__getitem__
    mapping = {x: relabel(x) for x in b.alphabet}
    return is_strongly_unambiguous(b.relabel(mapping))
