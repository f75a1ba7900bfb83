"""Morphisms of free monoids: bouquet automata, primitivity, circularity and
bounded recognizability checks."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .automata import Automaton, sort_labels
from .codes import FiniteCode, _split_pair_cycle, is_code
from .errors import ParseError
from .shifts import sofic_overapprox
from .unambiguity import is_strongly_unambiguous, unambiguous_on_sofic
from .verdict import Verdict

MORPHIC_ITERATION_CAP = 20


@dataclass(frozen=True)
class Morphism:
    """A map from letters of ``source`` to nonempty words over ``target``."""

    images: dict
    source: tuple = ()
    target: tuple = ()

    def __post_init__(self):
        images = dict(self.images)
        for b, w in images.items():
            if not w:
                raise ValueError(f"image of {b!r} is empty")
        source = tuple(self.source) or tuple(sorted(images))
        if set(source) != set(images):
            raise ValueError("source alphabet does not match the images")
        target = tuple(self.target) or tuple(sorted(set("".join(images.values()))))
        extra = set("".join(images.values())) - set(target)
        if extra:
            raise ValueError(f"letters {sorted(extra)} outside target alphabet")
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)

    def __call__(self, word):
        return "".join(self.images[b] for b in word)

    def power(self, word, n):
        for _ in range(n):
            word = self(word)
        return word

    @property
    def is_endomorphism(self):
        return set(self.target) <= set(self.source)

    def __str__(self):
        return ", ".join(f"{b} -> {self.images[b]}" for b in self.source)


def fibonacci():
    return Morphism({"a": "ab", "b": "a"})


def thue_morse():
    return Morphism({"a": "ab", "b": "ba"})


def period_doubling():
    return Morphism({"a": "ab", "b": "aa"})


def parse_morphism(text):
    """Read lines ``b -> word``."""
    images = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        left, arrow, right = line.partition("->")
        left, right = left.strip(), right.strip()
        if not arrow or len(left) != 1:
            raise ParseError(f"expected 'letter -> word', got {raw.strip()!r}", lineno)
        if not right:
            raise ParseError(f"empty image for {left!r}", lineno)
        if left in images:
            raise ParseError(f"duplicate letter {left!r}", lineno)
        images[left] = right
    if not images:
        raise ParseError("empty morphism")
    return Morphism(images, tuple(images))


def format_morphism(m):
    return "".join(f"{b} -> {m.images[b]}\n" for b in m.source)


@dataclass(frozen=True)
class BouquetAutomaton:
    """The bouquet automaton of a morphism.

    ``vertices[k]`` names state ``k``: ``"ω"`` for state 0, otherwise
    ``(b, i)``.  ``edge_names`` maps each automaton edge to ``(b, i)``,
    written ``[b, i]``.
    """

    morphism: Morphism
    automaton: Automaton
    edge_names: dict

    @property
    def vertices(self):
        return self.automaton.names

    def edge_of(self, b, i):
        return next(e for e, name in self.edge_names.items() if name == (b, i))


def bouquet(m):
    """One cycle through ``ω`` per letter ``b``, labeled ``m(b)``."""
    names = ["ω"]
    index = {"ω": 0}
    for b in m.source:
        for i in range(1, len(m.images[b])):
            index[(b, i)] = len(names)
            names.append((b, i))
    edges = []
    edge_names = {}
    for b in m.source:
        w = m.images[b]
        for i, x in enumerate(w):
            src = index[(b, i)] if i else 0
            dst = index[(b, i + 1)] if i + 1 < len(w) else 0
            edges.append((src, x, dst))
            edge_names[(src, x, dst)] = (b, i)
    a = Automaton(len(names), edges, {0}, {0}, m.target, tuple(names))
    return BouquetAutomaton(m, a, edge_names)


def incidence_matrix(m):
    """``M[a, b]`` counts occurrences of ``a`` in ``m(b)``."""
    letters = sort_labels(set(m.source) | set(m.target))
    pos = {x: k for k, x in enumerate(letters)}
    mat = np.zeros((len(letters), len(letters)), dtype=np.int64)
    for b in m.source:
        for x in m.images[b]:
            mat[pos[x], pos[b]] += 1
    return mat


def is_primitive(m, n_max=None):
    """Is some power ``m^n`` with ``n <= n_max`` such that every letter occurs
    in every image?  ``n_max`` defaults to ``|A|**2``.  Witness: least ``n``."""
    if set(m.source) != set(m.target) and not set(m.target) <= set(m.source):
        raise ValueError("primitivity needs a morphism from an alphabet to itself")
    k = len(m.source)
    if n_max is None:
        n_max = k * k
    mat = (incidence_matrix(m) > 0).astype(np.int64)
    power = np.eye(mat.shape[0], dtype=np.int64)
    for n in range(1, n_max + 1):
        power = np.minimum(power @ mat, 1)
        if power.all():
            return Verdict(True, n)
    return Verdict(False, note=f"no positive power up to {n_max}")


@dataclass(frozen=True)
class MorphicLanguage:
    words: frozenset
    iterations: int
    stabilized: bool


def factors_up_to(words, length):
    out = {""}
    for w in words:
        for i in range(len(w)):
            for j in range(i + 1, min(len(w), i + length) + 1):
                out.add(w[i:j])
    return out


def morphic_language(m, length, iterations=None):
    """Factors of length at most ``length`` of the words ``m^n(a)``.

    Iterates until two consecutive iterations give the same factor set (or
    ``iterations``, default 20, is reached).
    """
    cap = MORPHIC_ITERATION_CAP if iterations is None else iterations
    current = list(m.source)
    found = factors_up_to(current, length)
    for n in range(1, cap + 1):
        current = [m(w) for w in current]
        nxt = found | factors_up_to(current, length)
        if nxt == found:
            return MorphicLanguage(frozenset(found), n, True)
        found = nxt
    return MorphicLanguage(frozenset(found), cap, False)


def is_circular_morphism(m):
    """Circularity of ``m`` through strong unambiguity of its bouquet.

    Witness ``(u, v)`` with ``uv, vu`` in ``m(B*)`` but not both ``u, v``.
    """
    images = [m.images[b] for b in m.source]
    if len(set(images)) != len(images):
        raise ValueError("images of distinct letters coincide")
    check = is_code(FiniteCode(images))
    if not check:
        return Verdict(False, check.witness, "not injective")
    bq = bouquet(m)
    v = is_strongly_unambiguous(bq.automaton)
    if v:
        return Verdict(True)
    w = v.witness
    split = _split_pair_cycle(w.word, *w.paths)
    return Verdict(False, split, f"pair cycle {w.word}")


def alpha_presentation(m, x):
    """Presentation over the edges of the bouquet of the image of ``x``.

    Each edge ``s --b--> t`` of the presentation of ``x`` becomes a path
    ``s -> (s, t, b, 1) -> ... -> t`` whose labels are the bouquet edges
    ``[b, 0], [b, 1], ...``.
    """
    bq = bouquet(m)
    by_name = {name: e for e, name in bq.edge_names.items()}
    a = x.presentation
    names = list(range(a.n_states))
    edges = []
    for k, (s, b, t) in enumerate(a.edges):
        w = m.images[b]
        prev = s
        for i in range(len(w)):
            if i + 1 < len(w):
                names.append(("edge", k, i + 1))
                nxt = len(names) - 1
            else:
                nxt = t
            edges.append((prev, by_name[(b, i)], nxt))
            prev = nxt
    every = range(len(names))
    return bq, Automaton(len(names), edges, every, every, (), tuple(names))


def recognizability_bounded(m, k):
    """Bounded recognizability check on the shift of ``m``.

    The shift is over-approximated by the sofic shift of its length-``k``
    factors, pushed onto the edges of the bouquet, and relative unambiguity
    is tested.  True is a sound yes; otherwise the value is None
    (inconclusive) and the witness is the ambiguity found, which may come
    from the over-approximation or from a genuine periodic point.
    """
    if k < 2:
        raise ValueError("window must be >= 2")
    lang = morphic_language(m, k)
    x = sofic_overapprox(lang.words, k)
    bq, b = alpha_presentation(m, x)
    v = unambiguous_on_sofic(bq.automaton, b)
    if v:
        return Verdict(True, note=f"window {k}")
    return Verdict(None, v.witness, f"window {k}: ambiguity in the over-approximation")


def is_indecomposable_two_letter(m):
    """For two letters: False iff both images are powers of one word, that is
    iff they commute."""
    if len(m.source) != 2:
        raise ValueError("needs a two-letter source alphabet")
    x, y = (m.images[b] for b in m.source)
    return x + y != y + x
