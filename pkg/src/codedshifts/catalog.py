"""Small automata that recur in examples and tests."""
from __future__ import annotations

from .automata import Automaton

#: labels of the three edges of :func:`even_shift`
EVEN_E = (0, "a", 0)
EVEN_F = (0, "b", 1)
EVEN_G = (1, "b", 0)


def even_shift():
    """a-loop on 0 and b-edges both ways between 0 and 1, all states initial
    and terminal.  Its bi-infinite labels have even b-blocks."""
    return Automaton(2, [EVEN_E, EVEN_F, EVEN_G], {0, 1}, {0, 1}, ("a", "b"))


def golden_mean():
    """a-loop on 0, ``0 --b--> 1`` and ``1 --a--> 0``: no factor bb."""
    return Automaton(2, [(0, "a", 0), (0, "b", 1), (1, "a", 0)], {0, 1}, {0, 1}, ("a", "b"))


def golden_mean_no_aa():
    """b-loop on 0, ``0 --a--> 1`` and ``1 --b--> 0``: no factor aa."""
    return Automaton(2, [(0, "b", 0), (0, "a", 1), (1, "b", 0)], {0, 1}, {0, 1}, ("a", "b"))


def even_sft_cover():
    """Three-state automaton over the edges of :func:`even_shift`.

    ``e`` loops on 0, then ``f`` to 1, ``g`` to 2 and ``e`` back to 0, so
    every b-block has length two and is surrounded by a's.
    """
    e, f, g = EVEN_E, EVEN_F, EVEN_G
    return Automaton(3, [(0, e, 0), (0, f, 1), (1, g, 2), (2, e, 0)], {0, 1, 2}, {0, 1, 2}, (e, f, g))


def even_sft_cover_letters():
    """The same automaton with ``e, f, g`` replaced by their labels."""
    return Automaton(3, [(0, "a", 0), (0, "b", 1), (1, "b", 2), (2, "a", 0)], {0, 1, 2}, {0, 1, 2}, ("a", "b"))


def even_language_min():
    """Minimal automaton of the language of the shift with even a-blocks
    between b's: a-loop on 0, ``0 --b--> 1``, b-loop on 1, a-edges between 1
    and 2.  State 0 initial, all states terminal."""
    return Automaton(3, [(0, "a", 0), (0, "b", 1), (1, "b", 1), (1, "a", 2), (2, "a", 1)], {0}, {0, 1, 2}, ("a", "b"))
