"""Decision results with machine-checkable witnesses."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Verdict:
    """Outcome of a decision procedure.

    ``value`` is True, False, or None for "inconclusive".  ``witness`` explains
    the answer (a word, a pair of paths, a set of states...).  Truthiness is
    strict: only ``value is True`` is truthy.
    """

    value: bool | None
    witness: Any = None
    note: str = ""

    def __bool__(self):
        return self.value is True

    @property
    def status(self):
        if self.value is None:
            return "inconclusive"
        return "true" if self.value else "false"


@dataclass(frozen=True)
class AmbiguityWitness:
    """Two distinct paths sharing a label.

    ``kind`` is one of ``"two-finite-paths"``, ``"pair-cycle"`` or
    ``"relative-pair-path"``.  ``paths`` holds two state sequences of length
    ``len(word) + 1``.  For a pair cycle the sequences start and end in the
    same pair of states.
    """

    kind: str
    word: Any
    paths: tuple
    extra: dict = field(default_factory=dict, compare=False)

    def replay(self, automaton):
        """Check both paths exist in ``automaton``, carry ``word`` and differ."""
        first, second = self.paths
        if first == second:
            return False
        if len(first) != len(self.word) + 1 or len(second) != len(self.word) + 1:
            return False
        edges = set(automaton.edges)
        for path in (first, second):
            for k, label in enumerate(self.word):
                if (path[k], label, path[k + 1]) not in edges:
                    return False
        if self.kind == "pair-cycle":
            return first[0] == first[-1] and second[0] == second[-1]
        return True
