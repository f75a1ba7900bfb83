"""Text files: codes, automata, automata over edges, morphisms.

Code files hold one word per line, after an optional ``@alphabet`` header.
A file whose words use ``| * ( ) ~`` is read as a rational expression
instead; several lines are joined by union.  ``#`` starts a comment
everywhere.
"""
from __future__ import annotations

import re

from . import regex as rx
from .automata import format_automaton, label_key, parse_automaton
from .codes import FiniteCode
from .errors import ParseError
from .morphisms import format_morphism, parse_morphism

_EDGE_LINE = re.compile(r"^\d+\s+\S\s+\d+$")


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_code(text):
    """FiniteCode or Regex from the text of a code file."""
    lines = list(_content_lines(text))
    alphabet = ()
    if lines and lines[0][1].startswith("@alphabet"):
        lineno, header = lines.pop(0)
        parts = header.split()
        if len(parts) != 2 or len(set(parts[1])) != len(parts[1]):
            raise ParseError("expected '@alphabet LETTERS'", lineno)
        alphabet = tuple(parts[1])
    if not lines:
        raise ParseError("empty code file")
    if any(rx.has_operators(line) for _, line in lines):
        parts = [rx.parse_regex(line, lineno) for lineno, line in lines]
        r = rx.union(*parts)
        extra = r.letters() - set(alphabet)
        if alphabet and extra:
            raise ParseError(f"letters {sorted(extra)} outside alphabet")
        return r
    seen = {}
    for lineno, word in lines:
        if any(c.isspace() for c in word):
            raise ParseError(f"invalid character in {word!r}", lineno)
        if word in seen:
            raise ParseError(f"duplicate word {word!r} (first on line {seen[word]})", lineno)
        if alphabet and not set(word) <= set(alphabet):
            raise ParseError(f"{word!r} uses letters outside the alphabet", lineno)
        seen[word] = lineno
    return FiniteCode(seen, alphabet)


def format_code(c):
    """Text of a code file; the header is written only when the alphabet has
    letters no word uses."""
    if isinstance(c, FiniteCode):
        header = ""
        if set(c.alphabet) != set("".join(c.words)):
            header = f"@alphabet {''.join(c.alphabet)}\n"
        return header + "".join(w + "\n" for w in c.words)
    return f"{c}\n"


def looks_like_automaton(text):
    """True when the text is in the automaton format rather than a code file."""
    for _, line in _content_lines(text):
        if line.startswith("@") or _EDGE_LINE.match(line):
            return True
    return False


def parse_edge_automaton(text, a):
    """Automaton labeled by edges of ``a``.

    Headers ``@edge NAME src label dst`` give one-character names to edges of
    ``a``; the remaining lines use these names as labels.
    """
    names = {}
    for lineno, line in _content_lines(text):
        if not line.startswith("@edge"):
            continue
        parts = line.split()
        if len(parts) != 5 or len(parts[1]) != 1:
            raise ParseError("expected '@edge NAME src label dst'", lineno)
        try:
            edge = (int(parts[2]), parts[3], int(parts[4]))
        except ValueError:
            raise ParseError("state indices must be integers", lineno) from None
        if edge not in set(a.edges):
            raise ParseError(f"{edge} is not an edge of the first automaton", lineno)
        if parts[1] in names:
            raise ParseError(f"duplicate edge name {parts[1]!r}", lineno)
        names[parts[1]] = edge
    b = parse_automaton(text)
    missing = sorted(set(b.alphabet) - set(names))
    if missing:
        raise ParseError(f"labels {missing} are not declared with @edge")
    alphabet = tuple(sorted(set(names.values()), key=label_key))
    return b.relabel(names, alphabet)


def format_edge_automaton(b):
    """Inverse of :func:`parse_edge_automaton`; edge names are a, b, c, ..."""
    edges = sorted(b.alphabet, key=label_key)
    if len(edges) > 26:
        raise ValueError("too many edges to name")
    names = {e: chr(ord("a") + k) for k, e in enumerate(edges)}
    lines = [f"@edge {names[e]} {e[0]} {e[1]} {e[2]}" for e in edges]
    text = format_automaton(b.relabel(names, tuple(names[e] for e in edges)))
    return "\n".join(lines) + "\n" + text


__all__ = [
    "format_automaton",
    "format_code",
    "format_edge_automaton",
    "format_morphism",
    "looks_like_automaton",
    "parse_automaton",
    "parse_code",
    "parse_edge_automaton",
    "parse_morphism",
]
