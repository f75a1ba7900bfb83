"""Command-line front end.

Every command prints a report of ``key: value`` lines, or ``key=value``
lines with ``--porcelain``.  Automata and DOT text follow the report.
Exit status: 0 when a result was computed (true or false alike), 1 on bad
input, 2 when an internal invariant failed.
"""
from __future__ import annotations

import argparse
import sys

from . import countable, morphisms, sync
from .automata import format_automaton, minimal_dfa, to_dot
from .codes import (
    FiniteCode,
    is_circular,
    is_code,
    is_prefix_code,
    is_very_thin,
    normalized_automaton,
)
from .errors import CodedShiftError, InvariantError, NotACodeError, ParseError
from .formats import (
    looks_like_automaton,
    parse_automaton,
    parse_code,
    parse_edge_automaton,
    parse_morphism,
)
from .shifts import SoficShift, apply_block_map, parse_block_map, sft_from_forbidden
from .unambiguity import is_strongly_unambiguous, is_unambiguous, unambiguous_on_sofic
from .verdict import AmbiguityWitness


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


class Report:
    def __init__(self, porcelain):
        self.porcelain = porcelain
        self.fields = []
        self.blocks = []

    def add(self, key, value):
        self.fields.append((key, _text(value)))

    def rows(self, key, rows):
        """Rows of columns, aligned in human mode."""
        if self.porcelain:
            for k, row in enumerate(rows, 1):
                self.add(f"{key}.row{k}", " ".join(row))
            return
        widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
        for k, row in enumerate(rows, 1):
            self.add(f"{key}.row{k}", " ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())

    def block(self, text):
        self.blocks.append(text)

    def render(self):
        sep = "=" if self.porcelain else ": "
        out = "".join(f"{k}{sep}{v}\n" for k, v in self.fields)
        for text in self.blocks:
            out += text
        return out


def _text(value):
    if value is True:
        return "true"
    if value is False:
        return "false"
    if value is None:
        return "none"
    return str(value)


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_code(path):
    text = _read(path)
    if looks_like_automaton(text):
        raise InputError(f"{path} holds an automaton, expected a code")
    return parse_code(text)


def _load_automaton(path):
    return parse_automaton(_read(path))


def _load_presentation(path):
    """Automaton file as is, or the normalized automaton of a code file."""
    text = _read(path)
    if looks_like_automaton(text):
        return parse_automaton(text)
    return normalized_automaton(parse_code(text))


def _path_rows(word, paths, name=str):
    rows = []
    for path in paths:
        row = [name(path[0])]
        for x, q in zip(word, path[1:]):
            row += [str(x), name(q)]
        rows.append(row)
    return rows


def _witness(report, key, verdict, a=None):
    """Print the witness of a verdict that is not true."""
    w = verdict.witness
    if verdict.note:
        report.add(f"{key}.note", verdict.note)
    if isinstance(w, AmbiguityWitness):
        report.add(f"{key}.kind", w.kind)
        report.add(f"{key}.word", _word(w.word))
        name = str if a is None else (lambda p: _name(a, p))
        report.rows(f"{key}.paths", _path_rows(w.word, w.paths, name))


def _word(w):
    return w if isinstance(w, str) else " ".join(map(str, w))


def _name(a, p):
    n = a.name(p)
    if isinstance(n, tuple):
        return "(" + ",".join(map(str, n)) + ")"
    return str(n)


def _code_report(report, c, max_len):
    prefix = is_prefix_code(c)
    code = is_code(c)
    if code:
        circular = is_circular(c)
    else:
        circular = None
    synced = sync.is_synchronized_code(c, max_len)
    report.add("prefix", prefix.value)
    if not prefix:
        report.add("prefix.witness", " ".join(prefix.witness))
    report.add("code", code.value)
    if not code:
        _code_witness(report, code.witness)
    if circular is None:
        report.add("circular", False)
        report.add("circular.note", "not a code")
    else:
        report.add("circular", circular.value)
        if not circular:
            report.add("circular.witness", "u={} v={}".format(*circular.witness))
    _sync_fields(report, synced)


def _code_witness(report, w):
    report.add("code.witness", w["word"])
    for k, f in enumerate(w["factorizations"], 1):
        report.add(f"code.factorization{k}", ".".join(f))


def _sync_fields(report, v):
    report.add("synchronized", v.status)
    if v:
        report.add("synchronized.constant", v.witness.word)
    elif v.note:
        report.add("synchronized.note", v.note)


def cmd_check(args, report):
    prop = args.property
    if prop == "code":
        c = _load_code(args.files[0])
        _code_report(report, c, args.max_len)
        if not report.porcelain:
            summary = " ".join(f"{k}={v}" for k, v in report.fields if "." not in k)
            const = dict(report.fields).get("synchronized.constant")
            if const:
                summary = summary.replace("synchronized=true", f"synchronized=true(constant {const})")
            report.fields.insert(0, ("report", summary))
        return
    if prop == "prefix":
        v = is_prefix_code(_load_code(args.files[0]))
        report.add("prefix", v.value)
        if not v:
            report.add("prefix.witness", " ".join(v.witness))
        return
    if prop == "circular":
        c = _load_code(args.files[0])
        try:
            v = is_circular(c)
        except NotACodeError as exc:
            report.add("circular", False)
            report.add("circular.note", "not a code")
            _code_witness(report, exc.witness)
            return
        report.add("circular", v.value)
        if not v:
            report.add("circular.witness", "u={} v={}".format(*v.witness))
        return
    if prop == "very-thin":
        v = is_very_thin(_load_code(args.files[0]))
        report.add("very-thin", v.value)
        if v:
            report.add("very-thin.witness", v.witness)
        else:
            report.add("very-thin.note", v.note)
        return
    if prop == "synchronized":
        text = _read(args.files[0])
        if looks_like_automaton(text):
            v = sync.is_synchronized_shift(parse_automaton(text))
            report.add("synchronized", v.value)
            if v:
                report.add("synchronized.word", v.witness["word"])
            else:
                report.add("synchronized.note", v.note)
        else:
            _sync_fields(report, sync.is_synchronized_code(parse_code(text), args.max_len))
        return
    if prop in ("unambiguous", "strongly-unambiguous"):
        a = _load_presentation(args.files[0])
        test = is_unambiguous if prop == "unambiguous" else is_strongly_unambiguous
        v = test(a)
        report.add(prop, v.value)
        if not v:
            _witness(report, prop, v, a)
        return
    if prop == "relative":
        if len(args.files) != 2:
            raise InputError("check relative needs two files: automaton and shift over its edges")
        a = _load_automaton(args.files[0])
        b = parse_edge_automaton(_read(args.files[1]), a)
        v = unambiguous_on_sofic(a, b)
        report.add("relative", v.value)
        if not v:
            _witness(report, "relative", v, a)
            report.add("relative.left-cycle", v.witness.extra["left_cycle"])
            report.add("relative.right-cycle", v.witness.extra["right_cycle"])
        return
    raise InputError(f"unknown property {prop!r}")


def cmd_recode(args, report):
    c = _load_code(args.file)
    r = sync.recode_unambiguous(c, args.max_len, args.constant)
    report.add("constant", r.constant.word)
    report.add("sink", r.constant.sink)
    report.add("anchor", "{},{}".format(*r.anchor_name))
    report.add("product.states", r.product.n_states)
    report.add("component.states", r.first_return_automaton.n_states)
    report.add("C'", r.code)
    if args.dot:
        report.block(to_dot(r.product))


def cmd_fischer(args, report):
    x = _load_presentation(args.file)
    v = sync.is_synchronized_shift(x)
    if not v:
        report.add("synchronized", False)
        report.add("synchronized.note", v.note)
        return
    d = minimal_dfa(x.with_ends("all", "all"))
    f = sync.fischer_subset(d, v.witness["word"])
    report.add("synchronized", True)
    report.add("word", v.witness["word"])
    report.add("states", f.n_states)
    for k, name in enumerate(f.names):
        report.add(f"state{k}", "{" + ",".join(map(str, name)) + "}")
    report.block(to_dot(f) if args.dot else format_automaton(f))


def cmd_morphism(args, report):
    m = parse_morphism(_read(args.file))
    what = args.property
    if what == "bouquet":
        bq = morphisms.bouquet(m)
        a = bq.automaton
        for e in sorted(bq.edge_names, key=lambda e: bq.edge_names[e]):
            b, i = bq.edge_names[e]
            report.add(f"edge[{b},{i}]", f"{e[0]} {e[1]} {e[2]}")
        report.block(to_dot(a) if args.dot else format_automaton(a))
    elif what == "primitive":
        v = morphisms.is_primitive(m, args.max_len)
        report.add("primitive", v.value)
        if v:
            report.add("primitive.power", v.witness)
        else:
            report.add("primitive.note", v.note)
    elif what == "circular":
        v = morphisms.is_circular_morphism(m)
        report.add("circular", v.value)
        if not v:
            if isinstance(v.witness, tuple):
                report.add("circular.witness", "u={} v={}".format(*v.witness))
            report.add("circular.note", v.note)
    elif what == "recognizable":
        k = args.window or 3
        v = morphisms.recognizability_bounded(m, k)
        report.add("recognizable", v.status)
        report.add("recognizable.window", k)
        if not v:
            _witness(report, "recognizable", v, morphisms.bouquet(m).automaton)
    else:
        raise InputError(f"unknown morphism property {what!r}")


def cmd_fiebig(args, report):
    a = _load_presentation(args.file)
    seed = countable.fiebig_seed(a.with_ends("all", "all"), args.state)
    if isinstance(seed, countable.SingleWordCase):
        report.add("single-word", seed.word)
    else:
        for key in ("y", "a", "b", "t", "c", "d", "u1", "u2", "u", "v", "w"):
            report.add(f"seed.{key}", getattr(seed, key) or "~")
    la = countable.construction(seed, args.mode)
    w = countable.window(la, args.radius)
    report.add("mode", args.mode)
    report.add("radius", args.radius)
    report.add("states", w.automaton.n_states)
    report.add("boundary", " ".join(map(str, sorted(w.boundary))))
    names = w.automaton.names
    if not args.dot:
        report.add("names", " ".join(f"{k}={_name(w.automaton, k)}" for k in range(len(names))))
    report.block(to_dot(w.automaton, w.boundary) if args.dot else format_automaton(w.automaton, w.boundary))


def _digits(text):
    if text is None:
        return ()
    if not text.isdigit():
        raise InputError(f"expected digits, got {text!r}")
    return tuple(int(c) for c in text)


def cmd_beta(args, report):
    if args.expansion is not None:
        spec = countable.BetaSpec.from_expansion(_digits(args.expansion), _digits(args.period))
    else:
        if args.period is None:
            raise InputError("beta needs --period or --expansion")
        spec = countable.BetaSpec(_digits(args.preperiod), _digits(args.period))
    a = countable.beta_automaton(spec)
    report.add("preperiod", "".join(map(str, spec.preperiod)) or "~")
    report.add("period", "".join(map(str, spec.period)))
    report.add("states", a.n_states)
    report.block(to_dot(a) if args.dot else format_automaton(a))


def cmd_sft(args, report):
    words = parse_code(_read(args.file))
    if not isinstance(words, FiniteCode):
        raise InputError("forbidden words must be listed one per line")
    alphabet = tuple(args.alphabet) if args.alphabet else words.alphabet
    x = sft_from_forbidden(words.words, alphabet)
    _emit_shift(report, x, args.dot)


def cmd_blockmap(args, report):
    x = SoficShift.from_automaton(_load_presentation(args.file).with_ends("all", "all"))
    f = parse_block_map(_read(args.map), args.memory)
    _emit_shift(report, apply_block_map(x, f), args.dot)


def _emit_shift(report, x, dot):
    a = x.presentation
    report.add("states", a.n_states)
    for k in range(a.n_states):
        report.add(f"state{k}", _name(a, k))
    report.block(to_dot(a) if dot else format_automaton(a))


def cmd_dot(args, report):
    report.block(to_dot(_load_presentation(args.file)))


def build_parser():
    p = _Parser(prog="codedshifts", description=__doc__.splitlines()[0])
    p.add_argument("--porcelain", action="store_true", help="machine-readable key=value lines")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(q):
        q.add_argument("--porcelain", action="store_true", default=argparse.SUPPRESS,
                       help="machine-readable key=value lines")

    q = sub.add_parser("check", help="decide a property")
    q.add_argument("property", choices=["code", "prefix", "circular", "very-thin", "unambiguous",
                                        "strongly-unambiguous", "relative", "synchronized"])
    q.add_argument("files", nargs="+")
    q.add_argument("--max-len", type=int, help="bound on the constant search")
    common(q)
    q.set_defaults(run=cmd_check)

    q = sub.add_parser("recode", help="re-present a synchronized prefix code unambiguously")
    q.add_argument("file")
    q.add_argument("--max-len", type=int, help="bound on the constant search")
    q.add_argument("--constant", help="use this constant instead of searching")
    q.add_argument("--dot", action="store_true", help="append DOT of the product automaton")
    common(q)
    q.set_defaults(run=cmd_recode)

    q = sub.add_parser("fischer", help="subset automaton of a synchronized shift")
    q.add_argument("file")
    q.add_argument("--dot", action="store_true")
    common(q)
    q.set_defaults(run=cmd_fischer)

    q = sub.add_parser("morphism", help="bouquet automaton and properties of a morphism")
    q.add_argument("property", choices=["bouquet", "primitive", "circular", "recognizable"])
    q.add_argument("file")
    q.add_argument("--window", type=int, help="factor length for the recognizability check")
    q.add_argument("--max-len", type=int, help="largest power tried for primitivity")
    q.add_argument("--dot", action="store_true")
    common(q)
    q.set_defaults(run=cmd_morphism)

    q = sub.add_parser("fiebig", help="window of a countable unambiguous presentation")
    q.add_argument("file")
    q.add_argument("--mode", choices=["reversible", "strong"], default="strong")
    q.add_argument("--radius", type=int, default=20)
    q.add_argument("--state", type=int, default=0, help="base state of the seed")
    q.add_argument("--dot", action="store_true")
    common(q)
    q.set_defaults(run=cmd_fiebig)

    q = sub.add_parser("beta", help="automaton of a beta-shift")
    q.add_argument("--preperiod", help="digits before the period")
    q.add_argument("--period", help="digits repeated forever")
    q.add_argument("--expansion", help="finite expansion of 1, normalized before use")
    q.add_argument("--dot", action="store_true")
    common(q)
    q.set_defaults(run=cmd_beta)

    q = sub.add_parser("sft", help="presentation of a shift of finite type")
    q.add_argument("file", help="forbidden words, one per line")
    q.add_argument("--alphabet")
    q.add_argument("--dot", action="store_true")
    common(q)
    q.set_defaults(run=cmd_sft)

    q = sub.add_parser("blockmap", help="image of a sofic shift under a block map")
    q.add_argument("file")
    q.add_argument("map")
    q.add_argument("--memory", type=int, default=0)
    q.add_argument("--dot", action="store_true")
    common(q)
    q.set_defaults(run=cmd_blockmap)

    q = sub.add_parser("dot", help="DOT text of an automaton or of a code's automaton")
    q.add_argument("file")
    common(q)
    q.set_defaults(run=cmd_dot)
    return p


def _validate(args):
    for flag in ("max_len", "radius", "window", "memory"):
        value = getattr(args, flag, None)
        if value is not None and value < 0:
            raise InputError(f"--{flag.replace('_', '-')} must be >= 0")


def run(argv=None, out=None, err=None):
    """Run one command; returns the exit status."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        _validate(args)
        report = Report(args.porcelain)
        args.run(args, report)
    except InvariantError as exc:
        err.write(f"internal error: {exc}\n")
        return 2
    except (InputError, ParseError, CodedShiftError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        err.write(f"error: {msg}\n")
        return 1
    out.write(report.render())
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
