"""Command-line interface.

Exit codes: 0 success, 1 negative verdict (incoherent, incomplete, unsound,
entailment fails), 2 usage, parse or resource errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .coherence import (
    BeliefError,
    ExpressionError,
    check_coherence,
    extract_dutch_book,
    generate_axioms,
    load_beliefs,
    template_library,
    verify_axiom_completeness,
    verify_axiom_soundness,
)
from .coherence.templates import TEMPLATES
from .formula import IDENTIFIER, FormulaSyntaxError, parse_formula, render_formula
from .semantics import DEFAULT_CAP, ClosureCapExceeded, cognitive_matrix, countervaluation, entails, quotient_algebra
from .truth import LogicError, builtin_names, load_logic

__all__ = ["main", "run"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Argument errors surface as a single ``error:`` line, exit 2."""

    def error(self, message):
        raise UsageError(message)


def _default_cap() -> int:
    raw = os.environ.get("COHERENTIA_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"COHERENTIA_CAP must be an integer, got {raw!r}") from None


def _letters(raw: list[str]) -> list[str]:
    out = [x for chunk in raw for x in chunk.replace(",", " ").split()]
    for x in out:
        if not IDENTIFIER.fullmatch(x):
            raise UsageError(f"invalid letter {x!r}")
    if not out:
        raise UsageError("no letters given")
    return out


def _q(x) -> str:
    return str(Fraction(x))


def _emit(args, text_lines, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        for line in text_lines:
            print(line)


def cmd_logics(args) -> int:
    _emit(args, builtin_names(), {"logics": builtin_names()})
    return 0


def cmd_quotient(args) -> int:
    spec = load_logic(args.logic)
    q = quotient_algebra(spec, _letters(args.letters), args.cap)
    names = q.rendered()
    lines = [f"# valuations: {' | '.join(v.describe(spec) for v in q.valuations)}"]
    for i, (name, vec) in enumerate(zip(names, q.classes)):
        lines.append(f"{i}\t{name}\t{' '.join(spec.label(a) for a in vec)}")
    payload = {
        "logic": spec.name,
        "letters": list(q.letters),
        "valuations": [{x: spec.label(a) for x, a in zip(v.letters, v.values)} for v in q.valuations],
        "classes": [
            {"representative": name, "vector": [spec.label(a) for a in vec]} for name, vec in zip(names, q.classes)
        ],
    }
    _emit(args, lines, payload)
    return 0


def cmd_axioms(args) -> int:
    spec = load_logic(args.logic)
    axioms = generate_axioms(spec, _letters(args.letters), args.cap)
    lines = axioms.lines()
    if args.logical:
        lines.append(f"# logical axiom: {axioms.logical_axiom}")
    _emit(args, lines, axioms.to_json())
    if args.dump_geometry:
        matrix = cognitive_matrix(spec, axioms.quotient)
        dump = {
            "columns": axioms.quotient.rendered(),
            "V": [[_q(x) for x in row] for row in matrix.rows],
            "H": {
                "equalities": [{"normal": [_q(a) for a in h.normal], "offset": _q(h.offset)} for h in axioms.hrep.equalities],
                "inequalities": [
                    {"normal": [_q(a) for a in h.normal], "offset": _q(h.offset)} for h in axioms.hrep.inequalities
                ],
            },
        }
        print(json.dumps(dump, indent=2, ensure_ascii=False), file=sys.stderr)
    return 0


def cmd_check(args) -> int:
    spec = load_logic(args.logic) if args.logic else None
    spec, assignment = load_beliefs(args.beliefs, spec, load_logic)
    verdict = check_coherence(spec, assignment)
    names = [render_formula(f, spec) for f in assignment.formulas]
    payload = {
        "logic": spec.name,
        "coherent": verdict.coherent,
        "beliefs": [{"formula": n, "value": _q(v)} for n, v in zip(names, assignment.values)],
    }
    if verdict.coherent:
        mixture = verdict.mixture()
        lines = ["coherent", "mixture of cognitive evaluations:"]
        lines += [f"  {_q(weight)}\t{v.describe(spec)}" for v, weight in mixture]
        payload["mixture"] = [
            {"valuation": {x: spec.label(a) for x, a in zip(v.letters, v.values)}, "weight": _q(weight)}
            for v, weight in mixture
        ]
        _emit(args, lines, payload)
        return 0
    book = extract_dutch_book(spec, assignment, verdict)
    stakes = book.stakes()
    lines = ["incoherent", f"violated axiom: {verdict.violated['text']}", "dutch book (bettor's stakes):"]
    for f, n, v in zip(assignment.formulas, names, assignment.values):
        lines.append(f"  stake {_q(stakes[f])} on {n} at quotient {_q(v)}")
    lines.append(f"guaranteed loss: {_q(book.guaranteed_loss_bound)}")
    payload["violated_axiom"] = verdict.violated["text"]
    payload["dutch_book"] = {
        "bets": [{"formula": n, "stake": _q(stakes[f])} for f, n in zip(assignment.formulas, names)],
        "guaranteed_loss": _q(book.guaranteed_loss_bound),
    }
    _emit(args, lines, payload)
    return 1


def cmd_consequence(args) -> int:
    spec = load_logic(args.logic)
    phi, psi = parse_formula(args.phi, spec), parse_formula(args.psi, spec)
    letters = _letters(args.letters) if args.letters else None
    holds = entails(spec, phi, psi, letters)
    payload = {"logic": spec.name, "premise": args.phi, "conclusion": args.psi, "holds": holds}
    if holds:
        lines = [f"{args.phi} ⊨ {args.psi}: holds"]
    else:
        v = countervaluation(spec, phi, psi, letters)
        lines = [f"{args.phi} ⊨ {args.psi}: fails", f"countervaluation: {v.describe(spec)}"]
        payload["countervaluation"] = {x: spec.label(a) for x, a in zip(v.letters, v.values)}
    _emit(args, lines, payload)
    return 0 if holds else 1


def cmd_verify(args) -> int:
    spec = load_logic(args.logic)
    letters = _letters(args.letters)
    names = [t for chunk in args.templates for t in chunk.replace(",", " ").split()]
    try:
        templates = template_library(names)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    payload = {"logic": spec.name, "letters": letters, "templates": names, "mode": args.mode}
    if args.mode == "soundness":
        report = verify_axiom_soundness(spec, letters, templates, args.cap)
        payload.update(sound=report.sound, instances=report.instances, checks=report.checks, violations=report.describe(spec))
        lines = [f"{'sound' if report.sound else 'unsound'} ({report.instances} instances, {report.checks} checks)"]
        lines += report.describe(spec)
        _emit(args, lines, payload)
        return 0 if report.sound else 1
    report = verify_axiom_completeness(spec, letters, templates, args.cap)
    payload["status"] = report.status
    lines = [report.status]
    if report.status == "incomplete":
        lines.append(f"missing axiom: {report.missing['text']}")
        lines.append("witness: " + ", ".join(f"B({k})={_q(v)}" for k, v in report.witness.items()))
        payload["missing_axiom"] = report.missing["text"]
        payload["witness"] = {k: _q(v) for k, v in report.witness.items()}
    elif report.status == "unsound":
        detail = report.soundness.describe(spec)
        lines += detail
        payload["violations"] = detail
    _emit(args, lines, payload)
    return 0 if report.complete else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="coherentia", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, letters=True, cap=True):
        p.add_argument("--format", choices=("text", "json"), default="text")
        if cap:
            p.add_argument("--cap", type=int, default=None, help="closure cap (default $COHERENTIA_CAP or 100000)")
        if letters:
            p.add_argument("--letters", nargs="+", required=True, help="letters, space or comma separated")

    p = sub.add_parser("logics", help="list built-in logics")
    common(p, letters=False, cap=False)
    p.set_defaults(func=cmd_logics)

    p = sub.add_parser("quotient", help="classes of the finite quotient algebra")
    p.add_argument("--logic", required=True)
    common(p)
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("axioms", help="facet axioms of the cognitive polytope")
    p.add_argument("--logic", required=True)
    p.add_argument("--logical", action="store_true", help="also print the logical axiom")
    p.add_argument("--dump-geometry", action="store_true", help="dump V- and H-representations to stderr")
    common(p)
    p.set_defaults(func=cmd_axioms)

    p = sub.add_parser("check", help="coherence of a belief file")
    p.add_argument("--logic", default=None, help="overrides the file's logic")
    p.add_argument("--beliefs", required=True)
    common(p, letters=False, cap=False)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("consequence", help="decide phi |= psi")
    p.add_argument("--logic", required=True)
    p.add_argument("phi")
    p.add_argument("psi")
    p.add_argument("--letters", nargs="+", default=None)
    common(p, letters=False, cap=False)
    p.set_defaults(func=cmd_consequence)

    p = sub.add_parser("verify", help="soundness or completeness of axiom templates")
    p.add_argument("--logic", required=True)
    p.add_argument("--templates", nargs="+", required=True, help=f"names among {', '.join(TEMPLATES)}")
    p.add_argument("--mode", choices=("soundness", "completeness"), default="soundness")
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:  # --help
            return int(exc.code or 0)
        if getattr(args, "cap", None) is None and "cap" in vars(args):
            args.cap = _default_cap()
        return args.func(args)
    except (UsageError, LogicError, FormulaSyntaxError, BeliefError, ExpressionError, ClosureCapExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
