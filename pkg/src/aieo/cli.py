"""Command-line front end.

Subcommands: parse, print, translate, entail, prove, square,
demo-inadequacies.  Exit status: 0 when a verdict was produced, 1 on verdict
failure (countermodel under --expect-valid, failed proof check, failed square
under --expect-pass, malformed input), 2 on usage errors.  ``--json``
switches reports to a stable JSON schema.  The environment variable
AIEO_BUDGET overrides the model-enumeration cap.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import models, montague, scripts, sentences, square as square_mod
from .montague import Lexicon
from .parser import ParseError, parse_formula, parse_term, split_top_level
from .printer import formula_to_text, term_to_text
from .syntax import (
    And,
    ArityError,
    Constant,
    Epsilon,
    Equals,
    Exists,
    Falsum,
    Forall,
    FunApp,
    Implies,
    Not,
    Or,
    PredApp,
    Tau,
    Variable,
)


class CliError(Exception):
    pass


def ast_to_json(e) -> dict:
    if isinstance(e, Variable):
        return {"node": "var", "name": e.name}
    if isinstance(e, Constant):
        return {"node": "const", "name": e.name}
    if isinstance(e, FunApp):
        return {"node": "fun", "symbol": e.symbol, "args": [ast_to_json(a) for a in e.args]}
    if isinstance(e, (Epsilon, Tau)):
        return {"node": type(e).__name__.lower(), "var": e.var, "body": ast_to_json(e.body)}
    if isinstance(e, PredApp):
        return {"node": "pred", "symbol": e.symbol, "args": [ast_to_json(a) for a in e.args]}
    if isinstance(e, Equals):
        return {"node": "equals", "lhs": ast_to_json(e.lhs), "rhs": ast_to_json(e.rhs)}
    if isinstance(e, Not):
        return {"node": "not", "body": ast_to_json(e.body)}
    if isinstance(e, (And, Or, Implies)):
        return {
            "node": type(e).__name__.lower(),
            "lhs": ast_to_json(e.lhs),
            "rhs": ast_to_json(e.rhs),
        }
    if isinstance(e, (Exists, Forall)):
        return {"node": type(e).__name__.lower(), "var": e.var, "body": ast_to_json(e.body)}
    if isinstance(e, Falsum):
        return {"node": "false"}
    raise TypeError(f"not a term or formula: {e!r}")


def _load_theory(path) -> tuple:
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if line:
                out.append(parse_formula(line))
    return tuple(out)


def _emit(doc, as_json: bool, text: str):
    print(json.dumps(doc, indent=2) if as_json else text)


def cmd_parse(args) -> int:
    parse = parse_term if args.term else parse_formula
    node = parse(args.expression)
    if args.json:
        print(json.dumps(ast_to_json(node), indent=2))
    else:
        print(repr(node))
    return 0


def cmd_print(args) -> int:
    if args.term:
        print(term_to_text(parse_term(args.expression)))
    else:
        print(formula_to_text(parse_formula(args.expression)))
    return 0


def cmd_translate(args) -> int:
    lexicon = Lexicon.load(args.lexicon) if args.lexicon else None
    formula = sentences.translate(args.sentence, args.mode, lexicon)
    _emit(
        {"sentence": args.sentence, "mode": args.mode, "formula": formula_to_text(formula)},
        args.json,
        formula_to_text(formula),
    )
    return 0


def cmd_entail(args) -> int:
    gamma = []
    for chunk in args.gamma or []:
        gamma.extend(parse_formula(part) for part in split_top_level(chunk))
    theory = _load_theory(args.theory) if args.theory else ()
    phi = parse_formula(args.phi)
    verdict = models.entails(theory + tuple(gamma), phi, bound=args.bound)
    if isinstance(verdict, models.ValidUpTo):
        _emit(
            {"verdict": "valid-up-to", "bound": verdict.bound},
            args.json,
            f"valid up to bound {verdict.bound} (bounded claim; refutation is definitive, validity is not)",
        )
        return 0
    doc = {"verdict": "countermodel", **verdict.to_json()}
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        print("countermodel found:")
        print(json.dumps(verdict.to_json(), indent=2))
    return 1 if args.expect_valid else 0


def cmd_prove(args) -> int:
    with open(args.script, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        name, seq = scripts.check_script(text)
    except scripts.ScriptError as exc:
        _emit({"ok": False, "error": str(exc)}, args.json, f"FAIL: {exc}")
        return 1
    _emit(
        {"ok": True, "step": name, "sequent": str(seq)},
        args.json,
        f"checked {name}: {seq}",
    )
    return 0


def cmd_square(args) -> int:
    theory = _load_theory(args.theory) if args.theory else ()
    oracle = models.Oracle(sig=None, bound=args.bound, theory=theory)
    if args.proposition:
        try:
            result = square_mod.proposition_check(args.s, args.p, oracle)
        except square_mod.HypothesisNotMet as exc:
            _emit({"error": f"hypothesis not met: {exc}"}, args.json, f"hypothesis not met: {exc}")
            return 1
        sq, report = result.chosen, result.report
        header = f"bivalence: {result.bivalence.value}; chose {sq.label()}"
    else:
        sq = square_mod.build_square(args.s, args.p, negate_p=args.negate_p)
        report = square_mod.check_square(sq, oracle)
        header = None
    if args.json:
        doc = {
            "square": {k: formula_to_text(v) for k, v in sq.figures().items()},
            "label": sq.label(),
            "report": report.to_json(),
        }
        if header:
            doc["proposition"] = header
        print(json.dumps(doc, indent=2))
    else:
        if header:
            print(header)
        print(square_mod.render_square(sq, report))
    if args.expect_pass and not report.all_ok:
        return 1
    return 0


def cmd_demo_inadequacies(args) -> int:
    which = [args.which] if args.which else [1, 2, 3]
    docs = []
    for w in which:
        demo = montague.demonstrate_inadequacy(w)
        if w == 1:
            docs.append(
                {
                    "which": 1,
                    "summary": "exchanging restriction and main predicate changes the meaning",
                    "sentences": list(demo.sentence_pair),
                    "left": formula_to_text(demo.left),
                    "right": formula_to_text(demo.right),
                    "left_value": demo.left_value,
                    "right_value": demo.right_value,
                    "model": demo.model.to_json(),
                }
            )
        elif w == 2:
            docs.append(
                {
                    "which": 2,
                    "summary": "the standard semantic tree breaks syntactic constituency",
                    "sentence": demo.sentence,
                    "syntax_tree": demo.syntax_tree,
                    "semantic_tree": demo.semantic_tree,
                    "non_constituent": demo.non_constituent,
                    "epsilon_formula": formula_to_text(demo.epsilon_formula),
                }
            )
        else:
            docs.append(
                {
                    "which": 3,
                    "summary": "a bare noun phrase should denote an entity, not a raised quantifier",
                    "phrase": demo.phrase,
                    "raised_term": str(demo.raised_term),
                    "raised_type": str(demo.raised_type),
                    "epsilon_term": term_to_text(demo.epsilon_term),
                    "epsilon_type": str(demo.epsilon_type),
                }
            )
    if args.json:
        print(json.dumps(docs if len(docs) > 1 else docs[0], indent=2))
    else:
        for doc in docs:
            print(f"--- inadequacy {doc['which']}: {doc['summary']}")
            for key, value in doc.items():
                if key in ("which", "summary"):
                    continue
                print(f"  {key}: {json.dumps(value) if isinstance(value, (dict, list)) else value}")
    return 0


def build_arg_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="aieo",
        description="Workbench for Hilbert's epsilon/tau calculus and the square of opposition.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse a formula (or term) and dump its structure")
    p.add_argument("expression")
    p.add_argument("--term", action="store_true", help="parse as a term instead of a formula")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("print", help="parse and pretty-print in normal-form spacing")
    p.add_argument("expression")
    p.add_argument("--term", action="store_true")
    p.set_defaults(func=cmd_print)

    p = sub.add_parser("translate", help="translate a controlled A/E/I/O sentence")
    p.add_argument("sentence")
    p.add_argument("--mode", choices=("epsilon", "montague"), required=True)
    p.add_argument("--lexicon", help="lexicon file (name : type [= term] per line)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("entail", help="bounded semantic entailment check")
    p.add_argument("--gamma", action="append", default=[],
                   help="comma-separated hypothesis formulas (repeatable)")
    p.add_argument("--phi", required=True, help="conclusion formula")
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("--theory", help="file of additional hypothesis formulas")
    p.add_argument("--expect-valid", action="store_true",
                   help="exit 1 when a countermodel is found")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_entail)

    p = sub.add_parser("prove", help="check a proof script")
    p.add_argument("--script", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("square", help="build and verify an A/E/I/O square")
    p.add_argument("--s", required=True, help="subject predicate")
    p.add_argument("--p", required=True, help="main predicate")
    p.add_argument("--negate-p", action="store_true", help="negate the main predicate")
    p.add_argument("--theory", help="file of theory formulas for the oracle")
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("--proposition", action="store_true",
                   help="run the bivalence-based square selection instead of checking one square")
    p.add_argument("--expect-pass", action="store_true",
                   help="exit 1 unless all four conditions pass")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_square)

    p = sub.add_parser("demo-inadequacies", help="show the three standard-treatment inadequacies")
    p.add_argument("--which", type=int, choices=(1, 2, 3))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_demo_inadequacies)

    return ap


_INPUT_ERRORS = (
    ParseError,
    ArityError,
    CliError,
    OSError,
    scripts.ScriptError,
    sentences.UnrecognizedPattern,
    montague.UnknownWord,
    montague.LexiconError,
    montague.LambdaParseError,
    montague.TypeMismatch,
    models.BudgetExceeded,
    ValueError,
)


def main(argv=None) -> int:
    args = build_arg_parser().parse_args(argv)
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
