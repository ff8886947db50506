"""The A/E/I/O square over the subnector translations and its verification.

``build_square`` produces the four figures A = P(tau S), I = P(eps S),
E = ~I, O = ~A (with P replaced by its negation throughout when requested);
``check_square`` evaluates the four defining conditions of a square of
opposition against an entailment oracle; ``bivalence`` and
``proposition_check`` implement the choice between the plain and the
negated-predicate square; and ``remark_check`` property-tests the
redundancy of the subcontrariety condition and of one subalternation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum

from .models import BudgetExceeded, ValidUpTo
from .syntax import (
    And,
    ArityError,
    Epsilon,
    Falsum,
    Formula,
    Implies,
    Not,
    Or,
    PredApp,
    Signature,
    Tau,
    Variable,
)


class OracleBudgetExceeded(BudgetExceeded):
    pass


class HypothesisNotMet(Exception):
    """proposition_check requires bivalence; neither entailment direction holds."""


class Bivalence(Enum):
    LEFT_TO_RIGHT = "eps-entails-tau"
    RIGHT_TO_LEFT = "tau-entails-eps"
    BOTH = "both"
    NEITHER = "neither"


@dataclass(frozen=True)
class AieoSquare:
    A: Formula
    E: Formula
    I: Formula
    O: Formula
    subject: str
    main_predicate: str
    negate_main: bool

    def figures(self):
        return {"A": self.A, "E": self.E, "I": self.I, "O": self.O}

    def label(self) -> str:
        p = f"~{self.main_predicate}" if self.negate_main else self.main_predicate
        return f"Square({self.subject}, {p})"


def build_square(s: str, p: str, negate_p: bool = False, sig: Signature | None = None) -> AieoSquare:
    """The four figures over subject predicate ``s`` and main predicate ``p``
    (negated throughout when ``negate_p``)."""
    if sig is not None:
        for name in (s, p):
            arity = sig.predicate_arity(name)
            if arity != 1:
                raise ArityError(f"{name!r} must be a unary predicate, has arity {arity}")
    x = Variable("x")
    eps_s = Epsilon("x", PredApp(s, (x,)))
    tau_s = Tau("x", PredApp(s, (x,)))

    def main(t) -> Formula:
        f = PredApp(p, (t,))
        return Not(f) if negate_p else f

    i = main(eps_s)
    a = main(tau_s)
    return AieoSquare(A=a, E=Not(i), I=i, O=Not(a), subject=s,
                      main_predicate=p, negate_main=negate_p)


@dataclass
class SquareReport:
    contradictories_ok: tuple[bool, bool]
    contraries_ok: bool
    subcontraries_ok: bool
    subalterns_ok: tuple[bool, bool]
    notes: str = ""
    witnesses: dict = field(default_factory=dict)

    @property
    def all_ok(self) -> bool:
        return (
            all(self.contradictories_ok)
            and self.contraries_ok
            and self.subcontraries_ok
            and all(self.subalterns_ok)
        )

    def to_json(self) -> dict:
        def w(key):
            item = self.witnesses.get(key)
            return item.to_json() if hasattr(item, "to_json") else item

        return {
            "contradictories_ok": list(self.contradictories_ok),
            "contraries_ok": self.contraries_ok,
            "subcontraries_ok": self.subcontraries_ok,
            "subalterns_ok": list(self.subalterns_ok),
            "all_ok": self.all_ok,
            "notes": self.notes,
            "witnesses": {k: w(k) for k in self.witnesses},
        }


def _ok(verdict) -> bool:
    return isinstance(verdict, ValidUpTo)


def check_square(sq: AieoSquare, oracle) -> SquareReport:
    """Evaluate the four square conditions against ``oracle``.

    Condition i (contradictories): A -||- ~O and E -||- ~I.
    Condition ii (contraries): never both |- A and |- E.
    Condition iii (subcontraries): never both I |- false and E |- false.
    Condition iv (subalterns): A |- I and E |- O.
    Witnesses record the countermodel behind each verdict where one exists.
    """
    a, e, i, o = sq.A, sq.E, sq.I, sq.O
    witnesses: dict = {}
    try:
        pairs = [
            ("A |- ~O", [a], Not(o)),
            ("~O |- A", [Not(o)], a),
            ("E |- ~I", [e], Not(i)),
            ("~I |- E", [Not(i)], e),
        ]
        results = {}
        for name, hyps, concl in pairs:
            v = oracle.entails(hyps, concl)
            results[name] = _ok(v)
            if not _ok(v):
                witnesses[name] = v
        contradictories = (
            results["A |- ~O"] and results["~O |- A"],
            results["E |- ~I"] and results["~I |- E"],
        )

        va = oracle.entails((), a)
        ve = oracle.entails((), e)
        contraries = not (_ok(va) and _ok(ve))
        if not _ok(va):
            witnesses["model falsifying A"] = va
        elif not _ok(ve):
            witnesses["model falsifying E"] = ve

        vi = oracle.entails([i], Falsum())
        vE = oracle.entails([e], Falsum())
        subcontraries = not (_ok(vi) and _ok(vE))
        if not _ok(vi):
            witnesses["model satisfying I"] = vi
        elif not _ok(vE):
            witnesses["model satisfying E"] = vE

        s1 = oracle.entails([a], i)
        s2 = oracle.entails([e], o)
        subalterns = (_ok(s1), _ok(s2))
        if not _ok(s1):
            witnesses["A |- I"] = s1
        if not _ok(s2):
            witnesses["E |- O"] = s2

        converse1 = oracle.entails([Not(i)], Not(a))
        converse2 = oracle.entails([Not(o)], Not(e))
        notes = (
            "converse subalternation (reported, not required): "
            f"~I |- ~A: {'yes' if _ok(converse1) else 'no'}; "
            f"~O |- ~E: {'yes' if _ok(converse2) else 'no'}"
        )
    except BudgetExceeded as exc:
        raise OracleBudgetExceeded(str(exc)) from exc

    return SquareReport(
        contradictories_ok=contradictories,
        contraries_ok=contraries,
        subcontraries_ok=subcontraries,
        subalterns_ok=subalterns,
        notes=notes,
        witnesses=witnesses,
    )


def _eps_tau_pair(s: str, p: str):
    x = Variable("x")
    i = PredApp(p, (Epsilon("x", PredApp(s, (x,))),))
    a = PredApp(p, (Tau("x", PredApp(s, (x,))),))
    return i, a


def bivalence(s: str, p: str, oracle) -> Bivalence:
    """Which of P(eps S) |- P(tau S) (left-to-right) and
    P(tau S) |- P(eps S) (right-to-left) the oracle validates."""
    i, a = _eps_tau_pair(s, p)
    try:
        ltr = _ok(oracle.entails([i], a))
        rtl = _ok(oracle.entails([a], i))
    except BudgetExceeded as exc:
        raise OracleBudgetExceeded(str(exc)) from exc
    if ltr and rtl:
        return Bivalence.BOTH
    if ltr:
        return Bivalence.LEFT_TO_RIGHT
    if rtl:
        return Bivalence.RIGHT_TO_LEFT
    return Bivalence.NEITHER


@dataclass
class PropositionResult:
    bivalence: Bivalence
    chosen: AieoSquare
    report: SquareReport


def proposition_check(s: str, p: str, oracle) -> PropositionResult:
    """Under the bivalence hypothesis, verify that one of the two squares
    (plain P, or negated P) satisfies all four conditions.

    P(tau S) |- P(eps S) selects the plain square; in the remaining case
    (only P(eps S) |- P(tau S)) the negated-predicate square's subalterns are
    the contrapositives, so that square is checked instead.
    """
    b = bivalence(s, p, oracle)
    if b is Bivalence.NEITHER:
        raise HypothesisNotMet(
            f"neither P(eps {s}) |- P(tau {s}) nor P(tau {s}) |- P(eps {s}) holds"
        )
    negate = b is Bivalence.LEFT_TO_RIGHT
    sq = build_square(s, p, negate_p=negate)
    return PropositionResult(bivalence=b, chosen=sq, report=check_square(sq, oracle))


# the Remark: condition iii follows from i+ii, and E|-O from i + A|-I


@dataclass
class RemarkViolation:
    kind: str
    quadruple: tuple


@dataclass
class RemarkReport:
    checked: int
    premise_hits: int
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations


def default_quadruple_pool(s: str = "S", p: str = "P") -> list[Formula]:
    """Closed formulas over two unary predicates: the four subnector atoms,
    their negations, and the degenerate falsum/verum pair."""
    i_sp, a_sp = _eps_tau_pair(s, p)
    i_ps, a_ps = _eps_tau_pair(p, s)
    base = [a_sp, i_sp, a_ps, i_ps]
    return base + [Not(f) for f in base] + [Falsum(), Not(Falsum())]


def random_quadruples(count: int, seed: int = 0, s: str = "S", p: str = "P"):
    """Random closed formula quadruples of depth <= 2 over {s, p}."""
    rng = random.Random(seed)
    preds = [s, p]

    def term(depth):
        body_pred = rng.choice(preds)
        x = Variable("x")
        if depth > 0 and rng.random() < 0.3:
            body = And(PredApp(body_pred, (x,)), PredApp(rng.choice(preds), (x,)))
        else:
            body = PredApp(body_pred, (x,))
        return (Epsilon if rng.random() < 0.5 else Tau)("x", body)

    def atom(depth):
        r = rng.random()
        if r < 0.06:
            return Falsum()
        return PredApp(rng.choice(preds), (term(depth),))

    def formula(depth):
        if depth == 0:
            return atom(depth)
        r = rng.random()
        if r < 0.35:
            return atom(depth)
        if r < 0.55:
            return Not(formula(depth - 1))
        ctor = rng.choice((And, Or, Implies))
        return ctor(formula(depth - 1), formula(depth - 1))

    return [tuple(formula(2) for _ in range(4)) for _ in range(count)]


def remark_check(oracle, quadruples=None, random_count: int = 500, seed: int = 0) -> RemarkReport:
    """Test the two redundancy claims on arbitrary (A, E, I, O) quadruples.

    Whenever conditions i and ii hold under the oracle, condition iii must
    hold; and whenever i and A|-I hold, E|-O must hold.  Sweeps the exhaustive
    pool product plus ``random_count`` random quadruples; any violation is
    reported with the offending quadruple.
    """
    if quadruples is None:
        pool = default_quadruple_pool()
        quadruples = [
            (a, e, i, o) for a in pool for e in pool for i in pool for o in pool
        ]
    quadruples = list(quadruples) + random_quadruples(random_count, seed)

    violations: list[RemarkViolation] = []
    premise_hits = 0
    bot = Falsum()
    try:
        for quad in quadruples:
            a, e, i, o = quad
            cond_i = (
                oracle.holds([a], Not(o))
                and oracle.holds([Not(o)], a)
                and oracle.holds([e], Not(i))
                and oracle.holds([Not(i)], e)
            )
            if not cond_i:
                continue
            premise_hits += 1
            if oracle.holds([a], i) and not oracle.holds([e], o):
                violations.append(RemarkViolation("iv-from-i-and-other", quad))
            cond_ii = not (oracle.holds((), a) and oracle.holds((), e))
            if cond_ii:
                cond_iii = not (oracle.holds([i], bot) and oracle.holds([e], bot))
                if not cond_iii:
                    violations.append(RemarkViolation("iii-from-i-and-ii", quad))
    except BudgetExceeded as exc:
        raise OracleBudgetExceeded(str(exc)) from exc
    return RemarkReport(checked=len(quadruples), premise_hits=premise_hits, violations=violations)


def render_square(sq: AieoSquare, report: SquareReport | None = None) -> str:
    """ASCII diagram of the square with per-edge verdict marks."""

    def mark(ok):
        if report is None:
            return ""
        return " [ok]" if ok else " [FAIL]"

    contrary = mark(report.contraries_ok if report else None)
    subcontrary = mark(report.subcontraries_ok if report else None)
    sub_left = mark(report.subalterns_ok[0] if report else None)
    sub_right = mark(report.subalterns_ok[1] if report else None)
    diag = mark(all(report.contradictories_ok) if report else None)

    inner = 42
    top = f" contraries{contrary} ".center(inner - 8, "-")
    mid = ("<" + f" contradictories{diag} ".center(inner - 10, "-") + ">").center(inner)
    bot = f" subcontraries{subcontrary} ".center(inner - 8, "-")
    lines = [
        f"{sq.label()}",
        "",
        f"  A: {sq.A}",
        f"  E: {sq.E}",
        f"  I: {sq.I}",
        f"  O: {sq.O}",
        "",
        f"  A <--{top}--> E",
        f"  | \\{' ' * (inner - 4)}/ |",
        f"  |{mid}|",
        f"  | /{' ' * (inner - 4)}\\ |",
        f"  v{' ' * inner}v",
        f"  I <--{bot}--> O",
        f"  subalternation: A -> I{sub_left}   E -> O{sub_right}",
    ]
    if report is not None:
        lines.append("")
        lines.append(f"  all conditions: {'PASS' if report.all_ok else 'FAIL'}")
        if report.notes:
            lines.append(f"  {report.notes}")
    return "\n".join(lines)
