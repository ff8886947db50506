"""Checkable natural deduction for classical logic with the epsilon/tau rules.

Derivations are explicit trees; :func:`check_derivation` re-validates every
node from scratch.  Hypotheses form a multiset (compared up to alpha) with
explicit weakening; rules that share a context require exact multiset
equality.  There is no primitive epsilon elimination: eliminations go through
DualRewrite plus the tau rules, and DualRewrite itself is checked as the
congruence generated by the duality equation eps x. F = tau x. ~F (both
orientations), which chains of single rewrites generate anyway.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .syntax import (
    And,
    Constant,
    Epsilon,
    Equals,
    Exists,
    Falsum,
    Forall,
    Formula,
    FunApp,
    Implies,
    Not,
    Or,
    PredApp,
    Signature,
    Tau,
    Term,
    Variable,
    alpha_eq,
    alpha_key,
    free_vars,
    substitute,
    validate,
)


class RuleMismatch(Exception):
    pass


class EigenvariableViolation(Exception):
    pass


@dataclass(frozen=True)
class Sequent:
    hyps: tuple[Formula, ...]
    concl: Formula

    def __post_init__(self):
        object.__setattr__(self, "hyps", tuple(self.hyps))

    def __str__(self) -> str:
        left = ", ".join(str(h) for h in self.hyps)
        return f"{left} |- {self.concl}" if left else f"|- {self.concl}"


@dataclass(frozen=True)
class Derivation:
    rule: str
    premises: tuple["Derivation", ...]
    conclusion: Sequent
    payload: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "premises", tuple(self.premises))
        object.__setattr__(self, "payload", tuple(self.payload))

    def arg(self, key: str):
        for k, v in self.payload:
            if k == key:
                return v
        raise RuleMismatch(f"{self.rule}: missing payload {key!r}")


def _hyp_multiset(hyps) -> Counter:
    return Counter(alpha_key(h) for h in hyps)


def _same_hyps(a, b) -> bool:
    return _hyp_multiset(a) == _hyp_multiset(b)


def _is_sub_multiset(small, large) -> bool:
    sc, lc = _hyp_multiset(small), _hyp_multiset(large)
    return all(lc[k] >= v for k, v in sc.items())


def _minus_one(hyps, f) -> Counter | None:
    """Multiset of ``hyps`` with one alpha-occurrence of ``f`` removed, or
    None when absent."""
    c = _hyp_multiset(hyps)
    key = alpha_key(f)
    if c[key] <= 0:
        return None
    c[key] -= 1
    if c[key] == 0:
        del c[key]
    return c


def _fail(node: Derivation, reason: str):
    raise RuleMismatch(f"{node.rule}: {reason} (at {node.conclusion})")


def check_derivation(d: Derivation, sig: Signature | None = None) -> Sequent:
    """Return ``d``'s end-sequent iff every node is valid.

    Raises RuleMismatch (conclusion is not the required instance),
    EigenvariableViolation (TauIntro side condition), or ArityError (when a
    signature is supplied and a formula is ill-formed over it).
    """
    for p in d.premises:
        check_derivation(p, sig)
    if sig is not None:
        for h in d.conclusion.hyps:
            validate(h, sig)
        validate(d.conclusion.concl, sig)
    checker = _RULES.get(d.rule)
    if checker is None:
        raise RuleMismatch(f"unknown rule {d.rule!r}")
    checker(d)
    return d.conclusion


def _need_premises(node: Derivation, count: int):
    if len(node.premises) != count:
        _fail(node, f"expected {count} premise(s), got {len(node.premises)}")


def _check_axiom(node: Derivation):
    _need_premises(node, 0)
    if _hyp_multiset(node.conclusion.hyps)[alpha_key(node.conclusion.concl)] <= 0:
        _fail(node, "conclusion is not among the hypotheses")


def _check_weaken(node: Derivation):
    _need_premises(node, 1)
    prem = node.premises[0].conclusion
    if not alpha_eq(prem.concl, node.conclusion.concl):
        _fail(node, "conclusion formula changed")
    if not _is_sub_multiset(prem.hyps, node.conclusion.hyps):
        _fail(node, "hypotheses of the premise are not included")


def _check_and_intro(node: Derivation):
    _need_premises(node, 2)
    f = node.conclusion.concl
    if not isinstance(f, And):
        _fail(node, "conclusion is not a conjunction")
    p1, p2 = (p.conclusion for p in node.premises)
    if not (alpha_eq(p1.concl, f.lhs) and alpha_eq(p2.concl, f.rhs)):
        _fail(node, "premises do not match the conjuncts")
    if not (_same_hyps(p1.hyps, node.conclusion.hyps) and _same_hyps(p2.hyps, node.conclusion.hyps)):
        _fail(node, "hypotheses differ across premises")


def _check_and_elim(node: Derivation, keep_left: bool):
    _need_premises(node, 1)
    prem = node.premises[0].conclusion
    if not isinstance(prem.concl, And):
        _fail(node, "premise is not a conjunction")
    part = prem.concl.lhs if keep_left else prem.concl.rhs
    if not alpha_eq(node.conclusion.concl, part):
        _fail(node, "conclusion is not the selected conjunct")
    if not _same_hyps(prem.hyps, node.conclusion.hyps):
        _fail(node, "hypotheses changed")


def _check_or_intro(node: Derivation, from_left: bool):
    _need_premises(node, 1)
    f = node.conclusion.concl
    if not isinstance(f, Or):
        _fail(node, "conclusion is not a disjunction")
    prem = node.premises[0].conclusion
    side = f.lhs if from_left else f.rhs
    if not alpha_eq(prem.concl, side):
        _fail(node, "premise does not match the selected disjunct")
    if not _same_hyps(prem.hyps, node.conclusion.hyps):
        _fail(node, "hypotheses changed")


def _check_or_elim(node: Derivation):
    _need_premises(node, 3)
    pd, pl, pr = (p.conclusion for p in node.premises)
    if not isinstance(pd.concl, Or):
        _fail(node, "first premise is not a disjunction")
    if not (alpha_eq(pl.concl, node.conclusion.concl) and alpha_eq(pr.concl, node.conclusion.concl)):
        _fail(node, "case conclusions do not match")
    if not _same_hyps(pd.hyps, node.conclusion.hyps):
        _fail(node, "hypotheses of the disjunction premise changed")
    base = _hyp_multiset(node.conclusion.hyps)
    left = _minus_one(pl.hyps, pd.concl.lhs)
    right = _minus_one(pr.hyps, pd.concl.rhs)
    if left is None or left != base:
        _fail(node, "left case does not discharge exactly the left disjunct")
    if right is None or right != base:
        _fail(node, "right case does not discharge exactly the right disjunct")


def _check_imp_intro(node: Derivation):
    _need_premises(node, 1)
    f = node.conclusion.concl
    if not isinstance(f, Implies):
        _fail(node, "conclusion is not an implication")
    prem = node.premises[0].conclusion
    if not alpha_eq(prem.concl, f.rhs):
        _fail(node, "premise does not conclude the consequent")
    reduced = _minus_one(prem.hyps, f.lhs)
    if reduced is None or reduced != _hyp_multiset(node.conclusion.hyps):
        _fail(node, "premise hypotheses are not the conclusion's plus the antecedent")


def _check_imp_elim(node: Derivation):
    _need_premises(node, 2)
    p_imp, p_arg = (p.conclusion for p in node.premises)
    if not isinstance(p_imp.concl, Implies):
        _fail(node, "first premise is not an implication")
    if not alpha_eq(p_arg.concl, p_imp.concl.lhs):
        _fail(node, "second premise does not match the antecedent")
    if not alpha_eq(node.conclusion.concl, p_imp.concl.rhs):
        _fail(node, "conclusion is not the consequent")
    if not (_same_hyps(p_imp.hyps, node.conclusion.hyps) and _same_hyps(p_arg.hyps, node.conclusion.hyps)):
        _fail(node, "hypotheses differ across premises")


def _check_not_intro(node: Derivation):
    _need_premises(node, 1)
    f = node.conclusion.concl
    if not isinstance(f, Not):
        _fail(node, "conclusion is not a negation")
    prem = node.premises[0].conclusion
    if not isinstance(prem.concl, Falsum):
        _fail(node, "premise does not conclude falsum")
    reduced = _minus_one(prem.hyps, f.body)
    if reduced is None or reduced != _hyp_multiset(node.conclusion.hyps):
        _fail(node, "premise hypotheses are not the conclusion's plus the negated formula")


def _check_not_elim(node: Derivation):
    _need_premises(node, 2)
    p_neg, p_pos = (p.conclusion for p in node.premises)
    if not isinstance(p_neg.concl, Not):
        _fail(node, "first premise is not a negation")
    if not alpha_eq(p_neg.concl.body, p_pos.concl):
        _fail(node, "premises are not a formula and its negation")
    if not isinstance(node.conclusion.concl, Falsum):
        _fail(node, "conclusion must be falsum")
    if not (_same_hyps(p_neg.hyps, node.conclusion.hyps) and _same_hyps(p_pos.hyps, node.conclusion.hyps)):
        _fail(node, "hypotheses differ across premises")


def _check_falsum_elim(node: Derivation):
    _need_premises(node, 1)
    prem = node.premises[0].conclusion
    if not isinstance(prem.concl, Falsum):
        _fail(node, "premise does not conclude falsum")
    if not _same_hyps(prem.hyps, node.conclusion.hyps):
        _fail(node, "hypotheses changed")


def _check_dne(node: Derivation):
    _need_premises(node, 1)
    prem = node.premises[0].conclusion
    if not (isinstance(prem.concl, Not) and isinstance(prem.concl.body, Not)):
        _fail(node, "premise is not a double negation")
    if not alpha_eq(prem.concl.body.body, node.conclusion.concl):
        _fail(node, "conclusion does not match the doubly negated formula")
    if not _same_hyps(prem.hyps, node.conclusion.hyps):
        _fail(node, "hypotheses changed")


def _check_eq_refl(node: Derivation):
    _need_premises(node, 0)
    f = node.conclusion.concl
    if not isinstance(f, Equals) or not alpha_eq(f.lhs, f.rhs):
        _fail(node, "conclusion is not a reflexive equation")


def _check_eq_subst(node: Derivation):
    _need_premises(node, 2)
    var = node.arg("var")
    pattern = node.arg("pattern")
    p_eq, p_f = (p.conclusion for p in node.premises)
    if not isinstance(p_eq.concl, Equals):
        _fail(node, "first premise is not an equation")
    s, t = p_eq.concl.lhs, p_eq.concl.rhs
    if not alpha_eq(p_f.concl, substitute(pattern, var, s)):
        _fail(node, "second premise is not the pattern at the equation's left side")
    if not alpha_eq(node.conclusion.concl, substitute(pattern, var, t)):
        _fail(node, "conclusion is not the pattern at the equation's right side")
    if not (_same_hyps(p_eq.hyps, node.conclusion.hyps) and _same_hyps(p_f.hyps, node.conclusion.hyps)):
        _fail(node, "hypotheses differ across premises")


def _check_tau_intro(node: Derivation):
    _need_premises(node, 1)
    var = node.arg("var")
    prem = node.premises[0].conclusion
    for h in prem.hyps:
        if var in free_vars(h):
            raise EigenvariableViolation(
                f"tau_intro: eigenvariable {var!r} occurs free in hypothesis {h}"
            )
    expected = substitute(prem.concl, var, Tau(var, prem.concl))
    if not alpha_eq(node.conclusion.concl, expected):
        _fail(node, "conclusion is not the premise at its own tau term")
    if not _same_hyps(prem.hyps, node.conclusion.hyps):
        _fail(node, "hypotheses changed")


def _check_tau_elim(node: Derivation):
    _need_premises(node, 1)
    var = node.arg("var")
    pattern = node.arg("pattern")
    term = node.arg("term")
    prem = node.premises[0].conclusion
    if not alpha_eq(prem.concl, substitute(pattern, var, Tau(var, pattern))):
        _fail(node, "premise is not the pattern at its own tau term")
    if not alpha_eq(node.conclusion.concl, substitute(pattern, var, term)):
        _fail(node, "conclusion is not the pattern at the witness term")
    if not _same_hyps(prem.hyps, node.conclusion.hyps):
        _fail(node, "hypotheses changed")


def _check_eps_intro(node: Derivation):
    _need_premises(node, 1)
    var = node.arg("var")
    pattern = node.arg("pattern")
    witness = node.arg("witness")
    prem = node.premises[0].conclusion
    if not alpha_eq(prem.concl, substitute(pattern, var, witness)):
        _fail(node, "premise is not the pattern at the witness term")
    expected = substitute(pattern, var, Epsilon(var, pattern))
    if not alpha_eq(node.conclusion.concl, expected):
        _fail(node, "conclusion is not the pattern at its own epsilon term")
    if not _same_hyps(prem.hyps, node.conclusion.hyps):
        _fail(node, "hypotheses changed")


def dual_canonical(e):
    """Normal form modulo the duality equation: tau eliminated, double
    negations stripped at subnector body roots only (never at formula level)."""
    if isinstance(e, (Variable, Constant, Falsum)):
        return e
    if isinstance(e, Epsilon):
        return Epsilon(e.var, _strip_pairs(dual_canonical(e.body)))
    if isinstance(e, Tau):
        body = _strip_pairs(dual_canonical(e.body))
        body = body.body if isinstance(body, Not) else Not(body)
        return Epsilon(e.var, body)
    if isinstance(e, (FunApp, PredApp)):
        return type(e)(e.symbol, tuple(dual_canonical(a) for a in e.args))
    if isinstance(e, (Exists, Forall)):
        return type(e)(e.var, dual_canonical(e.body))
    if isinstance(e, Equals):
        return Equals(dual_canonical(e.lhs), dual_canonical(e.rhs))
    if isinstance(e, Not):
        return Not(dual_canonical(e.body))
    if isinstance(e, (And, Or, Implies)):
        return type(e)(dual_canonical(e.lhs), dual_canonical(e.rhs))
    raise TypeError(f"not a term or formula: {e!r}")


def _strip_pairs(f):
    while isinstance(f, Not) and isinstance(f.body, Not):
        f = f.body.body
    return f


def dual_interconvertible(a, b) -> bool:
    """True iff ``a`` and ``b`` are related by dual rewrites (any number, any
    positions)."""
    return alpha_eq(dual_canonical(a), dual_canonical(b))


def _check_dual_rewrite(node: Derivation):
    _need_premises(node, 1)
    prem = node.premises[0].conclusion
    if not dual_interconvertible(prem.concl, node.conclusion.concl):
        _fail(node, "conclusion is not dual-interconvertible with the premise")
    pk = Counter(alpha_key(dual_canonical(h)) for h in prem.hyps)
    nk = Counter(alpha_key(dual_canonical(h)) for h in node.conclusion.hyps)
    if pk != nk:
        _fail(node, "hypotheses are not dual-interconvertible")


_RULES = {
    "axiom": _check_axiom,
    "weaken": _check_weaken,
    "and_intro": _check_and_intro,
    "and_elim_left": lambda n: _check_and_elim(n, True),
    "and_elim_right": lambda n: _check_and_elim(n, False),
    "or_intro_left": lambda n: _check_or_intro(n, True),
    "or_intro_right": lambda n: _check_or_intro(n, False),
    "or_elim": _check_or_elim,
    "imp_intro": _check_imp_intro,
    "imp_elim": _check_imp_elim,
    "not_intro": _check_not_intro,
    "not_elim": _check_not_elim,
    "falsum_elim": _check_falsum_elim,
    "dne": _check_dne,
    "eq_refl": _check_eq_refl,
    "eq_subst": _check_eq_subst,
    "tau_intro": _check_tau_intro,
    "tau_elim": _check_tau_elim,
    "eps_intro": _check_eps_intro,
    "dual_rewrite": _check_dual_rewrite,
}

RULE_NAMES = tuple(sorted(_RULES))


# construction helpers: compute conclusions, the kernel re-checks them


def axiom(hyps, formula: Formula) -> Derivation:
    return Derivation("axiom", (), Sequent(tuple(hyps), formula))


def weaken(premise: Derivation, extra) -> Derivation:
    seq = premise.conclusion
    return Derivation("weaken", (premise,), Sequent(seq.hyps + tuple(extra), seq.concl))


def and_intro(p1: Derivation, p2: Derivation) -> Derivation:
    seq = Sequent(p1.conclusion.hyps, And(p1.conclusion.concl, p2.conclusion.concl))
    return Derivation("and_intro", (p1, p2), seq)


def and_elim_left(p: Derivation) -> Derivation:
    return Derivation("and_elim_left", (p,), Sequent(p.conclusion.hyps, p.conclusion.concl.lhs))


def and_elim_right(p: Derivation) -> Derivation:
    return Derivation("and_elim_right", (p,), Sequent(p.conclusion.hyps, p.conclusion.concl.rhs))


def or_intro_left(p: Derivation, right: Formula) -> Derivation:
    return Derivation("or_intro_left", (p,), Sequent(p.conclusion.hyps, Or(p.conclusion.concl, right)))


def or_intro_right(p: Derivation, left: Formula) -> Derivation:
    return Derivation("or_intro_right", (p,), Sequent(p.conclusion.hyps, Or(left, p.conclusion.concl)))


def or_elim(p_disj: Derivation, p_left: Derivation, p_right: Derivation) -> Derivation:
    seq = Sequent(p_disj.conclusion.hyps, p_left.conclusion.concl)
    return Derivation("or_elim", (p_disj, p_left, p_right), seq)


def _remove_one(hyps, f):
    for i, h in enumerate(hyps):
        if alpha_eq(h, f):
            return hyps[:i] + hyps[i + 1 :]
    raise ValueError(f"hypothesis {f} not present to discharge")


def imp_intro(p: Derivation, antecedent: Formula) -> Derivation:
    hyps = _remove_one(p.conclusion.hyps, antecedent)
    return Derivation("imp_intro", (p,), Sequent(hyps, Implies(antecedent, p.conclusion.concl)))


def imp_elim(p_imp: Derivation, p_arg: Derivation) -> Derivation:
    return Derivation(
        "imp_elim", (p_imp, p_arg), Sequent(p_imp.conclusion.hyps, p_imp.conclusion.concl.rhs)
    )


def not_intro(p: Derivation, discharged: Formula) -> Derivation:
    hyps = _remove_one(p.conclusion.hyps, discharged)
    return Derivation("not_intro", (p,), Sequent(hyps, Not(discharged)))


def not_elim(p_neg: Derivation, p_pos: Derivation) -> Derivation:
    return Derivation("not_elim", (p_neg, p_pos), Sequent(p_neg.conclusion.hyps, Falsum()))


def falsum_elim(p: Derivation, formula: Formula) -> Derivation:
    return Derivation("falsum_elim", (p,), Sequent(p.conclusion.hyps, formula))


def dne(p: Derivation) -> Derivation:
    return Derivation("dne", (p,), Sequent(p.conclusion.hyps, p.conclusion.concl.body.body))


def eq_refl(term: Term, hyps=()) -> Derivation:
    return Derivation("eq_refl", (), Sequent(tuple(hyps), Equals(term, term)))


def eq_subst(p_eq: Derivation, p_formula: Derivation, var: str, pattern: Formula) -> Derivation:
    target = substitute(pattern, var, p_eq.conclusion.concl.rhs)
    return Derivation(
        "eq_subst",
        (p_eq, p_formula),
        Sequent(p_eq.conclusion.hyps, target),
        payload=(("var", var), ("pattern", pattern)),
    )


def tau_intro(p: Derivation, var: str) -> Derivation:
    f = p.conclusion.concl
    concl = substitute(f, var, Tau(var, f))
    return Derivation("tau_intro", (p,), Sequent(p.conclusion.hyps, concl), payload=(("var", var),))


def tau_elim(p: Derivation, var: str, pattern: Formula, term: Term) -> Derivation:
    concl = substitute(pattern, var, term)
    return Derivation(
        "tau_elim",
        (p,),
        Sequent(p.conclusion.hyps, concl),
        payload=(("var", var), ("pattern", pattern), ("term", term)),
    )


def eps_intro(p: Derivation, var: str, pattern: Formula, witness: Term) -> Derivation:
    concl = substitute(pattern, var, Epsilon(var, pattern))
    return Derivation(
        "eps_intro",
        (p,),
        Sequent(p.conclusion.hyps, concl),
        payload=(("var", var), ("pattern", pattern), ("witness", witness)),
    )


def dual_rewrite(p: Derivation, target: Sequent) -> Derivation:
    return Derivation("dual_rewrite", (p,), target)


# the shipped derivation library


def dneg_intro(formula: Formula, hyps=()) -> Derivation:
    """hyps + [formula] |- ~~formula."""
    context = tuple(hyps) + (formula, Not(formula))
    bot = not_elim(axiom(context, Not(formula)), axiom(context, formula))
    return not_intro(bot, Not(formula))


def dneg_elim(formula: Formula, hyps=()) -> Derivation:
    """hyps + [~~formula] |- formula."""
    context = tuple(hyps) + (Not(Not(formula)),)
    return dne(axiom(context, Not(Not(formula))))


def _unary(p: str, t: Term) -> Formula:
    return PredApp(p, (t,))


def derive_dual_equivalences(p: str = "P") -> list[tuple[str, Derivation]]:
    """Kernel-checked derivations of both directions of
    P(eps x. P(x)) == ~~P(tau x. ~P(x)) and P(tau x. P(x)) == ~~P(eps x. ~P(x))."""
    x = Variable("x")
    eps_p = Epsilon("x", _unary(p, x))
    tau_p = Tau("x", _unary(p, x))
    tau_not_p = Tau("x", Not(_unary(p, x)))
    eps_not_p = Epsilon("x", Not(_unary(p, x)))

    out = []

    lhs = _unary(p, eps_p)
    d = dneg_intro(lhs)
    d = dual_rewrite(d, Sequent((lhs,), Not(Not(_unary(p, tau_not_p)))))
    out.append(("eps_to_dneg_tau", d))

    h = Not(Not(_unary(p, tau_not_p)))
    d = dne(axiom((h,), h))
    d = dual_rewrite(d, Sequent((h,), _unary(p, eps_p)))
    out.append(("dneg_tau_to_eps", d))

    lhs = _unary(p, tau_p)
    d = dneg_intro(lhs)
    d = dual_rewrite(d, Sequent((lhs,), Not(Not(_unary(p, eps_not_p)))))
    out.append(("tau_to_dneg_eps", d))

    h = Not(Not(_unary(p, eps_not_p)))
    d = dne(axiom((h,), h))
    d = dual_rewrite(d, Sequent((h,), _unary(p, tau_p)))
    out.append(("dneg_eps_to_tau", d))

    return out


def derive_indefinite_entailments(s: str = "S", p: str = "P") -> list[tuple[str, Derivation]]:
    """The two entailments relating the indefinite reading P(eps S) to the
    classical quantifier forms, with quantifiers pre-expanded to subnectors."""
    x = Variable("x")
    eps_s = Epsilon("x", _unary(s, x))
    out = []

    # P(eps S), S(eps S) |- S(t) & P(t) with t = eps x. (S(x) & P(x))
    hyps = (_unary(p, eps_s), _unary(s, eps_s))
    conj = and_intro(axiom(hyps, _unary(s, eps_s)), axiom(hyps, _unary(p, eps_s)))
    pattern = And(_unary(s, x), _unary(p, x))
    d = eps_intro(conj, "x", pattern, eps_s)
    out.append(("witness_joins_existential", d))

    # S(eps S), (S -> P)(tau y. S(y) -> P(y)) |- P(eps S)
    y = Variable("y")
    pattern = Implies(_unary(s, y), _unary(p, y))
    tau_u = Tau("y", pattern)
    universal = substitute(pattern, "y", tau_u)
    hyps = (_unary(s, eps_s), universal)
    inst = tau_elim(axiom(hyps, universal), "y", pattern, eps_s)
    d = imp_elim(inst, axiom(hyps, _unary(s, eps_s)))
    out.append(("universal_feeds_witness", d))

    return out


def derive_square_subalterns(s: str = "S", p: str = "P") -> list[tuple[str, Derivation]]:
    """Subaltern and contradictory derivations for the square built on
    P(tau S)/P(eps S), under the bivalence hypothesis as an explicit premise."""
    x = Variable("x")
    a_f = _unary(p, Tau("x", _unary(s, x)))
    i_f = _unary(p, Epsilon("x", _unary(s, x)))
    e_f = Not(i_f)
    o_f = Not(a_f)
    theory = Implies(a_f, i_f)
    out = []

    hyps = (theory, a_f)
    d = imp_elim(axiom(hyps, theory), axiom(hyps, a_f))
    out.append(("subaltern_a_to_i", d))

    inner = (theory, e_f, a_f)
    got_i = imp_elim(axiom(inner, theory), axiom(inner, a_f))
    bot = not_elim(axiom(inner, e_f), got_i)
    d = not_intro(bot, a_f)
    out.append(("subaltern_e_to_o", d))

    out.append(("contradictory_a_to_not_o", dneg_intro(a_f)))
    h = Not(o_f)
    out.append(("contradictory_not_o_to_a", dne(axiom((h,), h))))
    out.append(("contradictory_e_to_not_i", axiom((e_f,), Not(i_f))))
    out.append(("contradictory_not_i_to_e", axiom((Not(i_f),), e_f)))

    return out


def shipped_library() -> list[tuple[str, Derivation]]:
    return (
        derive_dual_equivalences()
        + derive_indefinite_entailments()
        + derive_square_subalterns()
    )


class KernelOracle:
    """Entailment oracle backed by a finite library of checked derivations.

    ``entails`` answers positively only for sequents in the library (up to
    alpha and hypothesis order); anything else counts as not established.
    """

    def __init__(self, derivations, theory=(), sig: Signature | None = None):
        from .models import ValidUpTo

        self._valid_upto = ValidUpTo
        self.theory = tuple(theory)
        self.sequents = set()
        for d in derivations:
            seq = check_derivation(d, sig)
            key = (frozenset(_hyp_multiset(seq.hyps).items()), alpha_key(seq.concl))
            self.sequents.add(key)

    def entails(self, hyps, phi: Formula):
        hyps = self.theory + tuple(hyps)
        key = (frozenset(_hyp_multiset(hyps).items()), alpha_key(phi))
        return self._valid_upto(0) if key in self.sequents else None

    def holds(self, hyps, phi: Formula) -> bool:
        return self.entails(hyps, phi) is not None
