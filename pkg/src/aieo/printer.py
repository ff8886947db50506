"""Pretty-printer for the concrete syntax.

Emits the same grammar the parser reads; on normal-form spacing the two are
bit-exact inverses.  Precedence: ``~`` > ``&`` > ``|`` > ``->`` with ``->``
right-associative; binder bodies extend maximally to the right, so a binder
is parenthesized whenever anything could follow it.
"""

from __future__ import annotations

from .syntax import (
    And,
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
    Term,
    Variable,
)

_PREC_BINDER = 0
_PREC_IMP = 1
_PREC_OR = 2
_PREC_AND = 3
_PREC_NOT = 4
_PREC_ATOM = 5

_BINDER_WORD = {Epsilon: "eps", Tau: "tau", Exists: "exists", Forall: "forall"}


def term_to_text(t: Term) -> str:
    return _term(t, _PREC_BINDER)


def formula_to_text(f) -> str:
    return _formula(f, _PREC_BINDER)


def _term(t, min_prec: int) -> str:
    if isinstance(t, (Variable, Constant)):
        return t.name
    if isinstance(t, FunApp):
        return f"{t.symbol}({', '.join(_term(a, _PREC_BINDER) for a in t.args)})"
    if isinstance(t, (Epsilon, Tau)):
        text = f"{_BINDER_WORD[type(t)]} {t.var}. {_formula(t.body, _PREC_BINDER)}"
        return f"({text})" if min_prec > _PREC_BINDER else text
    raise TypeError(f"not a term: {t!r}")


def _formula(f, min_prec: int) -> str:
    if isinstance(f, PredApp):
        return f"{f.symbol}({', '.join(_term(a, _PREC_BINDER) for a in f.args)})"
    if isinstance(f, Equals):
        return f"{_term(f.lhs, _PREC_ATOM)} = {_term(f.rhs, _PREC_ATOM)}"
    if isinstance(f, Falsum):
        return "false"
    if isinstance(f, Not):
        return "~" + _formula(f.body, _PREC_NOT)
    if isinstance(f, And):
        text = f"{_formula(f.lhs, _PREC_AND)} & {_formula(f.rhs, _PREC_AND + 1)}"
        return f"({text})" if min_prec > _PREC_AND else text
    if isinstance(f, Or):
        text = f"{_formula(f.lhs, _PREC_OR)} | {_formula(f.rhs, _PREC_OR + 1)}"
        return f"({text})" if min_prec > _PREC_OR else text
    if isinstance(f, Implies):
        text = f"{_formula(f.lhs, _PREC_IMP + 1)} -> {_formula(f.rhs, _PREC_IMP)}"
        return f"({text})" if min_prec > _PREC_IMP else text
    if isinstance(f, (Exists, Forall)):
        text = f"{_BINDER_WORD[type(f)]} {f.var}. {_formula(f.body, _PREC_BINDER)}"
        return f"({text})" if min_prec > _PREC_BINDER else text
    raise TypeError(f"not a formula: {f!r}")
