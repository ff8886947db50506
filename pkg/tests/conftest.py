"""Shared test helpers: seeded random AST generation and small fixed models."""

import random

import pytest

from aieo.syntax import (
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
    Signature,
    Tau,
    Variable,
)

SIG_SP = Signature(predicates={"S": 1, "P": 1})


class FormulaGen:
    """Random term/formula generator over a fixed signature."""

    def __init__(self, seed=0, predicates=("S", "P"), constants=(), variables=("x", "y", "z"),
                 allow_quantifiers=True, allow_equality=True, allow_falsum=False):
        self.rng = random.Random(seed)
        self.predicates = predicates
        self.constants = constants
        self.variables = variables
        self.allow_quantifiers = allow_quantifiers
        self.allow_equality = allow_equality
        self.allow_falsum = allow_falsum

    def term(self, depth):
        choices = ["var"]
        if self.constants:
            choices.append("const")
        if depth > 0:
            choices += ["eps", "tau"]
        kind = self.rng.choice(choices)
        if kind == "var":
            return Variable(self.rng.choice(self.variables))
        if kind == "const":
            return Constant(self.rng.choice(self.constants))
        binder = Epsilon if kind == "eps" else Tau
        var = self.rng.choice(self.variables)
        return binder(var, self.formula(depth - 1))

    def formula(self, depth):
        if depth <= 0:
            kinds = ["pred"]
            if self.allow_equality:
                kinds.append("eq")
            if self.allow_falsum:
                kinds.append("falsum")
            kind = self.rng.choice(kinds)
            if kind == "falsum":
                return Falsum()
            if kind == "eq":
                return Equals(self.term(0), self.term(0))
            return PredApp(self.rng.choice(self.predicates), (self.term(0),))
        kinds = ["pred", "not", "and", "or", "implies"]
        if self.allow_quantifiers:
            kinds += ["exists", "forall"]
        if self.allow_equality:
            kinds.append("eq")
        kind = self.rng.choice(kinds)
        if kind == "pred":
            return PredApp(self.rng.choice(self.predicates), (self.term(depth - 1),))
        if kind == "eq":
            return Equals(self.term(depth - 1), self.term(depth - 1))
        if kind == "not":
            return Not(self.formula(depth - 1))
        if kind in ("and", "or", "implies"):
            ctor = {"and": And, "or": Or, "implies": Implies}[kind]
            return ctor(self.formula(depth - 1), self.formula(depth - 1))
        binder = Exists if kind == "exists" else Forall
        return binder(self.rng.choice(self.variables), self.formula(depth - 1))


@pytest.fixture
def gen():
    return FormulaGen(seed=20240811)


def tiny_model(s=(1,), p=(2,), choice_full=1, default=1):
    """Domain {1,2} model over unary S, P with an explicit choice function."""
    from aieo.models import ChoiceModel

    return ChoiceModel(
        domain=(1, 2),
        predicates={"S": frozenset((e,) for e in s), "P": frozenset((e,) for e in p)},
        choice={frozenset({1}): 1, frozenset({2}): 2, frozenset({1, 2}): choice_full},
        default=default,
    )
