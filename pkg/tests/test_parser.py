"""Concrete syntax: precedence, associativity, binder scope, errors."""

import pytest

from aieo.parser import ParseError, parse_formula, parse_term, split_top_level
from aieo.printer import formula_to_text, term_to_text
from aieo.syntax import (
    And,
    Epsilon,
    Equals,
    Exists,
    Falsum,
    Forall,
    Implies,
    Not,
    Or,
    PredApp,
    Signature,
    Tau,
    Variable,
)

x = Variable("x")
P = lambda t: PredApp("P", (t,))
Q = lambda t: PredApp("Q", (t,))
R = lambda t: PredApp("R", (t,))


def test_precedence_chain():
    f = parse_formula("~P(x) & Q(x) | R(x) -> P(x)")
    assert f == Implies(Or(And(Not(P(x)), Q(x)), R(x)), P(x))


def test_implies_right_associative():
    f = parse_formula("P(x) -> Q(x) -> R(x)")
    assert f == Implies(P(x), Implies(Q(x), R(x)))


def test_and_or_left_associative():
    assert parse_formula("P(x) & Q(x) & R(x)") == And(And(P(x), Q(x)), R(x))
    assert parse_formula("P(x) | Q(x) | R(x)") == Or(Or(P(x), Q(x)), R(x))


def test_binder_extends_maximally_right():
    f = parse_formula("exists x. P(x) -> Q(x)")
    assert f == Exists("x", Implies(P(x), Q(x)))
    g = parse_formula("(exists x. P(x)) -> Q(x)")
    assert g == Implies(Exists("x", P(x)), Q(x))


def test_term_binder_scope_in_arguments():
    f = parse_formula("R(eps x. S(x), y)")
    assert f == PredApp("R", (Epsilon("x", PredApp("S", (x,))), Variable("y")))


def test_equation_forms():
    assert parse_formula("x = y") == Equals(Variable("x"), Variable("y"))
    f = parse_formula("f(x) = g(y, z)")
    assert f.lhs.symbol == "f" and f.rhs.symbol == "g"
    # a parenthesized epsilon term on the left of an equation
    f = parse_formula("(eps x. S(x)) = y")
    assert f == Equals(Epsilon("x", PredApp("S", (x,))), Variable("y"))


def test_equation_binds_tighter_than_connectives():
    f = parse_formula("x = y & P(z)")
    assert f == And(Equals(Variable("x"), Variable("y")), P(Variable("z")))


def test_falsum_keyword():
    assert parse_formula("false") == Falsum()
    assert parse_formula("P(x) -> false") == Implies(P(x), Falsum())


def test_whitespace_insensitive():
    a = parse_formula("P(eps x. S(x))&~Q(y)")
    b = parse_formula("  P( eps x .\tS( x ) )  &  ~ Q( y )  ")
    assert a == b


def test_signature_constants_and_validation():
    sig = Signature(constants={"c"}, predicates={"P": 1})
    f = parse_formula("P(c)", sig)
    assert f.args[0].name == "c" and type(f.args[0]).__name__ == "Constant"
    with pytest.raises(Exception):
        parse_formula("P(c, d)", sig)  # arity error under the signature


def test_parse_errors():
    for bad in ["", "P(", "P(x) &", "x", "eps x. S(x)", "exists . P(x)",
                "P(x) @ Q(x)", "~", "exists eps. P(x)"]:
        with pytest.raises(ParseError):
            parse_formula(bad)


def test_reserved_words_not_terms():
    with pytest.raises(ParseError):
        parse_term("eps")
    with pytest.raises(ParseError):
        parse_formula("P(false)")


def test_printer_is_fixpoint_on_normal_forms():
    cases = [
        "P(eps x. S(x)) & ~Q(c, y) -> (exists z. R(z))",
        "~(P(x) & Q(x))",
        "P(x) | (Q(x) | R(x))",
        "(eps x. S(x)) = (tau y. P(y))",
        "forall x. S(x) -> P(x)",
        "false -> P(x)",
    ]
    for text in cases:
        f = parse_formula(text)
        printed = formula_to_text(f)
        assert parse_formula(printed) == f
        assert formula_to_text(parse_formula(printed)) == printed


def test_printed_forms_match_expected_spacing():
    assert formula_to_text(parse_formula("some_pred(x)&other(y)")) == "some_pred(x) & other(y)"
    assert term_to_text(parse_term("eps x.S(x)")) == "eps x. S(x)"
    assert formula_to_text(parse_formula("~ ~ P(x)")) == "~~P(x)"


def test_split_top_level():
    assert split_top_level("P(x, y), Q(z)") == ["P(x, y)", "Q(z)"]
    assert split_top_level("P(eps x. R(x, y)), Q(z), ") == ["P(eps x. R(x, y))", "Q(z)"]
    assert split_top_level("single") == ["single"]
