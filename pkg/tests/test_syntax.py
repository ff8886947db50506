"""Core syntax operations: binding, substitution, alpha, duality, expansion."""

import pytest

from conftest import SIG_SP, FormulaGen
from aieo.models import enumerate_models, eval_formula
from aieo.parser import parse_formula, parse_term
from aieo.printer import formula_to_text, term_to_text
from aieo.syntax import (
    And,
    ArityError,
    Constant,
    Epsilon,
    Equals,
    Exists,
    Forall,
    FunApp,
    Not,
    PredApp,
    Signature,
    Tau,
    Term,
    Variable,
    alpha_eq,
    dual_normalize,
    expand_quantifiers,
    free_vars,
    infer_signature,
    substitute,
    validate,
)

x, y, c = Variable("x"), Variable("y"), Constant("c")


def scan_free_occurrences(e, bound=frozenset()):
    """Independent oracle: brute-force occurrence scanner tracking the bound set."""
    if isinstance(e, Variable):
        return set() if e.name in bound else {e.name}
    if isinstance(e, (Epsilon, Tau, Exists, Forall)):
        return scan_free_occurrences(e.body, bound | {e.var})
    out = set()
    for attr in ("args", "lhs", "rhs", "body"):
        sub = getattr(e, attr, None)
        if sub is None:
            continue
        if isinstance(sub, tuple):
            for a in sub:
                out |= scan_free_occurrences(a, bound)
        elif isinstance(sub, (Term,)) or hasattr(sub, "__dataclass_fields__"):
            out |= scan_free_occurrences(sub, bound)
    return out


class TestFreeVars:
    def test_single_free_variable(self):
        assert free_vars(parse_formula("P(x)")) == {"x"}

    def test_binder_captures(self):
        assert free_vars(parse_formula("P(eps x. S(x))")) == frozenset()

    def test_mixed_binding_structure(self):
        # one x occurrence free, the one under eps is bound; y stays free
        f = parse_formula("R(x, eps x. S(x, y))")
        assert free_vars(f) == {"x", "y"}
        assert scan_free_occurrences(f) == {"x", "y"}

    def test_agrees_with_occurrence_scanner_on_random_trees(self):
        g = FormulaGen(seed=7)
        for _ in range(300):
            f = g.formula(4)
            assert set(free_vars(f)) == scan_free_occurrences(f)

    def test_vacuous_binder_is_legal(self):
        f = Epsilon("x", PredApp("P", (y,)))
        assert free_vars(f) == {"y"}


class TestSubstitute:
    def test_plain(self):
        assert substitute(parse_formula("P(x)"), "x", c) == parse_formula("P(c)", constants=("c",))

    def test_absent_variable(self):
        f = parse_formula("P(x)")
        assert substitute(f, "y", c) == f

    def test_capture_avoided(self):
        # substituting y for x under a binder on y must rename the binder
        f = parse_formula("P(eps y. R(x, y))")
        out = substitute(f, "x", y)
        expected = PredApp("P", (Epsilon("y'", PredApp("R", (y, Variable("y'")))),))
        assert alpha_eq(out, expected)
        # no-capture check: y occurs free in the result
        assert "y" in free_vars(out)

    def test_shadowed_binder_untouched(self):
        f = parse_formula("P(eps x. S(x))")
        assert substitute(f, "x", c) == f

    def test_identity_substitution_random(self):
        g = FormulaGen(seed=11)
        for _ in range(200):
            f = g.formula(4)
            assert alpha_eq(substitute(f, "x", Variable("x")), f)


class TestAlphaEq:
    def test_renamed_binder(self):
        assert alpha_eq(parse_term("eps x. S(x)"), parse_term("eps y. S(y)"))

    def test_different_bodies(self):
        assert not alpha_eq(parse_term("eps x. S(x)"), parse_term("eps x. P(x)"))

    def test_tau_conjunction(self):
        assert alpha_eq(parse_term("tau x. S(x) & P(x)"), parse_term("tau z. S(z) & P(z)"))

    def test_free_variables_must_match(self):
        assert not alpha_eq(parse_formula("P(x)"), parse_formula("P(y)"))

    def test_terms_never_equal_formulas(self):
        assert not alpha_eq(parse_term("eps x. S(x)"), parse_formula("S(x)"))


class TestDualNormalize:
    def test_tau_becomes_eps_not(self):
        assert dual_normalize(parse_formula("P(tau x. S(x))")) == parse_formula("P(eps x. ~S(x))")

    def test_identity_on_eps(self):
        f = parse_formula("P(eps x. S(x))")
        assert dual_normalize(f) == f

    def test_nested_negations_are_mechanical(self):
        out = dual_normalize(parse_formula("~P(tau x. ~S(x))"))
        assert out == parse_formula("~P(eps x. ~~S(x))")
        # semantic check: equivalent to ~P(eps x. S(x)) in every model up to size 2
        simpler = parse_formula("~P(eps x. S(x))")
        for model in enumerate_models(SIG_SP, 2):
            assert eval_formula(model, {}, out) == eval_formula(model, {}, simpler)

    def test_idempotent_and_preserves_free_vars(self):
        g = FormulaGen(seed=3)
        for _ in range(200):
            f = g.formula(4)
            once = dual_normalize(f)
            assert dual_normalize(once) == once
            assert free_vars(once) == free_vars(f)
            assert not any(isinstance(s, Tau) for s in _walk(once))


def _walk(e):
    yield e
    for attr in ("args", "lhs", "rhs", "body"):
        sub = getattr(e, attr, None)
        if isinstance(sub, tuple):
            for a in sub:
                yield from _walk(a)
        elif sub is not None and hasattr(sub, "__dataclass_fields__"):
            yield from _walk(sub)


class TestExpandQuantifiers:
    def test_exists(self):
        assert expand_quantifiers(parse_formula("exists x. S(x)")) == parse_formula(
            "S(eps x. S(x))"
        )

    def test_forall(self):
        assert expand_quantifiers(parse_formula("forall x. S(x)")) == parse_formula(
            "S(tau x. S(x))"
        )

    def test_conjunction_body(self):
        out = expand_quantifiers(parse_formula("exists x. S(x) & P(x)"))
        witness = parse_term("eps x. S(x) & P(x)")
        assert out == And(PredApp("S", (witness,)), PredApp("P", (witness,)))

    def test_no_quantifiers_remain(self, gen):
        for _ in range(200):
            f = gen.formula(4)
            out = expand_quantifiers(f)
            assert not any(isinstance(s, (Exists, Forall)) for s in _walk(out))

    def test_semantics_preserved(self):
        g = FormulaGen(seed=5, allow_equality=False)
        formulas = [g.formula(3) for _ in range(40)]
        models = list(enumerate_models(SIG_SP, 2))
        for f in formulas:
            fv = sorted(free_vars(f))
            expanded = expand_quantifiers(f)
            dualled = dual_normalize(f)
            for model in models[:: max(1, len(models) // 17)]:
                for env in _envs(fv, model.domain):
                    v = eval_formula(model, env, f)
                    assert eval_formula(model, env, expanded) == v
                    assert eval_formula(model, env, dualled) == v


def _envs(names, domain):
    if not names:
        yield {}
        return
    first, rest = names[0], names[1:]
    for d in domain:
        for env in _envs(rest, domain):
            yield {first: d, **env}


class TestRoundTrip:
    def test_parse_print_fixpoint_random(self):
        g = FormulaGen(seed=13, constants=("c",))
        for _ in range(500):
            f = g.formula(6)
            text = formula_to_text(f)
            back = parse_formula(text, constants=("c",))
            assert alpha_eq(back, f), text
            assert formula_to_text(back) == text

    def test_terms_round_trip(self):
        g = FormulaGen(seed=17, constants=("c",))
        for _ in range(200):
            t = g.term(5)
            text = term_to_text(t)
            assert alpha_eq(parse_term(text, constants=("c",)), t), text


class TestSignature:
    def test_disjoint_names_enforced(self):
        with pytest.raises(ValueError):
            Signature(constants={"S"}, predicates={"S": 1})

    def test_negative_arity_rejected(self):
        with pytest.raises(ValueError):
            Signature(predicates={"P": -1})

    def test_validate_arity(self):
        sig = Signature(predicates={"P": 2}, functions={"f": 1}, constants={"c"})
        validate(parse_formula("P(f(c), x)", sig), sig)
        with pytest.raises(ArityError):
            validate(PredApp("P", (x,)), sig)
        with pytest.raises(ArityError):
            validate(FunApp("f", (x, y)), sig)
        with pytest.raises(ArityError):
            validate(PredApp("Q", (x,)), sig)

    def test_infer_signature(self):
        f = parse_formula("P(f(x), c) & Q(eps y. R(y))")
        sig = infer_signature([f])
        assert sig.predicate_arity("P") == 2
        assert sig.predicate_arity("Q") == 1
        assert sig.predicate_arity("R") == 1
        assert sig.function_arity("f") == 1
        assert sig.constants == frozenset()

    def test_infer_signature_arity_conflict(self):
        with pytest.raises(ArityError):
            infer_signature([parse_formula("P(x) & P(x, y)")])
