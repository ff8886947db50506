"""The standard compositional layer: a simply typed lambda calculus over base
types e (entities) and t (propositions), the quantifier lexicon, reification
into first-order formulas, and the three executable inadequacy demos that
motivate the epsilon treatment.

Quantifier types follow the classical assignment: ``something``/``everything``
are the constants exists/forall of type (e->t)->t; ``some``/``every`` take a
restriction first and have type (e->t)->((e->t)->t).
"""

from __future__ import annotations

from dataclasses import dataclass

from .models import ChoiceModel, UnboundVariable, enumerate_models, eval_formula
from .syntax import (
    And,
    Constant as FoConstant,
    Epsilon,
    Exists,
    Forall,
    Implies,
    Not,
    Or,
    PredApp,
    Signature,
    Term as FoTerm,
    Variable as FoVariable,
    fresh_name,
    validate,
)

DEFAULT_FUEL = 100_000


class TypeMismatch(Exception):
    pass


class NotFirstOrder(Exception):
    pass


class UnknownWord(Exception):
    pass


class LexiconError(Exception):
    pass


class NormalizationFuelExceeded(Exception):
    """Normalization exceeded its step budget (must never happen on
    well-typed terms)."""


# types


class SemType:
    __slots__ = ()

    def __str__(self) -> str:
        return type_to_text(self)


@dataclass(frozen=True)
class BaseType(SemType):
    name: str


@dataclass(frozen=True)
class Arrow(SemType):
    src: SemType
    dst: SemType


E = BaseType("e")
T = BaseType("t")
ET = Arrow(E, T)


def type_to_text(ty: SemType) -> str:
    if isinstance(ty, BaseType):
        return ty.name
    src = type_to_text(ty.src)
    if isinstance(ty.src, Arrow):
        src = f"({src})"
    return f"{src}->{type_to_text(ty.dst)}"


# terms


class TypedLambdaTerm:
    __slots__ = ()

    def __str__(self) -> str:
        return lambda_to_text(self)


@dataclass(frozen=True)
class Var(TypedLambdaTerm):
    name: str
    type: SemType


@dataclass(frozen=True)
class Const(TypedLambdaTerm):
    name: str
    type: SemType


@dataclass(frozen=True)
class Abs(TypedLambdaTerm):
    var: str
    var_type: SemType
    body: TypedLambdaTerm


@dataclass(frozen=True)
class App(TypedLambdaTerm):
    fun: TypedLambdaTerm
    arg: TypedLambdaTerm


def lambda_to_text(t: TypedLambdaTerm) -> str:
    if isinstance(t, (Var, Const)):
        return t.name
    if isinstance(t, Abs):
        return f"\\{t.var}:{type_to_text(t.var_type)}. {lambda_to_text(t.body)}"
    if isinstance(t, App):
        fun = lambda_to_text(t.fun)
        if isinstance(t.fun, Abs):
            fun = f"({fun})"
        arg = lambda_to_text(t.arg)
        if isinstance(t.arg, (App, Abs)):
            arg = f"({arg})"
        return f"{fun} {arg}"
    raise TypeError(f"not a lambda term: {t!r}")


def typecheck(term: TypedLambdaTerm, env: dict[str, SemType] | None = None) -> SemType:
    """The unique type of ``term``; raises TypeMismatch or UnboundVariable."""
    env = env or {}
    if isinstance(term, Var):
        ty = env.get(term.name)
        if ty is None:
            raise UnboundVariable(term.name)
        if ty != term.type:
            raise TypeMismatch(f"variable {term.name} annotated {term.type} but bound at {ty}")
        return ty
    if isinstance(term, Const):
        return term.type
    if isinstance(term, Abs):
        body = typecheck(term.body, {**env, term.var: term.var_type})
        return Arrow(term.var_type, body)
    if isinstance(term, App):
        fun = typecheck(term.fun, env)
        arg = typecheck(term.arg, env)
        if not isinstance(fun, Arrow):
            raise TypeMismatch(f"applying non-function of type {fun}")
        if fun.src != arg:
            raise TypeMismatch(f"function expects {fun.src}, argument has type {arg}")
        return fun.dst
    raise TypeError(f"not a lambda term: {term!r}")


def lambda_free_vars(t: TypedLambdaTerm) -> frozenset[str]:
    if isinstance(t, Var):
        return frozenset((t.name,))
    if isinstance(t, Const):
        return frozenset()
    if isinstance(t, Abs):
        return lambda_free_vars(t.body) - {t.var}
    return lambda_free_vars(t.fun) | lambda_free_vars(t.arg)


def lambda_substitute(t: TypedLambdaTerm, var: str, replacement: TypedLambdaTerm):
    if isinstance(t, Var):
        return replacement if t.name == var else t
    if isinstance(t, Const):
        return t
    if isinstance(t, Abs):
        if t.var == var or var not in lambda_free_vars(t.body):
            return t
        if t.var in lambda_free_vars(replacement):
            renamed = fresh_name(
                t.var, lambda_free_vars(t.body) | lambda_free_vars(replacement) | {var, t.var}
            )
            body = lambda_substitute(t.body, t.var, Var(renamed, t.var_type))
            return Abs(renamed, t.var_type, lambda_substitute(body, var, replacement))
        return Abs(t.var, t.var_type, lambda_substitute(t.body, var, replacement))
    return App(
        lambda_substitute(t.fun, var, replacement),
        lambda_substitute(t.arg, var, replacement),
    )


def lambda_alpha_key(t: TypedLambdaTerm, env=None, depth: int = 0):
    env = env or {}
    if isinstance(t, Var):
        return Var(env.get(t.name, t.name), t.type)
    if isinstance(t, Const):
        return t
    if isinstance(t, Abs):
        name = f"?{depth}"
        return Abs(name, t.var_type, lambda_alpha_key(t.body, {**env, t.var: name}, depth + 1))
    return App(lambda_alpha_key(t.fun, env, depth), lambda_alpha_key(t.arg, env, depth))


def lambda_alpha_eq(a: TypedLambdaTerm, b: TypedLambdaTerm) -> bool:
    return lambda_alpha_key(a) == lambda_alpha_key(b)


def beta_normalize(term: TypedLambdaTerm, fuel: int = DEFAULT_FUEL) -> TypedLambdaTerm:
    """Normal-order beta normalization; terminates on every well-typed term.

    ``fuel`` bounds the number of reduction/traversal steps as a hard
    backstop; exceeding it raises NormalizationFuelExceeded.
    """
    budget = [fuel]
    return _nf(term, budget)


def _spend(budget):
    budget[0] -= 1
    if budget[0] < 0:
        raise NormalizationFuelExceeded()


def _whnf(t, budget):
    _spend(budget)
    if isinstance(t, App):
        fun = _whnf(t.fun, budget)
        if isinstance(fun, Abs):
            return _whnf(lambda_substitute(fun.body, fun.var, t.arg), budget)
        return App(fun, t.arg)
    return t


def _nf(t, budget):
    _spend(budget)
    if isinstance(t, (Var, Const)):
        return t
    if isinstance(t, Abs):
        return Abs(t.var, t.var_type, _nf(t.body, budget))
    fun = _whnf(t.fun, budget)
    if isinstance(fun, Abs):
        return _nf(lambda_substitute(fun.body, fun.var, t.arg), budget)
    return App(_nf(fun, budget), _nf(t.arg, budget))


# reification into first-order formulas

QUANT_TYPE = Arrow(ET, T)
CONN_TYPE = Arrow(T, Arrow(T, T))

EXISTS_CONST = Const("exists", QUANT_TYPE)
FORALL_CONST = Const("forall", QUANT_TYPE)
AND_CONST = Const("and", CONN_TYPE)
OR_CONST = Const("or", CONN_TYPE)
IMPLIES_CONST = Const("implies", CONN_TYPE)
NOT_CONST = Const("not", Arrow(T, T))

_QUANT_NODE = {"exists": Exists, "forall": Forall}
_CONN_NODE = {"and": And, "or": Or, "implies": Implies}


def reify(term: TypedLambdaTerm):
    """Convert a beta-normal term of type t into a Formula with
    Exists/Forall nodes; raises NotFirstOrder for residual higher-order
    material."""
    if typecheck(term) != T:
        raise NotFirstOrder(f"term has type {typecheck(term)}, not t")
    return _reify_formula(term)


def _reify_formula(t):
    if isinstance(t, App):
        head, args = _spine(t)
        if isinstance(head, Const) and head.name in _QUANT_NODE and head.type == QUANT_TYPE:
            if len(args) != 1:
                raise NotFirstOrder(f"quantifier {head.name} applied to {len(args)} arguments")
            arg = args[0]
            if isinstance(arg, Abs):
                return _QUANT_NODE[head.name](arg.var, _reify_formula(arg.body))
            # eta-expand a bare predicate argument
            var = fresh_name("x", lambda_free_vars(arg))
            return _QUANT_NODE[head.name](var, _reify_formula(App(arg, Var(var, E))))
        if isinstance(head, Const) and head.name in _CONN_NODE and head.type == CONN_TYPE:
            if len(args) != 2:
                raise NotFirstOrder(f"connective {head.name} applied to {len(args)} arguments")
            return _CONN_NODE[head.name](_reify_formula(args[0]), _reify_formula(args[1]))
        if isinstance(head, Const) and head == NOT_CONST:
            if len(args) != 1:
                raise NotFirstOrder("negation applied to wrong number of arguments")
            return Not(_reify_formula(args[0]))
        if isinstance(head, Const):
            return PredApp(head.name, tuple(_reify_entity(a) for a in args))
        raise NotFirstOrder(f"head {head} is not a first-order constant")
    raise NotFirstOrder(f"cannot reify {lambda_to_text(t)} as a formula")


def _reify_entity(t) -> FoTerm:
    if isinstance(t, Var) and t.type == E:
        return FoVariable(t.name)
    if isinstance(t, Const) and t.type == E:
        return FoConstant(t.name)
    raise NotFirstOrder(f"argument {lambda_to_text(t)} is not an entity-typed variable or constant")


def _spine(t):
    args = []
    while isinstance(t, App):
        args.append(t.arg)
        t = t.fun
    return t, list(reversed(args))


def entity_type_of(term: FoTerm, sig: Signature | None = None) -> SemType:
    """The semantic type of a first-order term: always e (terms denote
    entities); validates well-formedness when a signature is supplied."""
    if sig is not None:
        validate(term, sig)
    if not isinstance(term, FoTerm):
        raise TypeMismatch(f"not a first-order term: {term!r}")
    return E


# concrete lambda syntax ("\\x:e->t. body", juxtaposition, "(e->t)->t")


class LambdaParseError(Exception):
    pass


def _lex_lambda(text: str):
    import re

    token_re = re.compile(r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z0-9_']*)|(?P<op>->|[\\:().]))")
    pos, out = 0, []
    while pos < len(text):
        m = token_re.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise LambdaParseError(f"unexpected character {text[pos:].lstrip()[0]!r}")
        out.append(m.group("ident") or m.group("op"))
        pos = m.end()
    return out


def parse_type(text: str) -> SemType:
    toks = _lex_lambda(text)
    ty, rest = _parse_type(toks)
    if rest:
        raise LambdaParseError(f"trailing type tokens: {rest}")
    return ty


def _parse_type(toks):
    left, toks = _parse_type_atom(toks)
    if toks and toks[0] == "->":
        right, toks = _parse_type(toks[1:])
        return Arrow(left, right), toks
    return left, toks


def _parse_type_atom(toks):
    if not toks:
        raise LambdaParseError("unexpected end of type")
    if toks[0] == "(":
        ty, toks = _parse_type(toks[1:])
        if not toks or toks[0] != ")":
            raise LambdaParseError("missing ')' in type")
        return ty, toks[1:]
    if toks[0] == "e":
        return E, toks[1:]
    if toks[0] == "t":
        return T, toks[1:]
    raise LambdaParseError(f"bad type token {toks[0]!r}")


def parse_lambda(text: str, lexicon: "Lexicon | None" = None) -> TypedLambdaTerm:
    toks = _lex_lambda(text)
    term, rest = _parse_lambda(toks, {}, lexicon)
    if rest:
        raise LambdaParseError(f"trailing tokens: {rest}")
    return term


def _parse_lambda(toks, bound: dict[str, SemType], lexicon):
    if toks and toks[0] == "\\":
        if len(toks) < 3 or toks[2] != ":":
            raise LambdaParseError("expected '\\name:type. body'")
        name = toks[1]
        # the type runs up to the first '.' at paren depth 0
        depth, i = 0, 3
        while i < len(toks):
            if toks[i] == "(":
                depth += 1
            elif toks[i] == ")":
                depth -= 1
            elif toks[i] == "." and depth == 0:
                break
            i += 1
        if i == len(toks):
            raise LambdaParseError("missing '.' after binder type")
        ty, rest = _parse_type(toks[3:i])
        if rest:
            raise LambdaParseError(f"trailing tokens in binder type: {rest}")
        body, toks = _parse_lambda(toks[i + 1 :], {**bound, name: ty}, lexicon)
        return Abs(name, ty, body), toks
    term, toks = _parse_app_atom(toks, bound, lexicon)
    while toks and (toks[0] == "(" or toks[0] not in (")", ".", ":", "->")):
        if toks[0] == "\\":
            arg, toks = _parse_lambda(toks, bound, lexicon)
        else:
            arg, toks = _parse_app_atom(toks, bound, lexicon)
        term = App(term, arg)
    return term, toks


def _parse_app_atom(toks, bound, lexicon):
    if not toks:
        raise LambdaParseError("unexpected end of term")
    if toks[0] == "(":
        term, toks = _parse_lambda(toks[1:], bound, lexicon)
        if not toks or toks[0] != ")":
            raise LambdaParseError("missing ')'")
        return term, toks[1:]
    name = toks[0]
    if not name[0].isalpha() and name[0] != "_":
        raise LambdaParseError(f"unexpected token {name!r}")
    if name in bound:
        return Var(name, bound[name]), toks[1:]
    if lexicon is not None and name in lexicon:
        return lexicon[name], toks[1:]
    raise UnknownWord(name)


# lexicon

_BUILTIN_SOURCE = [
    ("exists", EXISTS_CONST),
    ("forall", FORALL_CONST),
    ("and", AND_CONST),
    ("or", OR_CONST),
    ("implies", IMPLIES_CONST),
    ("not", NOT_CONST),
]


class Lexicon:
    """word -> typed lambda term; built-ins are compiled in, more entries come
    from text configuration (one per line, ``name : type = term`` or just
    ``name : type`` to introduce a constant)."""

    def __init__(self, include_builtins: bool = True):
        self.entries: dict[str, TypedLambdaTerm] = {}
        if include_builtins:
            for name, term in _BUILTIN_SOURCE:
                self.entries[name] = term
            et = ET
            p, q, x = Var("P", et), Var("Q", et), Var("x", E)
            self.entries["something"] = EXISTS_CONST
            self.entries["everything"] = FORALL_CONST
            self.entries["some"] = Abs(
                "P", et,
                Abs("Q", et, App(EXISTS_CONST, Abs("x", E, App(App(AND_CONST, App(p, x)), App(q, x))))),
            )
            self.entries["every"] = Abs(
                "P", et,
                Abs("Q", et, App(FORALL_CONST, Abs("x", E, App(App(IMPLIES_CONST, App(p, x)), App(q, x))))),
            )

    def __contains__(self, word: str) -> bool:
        return word in self.entries

    def __getitem__(self, word: str) -> TypedLambdaTerm:
        try:
            return self.entries[word]
        except KeyError:
            raise UnknownWord(word) from None

    def add(self, word: str, term: TypedLambdaTerm) -> None:
        typecheck(term)
        self.entries[word] = term

    def add_constant(self, word: str, ty: SemType) -> None:
        self.entries[word] = Const(word, ty)

    def load_text(self, text: str) -> None:
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if ":" not in line:
                raise LexiconError(f"line {lineno}: expected 'name : type [= term]'")
            name, rest = line.split(":", 1)
            name = name.strip()
            if "=" in rest:
                type_text, term_text = rest.split("=", 1)
                declared = parse_type(type_text.strip())
                term = parse_lambda(term_text.strip(), self)
                actual = typecheck(term)
                if actual != declared:
                    raise LexiconError(
                        f"line {lineno}: {name} declared {declared} but defines a term of type {actual}"
                    )
                self.entries[name] = term
            else:
                self.add_constant(name, parse_type(rest.strip()))

    @classmethod
    def load(cls, path) -> "Lexicon":
        lex = cls()
        with open(path, "r", encoding="utf-8") as fh:
            lex.load_text(fh.read())
        return lex


def default_lexicon() -> Lexicon:
    return Lexicon()


# the three inadequacies of the standard treatment, as computable artifacts


@dataclass
class AsymmetryDemo:
    sentence_pair: tuple[str, str]
    left: object  # Formula P(eps x. S(x))
    right: object  # Formula S(eps x. P(x))
    model: ChoiceModel
    left_value: bool
    right_value: bool


@dataclass
class ConstituencyDemo:
    sentence: str
    syntax_tree: str
    semantic_term: TypedLambdaTerm
    semantic_tree: str
    non_constituent: str
    epsilon_formula: object


@dataclass
class NounPhraseDemo:
    phrase: str
    raised_term: TypedLambdaTerm
    raised_type: SemType
    epsilon_term: FoTerm
    epsilon_type: SemType


def demonstrate_inadequacy(which: int):
    if which == 1:
        return _asymmetry_demo()
    if which == 2:
        return _constituency_demo()
    if which == 3:
        return _noun_phrase_demo()
    raise ValueError("which must be 1, 2, or 3")


def _asymmetry_demo() -> AsymmetryDemo:
    x = FoVariable("x")
    left = PredApp("P", (Epsilon("x", PredApp("S", (x,))),))
    right = PredApp("S", (Epsilon("x", PredApp("P", (x,))),))
    sig = Signature(predicates={"S": 1, "P": 1})
    for model in enumerate_models(sig, 2):
        lv = eval_formula(model, {}, left)
        rv = eval_formula(model, {}, right)
        if lv != rv:
            return AsymmetryDemo(
                sentence_pair=("Some politicians are crooks.", "Some crooks are politicians."),
                left=left,
                right=right,
                model=model,
                left_value=lv,
                right_value=rv,
            )
    raise RuntimeError("no distinguishing model found at size <= 2")


def _constituency_demo() -> ConstituencyDemo:
    lex = default_lexicon()
    hits = Const("hits", ET)
    composed = Const("composed", Arrow(E, ET))  # object first, then subject
    keith = Const("keith", E)
    semantic = App(
        App(lex["some"], hits),
        Abs("x", E, App(App(composed, Var("x", E)), keith)),
    )
    typecheck(semantic)
    eps_hit = Epsilon("x", PredApp("hits", (FoVariable("x"),)))
    return ConstituencyDemo(
        sentence="Keith composed some hits.",
        syntax_tree="(Keith (composed (some (hits))))",
        semantic_term=semantic,
        semantic_tree="((some (hits)) (\\x:e. ((composed x) keith)))",
        non_constituent="\\x:e. ((composed x) keith)",
        epsilon_formula=PredApp("composed", (FoConstant("keith"), eps_hit)),
    )


def _noun_phrase_demo() -> NounPhraseDemo:
    lex = default_lexicon()
    goat = Const("goat", ET)
    raised = beta_normalize(App(lex["some"], goat))
    eps_goat = Epsilon("x", PredApp("goat", (FoVariable("x"),)))
    return NounPhraseDemo(
        phrase="A goat!",
        raised_term=raised,
        raised_type=typecheck(raised),
        epsilon_term=eps_goat,
        epsilon_type=entity_type_of(eps_goat, Signature(predicates={"goat": 1})),
    )
