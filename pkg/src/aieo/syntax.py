"""Syntax trees for the epsilon/tau calculus.

Terms and formulas are defined by mutual recursion: terms are variables,
constants, function applications, and the two subnectors ``eps x. F`` /
``tau x. F`` whose body is a formula; formulas are predicate applications,
equations between terms, the propositional connectives, and the convenience
quantifier nodes ``exists`` / ``forall`` (eliminable by
:func:`expand_quantifiers`).

All nodes are immutable and hashable; operations return new trees.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Union


class ArityError(Exception):
    """A symbol is used at the wrong arity, or is not declared in the signature."""


class Term:
    __slots__ = ()

    def __str__(self) -> str:
        from .printer import term_to_text

        return term_to_text(self)


class Formula:
    __slots__ = ()

    def __str__(self) -> str:
        from .printer import formula_to_text

        return formula_to_text(self)


Expr = Union[Term, Formula]


@dataclass(frozen=True)
class Variable(Term):
    name: str


@dataclass(frozen=True)
class Constant(Term):
    name: str


@dataclass(frozen=True)
class FunApp(Term):
    symbol: str
    args: tuple[Term, ...]

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))


@dataclass(frozen=True)
class Epsilon(Term):
    var: str
    body: Formula


@dataclass(frozen=True)
class Tau(Term):
    var: str
    body: Formula


@dataclass(frozen=True)
class PredApp(Formula):
    symbol: str
    args: tuple[Term, ...]

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))


@dataclass(frozen=True)
class Equals(Formula):
    lhs: Term
    rhs: Term


@dataclass(frozen=True)
class Not(Formula):
    body: Formula


@dataclass(frozen=True)
class And(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Or(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Implies(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class Falsum(Formula):
    """The absurd formula; concrete syntax ``false``."""


BINDER_TERMS = (Epsilon, Tau)
BINDER_FORMULAS = (Exists, Forall)


@dataclass(frozen=True)
class Signature:
    """Declared constants, function symbols, and predicate symbols.

    Name sets are pairwise disjoint and arities are >= 0.  Stored in sorted
    tuples so signatures are hashable (enumeration caches key on them).
    """

    constants: frozenset[str] = frozenset()
    functions: tuple[tuple[str, int], ...] = ()
    predicates: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "constants", frozenset(self.constants))
        object.__setattr__(self, "functions", _norm_arities(self.functions))
        object.__setattr__(self, "predicates", _norm_arities(self.predicates))
        names = [n for n, _ in self.functions] + [n for n, _ in self.predicates]
        names += list(self.constants)
        if len(names) != len(set(names)):
            raise ValueError("constant/function/predicate names must be pairwise disjoint")
        for name, arity in self.functions + self.predicates:
            if arity < 0:
                raise ValueError(f"negative arity for {name!r}")

    def function_arity(self, name: str) -> int | None:
        for n, a in self.functions:
            if n == name:
                return a
        return None

    def predicate_arity(self, name: str) -> int | None:
        for n, a in self.predicates:
            if n == name:
                return a
        return None


def _norm_arities(entries) -> tuple[tuple[str, int], ...]:
    if isinstance(entries, Mapping):
        items = entries.items()
    else:
        items = entries
    return tuple(sorted((str(n), int(a)) for n, a in items))


def free_vars(e: Expr) -> frozenset[str]:
    """Variables with at least one unbound occurrence in ``e``."""
    if isinstance(e, Variable):
        return frozenset((e.name,))
    if isinstance(e, Constant) or isinstance(e, Falsum):
        return frozenset()
    if isinstance(e, (FunApp, PredApp)):
        out: frozenset[str] = frozenset()
        for a in e.args:
            out |= free_vars(a)
        return out
    if isinstance(e, (Epsilon, Tau, Exists, Forall)):
        return free_vars(e.body) - {e.var}
    if isinstance(e, Equals):
        return free_vars(e.lhs) | free_vars(e.rhs)
    if isinstance(e, Not):
        return free_vars(e.body)
    if isinstance(e, (And, Or, Implies)):
        return free_vars(e.lhs) | free_vars(e.rhs)
    raise TypeError(f"not a term or formula: {e!r}")


def fresh_name(base: str, avoid: frozenset[str] | set[str]) -> str:
    """Smallest primed variant of ``base`` not in ``avoid``."""
    candidate = base
    while candidate in avoid:
        candidate += "'"
    return candidate


def substitute(e: Expr, var: str, replacement: Term) -> Expr:
    """Capture-avoiding substitution of ``replacement`` for free ``var`` in ``e``.

    Bound variables are renamed (primed) when they would capture a free
    variable of the replacement.
    """
    if isinstance(e, Variable):
        return replacement if e.name == var else e
    if isinstance(e, (Constant, Falsum)):
        return e
    if isinstance(e, FunApp):
        return FunApp(e.symbol, tuple(substitute(a, var, replacement) for a in e.args))
    if isinstance(e, PredApp):
        return PredApp(e.symbol, tuple(substitute(a, var, replacement) for a in e.args))
    if isinstance(e, (Epsilon, Tau, Exists, Forall)):
        if e.var == var:
            return e
        if var not in free_vars(e.body):
            return e
        if e.var in free_vars(replacement):
            renamed = fresh_name(
                e.var, free_vars(e.body) | free_vars(replacement) | {var, e.var}
            )
            body = substitute(e.body, e.var, Variable(renamed))
            return type(e)(renamed, substitute(body, var, replacement))
        return type(e)(e.var, substitute(e.body, var, replacement))
    if isinstance(e, Equals):
        return Equals(substitute(e.lhs, var, replacement), substitute(e.rhs, var, replacement))
    if isinstance(e, Not):
        return Not(substitute(e.body, var, replacement))
    if isinstance(e, (And, Or, Implies)):
        return type(e)(substitute(e.lhs, var, replacement), substitute(e.rhs, var, replacement))
    raise TypeError(f"not a term or formula: {e!r}")


def alpha_key(e: Expr) -> Expr:
    """Canonical alpha-variant: bound variables renamed to ?0, ?1, ... by depth.

    Two expressions are alpha-equivalent exactly when their keys are equal,
    so keys double as dictionary/multiset keys.  The '?' prefix cannot occur
    in parsed identifiers.
    """
    return _canon(e, {}, 0)


def _canon(e: Expr, env: dict[str, str], depth: int) -> Expr:
    if isinstance(e, Variable):
        return Variable(env.get(e.name, e.name))
    if isinstance(e, (Constant, Falsum)):
        return e
    if isinstance(e, FunApp):
        return FunApp(e.symbol, tuple(_canon(a, env, depth) for a in e.args))
    if isinstance(e, PredApp):
        return PredApp(e.symbol, tuple(_canon(a, env, depth) for a in e.args))
    if isinstance(e, (Epsilon, Tau, Exists, Forall)):
        name = f"?{depth}"
        inner = dict(env)
        inner[e.var] = name
        return type(e)(name, _canon(e.body, inner, depth + 1))
    if isinstance(e, Equals):
        return Equals(_canon(e.lhs, env, depth), _canon(e.rhs, env, depth))
    if isinstance(e, Not):
        return Not(_canon(e.body, env, depth))
    if isinstance(e, (And, Or, Implies)):
        return type(e)(_canon(e.lhs, env, depth), _canon(e.rhs, env, depth))
    raise TypeError(f"not a term or formula: {e!r}")


def alpha_eq(a: Expr, b: Expr) -> bool:
    """True iff ``a`` and ``b`` are identical up to consistent renaming of bound variables."""
    return alpha_key(a) == alpha_key(b)


def dual_normalize(e: Expr) -> Expr:
    """Rewrite every ``tau x. F`` into ``eps x. ~F`` bottom-up.

    The result contains no Tau node; the map is idempotent and preserves
    free variables and (extensionally) the denotation in every choice model.
    """
    if isinstance(e, (Variable, Constant, Falsum)):
        return e
    if isinstance(e, FunApp):
        return FunApp(e.symbol, tuple(dual_normalize(a) for a in e.args))
    if isinstance(e, PredApp):
        return PredApp(e.symbol, tuple(dual_normalize(a) for a in e.args))
    if isinstance(e, Epsilon):
        return Epsilon(e.var, dual_normalize(e.body))
    if isinstance(e, Tau):
        return Epsilon(e.var, Not(dual_normalize(e.body)))
    if isinstance(e, (Exists, Forall)):
        return type(e)(e.var, dual_normalize(e.body))
    if isinstance(e, Equals):
        return Equals(dual_normalize(e.lhs), dual_normalize(e.rhs))
    if isinstance(e, Not):
        return Not(dual_normalize(e.body))
    if isinstance(e, (And, Or, Implies)):
        return type(e)(dual_normalize(e.lhs), dual_normalize(e.rhs))
    raise TypeError(f"not a term or formula: {e!r}")


def expand_quantifiers(e: Expr) -> Expr:
    """Eliminate Exists/Forall, innermost first.

    ``exists x. F`` becomes ``F[eps x. F / x]`` and ``forall x. F`` becomes
    ``F[tau x. F / x]``.  Quantifiers nested inside subnector bodies are
    expanded too.
    """
    if isinstance(e, (Variable, Constant, Falsum)):
        return e
    if isinstance(e, FunApp):
        return FunApp(e.symbol, tuple(expand_quantifiers(a) for a in e.args))
    if isinstance(e, PredApp):
        return PredApp(e.symbol, tuple(expand_quantifiers(a) for a in e.args))
    if isinstance(e, (Epsilon, Tau)):
        return type(e)(e.var, expand_quantifiers(e.body))
    if isinstance(e, Exists):
        body = expand_quantifiers(e.body)
        return substitute(body, e.var, Epsilon(e.var, body))
    if isinstance(e, Forall):
        body = expand_quantifiers(e.body)
        return substitute(body, e.var, Tau(e.var, body))
    if isinstance(e, Equals):
        return Equals(expand_quantifiers(e.lhs), expand_quantifiers(e.rhs))
    if isinstance(e, Not):
        return Not(expand_quantifiers(e.body))
    if isinstance(e, (And, Or, Implies)):
        return type(e)(expand_quantifiers(e.lhs), expand_quantifiers(e.rhs))
    raise TypeError(f"not a term or formula: {e!r}")


def validate(e: Expr, sig: Signature) -> None:
    """Check well-formedness of ``e`` over ``sig``; raises :class:`ArityError`."""
    if isinstance(e, Variable):
        if e.name in sig.constants:
            raise ArityError(f"{e.name!r} is declared as a constant, not a variable")
        return
    if isinstance(e, Constant):
        if e.name not in sig.constants:
            raise ArityError(f"undeclared constant {e.name!r}")
        return
    if isinstance(e, Falsum):
        return
    if isinstance(e, FunApp):
        arity = sig.function_arity(e.symbol)
        if arity is None:
            raise ArityError(f"undeclared function symbol {e.symbol!r}")
        if arity != len(e.args):
            raise ArityError(f"{e.symbol!r} expects {arity} argument(s), got {len(e.args)}")
        for a in e.args:
            validate(a, sig)
        return
    if isinstance(e, PredApp):
        arity = sig.predicate_arity(e.symbol)
        if arity is None:
            raise ArityError(f"undeclared predicate symbol {e.symbol!r}")
        if arity != len(e.args):
            raise ArityError(f"{e.symbol!r} expects {arity} argument(s), got {len(e.args)}")
        for a in e.args:
            validate(a, sig)
        return
    if isinstance(e, (Epsilon, Tau, Exists, Forall)):
        validate(e.body, sig)
        return
    if isinstance(e, Equals):
        validate(e.lhs, sig)
        validate(e.rhs, sig)
        return
    if isinstance(e, Not):
        validate(e.body, sig)
        return
    if isinstance(e, (And, Or, Implies)):
        validate(e.lhs, sig)
        validate(e.rhs, sig)
        return
    raise TypeError(f"not a term or formula: {e!r}")


def subexpressions(e: Expr) -> Iterator[Expr]:
    """All subterms and subformulas of ``e``, including ``e`` itself (preorder)."""
    yield e
    if isinstance(e, (Variable, Constant, Falsum)):
        return
    if isinstance(e, (FunApp, PredApp)):
        for a in e.args:
            yield from subexpressions(a)
    elif isinstance(e, (Epsilon, Tau, Exists, Forall)):
        yield from subexpressions(e.body)
    elif isinstance(e, Equals):
        yield from subexpressions(e.lhs)
        yield from subexpressions(e.rhs)
    elif isinstance(e, Not):
        yield from subexpressions(e.body)
    else:
        yield from subexpressions(e.lhs)
        yield from subexpressions(e.rhs)


def infer_signature(exprs, constants=()) -> Signature:
    """Build the signature implied by symbol usage in ``exprs``.

    Bare identifiers are variables unless listed in ``constants``.  A symbol
    used at two different arities, or both as function and predicate, raises
    :class:`ArityError`.
    """
    constants = frozenset(constants)
    functions: dict[str, int] = {}
    predicates: dict[str, int] = {}

    def scan(e: Expr) -> None:
        if isinstance(e, FunApp):
            _record(functions, predicates, e.symbol, len(e.args), is_function=True)
            for a in e.args:
                scan(a)
        elif isinstance(e, PredApp):
            _record(predicates, functions, e.symbol, len(e.args), is_function=False)
            for a in e.args:
                scan(a)
        elif isinstance(e, (Epsilon, Tau, Exists, Forall)):
            scan(e.body)
        elif isinstance(e, Equals):
            scan(e.lhs)
            scan(e.rhs)
        elif isinstance(e, Not):
            scan(e.body)
        elif isinstance(e, (And, Or, Implies)):
            scan(e.lhs)
            scan(e.rhs)

    for e in exprs:
        scan(e)
    overlap = (set(functions) | set(predicates)) & constants
    if overlap:
        raise ArityError(f"symbols used both as constants and applied: {sorted(overlap)}")
    return Signature(constants, functions, predicates)


def _record(table: dict[str, int], other: dict[str, int], name: str, arity: int, is_function: bool):
    kind = "function" if is_function else "predicate"
    if name in other:
        raise ArityError(f"{name!r} used both as function and predicate")
    seen = table.get(name)
    if seen is not None and seen != arity:
        raise ArityError(f"{kind} {name!r} used at arities {seen} and {arity}")
    table[name] = arity
