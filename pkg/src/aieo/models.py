"""Finite choice-function semantics.

A :class:`ChoiceModel` is a finite first-order structure together with a
total choice function on subsets of the domain; ``eps x. F`` denotes the
chosen element of F's extension (the model's default element when the
extension is empty) and ``tau x. F`` the chosen element of the complement.
This semantics is sound for refutation: a countermodel is definitive, a
``ValidUpTo(bound)`` verdict is a bounded claim only — no completeness is
claimed for the calculus.

:func:`eval_term` / :func:`eval_formula` are the reference evaluator (plain
recursion over the tree).  :func:`entails` and :func:`sweep_equalities` run
on the compiled backend over packed model streams and re-check any
countermodel against the reference evaluator before returning it.
"""

from __future__ import annotations

import itertools
import math
import os
from array import array
from dataclasses import dataclass, field
from functools import lru_cache

from . import backend
from .compilecore import SymbolTable, compile_exprs, pack_models
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
    infer_signature,
    validate,
)

DEFAULT_BUDGET = 10**7


class BudgetExceeded(Exception):
    """The enumeration would exceed the configured model cap."""


class UnboundVariable(Exception):
    pass


def effective_budget(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get("AIEO_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass
class ChoiceModel:
    """Finite domain 1..n with predicate/function/constant interpretations,
    a total choice function on nonempty subsets, and a default element for
    the empty set.  Treated as immutable after construction."""

    domain: tuple[int, ...]
    predicates: dict[str, frozenset]
    functions: dict[str, dict] = field(default_factory=dict)
    constants: dict[str, int] = field(default_factory=dict)
    choice: dict[frozenset, int] = field(default_factory=dict)
    default: int = 1

    def __post_init__(self):
        self.domain = tuple(self.domain)
        n = len(self.domain)
        if n == 0 or self.domain != tuple(range(1, n + 1)):
            raise ValueError("domain must be the nonempty initial segment 1..n")
        self.predicates = {
            name: frozenset(_as_tuple(t) for t in ext)
            for name, ext in self.predicates.items()
        }
        self.functions = {
            name: {_as_tuple(k): v for k, v in table.items()}
            for name, table in self.functions.items()
        }
        self.choice = {frozenset(k): v for k, v in self.choice.items()}
        dom = set(self.domain)
        for name, ext in self.predicates.items():
            for tup in ext:
                if not set(tup) <= dom:
                    raise ValueError(f"predicate {name!r} interpreted outside the domain")
        for name, table in self.functions.items():
            arities = {len(k) for k in table}
            if len(arities) > 1:
                raise ValueError(f"function {name!r} keyed at mixed arities")
            arity = arities.pop() if arities else 0
            if len(table) != n**arity:
                raise ValueError(f"function {name!r} is not total")
            for k, v in table.items():
                if not set(k) <= dom or v not in dom:
                    raise ValueError(f"function {name!r} interpreted outside the domain")
        for name, v in self.constants.items():
            if v not in dom:
                raise ValueError(f"constant {name!r} interpreted outside the domain")
        if self.default not in dom:
            raise ValueError("default element outside the domain")
        for size in range(1, n + 1):
            for subset in itertools.combinations(self.domain, size):
                key = frozenset(subset)
                if key not in self.choice:
                    raise ValueError(f"choice function undefined on {sorted(key)}")
                if self.choice[key] not in key:
                    raise ValueError(f"choice({sorted(key)}) is not a member")

    def choice_of(self, subset) -> int:
        subset = frozenset(subset)
        return self.default if not subset else self.choice[subset]

    def to_json(self) -> dict:
        doc = {
            "domain": list(self.domain),
            "predicates": {
                name: sorted(list(t) for t in ext) for name, ext in self.predicates.items()
            },
            "constants": dict(sorted(self.constants.items())),
            "choice": [
                [sorted(k), v]
                for k, v in sorted(self.choice.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
            ],
            "default": self.default,
        }
        if self.functions:
            doc["functions"] = {
                name: sorted([*k, v] for k, v in table.items())
                for name, table in self.functions.items()
            }
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "ChoiceModel":
        functions = {
            name: {tuple(row[:-1]): row[-1] for row in rows}
            for name, rows in doc.get("functions", {}).items()
        }
        return cls(
            domain=tuple(doc["domain"]),
            predicates={name: frozenset(map(tuple, ext)) for name, ext in doc["predicates"].items()},
            functions=functions,
            constants=dict(doc.get("constants", {})),
            choice={frozenset(subset): elem for subset, elem in doc["choice"]},
            default=doc["default"],
        )


def _as_tuple(t):
    return t if isinstance(t, tuple) else (t,)


# reference evaluator


def eval_term(model: ChoiceModel, env: dict, t: Term) -> int:
    if isinstance(t, Variable):
        try:
            return env[t.name]
        except KeyError:
            raise UnboundVariable(t.name) from None
    if isinstance(t, Constant):
        return model.constants[t.name]
    if isinstance(t, FunApp):
        args = tuple(eval_term(model, env, a) for a in t.args)
        return model.functions[t.symbol][args]
    if isinstance(t, Epsilon):
        extension = frozenset(
            d for d in model.domain if eval_formula(model, {**env, t.var: d}, t.body)
        )
        return model.choice_of(extension)
    if isinstance(t, Tau):
        complement = frozenset(
            d for d in model.domain if not eval_formula(model, {**env, t.var: d}, t.body)
        )
        return model.choice_of(complement)
    raise TypeError(f"not a term: {t!r}")


def eval_formula(model: ChoiceModel, env: dict, f: Formula) -> bool:
    if isinstance(f, PredApp):
        args = tuple(eval_term(model, env, a) for a in f.args)
        return args in model.predicates[f.symbol]
    if isinstance(f, Equals):
        return eval_term(model, env, f.lhs) == eval_term(model, env, f.rhs)
    if isinstance(f, Not):
        return not eval_formula(model, env, f.body)
    if isinstance(f, And):
        return eval_formula(model, env, f.lhs) and eval_formula(model, env, f.rhs)
    if isinstance(f, Or):
        return eval_formula(model, env, f.lhs) or eval_formula(model, env, f.rhs)
    if isinstance(f, Implies):
        return (not eval_formula(model, env, f.lhs)) or eval_formula(model, env, f.rhs)
    if isinstance(f, Exists):
        return any(eval_formula(model, {**env, f.var: d}, f.body) for d in model.domain)
    if isinstance(f, Forall):
        return all(eval_formula(model, {**env, f.var: d}, f.body) for d in model.domain)
    if isinstance(f, Falsum):
        return False
    raise TypeError(f"not a formula: {f!r}")


# enumeration


def count_models(sig: Signature, max_size: int) -> int:
    total = 0
    for n in range(1, max_size + 1):
        c = 1
        for _, a in sig.predicates:
            c *= 2 ** (n**a)
        c *= n ** len(sig.constants)
        for _, a in sig.functions:
            c *= n ** (n**a)
        for k in range(1, n + 1):
            c *= k ** math.comb(n, k)
        total += c * n
    return total


def enumerate_models(sig: Signature, max_size: int, budget: int | None = None):
    """Every ChoiceModel with domain 1..k for k <= max_size, in a fixed
    deterministic order.  Raises :class:`BudgetExceeded` eagerly when the
    total count exceeds the cap (default 10^7, env ``AIEO_BUDGET``)."""
    if max_size < 1:
        raise ValueError("the empty domain is excluded; max_size must be >= 1")
    if sig.functions and max_size > 3:
        raise ValueError("function symbols are only supported up to domain size 3")
    cap = effective_budget(budget)
    count = count_models(sig, max_size)
    if count > cap:
        raise BudgetExceeded(f"{count} models would exceed the cap of {cap}")
    return _generate(sig, max_size)


def _generate(sig: Signature, max_size: int):
    for n in range(1, max_size + 1):
        domain = tuple(range(1, n + 1))
        pred_opts = []
        for name, a in sig.predicates:
            tuples = list(itertools.product(domain, repeat=a))
            subsets = [
                frozenset(t for i, t in enumerate(tuples) if mask & (1 << i))
                for mask in range(1 << len(tuples))
            ]
            pred_opts.append([(name, s) for s in subsets])
        const_names = sorted(sig.constants)
        fun_opts = []
        for name, a in sig.functions:
            keys = list(itertools.product(domain, repeat=a))
            tables = [
                (name, dict(zip(keys, values)))
                for values in itertools.product(domain, repeat=len(keys))
            ]
            fun_opts.append(tables)
        subsets = [
            frozenset(d for d in domain if mask & (1 << (d - 1)))
            for mask in range(1, 1 << n)
        ]
        choice_opts = [[(s, e) for e in sorted(s)] for s in subsets]
        for preds in itertools.product(*pred_opts):
            for consts in itertools.product(domain, repeat=len(const_names)):
                for funs in itertools.product(*fun_opts):
                    for chosen in itertools.product(*choice_opts):
                        for default in domain:
                            yield ChoiceModel(
                                domain=domain,
                                predicates=dict(preds),
                                functions=dict(funs),
                                constants=dict(zip(const_names, consts)),
                                choice=dict(chosen),
                                default=default,
                            )


# entailment


@dataclass(frozen=True)
class ValidUpTo:
    bound: int


@dataclass
class Countermodel:
    model: ChoiceModel
    assignment: dict[str, int]

    def to_json(self) -> dict:
        return {"model": self.model.to_json(), "assignment": dict(sorted(self.assignment.items()))}


@lru_cache(maxsize=16)
def _packed_stream(sig: Signature, bound: int, cap: int):
    models = list(enumerate_models(sig, bound, cap))
    table = SymbolTable(sig)
    return models, pack_models(models, table), table


def entails(gamma, phi: Formula, sig: Signature | None = None, bound: int = 3,
            budget: int | None = None):
    """Bounded semantic entailment, free variables read universally.

    Sweeps every model up to ``bound`` and every assignment to the free
    variables of the sequent (model-major, assignment-minor order) and
    returns the first :class:`Countermodel` where all of ``gamma`` hold and
    ``phi`` fails, else ``ValidUpTo(bound)``.  Sound for refutation only.
    """
    gamma = tuple(gamma)
    if sig is None:
        sig = infer_signature((*gamma, phi))
    for f in (*gamma, phi):
        validate(f, sig)
    cap = effective_budget(budget)
    models, stream, table = _packed_stream(sig, bound, cap)
    progs = compile_exprs((*gamma, phi), table)
    env = array("i", [0]) * progs.n_slots
    gamma_roots = array("i", progs.roots[:-1])
    mi, code = backend.core.sweep_entails(
        progs.nodes, progs.kids, gamma_roots, progs.roots[-1],
        len(progs.free_order), env, stream,
    )
    if mi < 0:
        return ValidUpTo(bound)
    model = models[mi]
    assignment = _decode_assignment(code, progs.free_order, len(model.domain))
    _recheck_countermodel(model, assignment, gamma, phi)
    return Countermodel(model, assignment)


def _decode_assignment(code: int, free_order, n: int) -> dict[str, int]:
    out = {}
    for name in free_order:
        out[name] = code % n + 1
        code //= n
    return out


def _recheck_countermodel(model, assignment, gamma, phi) -> None:
    env = dict(assignment)
    if not all(eval_formula(model, env, g) for g in gamma):
        raise RuntimeError("backend countermodel failed reference re-check (gamma)")
    if eval_formula(model, env, phi):
        raise RuntimeError("backend countermodel failed reference re-check (phi)")


def sweep_equalities(pairs, sig: Signature | None = None, bound: int = 3,
                     budget: int | None = None):
    """Check expression pairs for equal denotation in every model/assignment.

    Terms compare as elements, formulas as truth values.  Returns ``None``
    when no disagreement is found, else ``(model, pair_index, assignment)``.
    """
    for a, b in pairs:
        if isinstance(a, Term) is not isinstance(b, Term):
            raise TypeError(f"cannot compare a term with a formula: {a} vs {b}")
    exprs = [e for pair in pairs for e in pair]
    if sig is None:
        sig = infer_signature(exprs)
    for e in exprs:
        validate(e, sig)
    cap = effective_budget(budget)
    models, stream, table = _packed_stream(sig, bound, cap)
    progs = compile_exprs(exprs, table)
    env = array("i", [0]) * progs.n_slots
    flat = array("i", progs.roots)
    mi, pi, code = backend.core.sweep_pairs(
        progs.nodes, progs.kids, flat, len(progs.free_order), env, stream
    )
    if mi < 0:
        return None
    model = models[mi]
    assignment = _decode_assignment(code, progs.free_order, len(model.domain))
    return model, pi, assignment


@dataclass(frozen=True)
class Oracle:
    """Bounded entailment oracle, optionally relativized to a theory."""

    sig: Signature | None = None
    bound: int = 3
    theory: tuple = ()
    budget: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "theory", tuple(self.theory))

    def entails(self, hyps, phi: Formula):
        hyps = self.theory + tuple(hyps)
        sig = self.sig
        if sig is None:
            sig = infer_signature((*hyps, phi))
        return entails(hyps, phi, sig, self.bound, self.budget)

    def holds(self, hyps, phi: Formula) -> bool:
        return isinstance(self.entails(hyps, phi), ValidUpTo)

    def valid(self, phi: Formula) -> bool:
        return self.holds((), phi)
