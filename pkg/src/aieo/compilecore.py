"""Compilation of syntax trees to flat instruction arrays, and packing of
choice models into lookup tables.

Both evaluation backends (the Cython core ``aieo._fastcore`` and the pure
fallback ``aieo._purecore``) interpret the same encodings:

* a *program* is an ``array('i')`` of 4-int nodes ``(kind, a, b, c)`` plus a
  flat child-index array; elements of the domain are 0-based inside programs;
* a *packed stream* is a batch of models flattened into shared arrays so a
  whole entailment sweep runs without touching Python objects per model.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass

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
    Signature,
    Tau,
    Variable,
    free_vars,
)

T_VAR = 0
T_CONST = 1
T_FUN = 2
T_EPS = 3
T_TAU = 4
F_PRED = 5
F_EQ = 6
F_NOT = 7
F_AND = 8
F_OR = 9
F_IMP = 10
F_EXISTS = 11
F_FORALL = 12
F_FALSUM = 13

MAX_PACK_DOMAIN = 20  # choice tables are 2**n entries


class SymbolTable:
    """Stable symbol->index maps derived from a signature (sorted by name)."""

    def __init__(self, sig: Signature):
        self.sig = sig
        self.const_names = sorted(sig.constants)
        self.const_index = {n: i for i, n in enumerate(self.const_names)}
        self.fun_names = [n for n, _ in sig.functions]
        self.fun_index = {n: i for i, n in enumerate(self.fun_names)}
        self.fun_arity = array("i", [a for _, a in sig.functions])
        self.pred_names = [n for n, _ in sig.predicates]
        self.pred_index = {n: i for i, n in enumerate(self.pred_names)}
        self.pred_arity = array("i", [a for _, a in sig.predicates])


@dataclass
class ProgramSet:
    """One or more expressions compiled into shared node/child arrays."""

    nodes: array
    kids: array
    roots: list[int]
    n_slots: int
    free_order: tuple[str, ...]


def compile_exprs(exprs, table: SymbolTable, free_order=None) -> ProgramSet:
    if free_order is None:
        names: set[str] = set()
        for e in exprs:
            names |= free_vars(e)
        free_order = tuple(sorted(names))
    nodes: list[int] = []
    kids: list[int] = []
    max_depth = 0
    base = {name: i for i, name in enumerate(free_order)}
    n_free = len(free_order)

    def emit(kind, a=0, b=0, c=0) -> int:
        nodes.extend((kind, a, b, c))
        return len(nodes) // 4 - 1

    def go(e, env, depth) -> int:
        nonlocal max_depth
        if depth > max_depth:
            max_depth = depth
        if isinstance(e, Variable):
            try:
                return emit(T_VAR, env[e.name])
            except KeyError:
                raise KeyError(f"unbound variable {e.name!r}") from None
        if isinstance(e, Constant):
            return emit(T_CONST, table.const_index[e.name])
        if isinstance(e, FunApp):
            arg_ids = [go(a, env, depth) for a in e.args]
            start = len(kids)
            kids.extend(arg_ids)
            return emit(T_FUN, table.fun_index[e.symbol], start, len(arg_ids))
        if isinstance(e, (Epsilon, Tau, Exists, Forall)):
            slot = n_free + depth
            inner = dict(env)
            inner[e.var] = slot
            body = go(e.body, inner, depth + 1)
            kind = {Epsilon: T_EPS, Tau: T_TAU, Exists: F_EXISTS, Forall: F_FORALL}[type(e)]
            return emit(kind, slot, body)
        if isinstance(e, PredApp):
            arg_ids = [go(a, env, depth) for a in e.args]
            start = len(kids)
            kids.extend(arg_ids)
            return emit(F_PRED, table.pred_index[e.symbol], start, len(arg_ids))
        if isinstance(e, Equals):
            return emit(F_EQ, go(e.lhs, env, depth), go(e.rhs, env, depth))
        if isinstance(e, Not):
            return emit(F_NOT, go(e.body, env, depth))
        if isinstance(e, (And, Or, Implies)):
            kind = {And: F_AND, Or: F_OR, Implies: F_IMP}[type(e)]
            return emit(kind, go(e.lhs, env, depth), go(e.rhs, env, depth))
        if isinstance(e, Falsum):
            return emit(F_FALSUM)
        raise TypeError(f"not a term or formula: {e!r}")

    roots = [go(e, base, 0) for e in exprs]
    return ProgramSet(
        nodes=array("i", nodes),
        kids=array("i", kids) if kids else array("i", [0]),
        roots=roots,
        n_slots=n_free + max_depth + 1,
        free_order=free_order,
    )


class PackedStream:
    """A batch of choice models flattened for the backends.

    Per model ``mi``: domain size ``n_arr[mi]``; constant ``ci`` denotes
    ``consts[mi * n_consts + ci]``; predicate ``pi`` truth table starts at
    ``pred_off[mi * n_preds + pi]`` in ``preds`` (index =
    ``sum (arg_j) * n**j``); functions likewise in ``funs``; the choice table
    occupies ``2**n`` ints at ``choice_base[mi]`` with entry 0 = default.
    All stored elements are 0-based.
    """

    __slots__ = (
        "m", "n_consts", "n_preds", "n_funs", "pred_arity", "fun_arity",
        "n_arr", "consts", "pred_off", "preds", "fun_off", "funs",
        "choice_base", "choice",
    )

    def __init__(self, table: SymbolTable):
        self.m = 0
        self.n_consts = len(table.const_names)
        self.n_preds = len(table.pred_names)
        self.n_funs = len(table.fun_names)
        self.pred_arity = table.pred_arity
        self.fun_arity = table.fun_arity
        self.n_arr = array("i")
        self.consts = array("i")
        self.pred_off = array("i")
        self.preds = bytearray()
        self.fun_off = array("i")
        self.funs = array("i")
        self.choice_base = array("i")
        self.choice = array("i")

    def add(self, model) -> None:
        n = len(model.domain)
        if n > MAX_PACK_DOMAIN:
            raise ValueError(f"domain too large to pack ({n} > {MAX_PACK_DOMAIN})")
        self.n_arr.append(n)
        names = sorted(model.constants)
        self.consts.extend(model.constants[c] - 1 for c in names)
        for pi, name in enumerate(_sorted_names(model.predicates)):
            a = self.pred_arity[pi]
            self.pred_off.append(len(self.preds))
            tab = bytearray(n**a)
            for tup in model.predicates[name]:
                tab[_tuple_index(tup, n)] = 1
            self.preds.extend(tab)
        for fi, name in enumerate(_sorted_names(model.functions)):
            a = self.fun_arity[fi]
            self.fun_off.append(len(self.funs))
            tab = array("i", [0]) * (n**a)
            for tup, val in model.functions[name].items():
                tab[_tuple_index(tup, n)] = val - 1
            self.funs.extend(tab)
        self.choice_base.append(len(self.choice))
        ctab = array("i", [0]) * (1 << n)
        ctab[0] = model.default - 1
        for mask in range(1, 1 << n):
            subset = frozenset(d + 1 for d in range(n) if mask & (1 << d))
            ctab[mask] = model.choice[subset] - 1
        self.choice.extend(ctab)
        self.m += 1


def _sorted_names(mapping) -> list[str]:
    return sorted(mapping)


def _tuple_index(tup, n: int) -> int:
    idx = 0
    mul = 1
    for v in tup:
        idx += (v - 1) * mul
        mul *= n
    return idx


def pack_models(models, table: SymbolTable) -> PackedStream:
    stream = PackedStream(table)
    for m in models:
        stream.add(m)
    return stream
