"""The pure-Python and compiled evaluation cores must agree everywhere."""

from array import array

import pytest

from conftest import SIG_SP, FormulaGen
from aieo import _purecore, backend
from aieo.compilecore import SymbolTable, compile_exprs, pack_models
from aieo.models import enumerate_models
from aieo.syntax import Signature

fastcore = pytest.importorskip("aieo._fastcore", reason="compiled core not built")


def _setup(seed, sig, n_formulas=40, n_terms=20, depth=3, bound=2):
    g = FormulaGen(
        seed=seed,
        constants=tuple(sorted(sig.constants)),
        allow_falsum=True,
    )
    exprs = [g.formula(depth) for _ in range(n_formulas)] + [g.term(depth) for _ in range(n_terms)]
    models = list(enumerate_models(sig, bound))
    table = SymbolTable(sig)
    stream = pack_models(models, table)
    progs = compile_exprs(exprs, table)
    return exprs, models, stream, progs


def test_eval_program_agreement():
    sig = Signature(constants={"c"}, predicates={"S": 1, "P": 1})
    exprs, models, stream, progs = _setup(101, sig)
    env_fast = array("i", [0]) * progs.n_slots
    env_pure = array("i", [0]) * progs.n_slots
    n_free = len(progs.free_order)
    for mi, model in enumerate(models[:: max(1, len(models) // 29)]):
        mi_real = models.index(model)
        for code in range(len(model.domain) ** n_free):
            rest = code
            for i in range(n_free):
                env_fast[i] = env_pure[i] = rest % len(model.domain)
                rest //= len(model.domain)
            for root in progs.roots:
                fast = fastcore.eval_program(progs.nodes, progs.kids, root, stream, mi_real, env_fast)
                pure = _purecore.eval_program(progs.nodes, progs.kids, root, stream, mi_real, env_pure)
                assert fast == pure


def test_sweep_entails_agreement():
    sig = SIG_SP
    g = FormulaGen(seed=202)
    table = SymbolTable(sig)
    models = list(enumerate_models(sig, 2))
    stream = pack_models(models, table)
    for trial in range(40):
        gamma = [g.formula(2) for _ in range(2)]
        phi = g.formula(2)
        progs = compile_exprs([*gamma, phi], table)
        env = array("i", [0]) * progs.n_slots
        args = (
            progs.nodes, progs.kids, array("i", progs.roots[:-1]), progs.roots[-1],
            len(progs.free_order),
        )
        fast = fastcore.sweep_entails(*args, array("i", [0]) * progs.n_slots, stream)
        pure = _purecore.sweep_entails(*args, env, stream)
        assert fast == pure


def test_sweep_pairs_agreement():
    sig = SIG_SP
    g = FormulaGen(seed=303)
    table = SymbolTable(sig)
    models = list(enumerate_models(sig, 2))
    stream = pack_models(models, table)
    exprs = [g.formula(2) for _ in range(16)]
    progs = compile_exprs(exprs, table)
    pairs = array("i", progs.roots)
    env = array("i", [0]) * progs.n_slots
    fast = fastcore.sweep_pairs(progs.nodes, progs.kids, pairs, len(progs.free_order),
                                array("i", [0]) * progs.n_slots, stream)
    pure = _purecore.sweep_pairs(progs.nodes, progs.kids, pairs, len(progs.free_order),
                                 env, stream)
    assert fast == pure


def test_backend_selection_override(monkeypatch):
    monkeypatch.setenv("AIEO_BACKEND", "python")
    assert backend.select_backend().NAME == "python"
    monkeypatch.delenv("AIEO_BACKEND")
    assert backend.select_backend("cython").NAME == "cython"
    with pytest.raises(ValueError):
        backend.select_backend("fortran")
