#!/usr/bin/env python3
"""Benchmark the compiled evaluation core against the pure-Python fallback.

Workloads mirror the expensive verification sweeps: subnector-duality pair
checks over every choice model up to the bound, and a fully-swept (valid)
entailment.  Both backends interpret identical instruction arrays, so the
table is a like-for-like comparison.

Usage: python benchmarks/bench_backends.py [--bound 3] [--formulas 200]
"""

import argparse
import random
import time
from array import array

from aieo import _purecore
from aieo.compilecore import SymbolTable, compile_exprs, pack_models
from aieo.models import enumerate_models
from aieo.parser import parse_formula
from aieo.syntax import And, Epsilon, Implies, Not, Or, PredApp, Signature, Tau, Variable, substitute


def random_suite(count, seed=0):
    rng = random.Random(seed)
    x = Variable("x")

    def formula(depth):
        if depth == 0 or rng.random() < 0.3:
            return PredApp(rng.choice(("S", "P")), (x,))
        r = rng.random()
        if r < 0.3:
            return Not(formula(depth - 1))
        ctor = rng.choice((And, Or, Implies))
        return ctor(formula(depth - 1), formula(depth - 1))

    seen, out = set(), []
    while len(out) < count:
        f = formula(3)
        if f not in seen:
            seen.add(f)
            out.append(f)
    return out


def build_duality_pairs(formulas):
    from aieo.syntax import Exists, Forall

    pairs = []
    for f in formulas:
        pairs.append((Epsilon("x", f), Tau("x", Not(f))))
        pairs.append((substitute(f, "x", Epsilon("x", f)), Exists("x", f)))
        pairs.append((substitute(f, "x", Tau("x", f)), Forall("x", f)))
    return pairs


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--bound", type=int, default=3)
    ap.add_argument("--formulas", type=int, default=200)
    args = ap.parse_args()

    sig = Signature(predicates={"S": 1, "P": 1})
    table = SymbolTable(sig)
    models = list(enumerate_models(sig, args.bound))
    stream = pack_models(models, table)

    pairs = build_duality_pairs(random_suite(args.formulas))
    flat = [e for pair in pairs for e in pair]
    duality = compile_exprs(flat, table, free_order=())
    pairs_arr = array("i", duality.roots)

    entail = compile_exprs(
        [
            parse_formula("P(eps x. S(x))"),
            parse_formula("S(eps x. S(x))"),
            parse_formula("S(eps x. S(x) & P(x)) & P(eps x. S(x) & P(x))"),
        ],
        table,
        free_order=(),
    )
    gamma = array("i", entail.roots[:-1])

    cores = {"python": _purecore}
    try:
        from aieo import _fastcore

        cores["cython"] = _fastcore
    except ImportError:
        print("compiled core not built; benchmarking the fallback only")

    print(
        f"models up to bound {args.bound}: {len(models)}; "
        f"duality pairs: {len(pairs)}; entailment fully swept"
    )
    print(f"{'backend':<10} {'duality sweep':>14} {'entail sweep':>14} {'speedup':>9}")
    baseline = None
    for name, core in cores.items():
        env = array("i", [0]) * duality.n_slots
        t0 = time.perf_counter()
        hit = core.sweep_pairs(duality.nodes, duality.kids, pairs_arr, 0, env, stream)
        d = time.perf_counter() - t0
        assert hit[0] == -1, f"unexpected duality violation: {hit}"

        env = array("i", [0]) * entail.n_slots
        t0 = time.perf_counter()
        miss = core.sweep_entails(entail.nodes, entail.kids, gamma, entail.roots[-1], 0, env, stream)
        e = time.perf_counter() - t0
        assert miss == (-1, -1), "the reference entailment should be valid"

        if baseline is None:
            baseline = d
        print(f"{name:<10} {d:>12.3f}s {e:>12.4f}s {baseline / d:>8.1f}x")


if __name__ == "__main__":
    main()
