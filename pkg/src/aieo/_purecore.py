"""Pure-Python evaluation backend.

Interprets the instruction encoding produced by :mod:`aieo.compilecore`.
Mirrors ``aieo._fastcore`` exactly; selected by :mod:`aieo.backend` when the
compiled extension is unavailable.
"""

from __future__ import annotations

from .compilecore import (
    F_AND,
    F_EQ,
    F_EXISTS,
    F_FALSUM,
    F_FORALL,
    F_IMP,
    F_NOT,
    F_OR,
    F_PRED,
    T_CONST,
    T_EPS,
    T_FUN,
    T_TAU,
    T_VAR,
)

NAME = "python"


def _ev(nodes, kids, s, mi, n, env, idx):
    base = 4 * idx
    kind = nodes[base]
    a = nodes[base + 1]
    if kind == F_PRED:
        off = s.pred_off[mi * s.n_preds + a]
        pos = 0
        mul = 1
        start = nodes[base + 2]
        for j in range(nodes[base + 3]):
            pos += _ev(nodes, kids, s, mi, n, env, kids[start + j]) * mul
            mul *= n
        return s.preds[off + pos]
    if kind == F_NOT:
        return 0 if _ev(nodes, kids, s, mi, n, env, a) else 1
    if kind == F_AND:
        if not _ev(nodes, kids, s, mi, n, env, a):
            return 0
        return _ev(nodes, kids, s, mi, n, env, nodes[base + 2])
    if kind == F_OR:
        if _ev(nodes, kids, s, mi, n, env, a):
            return 1
        return _ev(nodes, kids, s, mi, n, env, nodes[base + 2])
    if kind == F_IMP:
        if not _ev(nodes, kids, s, mi, n, env, a):
            return 1
        return _ev(nodes, kids, s, mi, n, env, nodes[base + 2])
    if kind == F_EQ:
        return 1 if _ev(nodes, kids, s, mi, n, env, a) == _ev(
            nodes, kids, s, mi, n, env, nodes[base + 2]
        ) else 0
    if kind == F_EXISTS:
        body = nodes[base + 2]
        for d in range(n):
            env[a] = d
            if _ev(nodes, kids, s, mi, n, env, body):
                return 1
        return 0
    if kind == F_FORALL:
        body = nodes[base + 2]
        for d in range(n):
            env[a] = d
            if not _ev(nodes, kids, s, mi, n, env, body):
                return 0
        return 1
    if kind == T_VAR:
        return env[a]
    if kind == T_CONST:
        return s.consts[mi * s.n_consts + a]
    if kind == T_EPS:
        body = nodes[base + 2]
        mask = 0
        for d in range(n):
            env[a] = d
            if _ev(nodes, kids, s, mi, n, env, body):
                mask |= 1 << d
        return s.choice[s.choice_base[mi] + mask]
    if kind == T_TAU:
        body = nodes[base + 2]
        mask = 0
        for d in range(n):
            env[a] = d
            if not _ev(nodes, kids, s, mi, n, env, body):
                mask |= 1 << d
        return s.choice[s.choice_base[mi] + mask]
    if kind == T_FUN:
        off = s.fun_off[mi * s.n_funs + a]
        pos = 0
        mul = 1
        start = nodes[base + 2]
        for j in range(nodes[base + 3]):
            pos += _ev(nodes, kids, s, mi, n, env, kids[start + j]) * mul
            mul *= n
        return s.funs[off + pos]
    if kind == F_FALSUM:
        return 0
    raise ValueError(f"bad node kind {kind}")


def eval_program(nodes, kids, root, stream, model_idx, env):
    """Evaluate one root in one model; returns 0/1 for formulas, a 0-based
    element for terms."""
    return _ev(nodes, kids, stream, model_idx, stream.n_arr[model_idx], env, root)


def sweep_entails(nodes, kids, gamma_roots, phi_root, n_free, env, stream):
    """First (model_idx, env_code) where all of gamma hold and phi fails,
    else (-1, -1).  Assignment codes enumerate little-endian: slot i holds
    ``(code // n**i) % n``."""
    for mi in range(stream.m):
        n = stream.n_arr[mi]
        n_envs = n**n_free
        for code in range(n_envs):
            rest = code
            for i in range(n_free):
                env[i] = rest % n
                rest //= n
            ok = True
            for g in gamma_roots:
                if not _ev(nodes, kids, stream, mi, n, env, g):
                    ok = False
                    break
            if ok and not _ev(nodes, kids, stream, mi, n, env, phi_root):
                return mi, code
    return -1, -1


def sweep_pairs(nodes, kids, pairs, n_free, env, stream):
    """Check root pairs for equal value in every model and assignment.

    ``pairs`` is a flat int array of (root_a, root_b) pairs.  Returns the
    first (model_idx, pair_idx, env_code) disagreement, else (-1, -1, -1).
    """
    n_pairs = len(pairs) // 2
    for mi in range(stream.m):
        n = stream.n_arr[mi]
        n_envs = n**n_free
        for code in range(n_envs):
            rest = code
            for i in range(n_free):
                env[i] = rest % n
                rest //= n
            for pi in range(n_pairs):
                va = _ev(nodes, kids, stream, mi, n, env, pairs[2 * pi])
                vb = _ev(nodes, kids, stream, mi, n, env, pairs[2 * pi + 1])
                if va != vb:
                    return mi, pi, code
    return -1, -1, -1
