# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled evaluation backend; instruction-for-instruction mirror of
aieo._purecore (see there for the encoding contract)."""

from cpython cimport array
import array as _array

NAME = "cython"

cdef enum:
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

_EMPTY_I = _array.array("i", [0])
_EMPTY_B = bytearray(1)


cdef int _ev(int idx, int mi, int n,
             int[::1] nodes, int[::1] kids,
             int n_consts, int n_preds, int n_funs,
             int[::1] consts, int[::1] pred_off, const unsigned char[::1] preds,
             int[::1] fun_off, int[::1] funs,
             int[::1] choice_base, int[::1] choice,
             int[::1] env) except? -2:
    cdef int base = 4 * idx
    cdef int kind = nodes[base]
    cdef int a = nodes[base + 1]
    cdef int start, j, d, pos, mul, mask, body, v

    if kind == F_PRED:
        pos = 0
        mul = 1
        start = nodes[base + 2]
        for j in range(nodes[base + 3]):
            v = _ev(kids[start + j], mi, n, nodes, kids, n_consts, n_preds, n_funs,
                    consts, pred_off, preds, fun_off, funs, choice_base, choice, env)
            pos += v * mul
            mul *= n
        return preds[pred_off[mi * n_preds + a] + pos]
    if kind == F_NOT:
        return 0 if _ev(a, mi, n, nodes, kids, n_consts, n_preds, n_funs,
                        consts, pred_off, preds, fun_off, funs, choice_base, choice, env) else 1
    if kind == F_AND:
        if not _ev(a, mi, n, nodes, kids, n_consts, n_preds, n_funs,
                   consts, pred_off, preds, fun_off, funs, choice_base, choice, env):
            return 0
        return _ev(nodes[base + 2], mi, n, nodes, kids, n_consts, n_preds, n_funs,
                   consts, pred_off, preds, fun_off, funs, choice_base, choice, env)
    if kind == F_OR:
        if _ev(a, mi, n, nodes, kids, n_consts, n_preds, n_funs,
               consts, pred_off, preds, fun_off, funs, choice_base, choice, env):
            return 1
        return _ev(nodes[base + 2], mi, n, nodes, kids, n_consts, n_preds, n_funs,
                   consts, pred_off, preds, fun_off, funs, choice_base, choice, env)
    if kind == F_IMP:
        if not _ev(a, mi, n, nodes, kids, n_consts, n_preds, n_funs,
                   consts, pred_off, preds, fun_off, funs, choice_base, choice, env):
            return 1
        return _ev(nodes[base + 2], mi, n, nodes, kids, n_consts, n_preds, n_funs,
                   consts, pred_off, preds, fun_off, funs, choice_base, choice, env)
    if kind == F_EQ:
        v = _ev(a, mi, n, nodes, kids, n_consts, n_preds, n_funs,
                consts, pred_off, preds, fun_off, funs, choice_base, choice, env)
        return 1 if v == _ev(nodes[base + 2], mi, n, nodes, kids, n_consts, n_preds,
                             n_funs, consts, pred_off, preds, fun_off, funs,
                             choice_base, choice, env) else 0
    if kind == F_EXISTS:
        body = nodes[base + 2]
        for d in range(n):
            env[a] = d
            if _ev(body, mi, n, nodes, kids, n_consts, n_preds, n_funs,
                   consts, pred_off, preds, fun_off, funs, choice_base, choice, env):
                return 1
        return 0
    if kind == F_FORALL:
        body = nodes[base + 2]
        for d in range(n):
            env[a] = d
            if not _ev(body, mi, n, nodes, kids, n_consts, n_preds, n_funs,
                       consts, pred_off, preds, fun_off, funs, choice_base, choice, env):
                return 0
        return 1
    if kind == T_VAR:
        return env[a]
    if kind == T_CONST:
        return consts[mi * n_consts + a]
    if kind == T_EPS:
        body = nodes[base + 2]
        mask = 0
        for d in range(n):
            env[a] = d
            if _ev(body, mi, n, nodes, kids, n_consts, n_preds, n_funs,
                   consts, pred_off, preds, fun_off, funs, choice_base, choice, env):
                mask |= 1 << d
        return choice[choice_base[mi] + mask]
    if kind == T_TAU:
        body = nodes[base + 2]
        mask = 0
        for d in range(n):
            env[a] = d
            if not _ev(body, mi, n, nodes, kids, n_consts, n_preds, n_funs,
                       consts, pred_off, preds, fun_off, funs, choice_base, choice, env):
                mask |= 1 << d
        return choice[choice_base[mi] + mask]
    if kind == T_FUN:
        pos = 0
        mul = 1
        start = nodes[base + 2]
        for j in range(nodes[base + 3]):
            v = _ev(kids[start + j], mi, n, nodes, kids, n_consts, n_preds, n_funs,
                    consts, pred_off, preds, fun_off, funs, choice_base, choice, env)
            pos += v * mul
            mul *= n
        return funs[fun_off[mi * n_funs + a] + pos]
    if kind == F_FALSUM:
        return 0
    raise ValueError(f"bad node kind {kind}")


def eval_program(nodes, kids, int root, stream, int model_idx, env):
    cdef int[::1] nodes_v = nodes
    cdef int[::1] kids_v = kids
    cdef int[::1] env_v = env
    cdef int[::1] consts_v = stream.consts if len(stream.consts) else _EMPTY_I
    cdef int[::1] pred_off_v = stream.pred_off if len(stream.pred_off) else _EMPTY_I
    cdef const unsigned char[::1] preds_v = stream.preds if len(stream.preds) else _EMPTY_B
    cdef int[::1] fun_off_v = stream.fun_off if len(stream.fun_off) else _EMPTY_I
    cdef int[::1] funs_v = stream.funs if len(stream.funs) else _EMPTY_I
    cdef int[::1] choice_base_v = stream.choice_base
    cdef int[::1] choice_v = stream.choice
    cdef int n_consts = stream.n_consts
    cdef int n_preds = stream.n_preds
    cdef int n_funs = stream.n_funs
    return _ev(root, model_idx, stream.n_arr[model_idx], nodes_v, kids_v,
               n_consts, n_preds, n_funs, consts_v, pred_off_v, preds_v,
               fun_off_v, funs_v, choice_base_v, choice_v, env_v)


def sweep_entails(nodes, kids, gamma_roots, int phi_root, int n_free, env, stream):
    cdef int[::1] nodes_v = nodes
    cdef int[::1] kids_v = kids
    cdef int[::1] env_v = env
    cdef int[::1] gamma_v = gamma_roots if len(gamma_roots) else _EMPTY_I
    cdef int n_gamma = len(gamma_roots)
    cdef int[::1] n_arr_v = stream.n_arr
    cdef int[::1] consts_v = stream.consts if len(stream.consts) else _EMPTY_I
    cdef int[::1] pred_off_v = stream.pred_off if len(stream.pred_off) else _EMPTY_I
    cdef const unsigned char[::1] preds_v = stream.preds if len(stream.preds) else _EMPTY_B
    cdef int[::1] fun_off_v = stream.fun_off if len(stream.fun_off) else _EMPTY_I
    cdef int[::1] funs_v = stream.funs if len(stream.funs) else _EMPTY_I
    cdef int[::1] choice_base_v = stream.choice_base
    cdef int[::1] choice_v = stream.choice
    cdef int n_consts = stream.n_consts
    cdef int n_preds = stream.n_preds
    cdef int n_funs = stream.n_funs
    cdef int m = stream.m
    cdef int mi, n, code, n_envs, i, rest, gi
    cdef bint ok
    for mi in range(m):
        n = n_arr_v[mi]
        n_envs = 1
        for i in range(n_free):
            n_envs *= n
        for code in range(n_envs):
            rest = code
            for i in range(n_free):
                env_v[i] = rest % n
                rest //= n
            ok = True
            for gi in range(n_gamma):
                if not _ev(gamma_v[gi], mi, n, nodes_v, kids_v, n_consts, n_preds,
                           n_funs, consts_v, pred_off_v, preds_v, fun_off_v, funs_v,
                           choice_base_v, choice_v, env_v):
                    ok = False
                    break
            if ok and not _ev(phi_root, mi, n, nodes_v, kids_v, n_consts, n_preds,
                              n_funs, consts_v, pred_off_v, preds_v, fun_off_v,
                              funs_v, choice_base_v, choice_v, env_v):
                return mi, code
    return -1, -1


def sweep_pairs(nodes, kids, pairs, int n_free, env, stream):
    cdef int[::1] nodes_v = nodes
    cdef int[::1] kids_v = kids
    cdef int[::1] env_v = env
    cdef int[::1] pairs_v = pairs
    cdef int n_pairs = len(pairs) // 2
    cdef int[::1] n_arr_v = stream.n_arr
    cdef int[::1] consts_v = stream.consts if len(stream.consts) else _EMPTY_I
    cdef int[::1] pred_off_v = stream.pred_off if len(stream.pred_off) else _EMPTY_I
    cdef const unsigned char[::1] preds_v = stream.preds if len(stream.preds) else _EMPTY_B
    cdef int[::1] fun_off_v = stream.fun_off if len(stream.fun_off) else _EMPTY_I
    cdef int[::1] funs_v = stream.funs if len(stream.funs) else _EMPTY_I
    cdef int[::1] choice_base_v = stream.choice_base
    cdef int[::1] choice_v = stream.choice
    cdef int n_consts = stream.n_consts
    cdef int n_preds = stream.n_preds
    cdef int n_funs = stream.n_funs
    cdef int m = stream.m
    cdef int mi, n, code, n_envs, i, rest, pi, va, vb
    for mi in range(m):
        n = n_arr_v[mi]
        n_envs = 1
        for i in range(n_free):
            n_envs *= n
        for code in range(n_envs):
            rest = code
            for i in range(n_free):
                env_v[i] = rest % n
                rest //= n
            for pi in range(n_pairs):
                va = _ev(pairs_v[2 * pi], mi, n, nodes_v, kids_v, n_consts, n_preds,
                         n_funs, consts_v, pred_off_v, preds_v, fun_off_v, funs_v,
                         choice_base_v, choice_v, env_v)
                vb = _ev(pairs_v[2 * pi + 1], mi, n, nodes_v, kids_v, n_consts,
                         n_preds, n_funs, consts_v, pred_off_v, preds_v, fun_off_v,
                         funs_v, choice_base_v, choice_v, env_v)
                if va != vb:
                    return mi, pi, code
    return -1, -1, -1
