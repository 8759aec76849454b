"""Numba-compiled reduction kernels (default backend).

Mirrors _kernels_py exactly; see there for array contracts.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _cmp_keys(a, b):
    for t in range(a.shape[0]):
        if a[t] != b[t]:
            return 1 if a[t] > b[t] else -1
    return 0


@njit(cache=True)
def _modpow(base, e, p):
    result = 1
    b = base % p
    while e > 0:
        if e & 1:
            result = (result * b) % p
        b = (b * b) % p
        e >>= 1
    return result


@njit(cache=True)
def merge(ae, ak, ac, be, bk, bc, p):
    na = ae.shape[0]
    nb = be.shape[0]
    n = ae.shape[1]
    r = ak.shape[1]
    me = np.empty((na + nb, n), dtype=np.int64)
    mk = np.empty((na + nb, r), dtype=np.int64)
    mc = np.empty(na + nb, dtype=np.int64)
    i = 0
    j = 0
    k = 0
    while i < na and j < nb:
        c = _cmp_keys(ak[i], bk[j])
        if c > 0:
            me[k] = ae[i]; mk[k] = ak[i]; mc[k] = ac[i]
            i += 1; k += 1
        elif c < 0:
            me[k] = be[j]; mk[k] = bk[j]; mc[k] = bc[j]
            j += 1; k += 1
        else:
            s = (ac[i] + bc[j]) % p
            if s != 0:
                me[k] = ae[i]; mk[k] = ak[i]; mc[k] = s
                k += 1
            i += 1; j += 1
    while i < na:
        me[k] = ae[i]; mk[k] = ak[i]; mc[k] = ac[i]
        i += 1; k += 1
    while j < nb:
        me[k] = be[j]; mk[k] = bk[j]; mc[k] = bc[j]
        j += 1; k += 1
    return me[:k], mk[:k], mc[:k]


@njit(cache=True)
def normal_form(fe, fk, fc, ge, gk, gc, gstarts, glm, p):
    n = fe.shape[1]
    r = fk.shape[1]
    we, wk, wc = fe, fk, fc
    cap = 16
    rem_e = np.empty((cap, n), dtype=np.int64)
    rem_k = np.empty((cap, r), dtype=np.int64)
    rem_c = np.empty(cap, dtype=np.int64)
    nrem = 0
    g = gstarts.shape[0] - 1
    while we.shape[0] > 0:
        le = we[0]
        hit = -1
        for i in range(g):
            ok = True
            for v in range(n):
                if glm[i, v] > le[v]:
                    ok = False
                    break
            if ok:
                hit = i
                break
        if hit < 0:
            if nrem == cap:
                cap *= 2
                tmp_e = np.empty((cap, n), dtype=np.int64)
                tmp_k = np.empty((cap, r), dtype=np.int64)
                tmp_c = np.empty(cap, dtype=np.int64)
                tmp_e[:nrem] = rem_e[:nrem]
                tmp_k[:nrem] = rem_k[:nrem]
                tmp_c[:nrem] = rem_c[:nrem]
                rem_e, rem_k, rem_c = tmp_e, tmp_k, tmp_c
            rem_e[nrem] = we[0]
            rem_k[nrem] = wk[0]
            rem_c[nrem] = wc[0]
            nrem += 1
            we, wk, wc = we[1:], wk[1:], wc[1:]
            continue
        s = gstarts[hit]
        t = gstarts[hit + 1]
        lc_inv = _modpow(gc[s], p - 2, p)
        factor = (p - (wc[0] * lc_inv) % p) % p
        nb = t - s - 1
        be = np.empty((nb, n), dtype=np.int64)
        bk = np.empty((nb, r), dtype=np.int64)
        bc = np.empty(nb, dtype=np.int64)
        for q in range(nb):
            for v in range(n):
                be[q, v] = ge[s + 1 + q, v] + le[v] - glm[hit, v]
            for v in range(r):
                bk[q, v] = gk[s + 1 + q, v] + wk[0, v] - gk[s, v]
            bc[q] = (gc[s + 1 + q] * factor) % p
        we, wk, wc = merge(we[1:], wk[1:], wc[1:], be, bk, bc, p)
    return rem_e[:nrem].copy(), rem_k[:nrem].copy(), rem_c[:nrem].copy()
