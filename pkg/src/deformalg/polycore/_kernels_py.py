"""Pure numpy/Python reference implementation of the reduction kernels.

Same contracts as the numba backend; selected via DEFORMALG_BACKEND=numpy.
Arrays: exps (m, n) int64, keys (m, r) int64 (keys = exps @ K.T), coeffs
(m,) int64 in [0, p).  Terms are always sorted descending by key rows.
"""

from __future__ import annotations

import numpy as np


def cmp_keys(a, b) -> int:
    for t in range(a.shape[0]):
        if a[t] != b[t]:
            return 1 if a[t] > b[t] else -1
    return 0


def merge(ae, ak, ac, be, bk, bc, p):
    """Sum of two term lists, both sorted descending; result sorted."""
    na, nb = ae.shape[0], be.shape[0]
    n, r = ae.shape[1], ak.shape[1]
    me = np.empty((na + nb, n), dtype=np.int64)
    mk = np.empty((na + nb, r), dtype=np.int64)
    mc = np.empty(na + nb, dtype=np.int64)
    i = j = k = 0
    while i < na and j < nb:
        c = cmp_keys(ak[i], bk[j])
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


def normal_form(fe, fk, fc, ge, gk, gc, gstarts, glm, p):
    """Full remainder of f under division by the (monic-led) list G.

    G is flattened: block i occupies rows gstarts[i]:gstarts[i+1], sorted
    descending with the leading term first; glm holds the leading
    exponent rows.  Deterministic: the first divisible block is used.
    """
    we, wk, wc = fe, fk, fc
    rem_e, rem_k, rem_c = [], [], []
    g = gstarts.shape[0] - 1
    while we.shape[0] > 0:
        le = we[0]
        hit = -1
        for i in range(g):
            if np.all(glm[i] <= le):
                hit = i
                break
        if hit < 0:
            rem_e.append(we[0].copy()); rem_k.append(wk[0].copy()); rem_c.append(wc[0])
            we, wk, wc = we[1:], wk[1:], wc[1:]
            continue
        s, t = gstarts[hit], gstarts[hit + 1]
        lc_inv = pow(int(gc[s]), p - 2, p)
        factor = (p - (int(wc[0]) * lc_inv) % p) % p
        shift_e = le - glm[hit]
        shift_k = wk[0] - gk[s]
        be = ge[s + 1 : t] + shift_e
        bk = gk[s + 1 : t] + shift_k
        bc = (gc[s + 1 : t] * factor) % p
        we, wk, wc = merge(we[1:], wk[1:], wc[1:], be, bk, bc, p)
    if rem_e:
        return (np.array(rem_e, dtype=np.int64),
                np.array(rem_k, dtype=np.int64),
                np.array(rem_c, dtype=np.int64))
    n, r = fe.shape[1], fk.shape[1]
    return (np.empty((0, n), dtype=np.int64),
            np.empty((0, r), dtype=np.int64),
            np.empty(0, dtype=np.int64))
