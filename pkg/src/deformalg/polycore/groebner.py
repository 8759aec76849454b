"""Buchberger's algorithm with sugar selection and Gebauer-Moeller pruning.

Resource exhaustion (wall clock or S-pair degree cap) raises Inconclusive;
it is never reported as a mathematical yes/no answer.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import backend
from .linalg import inv_mod
from .orders import MonomialOrder
from .ring import Polynomial, Ring


class Inconclusive(Exception):
    """A computation hit a configured resource limit."""

    def __init__(self, cause: str, detail: str = ""):
        super().__init__(f"{cause}: {detail}" if detail else cause)
        self.cause = cause
        self.detail = detail


@dataclass
class GBLimits:
    timeout_s: float | None = None
    degree_cap: int | None = None


DEFAULT_LIMITS = GBLimits(timeout_s=600.0, degree_cap=None)


class _Basis:
    """Mutable flattened view of a polynomial list for the kernels."""

    def __init__(self, ring: Ring, K: np.ndarray):
        self.ring = ring
        self.K = K
        self.polys = []          # (exps, keys, coeffs) sorted desc, monic lead
        self.lms = []            # lead exponent rows
        self.sugars = []
        self._flat = None

    def add(self, arrays, sugar: int):
        self.polys.append(arrays)
        self.lms.append(arrays[0][0])
        self.sugars.append(sugar)
        self._flat = None

    def flat(self):
        if self._flat is None:
            ge = np.concatenate([a[0] for a in self.polys])
            gk = np.concatenate([a[1] for a in self.polys])
            gc = np.concatenate([a[2] for a in self.polys])
            starts = np.zeros(len(self.polys) + 1, dtype=np.int64)
            np.cumsum([a[0].shape[0] for a in self.polys], out=starts[1:])
            glm = np.array(self.lms, dtype=np.int64)
            self._flat = (ge, gk, gc, starts, glm)
        return self._flat


def _to_arrays(f: Polynomial, K: np.ndarray, monic=True):
    e, k, c = f.sorted_arrays(K)
    if monic and c.shape[0] and c[0] != 1:
        c = (c * inv_mod(int(c[0]), f.ring.p)) % f.ring.p
    return e, k, c


def _nf_arrays(fe, fk, fc, basis: _Basis, p: int):
    if fe.shape[0] == 0 or not basis.polys:
        return fe, fk, fc
    ge, gk, gc, starts, glm = basis.flat()
    return backend.normal_form(fe, fk, fc, ge, gk, gc, starts, glm, p)


def normal_form(f: Polynomial, gb, order: MonomialOrder) -> Polynomial:
    """Remainder of f modulo a (Groebner) basis under `order`."""
    ring = f.ring
    K = order.key_matrix()
    basis = _Basis(ring, K)
    for g in gb:
        if not g.is_zero():
            basis.add(_to_arrays(g, K), g.total_degree())
    fe, fk, fc = _to_arrays(f, K, monic=False)
    re, _, rc = _nf_arrays(fe, fk, fc, basis, ring.p)
    return ring.poly(re, rc)


def _spoly(a, b, lm_a, lm_b, K, p):
    """S-polynomial of two monic term-arrays; returns sorted arrays."""
    lcm = np.maximum(lm_a, lm_b)
    ua, ub = lcm - lm_a, lcm - lm_b
    kua, kub = K @ ua, K @ ub
    ae = a[0][1:] + ua
    ak = a[1][1:] + kua
    ac = a[2][1:]
    be = b[0][1:] + ub
    bk = b[1][1:] + kub
    bc = (p - b[2][1:]) % p
    return backend.merge(ae, ak, ac, be, bk, bc, p)


def _key_tuple(K, e):
    return tuple(int(x) for x in (K @ e))


def buchberger(gens, order: MonomialOrder, limits: GBLimits | None = None,
               interreduce: bool = True):
    """Reduced Groebner basis of <gens> under `order`.

    Deterministic for a fixed input list; the reduced basis itself is
    unique for the ideal and order, and is returned sorted by decreasing
    leading monomial.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ValueError("generators live in different rings")
    p = ring.p
    K = order.key_matrix()
    limits = limits or DEFAULT_LIMITS
    deadline = time.monotonic() + limits.timeout_s if limits.timeout_s else None

    basis = _Basis(ring, K)
    pairs = {}

    def lcm_of(i, j):
        return np.maximum(basis.lms[i], basis.lms[j])

    def divides(e, f):
        return bool(np.all(e <= f))

    def update(arrays, sugar):
        # Gebauer-Moeller: prune old pairs, build the new ones minimally.
        new_idx = len(basis.polys)
        lm_new = arrays[0][0]
        stale = []
        for (i, j) in pairs:
            l = lcm_of(i, j)
            if (divides(lm_new, l)
                    and not np.array_equal(l, np.maximum(basis.lms[i], lm_new))
                    and not np.array_equal(l, np.maximum(basis.lms[j], lm_new))):
                stale.append((i, j))
        for ij in stale:
            del pairs[ij]
        cand = {}
        for i in range(new_idx):
            cand.setdefault(tuple(np.maximum(basis.lms[i], lm_new)), []).append(i)
        minimal = []
        for l in sorted(cand, key=lambda t: (_key_tuple(K, np.array(t, dtype=np.int64)), t)):
            la = np.array(l, dtype=np.int64)
            if not any(divides(np.array(m, dtype=np.int64), la) for m in minimal):
                minimal.append(l)
        basis.add(arrays, sugar)
        for l in minimal:
            la = np.array(l, dtype=np.int64)
            members = cand[l]
            if any(np.array_equal(np.maximum(basis.lms[i], lm_new), basis.lms[i] + lm_new)
                   for i in members):
                continue  # coprime criterion
            i = min(members)
            lsug = max(basis.sugars[i] + int((la - basis.lms[i]).sum()),
                       sugar + int((la - lm_new).sum()))
            pairs[(i, new_idx)] = (lsug, _key_tuple(K, la))

    for g in sorted(gens, key=lambda f: _key_tuple(K, f.sorted_arrays(K)[0][0])):
        arrays = _to_arrays(g, K)
        fe, fk, fc = _nf_arrays(*arrays, basis, p)
        if fe.shape[0]:
            if fc[0] != 1:
                fc = (fc * inv_mod(int(fc[0]), p)) % p
            update((fe, fk, fc), int(fe.sum(axis=1).max()))

    while pairs:
        if deadline is not None and time.monotonic() > deadline:
            raise Inconclusive("timeout", f"basis size {len(basis.polys)}, {len(pairs)} pairs left")
        (i, j), (sug, lkey) = min(pairs.items(), key=lambda kv: (kv[1][0], kv[1][1], kv[0]))
        del pairs[(i, j)]
        lcm = lcm_of(i, j)
        if limits.degree_cap is not None and int(lcm.sum()) > limits.degree_cap:
            raise Inconclusive("degree-cap", f"S-pair lcm degree {int(lcm.sum())}")
        se, sk, sc = _spoly(basis.polys[i], basis.polys[j],
                            basis.lms[i], basis.lms[j], K, p)
        re, rk, rc = _nf_arrays(se, sk, sc, basis, p)
        if re.shape[0]:
            if rc[0] != 1:
                rc = (rc * inv_mod(int(rc[0]), p)) % p
            update((re, rk, rc), max(sug, int(re.sum(axis=1).max())))

    # minimalize
    order_idx = sorted(range(len(basis.polys)),
                       key=lambda i: _key_tuple(K, basis.lms[i]))
    kept = []
    for i in order_idx:
        if not any(divides(basis.lms[k], basis.lms[i]) for k in kept):
            kept.append(i)
    result = [basis.polys[i] for i in kept]

    if interreduce:
        reduced = []
        for i, arrays in enumerate(result):
            other = _Basis(ring, K)
            for k, arr2 in enumerate(result):
                if k != i:
                    other.add(arr2, 0)
            re, rk, rc = _nf_arrays(*arrays, other, p)
            if rc.shape[0] and rc[0] != 1:
                rc = (rc * inv_mod(int(rc[0]), p)) % p
            reduced.append((re, rk, rc))
        result = reduced

    polys = [ring.poly(e, c) for (e, k, c) in result if e.shape[0]]
    polys.sort(key=lambda f: _key_tuple(K, f.sorted_arrays(K)[0][0]), reverse=True)
    return polys
