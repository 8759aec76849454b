"""The 9-vertex weight graph, its path poset, surgery matrices, divisor
coefficients, and support-cycle bookkeeping."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from .polycore import Fp, solve as fp_solve
from .weylalcove import act, vec_add, vec_sub


def coset(x, y=None, z=None):
    """Canonical representative of a weight class modulo the center:
    normalize the last coordinate to 0."""
    v = x if y is None else (x, y, z)
    return (v[0] - v[2], v[1] - v[2], 0)


E1 = coset(1, 0, 0)
E2 = coset(0, 0, -1)
ZERO = coset(0, 0, 0)

_OMEGA_NAMES = {
    ZERO: "0",
    E1: "e1",
    E2: "e2",
    coset(*vec_add(E1, E2)): "e1+e2",
    coset(*vec_sub(E1, E2)): "e1-e2",
    coset(*vec_sub(E2, E1)): "e2-e1",
    coset(-1, 0, 0): "-e1",
    coset(*(-x for x in E2)): "-e2",
    coset(2, 0, 0): "2e1",
    coset(*vec_sub(vec_add(E1, E1), E2)): "2e1-e2",
    coset(*vec_add(E2, E2)): "2e2",
    coset(*vec_sub(vec_add(E2, E2), E1)): "2e2-e1",
}


@dataclass(frozen=True, order=True)
class ExtVertex:
    omega: tuple
    a: int

    def __repr__(self):
        return f"({_OMEGA_NAMES.get(self.omega, self.omega)},{self.a})"


def vertex(omega, a) -> ExtVertex:
    return ExtVertex(coset(omega), a)


def _v(name: str, a: int) -> ExtVertex:
    for om, nm in _OMEGA_NAMES.items():
        if nm == name:
            return ExtVertex(om, a)
    raise KeyError(name)


def sigma0():
    """The 9 vertices of the base graph."""
    return frozenset([
        _v("e1+e2", 0), _v("e1-e2", 0), _v("e2-e1", 0),
        _v("0", 1), _v("e1", 1), _v("e2", 1),
        _v("0", 0), _v("e1", 0), _v("e2", 0),
    ])


SIGMA0 = sigma0()

# the 6-letter path alphabet, in the order fixing lexicographic path order
ALPHABET = (
    _v("0", 0), _v("e1", 0), _v("e2", 0),
    _v("0", 1), _v("e1", 1), _v("e2", 1),
)

_ADJ_DIFFS = {coset(0, 0, 0), E1, coset(*(-x for x in E1)), E2,
              coset(*(-x for x in E2)), coset(*vec_sub(E1, E2)),
              coset(*vec_sub(E2, E1))}


def adjacent(v: ExtVertex, w: ExtVertex) -> bool:
    return v.a != w.a and coset(*vec_sub(v.omega, w.omega)) in _ADJ_DIFFS


class NotInSigma0(ValueError):
    pass


@lru_cache(maxsize=None)
def _distances():
    verts = sorted(SIGMA0)
    d = {v: {v: 0} for v in verts}
    for src in verts:
        frontier = [src]
        while frontier:
            nxt = []
            for u in frontier:
                for w in verts:
                    if w not in d[src] and adjacent(u, w):
                        d[src][w] = d[src][u] + 1
                        nxt.append(w)
            frontier = nxt
    return d


def distance(v: ExtVertex, w: ExtVertex) -> int:
    table = _distances()
    if v not in table or w not in table[v]:
        raise NotInSigma0(f"{v} or {w} outside the base graph")
    return table[v][w]


# -- paths ---------------------------------------------------------------

Path = tuple  # of ExtVertex, length 2 or 3

PATH_STARTERS = (_v("e1", 1), _v("e2", 1))


def is_path(verts) -> bool:
    verts = tuple(verts)
    if len(verts) not in (2, 3):
        return False
    if len(set(verts)) != len(verts):
        return False
    if verts[0] not in PATH_STARTERS:
        return False
    if any(v not in ALPHABET for v in verts):
        return False
    return all(adjacent(verts[k], verts[k + 1]) for k in range(len(verts) - 1))


def enumerate_paths(length: int):
    """All paths of the given length, lexicographic in the alphabet order."""
    if length not in (2, 3):
        raise ValueError("paths have length 2 or 3")
    idx = {v: i for i, v in enumerate(ALPHABET)}
    out = [p for p in product(ALPHABET, repeat=length) if is_path(p)]
    out.sort(key=lambda p: tuple(idx[v] for v in p))
    return out


def path_le(beta, gamma) -> bool:
    """beta <= gamma iff beta is a prefix of gamma."""
    return len(beta) <= len(gamma) and tuple(gamma[: len(beta)]) == tuple(beta)


def sigma_gamma(gamma):
    """Support set of a path: three vertices for length 2, one for length 3."""
    gamma = tuple(gamma)
    if not is_path(gamma):
        raise ValueError(f"not a path: {gamma}")
    if len(gamma) == 2:
        base = {gamma[1], _v("0", 1), _v("e1", 1), _v("e2", 1)}
        return frozenset(base - {gamma[0]})
    return frozenset({gamma[2]})


class ParityViolation(ArithmeticError):
    pass


def divisor_coeff(g1: ExtVertex, v: ExtVertex) -> int:
    """Half-sum divisor coefficient attached to the pair (g1, v)."""
    origin = _v("0", 1)
    s = distance(g1, origin) + distance(g1, v) - distance(origin, v)
    if s % 2:
        raise ParityViolation(f"odd half-sum for {g1}, {v}")
    return s // 2


# -- support cycles ------------------------------------------------------

class Cycle:
    """Formal non-negative combination of component labels."""

    def __init__(self, counts=None):
        self.counts = {v: int(c) for v, c in (counts or {}).items() if c}

    def __add__(self, other):
        out = dict(self.counts)
        for v, c in other.counts.items():
            out[v] = out.get(v, 0) + c
        return Cycle(out)

    def __sub__(self, other):
        out = dict(self.counts)
        for v, c in other.counts.items():
            out[v] = out.get(v, 0) - c
        return Cycle(out)

    def degree(self):
        return sum(self.counts.values())

    def __eq__(self, other):
        return isinstance(other, Cycle) and self.counts == other.counts

    def __repr__(self):
        items = sorted(self.counts.items())
        return " + ".join(f"{c}*[{v}]" for v, c in items) or "0"


def path_support_cycle(gamma) -> Cycle:
    return Cycle({v: 1 for v in sigma_gamma(gamma)})


# the kernel paths of the truncated complex
F_PATHS = (
    (_v("e2", 1), _v("0", 0), _v("e1", 1)),
    (_v("e1", 1), _v("0", 0), _v("e2", 1)),
    (_v("e2", 1), _v("0", 0), _v("0", 1)),
)


def cycle_of_m_kappa() -> Cycle:
    """Support cycle of the surgery cokernel via additivity: independent of
    the scalar tuple by construction (no kappa value is ever read)."""
    total = Cycle()
    for beta in enumerate_paths(2):
        total = total + path_support_cycle(beta)
    for gamma in enumerate_paths(3):
        total = total - path_support_cycle(gamma)
    for gamma in F_PATHS:
        total = total + path_support_cycle(gamma)
    return total


# -- scalar tuples and the surgery matrix --------------------------------

# the four free paths and their lambda labels, in display order
LAMBDA_PATHS = (
    (_v("e2", 1), _v("e2", 0), _v("e1", 1)),   # lambda_1
    (_v("e2", 1), _v("e1", 0), _v("e1", 1)),   # lambda_2
    (_v("e1", 1), _v("e2", 0), _v("e2", 1)),   # lambda_3
    (_v("e1", 1), _v("e1", 0), _v("e2", 1)),   # lambda_4
)


class GenericityViolation(ZeroDivisionError):
    pass


def _frac(num: int, den: int, p: int) -> Fp:
    if den % p == 0:
        raise GenericityViolation("denominator vanished")
    return Fp(num, p) / Fp(den, p)


class KappaTuple:
    """Scalars on the 12 length-3 paths; pinned to 1 when gamma_2 = (0,0)
    or gamma_3 = (0,1)."""

    def __init__(self, values: dict, p: int):
        self.p = p
        self.values = {}
        for gamma in enumerate_paths(3):
            pinned = gamma[1] == _v("0", 0) or gamma[2] == _v("0", 1)
            if pinned:
                got = values.get(tuple(gamma))
                if got is not None and got != Fp(1, p):
                    raise ValueError(f"path {gamma} has a pinned scalar of 1")
                self.values[tuple(gamma)] = Fp(1, p)
            else:
                v = values[tuple(gamma)]
                v = v if isinstance(v, Fp) else Fp(v, p)
                if v == Fp(0, p):
                    raise ValueError("kappa values must be nonzero")
                self.values[tuple(gamma)] = v

    def __getitem__(self, gamma):
        return self.values[tuple(gamma)]

    def lambdas(self):
        """(lambda_1, ..., lambda_4) with lambda_i = -kappa at the free paths."""
        return tuple(-self[g] for g in LAMBDA_PATHS)


def kappa_min(a: int, b: int, c: int, p: int) -> KappaTuple:
    """The distinguished tuple making every surgery composite nonzero: the
    unique scalars killing the first row of the reduced linear system.

    Note: two of the four entries differ in sign from a common display of
    this tuple; the values here are the ones forced by the congruence
    identities behind the matrix, and are cross-checked against the ring
    computation in the verification suite.
    """
    a, b, c = a % p, b % p, c % p
    neg_lambdas = (
        _frac((a - b) * (a - c - 1), (a - b - 1) * (a - c), p),
        -_frac(a - c - 1, a - c, p),
        -_frac(a - c, a - c - 1, p),
        _frac((b - c) * (a - c - 1), (b - c - 1) * (a - c), p),
    )
    values = {}
    for gamma, nl in zip(LAMBDA_PATHS, neg_lambdas):
        if nl == Fp(0, p):
            raise GenericityViolation("kappa_min entry vanished")
        values[tuple(gamma)] = nl  # kappa_gamma = -lambda_i
    return KappaTuple(values, p)


def _row_entries(a, b, c, p):
    """The 6 nonzero rows of the surgery matrix as functions of (a, b, c)."""
    B = _frac((b - c) * (a - b - 1), (a - b) * (c + 1 - a), p)
    return {
        "B": B,
        "a23": _frac(b - c, a - c, p),
        "a34": _frac((a - b - 1) * (b - c), (b - a) * (a - c), p),
        "a45": _frac(b - c - 1, b - a, p),
        "a56": _frac((b - c - 1) * (c - a), (b - a) * (a - c - 1), p),
        "a67": _frac((a - c - 1) * (b - c), (b - a) * (a - c), p),
    }


def build_A_kappa(abc, kappa: KappaTuple) -> np.ndarray:
    """The 12 x 9 matrix of the truncated surgery map in the bases fixed by
    the path order; even rows are identically zero."""
    p = kappa.p
    a, b, c = abc
    e = _row_entries(a, b, c, p)
    l1, l2, l3, l4 = kappa.lambdas()
    A = np.zeros((12, 9), dtype=np.int64)
    rows = _odd_rows(e, (l1, l2, l3, l4), p)
    for k in range(6):
        A[2 * k] = rows[k]
    return A


def _odd_rows(e, lams, p):
    l1, l2, l3, l4 = (int(x) for x in lams)
    B = int(e["B"])
    rows = np.zeros((6, 9), dtype=np.int64)
    rows[0, 0] = rows[0, 1] = 1
    rows[0, 2:7] = B
    rows[1, 0] = l1
    rows[1, 2] = int(e["a23"])
    rows[2, 1] = l2
    rows[2, 3] = int(e["a34"])
    rows[3, 4] = int(e["a45"])
    rows[3, 7] = rows[3, 8] = 1
    rows[4, 5] = int(e["a56"])
    rows[4, 7] = l3
    rows[5, 6] = int(e["a67"])
    rows[5, 8] = l4
    return rows % p


def reduced_first_row(abc, kappa: KappaTuple) -> np.ndarray:
    """First row of the row-reduced 6 x 9 system; vanishes identically at
    kappa_min."""
    p = kappa.p
    a, b, c = abc
    e = _row_entries(a, b, c, p)
    l1, l2, l3, l4 = kappa.lambdas()
    rows = _odd_rows(e, (l1, l2, l3, l4), p)
    r = [Fp(int(x), p) for x in rows[0]]
    def addmul(target_row, scalar):
        nonlocal r
        r = [ri + Fp(int(x), p) * scalar for ri, x in zip(r, rows[target_row])]
    addmul(1, -(l1.inv()))
    addmul(2, -(l2.inv()))
    coeff = -(e["B"] / e["a45"])
    addmul(3, coeff)
    addmul(4, -coeff * (l3.inv()))
    addmul(5, -coeff * (l4.inv()))
    return np.array([int(x) for x in r], dtype=np.int64)


def surgery_composites(abc, kappa: KappaTuple):
    """For each of the 12 (gamma > beta) pairs decide whether the composite
    into the surgery cokernel is nonzero: the pair's unit target must be
    outside the column space of the 6 x 9 system."""
    p = kappa.p
    a, b, c = abc
    e = _row_entries(a, b, c, p)
    rows = _odd_rows(e, kappa.lambdas(), p)
    out = {}
    betas = enumerate_paths(2)
    for bi, beta in enumerate(betas):
        target = np.zeros(6, dtype=np.int64)
        target[bi] = 1
        solvable = fp_solve(rows, target, p) is not None
        for gamma in enumerate_paths(3):
            if path_le(beta, gamma):
                out[(tuple(gamma), tuple(beta))] = not solvable
    return out
