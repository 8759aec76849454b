"""Rings F_p[x_1, ..., x_n] and immutable sparse polynomials."""

from __future__ import annotations

import numpy as np

from .linalg import inv_mod
from .orders import MonomialOrder, grevlex, sort_terms


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Ring:
    """A polynomial ring over F_p with a fixed, totally ordered variable list.

    `unit_vars` flags variables that stand in for units of the ambient local
    ring; they carry no special arithmetic here (unit-ness is handled by the
    callers via saturation or by the 1 + x substitution at instantiation).
    """

    def __init__(self, p: int, names, unit_vars=()):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        unknown = set(unit_vars) - set(names)
        if unknown:
            raise ValueError(f"unit_vars not among names: {sorted(unknown)}")
        self.p = p
        self.names = names
        self.n = len(names)
        self.index = {nm: i for i, nm in enumerate(names)}
        self.unit_vars = frozenset(unit_vars)
        self.canon: MonomialOrder = grevlex(self.n)
        self._canon_K = self.canon.key_matrix()

    def __repr__(self):
        return f"Ring(F_{self.p}[{', '.join(self.names)}])"

    def __eq__(self, other):
        return (isinstance(other, Ring) and self.p == other.p
                and self.names == other.names)

    def __hash__(self):
        return hash((self.p, self.names))

    def signature(self) -> str:
        return f"F{self.p}[{','.join(self.names)}]"

    # -- constructors -------------------------------------------------

    def poly(self, exps, coeffs) -> "Polynomial":
        return Polynomial(self, np.asarray(exps, dtype=np.int64).reshape(-1, self.n),
                          np.asarray(coeffs, dtype=np.int64))

    def zero(self) -> "Polynomial":
        return self.poly(np.empty((0, self.n)), np.empty(0))

    def const(self, c: int) -> "Polynomial":
        if c % self.p == 0:
            return self.zero()
        return self.poly(np.zeros((1, self.n)), [c])

    def one(self) -> "Polynomial":
        return self.const(1)

    def var(self, name: str) -> "Polynomial":
        e = np.zeros((1, self.n), dtype=np.int64)
        e[0, self.index[name]] = 1
        return self.poly(e, [1])

    def gens(self):
        return [self.var(nm) for nm in self.names]

    def from_dict(self, d) -> "Polynomial":
        """d maps exponent tuples to integer coefficients."""
        if not d:
            return self.zero()
        exps = np.array(list(d.keys()), dtype=np.int64)
        coeffs = np.array(list(d.values()), dtype=np.int64)
        return self.poly(exps, coeffs)

    def maximal_ideal_gens(self):
        """Generators of the ideal of the origin: all variables."""
        return self.gens()

    def extend(self, extra_names, prepend=False) -> "Ring":
        names = tuple(extra_names) + self.names if prepend else self.names + tuple(extra_names)
        return Ring(self.p, names, self.unit_vars)

    def inject(self, poly: "Polynomial", target: "Ring") -> "Polynomial":
        """Re-express poly in a ring whose variables contain this ring's."""
        col = np.array([target.index[nm] for nm in self.names], dtype=np.int64)
        exps = np.zeros((poly.nterms, target.n), dtype=np.int64)
        exps[:, col] = poly.exps
        return target.poly(exps, poly.coeffs)


class Polynomial:
    """Immutable sparse polynomial; terms stored sorted by the ring's
    canonical order, coefficients normalized into [1, p)."""

    __slots__ = ("ring", "exps", "coeffs", "_hash")

    def __init__(self, ring: Ring, exps: np.ndarray, coeffs: np.ndarray):
        p = ring.p
        coeffs = coeffs % p
        keep = coeffs != 0
        if not keep.all():
            exps, coeffs = exps[keep], coeffs[keep]
        if exps.shape[0] > 1:
            # combine duplicate monomials
            order = np.lexsort(exps.T)
            exps, coeffs = exps[order], coeffs[order]
            boundary = np.ones(exps.shape[0], dtype=bool)
            boundary[1:] = np.any(exps[1:] != exps[:-1], axis=1)
            idx = np.nonzero(boundary)[0]
            coeffs = np.add.reduceat(coeffs, idx) % p
            exps = exps[idx]
            keep = coeffs != 0
            exps, coeffs = exps[keep], coeffs[keep]
            exps, coeffs, _ = sort_terms(exps, coeffs, ring._canon_K)
        self.ring = ring
        self.exps = np.ascontiguousarray(exps, dtype=np.int64)
        self.coeffs = np.ascontiguousarray(coeffs, dtype=np.int64)
        self.exps.setflags(write=False)
        self.coeffs.setflags(write=False)
        self._hash = None

    # -- basic queries -------------------------------------------------

    @property
    def nterms(self) -> int:
        return self.exps.shape[0]

    def is_zero(self) -> bool:
        return self.nterms == 0

    def is_constant(self) -> bool:
        return self.nterms == 0 or (self.nterms == 1 and not self.exps.any())

    def constant_term(self) -> int:
        mask = ~self.exps.any(axis=1)
        where = np.nonzero(mask)[0]
        return int(self.coeffs[where[0]]) if where.size else 0

    def total_degree(self) -> int:
        if self.is_zero():
            return -1
        return int(self.exps.sum(axis=1).max())

    def variables(self):
        used = np.nonzero(self.exps.any(axis=0))[0] if self.nterms else []
        return [self.ring.names[i] for i in used]

    def sorted_arrays(self, K: np.ndarray):
        """(exps, keys, coeffs) sorted descending under key matrix K."""
        e, c, k = sort_terms(self.exps, self.coeffs, K)
        return e, k, c

    def lead(self, K: np.ndarray):
        """(lead exponent row, lead coefficient) under key matrix K."""
        e, k, c = self.sorted_arrays(K)
        return e[0], int(c[0])

    # -- arithmetic ----------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        self._check(other)
        return Polynomial(self.ring,
                          np.concatenate([self.exps, other.exps]),
                          np.concatenate([self.coeffs, other.coeffs]))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, self.exps, (-self.coeffs) % self.ring.p)

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(self.ring, self.exps, self.coeffs * (other % self.ring.p))
        self._check(other)
        if self.is_zero() or other.is_zero():
            return self.ring.zero()
        m, k = self.nterms, other.nterms
        exps = (self.exps[:, None, :] + other.exps[None, :, :]).reshape(m * k, -1)
        coeffs = (self.coeffs[:, None] * other.coeffs[None, :]).reshape(m * k) % self.ring.p
        return Polynomial(self.ring, exps, coeffs)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def monic(self, K: np.ndarray | None = None):
        """Scale so the leading coefficient (under K, default canonical) is 1."""
        if self.is_zero():
            return self
        if K is None:
            K = self.ring._canon_K
        _, lc = self.lead(K)
        if lc == 1:
            return self
        return self * inv_mod(lc, self.ring.p)

    def substitute(self, assignments: dict):
        """Replace variables by polynomials (or ints); others unchanged."""
        ring = self.ring
        out = ring.zero()
        polys = {}
        for nm, val in assignments.items():
            polys[ring.index[nm]] = ring.const(val) if isinstance(val, int) else val
        for t in range(self.nterms):
            term = ring.const(int(self.coeffs[t]))
            e = np.zeros(ring.n, dtype=np.int64)
            for i in range(ring.n):
                ei = int(self.exps[t, i])
                if ei == 0:
                    continue
                if i in polys:
                    term = term * polys[i] ** ei
                else:
                    e[i] = ei
            out = out + term * ring.poly(e.reshape(1, -1), [1])
        return out

    # -- comparisons and rendering --------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial) or self.ring != other.ring:
            return NotImplemented
        return (self.exps.shape == other.exps.shape
                and np.array_equal(self.exps, other.exps)
                and np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.exps.tobytes(), self.coeffs.tobytes()))
        return self._hash

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for t in range(self.nterms):
            c = int(self.coeffs[t])
            factors = []
            for i in range(self.ring.n):
                e = int(self.exps[t, i])
                if e == 1:
                    factors.append(self.ring.names[i])
                elif e > 1:
                    factors.append(f"{self.ring.names[i]}^{e}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts)

    __repr__ = __str__
