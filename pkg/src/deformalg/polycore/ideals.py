"""Ideals with cached reduced Groebner bases and the derived operations:
membership, sum, product, intersection, saturation, Krull dimension,
minimal-generator counting, and normal-form linear solves."""

from __future__ import annotations

import numpy as np

from . import config
from .groebner import GBLimits, buchberger, normal_form
from .linalg import rank as fp_rank
from .linalg import solve as fp_solve
from .orders import MonomialOrder, elim, grevlex
from .ring import Polynomial, Ring


class MissingGB(RuntimeError):
    """Raised when a Groebner basis is required but auto-compute is off."""


class ImproperIdeal(ValueError):
    """Raised when an operation requires a proper ideal but got (1)."""


class Ideal:
    def __init__(self, ring: Ring, gens):
        self.ring = ring
        self.gens = tuple(g for g in gens if not g.is_zero())
        for g in self.gens:
            if g.ring != ring:
                raise ValueError("generator in wrong ring")
        self._gb = {}

    def __repr__(self):
        return f"Ideal({len(self.gens)} gens in {self.ring!r})"

    def default_order(self) -> MonomialOrder:
        return grevlex(self.ring.n)

    # -- Groebner bases -------------------------------------------------

    def groebner(self, order: MonomialOrder | None = None,
                 limits: GBLimits | None = None, auto_compute: bool = True):
        order = order or self.default_order()
        tag = order.tag()
        if tag in self._gb:
            return self._gb[tag]
        if not auto_compute:
            raise MissingGB("no Groebner basis computed for this order")
        cache = config.cache
        if cache is not None:
            hit = cache.get(self.ring, order, self.gens)
            if hit is not None:
                self._gb[tag] = hit
                return hit
        gb = buchberger(self.gens, order, limits or config.limits)
        if cache is not None:
            cache.put(self.ring, order, self.gens, gb)
        self._gb[tag] = gb
        return gb

    def normal_form(self, f: Polynomial, order: MonomialOrder | None = None,
                    auto_compute: bool = True) -> Polynomial:
        order = order or self.default_order()
        gb = self.groebner(order, auto_compute=auto_compute)
        return normal_form(f, gb, order)

    def contains(self, f: Polynomial, order: MonomialOrder | None = None) -> bool:
        if f.is_zero():
            return True
        return self.normal_form(f, order).is_zero()

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def equals(self, other: "Ideal") -> bool:
        return self.contains_ideal(other) and other.contains_ideal(self)

    def is_proper(self) -> bool:
        return not any(g.is_constant() and not g.is_zero() for g in self.groebner())

    # -- constructions ---------------------------------------------------

    def __add__(self, other: "Ideal") -> "Ideal":
        if self.ring != other.ring:
            raise ValueError("ideal sum across rings")
        return Ideal(self.ring, self.gens + other.gens)

    def product(self, other: "Ideal") -> "Ideal":
        if self.ring != other.ring:
            raise ValueError("ideal product across rings")
        return Ideal(self.ring, [a * b for a in self.gens for b in other.gens])

    def intersect(self, other: "Ideal", verify: bool = True) -> "Ideal":
        """I  cap  J via a single tag variable t: eliminate t from
        t*I + (1-t)*J.  Every returned generator is re-checked for
        membership in both inputs."""
        if self.ring != other.ring:
            raise ValueError("intersection across rings")
        ring = self.ring
        tag = _fresh_name(ring, "t_")
        ext = ring.extend([tag], prepend=True)
        t = ext.var(tag)
        one = ext.one()
        lifted = [t * ring.inject(g, ext) for g in self.gens]
        lifted += [(one - t) * ring.inject(g, ext) for g in other.gens]
        gens = _eliminate(lifted, ext, [tag], ring)
        result = Ideal(ring, gens)
        if verify:
            for g in result.gens:
                if not (self.contains(g) and other.contains(g)):
                    raise AssertionError(
                        "intersection post-check failed; this indicates a bug")
        return result

    def saturate(self, f: Polynomial) -> "Ideal":
        """I : f^infinity via the Rabinowitsch trick."""
        if f.is_zero():
            raise ValueError("cannot saturate at 0")
        ring = self.ring
        zname = _fresh_name(ring, "z_")
        ext = ring.extend([zname], prepend=True)
        z = ext.var(zname)
        lifted = [ring.inject(g, ext) for g in self.gens]
        lifted.append(z * ring.inject(f, ext) - ext.one())
        gens = _eliminate(lifted, ext, [zname], ring)
        return Ideal(ring, gens)

    def eliminate(self, names) -> "Ideal":
        """Intersection with the subring omitting `names` (returned in the
        smaller ring)."""
        ring = self.ring
        keep = [nm for nm in ring.names if nm not in set(names)]
        target = Ring(ring.p, keep, self.ring.unit_vars & set(keep))
        gens = _eliminate(list(self.gens), ring, list(names), target)
        return Ideal(target, gens)

    # -- numerical invariants ---------------------------------------------

    def dimension(self) -> int:
        """Krull dimension of ring/I: the maximum size of a variable subset
        independent modulo the initial ideal of a Groebner basis."""
        gb = self.groebner()
        if any(g.is_constant() and not g.is_zero() for g in gb):
            raise ImproperIdeal("dimension of the unit ideal")
        K = grevlex(self.ring.n).key_matrix()
        supports = []
        for g in gb:
            lm, _ = g.lead(K)
            supports.append(frozenset(int(i) for i in np.nonzero(lm)[0]))
        supports = [s for s in supports if s]
        # drop non-minimal supports
        supports = [s for s in supports
                    if not any(t < s for t in supports)]
        return _max_independent(supports, self.ring.n)


def _fresh_name(ring: Ring, prefix: str) -> str:
    k = 0
    while f"{prefix}{k}" in ring.index:
        k += 1
    return f"{prefix}{k}"


def _eliminate(gens, ext: Ring, elim_names, target: Ring):
    """Groebner-eliminate `elim_names` from gens in `ext`; re-express the
    surviving generators in `target`."""
    elim_idx = [ext.index[nm] for nm in elim_names]
    rest_idx = [i for i in range(ext.n) if i not in elim_idx]
    order = elim(ext.n, len(elim_idx), perm=tuple(elim_idx + rest_idx))
    gb = buchberger(gens, order, config.limits)
    out = []
    col = [ext.index[nm] for nm in target.names]
    for g in gb:
        if g.is_zero():
            continue
        if g.exps[:, elim_idx].any():
            continue
        out.append(target.poly(g.exps[:, col], g.coeffs))
    return out


def _max_independent(supports, n: int) -> int:
    """Largest subset of variables containing no support set entirely."""
    best = 0
    seen = set()

    def rec(S: frozenset):
        nonlocal best
        if len(S) <= best or S in seen:
            return
        seen.add(S)
        for sup in supports:
            if sup <= S:
                for v in sorted(sup):
                    rec(S - {v})
                return
        best = max(best, len(S))

    rec(frozenset(range(n)))
    return best


def maximal_ideal(ring: Ring) -> Ideal:
    return Ideal(ring, ring.gens())


def min_gens_count(I: Ideal, m: Ideal | None = None,
                   modulo: Ideal | None = None) -> int:
    """dim_F I/(m I) over the local ring at the origin; with `modulo` = I0
    the count is taken for the image of I in ring/I0 (then m I becomes
    m I + I0)."""
    ring = I.ring
    m = m or maximal_ideal(ring)
    if not m.contains_ideal(I):
        raise ValueError("I is not contained in the maximal ideal")
    mi = m.product(I)
    if modulo is not None:
        mi = mi + modulo
    sols = nf_linear_solve(list(I.gens), [], mi, want_rank=True)
    return sols


def nf_linear_solve(targets, sources, J: Ideal, order: MonomialOrder | None = None,
                    want_rank: bool = False):
    """Reduce targets and sources to normal form modulo J and solve, over
    F_p, target = sum_i x_i * source_i  in the monomial-coordinate space.

    Returns a list with one entry per target: a coefficient vector
    (np.ndarray of length len(sources)) or None when no solution exists.
    With want_rank=True, instead returns the rank of the stacked
    target-normal-form matrix (used for minimal-generator counts).
    """
    order = order or J.default_order()
    tnf = [J.normal_form(t, order) for t in targets]
    snf = [J.normal_form(s, order) for s in sources]
    monoms = {}
    for f in tnf + snf:
        for row in f.exps:
            monoms.setdefault(tuple(int(x) for x in row), len(monoms))

    def vec(f):
        v = np.zeros(max(len(monoms), 1), dtype=np.int64)
        for row, c in zip(f.exps, f.coeffs):
            v[monoms[tuple(int(x) for x in row)]] = int(c)
        return v

    p = J.ring.p
    if want_rank:
        if not tnf:
            return 0
        return fp_rank(np.array([vec(f) for f in tnf]), p)

    A = (np.array([vec(f) for f in snf]).T if snf
         else np.zeros((max(len(monoms), 1), 0), dtype=np.int64))
    out = []
    for f in tnf:
        if f.is_zero():
            out.append(np.zeros(len(sources), dtype=np.int64))
            continue
        out.append(fp_solve(A, vec(f), p))
    return out
