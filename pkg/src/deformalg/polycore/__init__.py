"""Exact multivariate polynomial algebra over prime fields.

The hot reduction kernels are numba-compiled by default; set
DEFORMALG_BACKEND=numpy to force the pure-numpy fallback.
"""

from .backend import BACKEND_NAME, get_backend
from .cache import GBCache
from .config import set_cache, set_limits
from .groebner import GBLimits, Inconclusive, buchberger, normal_form
from .ideals import (Ideal, ImproperIdeal, MissingGB, maximal_ideal,
                     min_gens_count, nf_linear_solve)
from .linalg import inv_mod, nullspace, rank, rref, solve
from .orders import MonomialOrder, elim, grevlex, lex
from .parse import ParseError, parse_poly
from .ring import Polynomial, Ring, is_prime


class Fp:
    """An element of F_p; exact arithmetic with invertibility checks."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError("field mismatch")
            return other.value
        return other % self.p

    def __add__(self, other):
        return Fp(self.value + self._coerce(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return Fp(self.value - self._coerce(other), self.p)

    def __rsub__(self, other):
        return Fp(self._coerce(other) - self.value, self.p)

    def __mul__(self, other):
        return Fp(self.value * self._coerce(other), self.p)

    __rmul__ = __mul__

    def inv(self):
        return Fp(inv_mod(self.value, self.p), self.p)

    def __truediv__(self, other):
        o = Fp(self._coerce(other), self.p)
        return self * o.inv()

    def __neg__(self):
        return Fp(-self.value, self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


__all__ = [
    "BACKEND_NAME", "Fp", "GBCache", "GBLimits", "Ideal", "ImproperIdeal",
    "Inconclusive", "MissingGB", "MonomialOrder", "ParseError", "Polynomial",
    "Ring", "buchberger", "elim", "get_backend", "grevlex", "inv_mod",
    "is_prime", "lex", "maximal_ideal", "min_gens_count", "nf_linear_solve",
    "normal_form", "nullspace", "parse_poly", "rank", "rref", "set_cache",
    "set_limits", "solve",
]
