"""Extended affine Weyl group of GL_3: lengths, the p-dot action, alcove
depth predicates, type-set classification, and tame-type exponent triples."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

# positive roots of GL_3 as index pairs (i, j) <-> e_i - e_j, i < j
POSITIVE_ROOTS = ((0, 1), (1, 2), (0, 2))
ETA = (2, 1, 0)

# permutations act on positions: w sends position i to w[i], so
# (w . lam)[w[i]] = lam[i].
IDENTITY = (0, 1, 2)
ALPHA = (1, 0, 2)   # simple reflection in the first two coordinates
BETA = (0, 2, 1)    # simple reflection in the last two coordinates
W0 = (2, 1, 0)      # longest element

S3 = tuple(sorted(permutations(range(3))))


def perm_mul(u, v):
    """(u v)(i) = u(v(i))."""
    return tuple(u[v[i]] for i in range(3))


def perm_inv(u):
    out = [0, 0, 0]
    for i in range(3):
        out[u[i]] = i
    return tuple(out)


def perm_sign(u):
    s = 1
    for i in range(3):
        for j in range(i + 1, 3):
            if u[i] > u[j]:
                s = -s
    return s


def act(w, lam):
    """Standard (non-dot) action of w in S_3 on a weight triple."""
    out = [0, 0, 0]
    for i in range(3):
        out[w[i]] = lam[i]
    return tuple(out)


def pairing(lam, root):
    i, j = root
    return lam[i] - lam[j]


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def w0_eta():
    return act(W0, ETA)


@dataclass(frozen=True)
class AffineWeylElt:
    """w . t_nu in the extended affine Weyl group of GL_3."""

    w: tuple
    nu: tuple

    def __mul__(self, other: "AffineWeylElt") -> "AffineWeylElt":
        # (w1 t_a)(w2 t_b) = w1 w2 t_{w2^-1 a + b}
        w = perm_mul(self.w, other.w)
        nu = vec_add(act(perm_inv(other.w), self.nu), other.nu)
        return AffineWeylElt(w, nu)

    def inverse(self) -> "AffineWeylElt":
        wi = perm_inv(self.w)
        return AffineWeylElt(wi, tuple(-x for x in act(self.w, self.nu)))

    def is_identity(self) -> bool:
        return self.w == IDENTITY and self.nu == (0, 0, 0)

    def translation_part(self):
        """nu' with self = t_{nu'} w (translation written on the left)."""
        return act(self.w, self.nu)

    def length(self) -> int:
        """l(t_nu w) = sum over positive roots of |<nu, a^> + [w^-1 a < 0]|."""
        nu = self.translation_part()
        winv = perm_inv(self.w)
        total = 0
        for (i, j) in POSITIVE_ROOTS:
            # w^-1(e_i - e_j) = e_{winv[i]} - e_{winv[j]} is negative iff
            # winv[i] > winv[j]
            neg = 1 if winv[i] > winv[j] else 0
            total += abs(pairing(nu, (i, j)) + neg)
        return total

    def p_dot(self, mu, p: int):
        """t_lam w . mu = p lam + w(mu + eta) - eta."""
        lam = self.translation_part()
        out = vec_add(tuple(p * x for x in lam), act(self.w, vec_add(mu, ETA)))
        return vec_sub(out, ETA)

    def act_weight(self, lam):
        """Standard (non-dot) affine action: w(lam + nu)."""
        return act(self.w, vec_add(lam, self.nu))

    def __repr__(self):
        return f"[{self.w} t_{self.nu}]"


def translation(nu) -> AffineWeylElt:
    return AffineWeylElt(IDENTITY, tuple(nu))


def weyl(w) -> AffineWeylElt:
    return AffineWeylElt(tuple(w), (0, 0, 0))


# affine reflection completing alpha, beta to a generating set; chosen as
# t_{-theta} s_theta so that (alpha beta alpha gamma) t_1 = t_eta
GAMMA = AffineWeylElt(W0, (1, 0, -1))

T_ONE = translation((1, 1, 1))
T_W0ETA = translation(w0_eta())

# the two families of type-set labels allowed at an embedding
CASE_I_ELEMENTS = (
    T_ONE,
    weyl(perm_mul(ALPHA, BETA)) * T_ONE,
    weyl(perm_mul(BETA, ALPHA)) * T_ONE,
    weyl(perm_mul(perm_mul(ALPHA, BETA), ALPHA)) * T_ONE,
    weyl(perm_mul(perm_mul(ALPHA, BETA), ALPHA)) * GAMMA * T_ONE,
)
CASE_I_PRIME_ELEMENTS = (
    T_W0ETA,
    T_W0ETA * weyl(ALPHA),
    T_W0ETA * weyl(BETA),
    T_W0ETA * weyl(W0),
)


def hypothesis_T_case(Tj) -> str:
    """Classify a nonempty set of affine Weyl elements into the allowed
    per-embedding configurations: 'I', "I'", 'II' (singleton of length
    >= 2), or 'fail'."""
    elts = list(Tj)
    if not elts:
        raise ValueError("empty type set")
    if all(x in CASE_I_ELEMENTS for x in elts):
        return "I"
    if all(x in CASE_I_PRIME_ELEMENTS for x in elts):
        return "I'"
    if len(elts) == 1 and elts[0].length() >= 2:
        return "II"
    return "fail"


def is_deep(mu, N: int, p: int) -> bool:
    """mu (tuple of triples, or one triple) is N-deep in the base alcove."""
    if mu and isinstance(mu[0], int):
        mu = (mu,)
    for mj in mu:
        lam = vec_add(mj, ETA)
        for root in POSITIVE_ROOTS:
            v = pairing(lam, root)
            if not (N < v < p - N):
                return False
    return True


def _in_restricted_dominant(x: AffineWeylElt) -> bool:
    """Whether x . C0 is a p-restricted dominant alcove (p-independent)."""
    p = 9 * 64  # denominator-free arithmetic for the interior point below
    mu0 = (Fraction(5 * p, 9) - 2, Fraction(3 * p, 9) - 1, Fraction(p, 9))
    img = x.p_dot(mu0, p)
    lam = vec_add(img, ETA)
    for root in ((0, 1), (1, 2)):
        v = pairing(lam, root)
        if not (0 < v < p):
            return False
    return pairing(lam, (0, 2)) > 0


def restricted_presentation(w) -> tuple:
    """The unique (up to center) eps with w t_eps in the restricted dominant
    set; returned normalized with last coordinate 0."""
    for a in range(-3, 4):
        for b in range(-3, 4):
            eps = (a, b, 0)
            if _in_restricted_dominant(AffineWeylElt(tuple(w), eps)):
                return eps
    raise RuntimeError(f"no restricted presentation found for {w}")


@dataclass(frozen=True)
class PresentationSpec:
    """A lowest-alcove presentation: s in S_3^f and mu with mu N-deep.

    The derived (a, b, c) triple at embedding j depends on the shift
    convention of the table row consuming it.
    """

    f: int
    p: int
    s: tuple          # f permutations
    mu: tuple         # f weight triples
    depth: int = 6

    def __post_init__(self):
        if len(self.s) != self.f or len(self.mu) != self.f:
            raise ValueError("s and mu must have one entry per embedding")

    def validate(self, N: int | None = None):
        if not is_deep(self.mu, self.depth if N is None else N, self.p):
            raise ValueError(f"mu is not {self.depth}-deep for p = {self.p}")
        for j in range(self.f):
            a, b, c = self.abc(j)
            for d in (a - b, b - c, a - c):
                if d % self.p in (0, 1, self.p - 1):
                    raise ValueError(f"genericity violated at embedding {j}")
        return self

    def abc(self, j: int, shift=(1, 1, 1)):
        """(a, b, c) = -(s_j^-1(mu_j + eta) - shift) mod p."""
        v = act(perm_inv(self.s[j]), vec_add(self.mu[j], ETA))
        return tuple((-(x - sh)) % self.p for x, sh in zip(v, shift))


def tame_type_exponents(spec: PresentationSpec):
    """Exponent triple a'^(0) of the associated tame type, as residues
    modulo p^(6f) - 1, via the twisted orbit recursion."""
    f, p = spec.f, spec.p
    alphas = []
    for jp in range(6 * f):
        v = vec_add(spec.mu[(6 * f - jp) % f], ETA)
        for k in range(1, jp + 1):
            v = act(perm_inv(spec.s[(6 * f - k) % f]), v)
        alphas.append(v)
    mod = p ** (6 * f) - 1
    out = [0, 0, 0]
    for i in range(6 * f):
        for k in range(3):
            out[k] = (out[k] + alphas[i][k] * p ** i) % mod
    return tuple(out)


def sample_generic_spec(f: int, p: int, seed: int, depth: int = 6) -> PresentationSpec:
    """Reproducibly draw (s, mu) with mu depth-deep and generic (a, b, c);
    rejection sampling with a fixed-seed RNG."""
    rng = random.Random(seed)
    for _ in range(10000):
        s = tuple(rng.choice(S3) for _ in range(f))
        mu = []
        for _ in range(f):
            x1 = rng.randrange(depth + 1, p - depth)
            x2 = rng.randrange(depth + 1, p - depth)
            lo = sorted([x1, x2])
            lam = (lo[1], lo[0], 0)
            mu.append(vec_sub(lam, ETA))
        cand = PresentationSpec(f, p, s, tuple(mu), depth)
        try:
            cand.validate()
            return cand
        except ValueError:
            continue
    raise RuntimeError("could not sample a generic presentation")
