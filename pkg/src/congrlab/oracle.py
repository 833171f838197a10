"""Independent exact-rational ground truth.

Bernoulli and Euler numbers and polynomials as exact fractions, brute-force
evaluation of every sum family at small primes, and verification of the
polynomial identities underlying the telescoping arguments, either by
multipoint evaluation or by full coefficient expansion.

Convention: B_1 = -1/2, the one for which B_n(x+1) - B_n(x) = n x**(n-1).
The opposite convention flips odd-degree polynomial values, so everything in
this module (and its consumers) depends on this choice.

The number caches are per-process; build them before sharing across threads.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import BoundExceeded, NotPIntegral
from .modring import PrimePower, Rational, Residue, is_prime
from .sums import WeightKind

#: Default ceiling for exact Bernoulli/Euler indices; degree phi(13**2) - 1
#: = 155 is the largest the oracle-agreement checks need.
DEGREE_BOUND = 200

_BERNOULLI: list[Fraction] = [Fraction(1)]
_EULER: list[Fraction] = [Fraction(1)]


def bernoulli_number_exact(n: int, bound: int = DEGREE_BOUND) -> Fraction:
    """Exact B_n from the recurrence Sum_{k<=n} C(n+1,k) B_k = 0."""
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    if n > bound:
        raise BoundExceeded(f"B_{n} is past the bound {bound}")
    while len(_BERNOULLI) <= n:
        m = len(_BERNOULLI)
        acc = Fraction(0)
        c = 1  # C(m+1, k)
        for k in range(m):
            acc += c * _BERNOULLI[k]
            c = c * (m + 1 - k) // (k + 1)
        _BERNOULLI.append(-acc / (m + 1))
    return _BERNOULLI[n]


def euler_number_exact(n: int, bound: int = DEGREE_BOUND) -> Fraction:
    """Exact E_n; zero at odd n, otherwise Sum_{k<=n/2} C(n,2k) E_2k = 0."""
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    if n > bound:
        raise BoundExceeded(f"E_{n} is past the bound {bound}")
    if n % 2:
        return Fraction(0)
    half = n // 2
    while len(_EULER) <= half:
        m = 2 * len(_EULER)
        acc = Fraction(0)
        c = 1  # C(m, 2k), stepped two at a time
        for k in range(m // 2):
            acc += c * _EULER[k]
            c = c * (m - 2 * k) * (m - 2 * k - 1) // ((2 * k + 1) * (2 * k + 2))
        _EULER.append(-acc)
    return _EULER[half]


def bernoulli_poly_eval_exact(n: int, x: Rational, bound: int = DEGREE_BOUND) -> Fraction:
    """Exact B_n(x) = Sum C(n,k) B_k x**(n-k)."""
    if n > bound:
        raise BoundExceeded(f"degree {n} is past the bound {bound}")
    bernoulli_number_exact(n, bound)
    x = Fraction(x)
    powers = [Fraction(1)]
    for _ in range(n):
        powers.append(powers[-1] * x)
    acc = Fraction(0)
    c = 1
    for k in range(n + 1):
        acc += c * _BERNOULLI[k] * powers[n - k]
        if k < n:
            c = c * (n - k) // (k + 1)
    return acc


def euler_poly_eval_exact(n: int, x: Rational, bound: int = DEGREE_BOUND) -> Fraction:
    """Exact E_n(x) = Sum C(n,k) (E_k / 2**k) (x - 1/2)**(n-k)."""
    if n > bound:
        raise BoundExceeded(f"degree {n} is past the bound {bound}")
    euler_number_exact(n - n % 2, bound)
    y = Fraction(x) - Fraction(1, 2)
    powers = [Fraction(1)]
    for _ in range(n):
        powers.append(powers[-1] * y)
    acc = Fraction(0)
    c = 1
    for k in range(n + 1):
        ek = _EULER[k // 2] if k % 2 == 0 else 0
        if ek:
            acc += c * ek * powers[n - k] / 2 ** k
        if k < n:
            c = c * (n - k) // (k + 1)
    return acc


def reduce_mod(q: Rational, m: PrimePower) -> Residue:
    """Residue of an exact rational modulo p**e; NotPIntegral when p divides its denominator."""
    q = Fraction(q)
    if gcd(q.denominator, m.p) != 1:
        raise NotPIntegral(f"{q} is not p-integral at {m.p}")
    return Residue(q.numerator * pow(q.denominator, -1, m.m), m)


@lru_cache(maxsize=32)
def _harmonic_exact(n: int) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    H = [Fraction(0)]
    H2 = [Fraction(0)]
    for k in range(1, n + 1):
        H.append(H[-1] + Fraction(1, k))
        H2.append(H2[-1] + Fraction(1, k * k))
    return tuple(H), tuple(H2)


def oracle_sum_exact(a: Rational, weight: WeightKind, p: int) -> Fraction:
    """Brute-force exact value of the weighted generic sum over k < p.

    Cost grows with p (exact products of p rationals); intended for the small
    primes where the modular evaluators are cross-checked.
    """
    if not (p > 3 and is_prime(p)):
        raise ValueError(f"need a prime > 3, got {p}")
    a = Fraction(a)
    if a.denominator % p == 0:
        raise NotPIntegral(f"argument {a} is not p-integral at {p}")
    H, H2 = _harmonic_exact(p - 1)
    t = Fraction(1)
    total = Fraction(0)
    for k in range(p):
        if k:
            t = t * (a - k) * (1 - a - k) / (k * k)
        if weight is WeightKind.ONE:
            w = Fraction(1)
        elif weight is WeightKind.H:
            w = H[k]
        elif weight is WeightKind.H2:
            w = H2[k]
        elif weight is WeightKind.H_OVER_K:
            if k == 0:
                continue
            w = H[k] / k
        elif weight is WeightKind.INV_2K1:
            w = Fraction(1, 2 * k + 1)
        elif weight is WeightKind.H2_OVER_2K1:
            w = H2[k] / (2 * k + 1)
        else:  # pragma: no cover - exhaustive over WeightKind
            raise ValueError(f"unknown weight {weight!r}")
        total += t * w
    return total


# ---------------------------------------------------------------------------
# polynomial identities

class RationalPolynomial:
    """Dense polynomial over exact rationals, lowest degree first."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients=()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def evaluate(self, x: Rational) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def _coerce(self, other):
        if isinstance(other, RationalPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial((other,))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial(tuple(c * other for c in self.coefficients))
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return RationalPolynomial(tuple(c / scalar for c in self.coefficients))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"RationalPolynomial({list(self.coefficients)!r})"


class IdentityKind(Enum):
    LEMMA21 = "lemma21"
    LEMMA22 = "lemma22"
    EQ34 = "eq34"
    EQ35 = "eq35"
    ANDERSEN36 = "andersen36"
    EQ32 = "eq32"
    EQ33 = "eq33"


IDENTITY_SIZE_BOUNDS = {
    IdentityKind.LEMMA21: 60,
    IdentityKind.LEMMA22: 60,
    IdentityKind.EQ34: 60,
    IdentityKind.EQ35: 60,
    IdentityKind.ANDERSEN36: 30,
    IdentityKind.EQ32: 40,
    IdentityKind.EQ33: 40,
}

_IDENTITY_MIN_SIZE = {
    IdentityKind.LEMMA21: 1,
    IdentityKind.LEMMA22: 1,
    IdentityKind.EQ34: 1,
    IdentityKind.EQ35: 0,
    IdentityKind.ANDERSEN36: 0,
    IdentityKind.EQ32: 0,
    IdentityKind.EQ33: 0,
}


def identity_arity(kind: IdentityKind) -> int:
    return 2 if kind is IdentityKind.ANDERSEN36 else 1


def _binom_prefix(base, upto: int) -> list:
    """[C(base, 0), ..., C(base, upto)] for a rational point or a polynomial."""
    out = [Fraction(1)]
    cur = Fraction(1)
    for j in range(1, upto + 1):
        cur = cur * (base - (j - 1)) / Fraction(j)
        out.append(cur)
    return out


def _identity_sides(kind: IdentityKind, size: tuple[int, ...], x):
    """Both sides of the identity, evaluated in whatever algebra x lives in.

    The two sides with 1/x**2 terms are returned in denominator-cleared form
    (multiplied through by x**2).
    """
    if kind is IdentityKind.LEMMA21:
        (k,) = size
        A = _binom_prefix(-x, k)
        B = _binom_prefix(x - 1, k)
        C = _binom_prefix(x, k)
        D = _binom_prefix(-x - 1, k)
        lhs = A[k] * B[k] + C[k] * D[k]
        rhs = 2 * (B[k] * D[k] - B[k - 1] * D[k - 1])
        return lhs, rhs
    if kind is IdentityKind.LEMMA22:
        (n,) = size
        C = _binom_prefix(x, n)
        A = _binom_prefix(-x, n)
        x2 = x * x
        lhs = sum((k * k - k * x2) * C[k] * A[k] for k in range(1, n + 1))
        return lhs / Fraction(n), (n * n - x2) * C[n] * A[n]
    if kind is IdentityKind.EQ34:
        (k,) = size
        A = _binom_prefix(-x, k)
        B = _binom_prefix(x - 1, k)
        C = _binom_prefix(x, k)
        D = _binom_prefix(-x - 1, k)
        lhs = (2 * x + 1) * C[k] * D[k] - (2 * x - 1) * A[k] * B[k]
        rhs = 2 * (2 * k + 1) * (B[k] * D[k] - B[k - 1] * D[k - 1])
        return lhs, rhs
    if kind is IdentityKind.EQ35:
        (n,) = size
        C = _binom_prefix(x, n)
        A = _binom_prefix(-x, n)
        B = _binom_prefix(x - 1, n)
        D = _binom_prefix(-x - 1, n)
        lhs = sum(C[k] * A[k] for k in range(n + 1))
        return lhs, B[n] * D[n]
    if kind is IdentityKind.ANDERSEN36:
        m, n = size
        C = _binom_prefix(x, n)
        E = _binom_prefix(-x, m)
        B = _binom_prefix(x - 1, n)
        lhs = m * sum(C[k] * E[m - k] for k in range(n + 1))
        rhs = (m - n) * B[n] * E[m - n]
        return lhs, rhs
    if kind in (IdentityKind.EQ32, IdentityKind.EQ33):
        (n,) = size
        _, H2 = _harmonic_exact(n)
        A = _binom_prefix(-x, n)       # C(-x, j)
        B = _binom_prefix(x - 1, n)    # C(x-1, j)
        C = _binom_prefix(x, n)        # C(x, j) = C((x+1)-1, j)
        D = _binom_prefix(-x - 1, n)   # C(-(x+1), j)
        x2 = x * x
        rhs = 2 * B[n] * D[n] * (H2[n] * x2 + 1) - 2
        if kind is IdentityKind.EQ32:
            w_at_x = sum(A[j] * B[j] * H2[j] for j in range(n + 1))
            w_at_x1 = sum(D[j] * C[j] * H2[j] for j in range(n + 1))
            return x2 * (w_at_x + w_at_x1), rhs
        w_at_x = sum(A[j] * B[j] * H2[j] / (2 * j + 1) for j in range(n + 1))
        w_at_x1 = sum(D[j] * C[j] * H2[j] / (2 * j + 1) for j in range(n + 1))
        return x2 * ((2 * x + 1) * w_at_x1 - (2 * x - 1) * w_at_x), rhs
    raise ValueError(f"unknown identity {kind!r}")


def _identity_degree(kind: IdentityKind, size: tuple[int, ...]) -> int:
    if kind is IdentityKind.LEMMA21:
        return 2 * size[0]
    if kind is IdentityKind.LEMMA22:
        return 2 * size[0] + 2
    if kind is IdentityKind.EQ34:
        return 2 * size[0] + 1
    if kind is IdentityKind.EQ35:
        return 2 * size[0]
    if kind is IdentityKind.ANDERSEN36:
        return size[0]
    if kind is IdentityKind.EQ32:
        return 2 * size[0] + 2
    return 2 * size[0] + 3


def verify_poly_identity(kind: IdentityKind, *size: int, method: str = "points") -> bool:
    """True iff the identity holds exactly at the given size.

    "points" evaluates both sides at degree + 2 rational points starting at
    x = 101; "coefficients" (sizes <= 10) expands both sides as polynomials
    and compares them coefficient by coefficient.
    """
    if len(size) != identity_arity(kind):
        raise ValueError(f"{kind.value} takes {identity_arity(kind)} size parameter(s)")
    bound = IDENTITY_SIZE_BOUNDS[kind]
    if any(s > bound for s in size):
        raise BoundExceeded(f"{kind.value} size {size} is past the bound {bound}")
    if any(s < _IDENTITY_MIN_SIZE[kind] for s in size):
        raise ValueError(f"{kind.value} size {size} is below the minimum")
    if kind is IdentityKind.ANDERSEN36 and size[0] < size[1]:
        raise ValueError(f"{kind.value} needs m >= n, got {size}")
    if method == "coefficients":
        if any(s > 10 for s in size):
            raise BoundExceeded("coefficient expansion is limited to sizes <= 10")
        x = RationalPolynomial((0, 1))
        lhs, rhs = _identity_sides(kind, size, x)
        return lhs == rhs
    if method != "points":
        raise ValueError(f"unknown method {method!r}")
    points = _identity_degree(kind, size) + 2
    for i in range(points):
        lhs, rhs = _identity_sides(kind, size, Fraction(101 + i))
        if lhs != rhs:
            return False
    return True


def iter_identity_sizes(kind: IdentityKind, cap: int | None = None):
    """All admissible size tuples for the kind, up to its bound (or cap)."""
    bound = IDENTITY_SIZE_BOUNDS[kind]
    if cap is not None:
        bound = min(bound, cap)
    lo = _IDENTITY_MIN_SIZE[kind]
    if kind is IdentityKind.ANDERSEN36:
        for m in range(lo, bound + 1):
            for n in range(m + 1):
                yield (m, n)
    else:
        for s in range(lo, bound + 1):
            yield (s,)
