"""Right-hand-side machinery for the congruence checks.

Harmonic prefix tables, partial inverse-square sums in closed O(p) form,
Bernoulli/Euler polynomial values mod p and mod p**2 through power sums,
Fermat quotients, and Lucas-type sequences with their quotients.

Everything here works on raw ints internally (residues are returned wrapped).
Per-prime tables are memoized; caches are per-process, so concurrent
verification of different primes needs no coordination.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .errors import (
    BadPrime,
    IndexTermNotDivisible,
    NotCoprime,
    NotPIntegral,
    ValuationTooLow,
)
from .modring import (
    PrimePower,
    Rational,
    Residue,
    embed_raw,
    inverse_mod,
    is_prime,
    jacobi_symbol,
)


def _require_odd_prime(p: int) -> None:
    if not (isinstance(p, int) and p > 3 and is_prime(p)):
        raise BadPrime(f"need a prime > 3, got {p!r}")


@lru_cache(maxsize=256)
def inverse_range(p: int, e: int) -> tuple[int, ...]:
    """Inverses of 1..p-1 modulo p**e, index j -> j^-1; index 0 unused.

    Uses inv[j] = -(m // j) * inv[m % j]; for j < p the remainder m % j is
    automatically a unit, so the recurrence needs no gcd steps.
    """
    m = p ** e
    inv = [0] * p
    if p > 1:
        inv[1] = 1
    for j in range(2, p):
        inv[j] = (m - m // j) * inv[m % j] % m
    return tuple(inv)


@lru_cache(maxsize=256)
def inverse_squares(p: int, e: int) -> tuple[int, ...]:
    """Inverses of squares 1..(p-1)**2 modulo p**e, index j -> j^-2."""
    m = p ** e
    return tuple(v * v % m for v in inverse_range(p, e))


@dataclass(frozen=True)
class HarmonicTables:
    """Prefix tables of harmonic numbers as residues mod p**e.

    H[k] and H2[k] hold the first- and second-order harmonic numbers for
    0 <= k <= p-1, with H[0] = H2[0] = 0.
    """

    p: int
    e: int
    H: tuple[int, ...]
    H2: tuple[int, ...]


@lru_cache(maxsize=64)
def harmonic_prefixes(p: int, e: int) -> HarmonicTables:
    """Harmonic prefix tables modulo p**e in O(p) after batch inversion."""
    _require_odd_prime(p)
    if not 1 <= e <= 5:
        raise ValueError(f"exponent must be in 1..5, got {e}")
    m = p ** e
    inv = inverse_range(p, e)
    H = [0] * p
    H2 = [0] * p
    h = h2 = 0
    for k in range(1, p):
        v = inv[k]
        h = (h + v) % m
        h2 = (h2 + v * v) % m
        H[k] = h
        H2[k] = h2
    return HarmonicTables(p, e, tuple(H), tuple(H2))


@lru_cache(maxsize=16)
def _inverse_powers(p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """j -> (j**-2, j**-3) mod p**2 for 0 < j < p."""
    p2 = p * p
    inv = inverse_range(p, 2)
    inv2 = [0] * p
    inv3 = [0] * p
    for j in range(1, p):
        sq = inv[j] * inv[j] % p2
        inv2[j] = sq
        inv3[j] = sq * inv[j] % p2
    return tuple(inv2), tuple(inv3)


def inv_square_partial(m: int, p: int, e: int = 2, signed: bool = False) -> Residue:
    """Partial sum of k**-2 over 0 < k < m with p not dividing k, mod p**e.

    Unsigned sums Sum 1/k**2; signed sums Sum (-1)**(m-k)/k**2.  Splitting
    k = i*p + j and expanding 1/(i*p + j)**2 = 1/j**2 - 2*i*p/j**3 (mod p**2)
    collapses each i-range to a closed form, so a call costs O(p) however
    large m is (the evaluators need m up to about p**3).
    """
    _require_odd_prime(p)
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if e not in (1, 2):
        raise ValueError(f"exponent must be 1 or 2, got {e}")
    p2 = p * p
    inv2, inv3 = _inverse_powers(p)
    acc = 0
    for j in range(1, min(p, m)):
        top = (m - 1 - j) // p  # i ranges over 0..top
        if signed:
            count = 1 if top % 2 == 0 else 0
            i_sum = top // 2 if top % 2 == 0 else -(top + 1) // 2
            term = count * inv2[j] - 2 * p * (i_sum % p) * inv3[j]
            acc += term if j % 2 == 0 else -term
        else:
            term = (top + 1) * inv2[j] - 2 * p * (top * (top + 1) // 2 % p) * inv3[j]
            acc += term
    if signed and m % 2:
        acc = -acc
    return Residue(acc % p ** e, PrimePower(p, e))


def fermat_quotient(a: int, p: int, e: int = 1) -> Residue:
    """(a**(p-1) - 1)/p mod p**e, computed one digit above the target."""
    _require_odd_prime(p)
    if not 1 <= e <= 4:
        raise ValueError(f"exponent must be in 1..4, got {e}")
    if a % p == 0:
        raise NotCoprime(f"base {a} shares the factor {p}")
    lift = p ** (e + 1)
    v = pow(a % lift, p - 1, lift) - 1
    return Residue(v // p, PrimePower(p, e))


def bpoly_p2_value(a: Rational, p: int) -> Residue:
    """Degree p-2 Bernoulli polynomial value at a, mod p.

    Telescoping power sums give B_{p-2}(a) = -2 * H2_{<a-1>_p} (mod p).
    """
    _require_odd_prime(p)
    r1 = embed_raw(Fraction(a) - 1, p)
    tables = harmonic_prefixes(p, 1)
    return Residue(-2 * tables.H2[r1], PrimePower(p, 1))


def bpoly_p1_diff(a: Rational, p: int) -> Residue:
    """B_{p-1}(a) - B_{p-1} mod p, via -H_{<a>_p - 1} (empty sum for <a>_p = 0)."""
    _require_odd_prime(p)
    r = embed_raw(a, p)
    if r == 0:
        return Residue(0, PrimePower(p, 1))
    tables = harmonic_prefixes(p, 1)
    return Residue(-tables.H[r - 1], PrimePower(p, 1))


def epoly_p3_value(a: Rational, p: int) -> Residue:
    """Degree p-3 Euler polynomial value at a, mod p.

    E_{p-3}(a) = 2 * Sum_{t=0}^{r-1} (-1)**(r-1-t) t**(p-3) with r = <a>_p,
    using t**(p-3) = t**-2 for 0 < t < p.
    """
    _require_odd_prime(p)
    r = embed_raw(a, p)
    invsq = inverse_squares(p, 1)
    acc = 0
    sign = 1
    for t in range(r - 1, 0, -1):
        acc += sign * invsq[t]
        sign = -sign
    return Residue(2 * acc, PrimePower(p, 1))


def epoly_phi2_value(a: Rational, p: int) -> Residue:
    """Euler polynomial of degree phi(p**2) - 2 at a, mod p**2.

    Computed as -2 times the signed partial inverse-square sum at the unique
    representative m in [1, p**2] of a; the (-1)**(m-k) convention makes the
    result representative-independent.
    """
    p2 = p * p
    m = embed_raw(a, p2) or p2
    s = inv_square_partial(m, p, 2, signed=True).value
    return Residue(-2 * s, PrimePower(p, 2))


def bpoly_phi1_value(a: Rational, p: int) -> Residue:
    """Bernoulli polynomial of degree phi(p**2) - 1 at a, mod p**2.

    Uses the representative m in [1, p**3] with m = a (mod p**3); the
    closed-form partial sum keeps that affordable.
    """
    p3 = p ** 3
    m = embed_raw(a, p3) or p3
    s = inv_square_partial(m, p, 2, signed=False).value
    return Residue(s * inverse_mod(p - 1, p * p), PrimePower(p, 2))


class LucasKind(Enum):
    FIBONACCI = "fibonacci"
    PELL = "pell"
    S4 = "s4"


#: recurrence x_{n+1} = c*x_n + d*x_{n-1} (x_0 = 0, x_1 = 1) and discriminant base
_LUCAS_PARAMS = {
    LucasKind.FIBONACCI: (1, 1, 5),
    LucasKind.PELL: (2, 1, 2),
    LucasKind.S4: (4, -1, 3),
}


def lucas_sequence_mod(kind: LucasKind, n: int, modulus: PrimePower) -> Residue:
    """n-th term of the Lucas-type sequence mod p**e in O(log n) by matrix doubling."""
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    c, d, _ = _LUCAS_PARAMS[kind]
    m = modulus.m
    # power of [[c, d], [1, 0]]; x_n is the lower-left entry
    ra, rb, rc, rd = 1, 0, 0, 1
    ba, bb, bc, bd = c % m, d % m, 1, 0
    k = n
    while k:
        if k & 1:
            ra, rb, rc, rd = (
                (ra * ba + rb * bc) % m,
                (ra * bb + rb * bd) % m,
                (rc * ba + rd * bc) % m,
                (rc * bb + rd * bd) % m,
            )
        ba, bb, bc, bd = (
            (ba * ba + bb * bc) % m,
            (ba * bb + bb * bd) % m,
            (bc * ba + bd * bc) % m,
            (bc * bb + bd * bd) % m,
        )
        k >>= 1
    return Residue(rc, modulus)


def lucas_quotient(kind: LucasKind, p: int) -> Residue:
    """x_{p - (D/p)} / p mod p for the sequence's discriminant base D.

    The indexed term is divisible by p; it is computed mod p**2 and the exact
    factor p divided out.
    """
    _require_odd_prime(p)
    disc = _LUCAS_PARAMS[kind][2]
    if disc % p == 0:
        raise BadPrime(f"{kind.value} quotient undefined at p = {p}")
    idx = p - jacobi_symbol(disc, p)
    term = lucas_sequence_mod(kind, idx, PrimePower(p, 2)).value
    if term % p:
        raise IndexTermNotDivisible(
            f"{kind.value} term at index {idx} is {term} mod {p * p}, not divisible by {p}")
    return Residue(term // p, PrimePower(p, 1))


def euler_number_mod(p: int, e: int = 1) -> Residue:
    """E_{p-3} mod p (e = 1) or E_{phi(p**2)-2} mod p**2 (e = 2).

    Both come from the value at 1/2, where E_n(1/2) = E_n / 2**n collapses to
    4 * E_n modulo p**e.
    """
    _require_odd_prime(p)
    half = Fraction(1, 2)
    if e == 1:
        v = epoly_p3_value(half, p).value * inverse_mod(4, p)
        return Residue(v, PrimePower(p, 1))
    if e == 2:
        p2 = p * p
        v = epoly_phi2_value(half, p).value * inverse_mod(4, p2)
        return Residue(v, PrimePower(p, 2))
    raise ValueError(f"exponent must be 1 or 2, got {e}")


def bernoulli_mod_p(n: int, p: int) -> int:
    """B_n mod p for n = 0, 1, or even n <= p-3, via power sums one digit up.

    For even 2 <= n <= p-3 the correction terms of the power-sum expansion
    vanish mod p, leaving B_n = (Sum_{x<p} x**n mod p**2) / p.
    """
    _require_odd_prime(p)
    if n == 0:
        return 1 % p
    if n == 1:
        return (p - 1) * inverse_mod(2, p) % p
    if n % 2 or n > p - 3:
        raise ValueError(f"B_{n} mod {p} not supported by the power-sum route")
    p2 = p * p
    s = sum(pow(x, n, p2) for x in range(1, p)) % p2
    if s % p:
        raise ValuationTooLow(f"power sum for B_{n} mod {p} is not divisible by {p}")
    return s // p % p


@lru_cache(maxsize=8)
def _bernoulli_row_mod_p(p: int) -> tuple[int, ...]:
    """B_0..B_{p-3} mod p by the binomial recurrence; O(p**2), kept for p <= 199."""
    out = [0] * (p - 2)
    out[0] = 1
    inv = inverse_range(p, 1)
    for n in range(1, p - 2):
        acc = 0
        c = 1  # C(n+1, k), updated incrementally
        for k in range(n):
            acc = (acc + c * out[k]) % p
            c = c * (n + 1 - k) % p * inv[k + 1] % p
        out[n] = -acc * inv[n + 1] % p
    return tuple(out)


def bpoly_p2_value_via_coefficients(a: Rational, p: int) -> Residue:
    """Coefficient-expansion route for B_{p-2}(a) mod p, as a cross-check.

    O(p**2) because of the Bernoulli row, so only enabled for p <= 199.
    """
    _require_odd_prime(p)
    if p > 199:
        raise ValueError("coefficient route is limited to p <= 199")
    row = _bernoulli_row_mod_p(p)
    x = embed_raw(a, p)
    n = p - 2
    inv = inverse_range(p, 1)
    acc = 0
    c = 1  # C(n, k)
    xpow = pow(x, n, p)
    xinv = inverse_mod(x, p) if x else 0
    for k in range(n + 1):
        bk = row[k] if k < len(row) else 0  # B_{p-2} itself is 0 (odd index)
        if x == 0:
            term = bk if k == n else 0
        else:
            term = c * bk % p * xpow % p
            xpow = xpow * xinv % p
        acc = (acc + term) % p
        c = c * (n - k) % p * inv[k + 1] % p if k < n else c
    return Residue(acc, PrimePower(p, 1))
