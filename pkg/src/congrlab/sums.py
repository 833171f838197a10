"""Left-hand-side evaluators.

The generic binomial-product family with its six weights, the four
central-binomial families built from integer binomial coefficients with
explicit valuation tracking, the perturbed sums, the conjecture sums, and the
Wolstenholme quotient H_{p-1}/p**2.

The generic recurrence works entirely in residue arithmetic: the factors
(a - k) may be divisible by p but are only multiplied, never inverted.
Valuation tracking is confined to the central and conjecture families, whose
terms are integer binomials with known exact p-valuations.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .errors import NotPIntegral, ValuationTooLow
from .modring import (
    MAX_EXPONENT,
    PrimePower,
    Rational,
    Residue,
    embed_raw,
    strip_valuation,
)
from .special_values import harmonic_prefixes, inverse_range, inverse_squares


class WeightKind(Enum):
    ONE = "one"
    H = "h"
    H2 = "h2"
    H_OVER_K = "h-over-k"
    INV_2K1 = "inv2k1"
    H2_OVER_2K1 = "h2-over-2k1"


class FamilyKind(Enum):
    CB2_16 = "cb2"
    CB3_27 = "cb3"
    CB4_64 = "cb4"
    CB6_432 = "cb6"


#: Each central family is the generic family at this argument.
CENTRAL_ARGUMENT = {
    FamilyKind.CB2_16: Fraction(1, 2),
    FamilyKind.CB3_27: Fraction(1, 3),
    FamilyKind.CB4_64: Fraction(1, 4),
    FamilyKind.CB6_432: Fraction(1, 6),
}

_SPIKE_WEIGHTS = (WeightKind.INV_2K1, WeightKind.H2_OVER_2K1)


def _check_argument(a: Rational, p: int) -> Fraction:
    a = Fraction(a)
    if a.denominator % p == 0:
        raise NotPIntegral(f"argument {a} is not p-integral at {p}")
    return a


@lru_cache(maxsize=64)
def _odd_inverses(p: int, e: int) -> tuple[int, ...]:
    """Index k -> inverse of 2k+1 mod p**e for 0 <= k <= p-1; 0 at 2k+1 = p."""
    m = p ** e
    inv = inverse_range(p, e)
    out = [0] * p
    for k in range(p):
        j = 2 * k + 1
        if j < p:
            out[k] = inv[j]
        elif j != p:
            out[k] = pow(j, -1, m)
    return tuple(out)


@lru_cache(maxsize=4096)
def _jacobi_like_raw(a: Fraction, weight: WeightKind, p: int, e: int) -> int:
    """Raw integer value of the weighted generic sum mod p**e.

    Term recurrence t_0 = 1, t_k = t_{k-1} (a-k)(1-a-k)/k**2; all divisions
    are by units.  The weights dividing by 2k+1 run one digit above the
    target so the exact factor p at 2k+1 = p can be cancelled.
    """
    spike = weight in _SPIKE_WEIGHTS
    work = e + 1 if spike else e
    m = p ** work
    target = p ** e
    a_red = embed_raw(a, m)
    one_minus = (1 - a_red) % m
    invsq = inverse_squares(p, work)
    mid = (p - 1) // 2

    t = 1
    if weight is WeightKind.ONE:
        acc = 1
        for k in range(1, p):
            t = t * (a_red - k) % m * (one_minus - k) % m * invsq[k] % m
            acc += t
    elif weight is WeightKind.H or weight is WeightKind.H2:
        tables = harmonic_prefixes(p, work)
        tab = tables.H if weight is WeightKind.H else tables.H2
        acc = 0
        for k in range(1, p):
            t = t * (a_red - k) % m * (one_minus - k) % m * invsq[k] % m
            acc = (acc + t * tab[k]) % m
    elif weight is WeightKind.H_OVER_K:
        tab = harmonic_prefixes(p, work).H
        inv = inverse_range(p, work)
        acc = 0
        for k in range(1, p):
            t = t * (a_red - k) % m * (one_minus - k) % m * invsq[k] % m
            acc = (acc + t * tab[k] % m * inv[k]) % m
    elif weight is WeightKind.INV_2K1:
        oinv = _odd_inverses(p, work)
        acc = 1
        for k in range(1, p):
            t = t * (a_red - k) % m * (one_minus - k) % m * invsq[k] % m
            if k == mid:
                if t % p:
                    raise NotPIntegral(
                        f"term at k = {mid} has 2k+1 = {p} against a unit product")
                acc += t // p  # known mod p**e, which is all the result needs
            else:
                acc = (acc + t * oinv[k]) % m
    elif weight is WeightKind.H2_OVER_2K1:
        tab = harmonic_prefixes(p, work).H2
        oinv = _odd_inverses(p, work)
        acc = 0
        for k in range(1, p):
            t = t * (a_red - k) % m * (one_minus - k) % m * invsq[k] % m
            if k == mid:
                h = tab[k]
                if h % p:
                    raise ValuationTooLow(
                        f"H2 at (p-1)/2 is {h} mod {m}, not divisible by {p}")
                acc += t * (h // p)
            else:
                acc = (acc + t * tab[k] % m * oinv[k]) % m
    else:  # pragma: no cover - exhaustive over WeightKind
        raise ValueError(f"unknown weight {weight!r}")
    return acc % target


def jacobi_like_sum(a: Rational, weight: WeightKind, p: int, e: int) -> Residue:
    """Sum over k < p of C(-a, k) C(a-1, k) w(k), mod p**e (e <= 4).

    Conventions at k = 0: H_0 = H2_0 = 0, 1/(2*0+1) = 1; the H/k weight
    starts at k = 1.  The result depends only on a mod p**e, except for the
    bare 1/(2k+1) weight whose 2k+1 = p term carries a coefficient 1/p and
    therefore sees a mod p**(e+1).
    """
    if not 1 <= e <= 4:
        raise ValueError(f"exponent must be in 1..4, got {e}")
    a = _check_argument(a, p)
    return Residue(_jacobi_like_raw(a, weight, p, e), PrimePower(p, e))


# ---------------------------------------------------------------------------
# central-binomial families, built from integer binomials with valuations

#: per-step ratio factors C(b*k, s*k)/C(b*(k-1), s*(k-1)) as (nums, dens)
def _ratio_factors(tag: str, k: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if tag == "c2":  # C(2k, k)
        return (2 * k, 2 * k - 1), (k, k)
    if tag == "c3":  # C(3k, k)
        return (3 * k, 3 * k - 1, 3 * k - 2), (k, 2 * k, 2 * k - 1)
    if tag == "c4":  # C(4k, 2k)
        return (4 * k, 4 * k - 1, 4 * k - 2, 4 * k - 3), (2 * k, 2 * k, 2 * k - 1, 2 * k - 1)
    if tag == "c6":  # C(6k, 3k)
        return (
            (6 * k, 6 * k - 1, 6 * k - 2, 6 * k - 3, 6 * k - 4, 6 * k - 5),
            (3 * k, 3 * k - 1, 3 * k - 2, 3 * k, 3 * k - 1, 3 * k - 2),
        )
    raise ValueError(tag)


_FAMILY_SHAPE = {
    FamilyKind.CB2_16: (("c2", "c2"), 16),
    FamilyKind.CB3_27: (("c2", "c3"), 27),
    FamilyKind.CB4_64: (("c4", "c2"), 64),
    FamilyKind.CB6_432: (("c6", "c3"), 432),
}


class _TermTracker:
    """Running p**val * unit product for one family's term, units mod p**E."""

    __slots__ = ("p", "modulus", "val", "unit")

    def __init__(self, p: int, working_exponent: int):
        self.p = p
        self.modulus = p ** working_exponent
        self.val = 0
        self.unit = 1

    def step(self, nums, dens) -> None:
        p, m = self.p, self.modulus
        num_u = den_u = 1
        val = self.val
        for f in nums:
            v, u = strip_valuation(f, p)
            val += v
            num_u = num_u * u % m
        for f in dens:
            v, u = strip_valuation(f, p)
            val -= v
            den_u = den_u * u % m
        self.val = val
        self.unit = self.unit * num_u % m * pow(den_u, -1, m) % m

    def collapse(self, target_exponent: int) -> int:
        if self.val >= target_exponent:
            return 0
        return self.p ** self.val * self.unit % self.p ** target_exponent


@lru_cache(maxsize=2048)
def _central_raw(family: FamilyKind, weight: WeightKind, p: int, e: int) -> int:
    """Central family sum mod p**e; terms tracked as valuated units.

    Units are maintained mod p**(e+2) (capped at the library maximum) so the
    collapses after up to two p-cancellations stay exact; H2 is read one
    digit above e for the 2k+1 = p cancellation.
    """
    tags, base = _FAMILY_SHAPE[family]
    work = min(e + 2, MAX_EXPONENT)
    target = p ** e
    mid = (p - 1) // 2

    tab = None
    if weight in (WeightKind.H, WeightKind.H_OVER_K):
        tab = harmonic_prefixes(p, e).H
    elif weight is WeightKind.H2:
        tab = harmonic_prefixes(p, e).H2
    elif weight is WeightKind.H2_OVER_2K1:
        tab = harmonic_prefixes(p, e + 1).H2
    inv = inverse_range(p, e)
    oinv = _odd_inverses(p, e)

    term = _TermTracker(p, work)
    acc = 1 if weight in (WeightKind.ONE, WeightKind.INV_2K1) else 0
    for k in range(1, p):
        nums: list[int] = []
        dens: list[int] = [base]
        for tag in tags:
            n_f, d_f = _ratio_factors(tag, k)
            nums.extend(n_f)
            dens.extend(d_f)
        term.step(nums, dens)
        val = term.val
        if weight is WeightKind.ONE:
            acc += term.collapse(e)
        elif weight is WeightKind.H or weight is WeightKind.H2:
            acc = (acc + term.collapse(e) * tab[k]) % target
        elif weight is WeightKind.H_OVER_K:
            acc = (acc + term.collapse(e) * tab[k] % target * inv[k]) % target
        elif weight is WeightKind.INV_2K1:
            if k == mid:
                if val < 1:
                    raise NotPIntegral(
                        f"family {family.value} term at k = {mid} has valuation 0 "
                        f"against 2k+1 = {p}")
                term.val -= 1
                acc += term.collapse(e)
                term.val += 1
            else:
                acc = (acc + term.collapse(e) * oinv[k]) % target
        else:  # H2_OVER_2K1
            if k == mid:
                h = tab[k]
                if h % p:
                    raise ValuationTooLow(
                        f"H2 at (p-1)/2 is {h}, not divisible by {p}")
                acc = (acc + term.collapse(e) * (h // p)) % target
            else:
                acc = (acc + term.collapse(e) * (tab[k] % target) % target * oinv[k]) % target
    return acc % target


def central_binomial_sum(family: FamilyKind, weight: WeightKind, p: int, e: int) -> Residue:
    """Weighted central-binomial sum mod p**e (e <= 3).

    The binomial products are built as integers with their p-valuations
    tracked exactly, independently of the generic-term recurrence; the two
    routes must agree at a = 1/2, 1/3, 1/4, 1/6.
    """
    if not 1 <= e <= 3:
        raise ValueError(f"exponent must be in 1..3, got {e}")
    if p <= 3:
        raise ValueError(f"need a prime > 3, got {p}")
    return Residue(_central_raw(family, weight, p, e), PrimePower(p, e))


# ---------------------------------------------------------------------------
# perturbed sums

class PerturbKind(Enum):
    ONE_PERTURB = "one"
    TWO_PERTURB = "two"


def perturbed_sum(kind: PerturbKind, a: Rational, p: int, e: int):
    """Perturbed generic sums.

    ONE_PERTURB (e <= 2): Sum C(p-1,k) C(-a,k) C(a-1,k) (-1)**k, with the
    alternating binomial built by the product of (1 - p/j).  Returns one
    residue.

    TWO_PERTURB (e <= 3): returns the pair (direct, surrogate) where direct
    carries the factor (-1)**k C(p-1,k) C(p+k,k) = prod (1 - p**2/j**2) and
    the surrogate replaces it by 1 - p**2 H2_k; the two must agree.
    """
    a = _check_argument(a, p)
    if kind is PerturbKind.ONE_PERTURB:
        if not 1 <= e <= 2:
            raise ValueError(f"exponent must be 1 or 2, got {e}")
        m = p ** e
        a_red = embed_raw(a, m)
        one_minus = (1 - a_red) % m
        inv = inverse_range(p, e)
        invsq = inverse_squares(p, e)
        t = c = 1
        acc = 1
        for k in range(1, p):
            t = t * (a_red - k) % m * (one_minus - k) % m * invsq[k] % m
            c = c * (k - p) % m * inv[k] % m
            acc = (acc + c * t) % m
        return Residue(acc, PrimePower(p, e))
    if kind is PerturbKind.TWO_PERTURB:
        if not 1 <= e <= 3:
            raise ValueError(f"exponent must be in 1..3, got {e}")
        m = p ** e
        p2 = p * p
        a_red = embed_raw(a, m)
        one_minus = (1 - a_red) % m
        invsq = inverse_squares(p, e)
        tab = harmonic_prefixes(p, e).H2
        t = f = 1
        direct = surrogate = 1
        for k in range(1, p):
            t = t * (a_red - k) % m * (one_minus - k) % m * invsq[k] % m
            f = f * (k * k - p2) % m * invsq[k] % m
            direct = (direct + f * t) % m
            surrogate = (surrogate + (1 - p2 * tab[k]) * t) % m
        mod = PrimePower(p, e)
        return Residue(direct, mod), Residue(surrogate, mod)
    raise ValueError(f"unknown perturbation {kind!r}")


# ---------------------------------------------------------------------------
# conjecture sums and the Wolstenholme quotient

class ConjectureKind(Enum):
    C121_COMBO = "c121"
    C122 = "c122"
    C123 = "c123"
    C124 = "c124"
    C125 = "c125"
    ST_CK_OVER_K = "st-ck-over-k"


def conjecture_sum(kind: ConjectureKind, p: int) -> Residue:
    """The designated conjecture-side sum at its designated modulus."""
    if p <= 3:
        raise ValueError(f"need a prime > 3, got {p}")
    if kind is ConjectureKind.C121_COMBO:
        # 2 * (plain family) - (1/(2k+1) family) for the 27**k family, mod p**4
        v = (2 * _central_raw(FamilyKind.CB3_27, WeightKind.ONE, p, 4)
             - _central_raw(FamilyKind.CB3_27, WeightKind.INV_2K1, p, 4))
        return Residue(v, PrimePower(p, 4))
    if kind is ConjectureKind.C122:
        # Sum C(2k,k) C(4k,2k+1) / 48**k mod p**3; C(4k,2k+1) = C(4k,2k)*2k/(2k+1)
        # sheds one factor p against the binomial valuation at 2k+1 = p.
        e = 3
        work = MAX_EXPONENT
        m = p ** work
        mid = (p - 1) // 2
        term = _TermTracker(p, work)
        acc = 0
        for k in range(1, p):
            n2, d2 = _ratio_factors("c2", k)
            n4, d4 = _ratio_factors("c4", k)
            term.step(n2 + n4, d2 + d4 + (48,))
            extra = _TermTracker(p, work)
            extra.val, extra.unit = term.val, term.unit
            v, u = strip_valuation(2 * k, p)
            extra.val += v
            extra.unit = extra.unit * u % m
            j = 2 * k + 1
            if j == p:
                extra.val -= 1
                if extra.val < 0:
                    raise NotPIntegral(f"term at k = {mid} not p-integral")
            else:
                v, u = strip_valuation(j, p)
                extra.val -= v
                extra.unit = extra.unit * pow(u, -1, m) % m
            acc = (acc + extra.collapse(e)) % p ** e
        return Residue(acc, PrimePower(p, 3))
    if kind is ConjectureKind.C123:
        # Sum_{k <= (p-3)/2} C(2k,k)**2 H2_k / ((2k+1) 16**k) mod p
        e = 1
        work = 3
        m = p ** work
        tab = harmonic_prefixes(p, 1).H2
        oinv = _odd_inverses(p, 1)
        term = _TermTracker(p, work)
        acc = 0
        for k in range(1, (p - 1) // 2):
            n2, d2 = _ratio_factors("c2", k)
            term.step(n2 + n2, d2 + d2 + (16,))
            acc = (acc + term.collapse(e) * tab[k] % p * oinv[k]) % p
        return Residue(acc, PrimePower(p, 1))
    if kind in (ConjectureKind.C124, ConjectureKind.C125, ConjectureKind.ST_CK_OVER_K):
        e = 3
        work = MAX_EXPONENT
        square = kind is ConjectureKind.C124
        base = 16 if square else 1
        with_h2 = kind is not ConjectureKind.ST_CK_OVER_K
        m = p ** e
        tab = harmonic_prefixes(p, e).H2 if with_h2 else None
        inv = inverse_range(p, e)
        term = _TermTracker(p, work)
        acc = 0
        for k in range(1, p):
            n2, d2 = _ratio_factors("c2", k)
            if square:
                term.step(n2 + n2, d2 + d2 + (base,))
            else:
                term.step(n2, d2)
            c = term.collapse(e) * inv[k] % m
            if with_h2:
                c = c * tab[k] % m
            acc = (acc + c) % m
        return Residue(acc, PrimePower(p, 3))
    raise ValueError(f"unknown conjecture sum {kind!r}")


def harmonic_quotient(p: int) -> Residue:
    """H_{p-1} / p**2 mod p**3, from H_{p-1} carried at precision p**5."""
    if p <= 3:
        raise ValueError(f"need a prime > 3, got {p}")
    h = harmonic_prefixes(p, MAX_EXPONENT).H[p - 1]
    p2 = p * p
    if h % p2:
        raise ValuationTooLow(f"H_{p - 1} = {h} mod p**5 is not divisible by p**2")
    return Residue(h // p2, PrimePower(p, 3))
