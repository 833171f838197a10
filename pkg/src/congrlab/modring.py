"""Exact residue arithmetic over odd prime-power moduli.

Residues carry their modulus; combining residues with different moduli raises
ModulusMismatch instead of silently coercing.  All arithmetic is on Python
ints, so it is exact for any modulus.  Rational arguments are ordinary
``fractions.Fraction`` values; "p-integral" means the denominator is coprime
to p.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt
from typing import Optional, Union

from .errors import ModulusMismatch, NegativeValuation, NotAUnit, NotPIntegral

#: Largest supported exponent.  Quantities later divided by p**2 (for example
#: H_{p-1}) must be tracked with two extra digits, so e = 5 is the ceiling.
MAX_EXPONENT = 5

#: Rationals standing for p-adic integer arguments are plain Fractions, which
#: already guarantee lowest terms and a positive denominator.
PadicRational = Fraction

Rational = Union[int, Fraction]


def is_prime(n: int) -> bool:
    """Trial-division primality test, adequate for the supported range."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    limit = isqrt(n)
    while f <= limit:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_in_range(lo: int, hi: int) -> list[int]:
    """All primes in [lo, hi], ascending."""
    if hi < max(2, lo):
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0:2] = b"\x00\x00"
    for q in range(2, isqrt(hi) + 1):
        if sieve[q]:
            start = q * q
            sieve[start:hi + 1:q] = b"\x00" * ((hi - start) // q + 1)
    return [n for n in range(max(2, lo), hi + 1) if sieve[n]]


@dataclass(frozen=True)
class PrimePower:
    """A modulus m = p**e for an odd prime p > 3 and 1 <= e <= MAX_EXPONENT."""

    p: int
    e: int
    m: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not (isinstance(self.p, int) and self.p > 3 and is_prime(self.p)):
            raise ValueError(f"modulus base must be a prime > 3, got {self.p!r}")
        if not (isinstance(self.e, int) and 1 <= self.e <= MAX_EXPONENT):
            raise ValueError(f"exponent must be in 1..{MAX_EXPONENT}, got {self.e!r}")
        object.__setattr__(self, "m", self.p ** self.e)

    def __str__(self) -> str:
        return f"{self.p}^{self.e}" if self.e > 1 else str(self.p)


def inverse_mod(x: int, modulus: int) -> int:
    """Inverse of x modulo `modulus`; NotAUnit when gcd(x, modulus) > 1."""
    try:
        return pow(x, -1, modulus)
    except ValueError:
        raise NotAUnit(f"{x} is not invertible modulo {modulus}") from None


def embed_raw(q: Rational, modulus: int) -> int:
    """num * den^-1 mod `modulus` for a rational with denominator coprime to it."""
    q = Fraction(q)
    num, den = q.numerator, q.denominator
    if gcd(den, modulus) != 1:
        raise NotPIntegral(f"{q} has denominator not coprime to {modulus}")
    if den == 1:
        return num % modulus
    return num * pow(den, -1, modulus) % modulus


@dataclass(frozen=True)
class Residue:
    """An integer in [0, m) together with its prime-power modulus."""

    value: int
    modulus: PrimePower

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.value % self.modulus.m)

    def _coerce(self, other: "Residue | int") -> "Residue":
        if isinstance(other, int):
            return Residue(other, self.modulus)
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ModulusMismatch(
                    f"mixed moduli {self.modulus} and {other.modulus}")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Residue(self.value + other.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Residue(self.value - other.value, self.modulus)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Residue(self.value * other.value, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __pow__(self, n: int):
        return mod_pow(self, n)

    def __int__(self) -> int:
        return self.value

    def inverse(self) -> "Residue":
        return mod_inverse(self)

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self) -> str:
        return f"{self.value} (mod {self.modulus.m})"


def mod_inverse(x: Residue) -> Residue:
    """y with x*y = 1 (mod m); NotAUnit when p divides x."""
    return Residue(inverse_mod(x.value, x.modulus.m), x.modulus)


def mod_pow(x: Residue, n: int) -> Residue:
    """x**n mod m by square-and-multiply; x**0 = 1."""
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    return Residue(pow(x.value, n, x.modulus.m), x.modulus)


def embed_rational(q: Rational, m: PrimePower) -> Residue:
    """The residue of a p-integral rational modulo p**e."""
    return Residue(embed_raw(q, m.m), m)


def least_nonneg_residue(q: Rational, p: int) -> int:
    """The unique r in {0, ..., p-1} with q = r (mod p)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return embed_raw(q, p)


def jacobi_symbol(a: int, n: int) -> int:
    """The Jacobi symbol (a/n) for odd n >= 1; 0 iff gcd(a, n) > 1."""
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs odd positive n, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def strip_valuation(n: int, p: int) -> tuple[int, int]:
    """(v, u) with n = p**v * u and p not dividing u; n must be nonzero."""
    if n == 0:
        raise ValueError("zero has infinite valuation")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


@dataclass(frozen=True)
class ValuatedUnit:
    """A value p**val * unit with p coprime to the unit.

    The exact zero is encoded with ``val = None`` (an "infinite" valuation
    marker) and no unit; this is distinct from val >= e, which merely means
    "indistinguishable from 0 at precision e".
    """

    val: Optional[int]
    unit: Optional[Residue]

    def __post_init__(self) -> None:
        if (self.val is None) != (self.unit is None):
            raise ValueError("zero element must have both val and unit absent")
        if self.val is not None:
            if self.val < 0:
                raise NegativeValuation(f"valuation {self.val} < 0")
            if self.unit.value % self.unit.modulus.p == 0:
                raise NotAUnit(f"unit part {self.unit.value} divisible by p")

    @classmethod
    def zero(cls) -> "ValuatedUnit":
        return cls(None, None)

    @classmethod
    def from_integer(cls, n: int, modulus: PrimePower) -> "ValuatedUnit":
        if n == 0:
            return cls.zero()
        v, u = strip_valuation(n, modulus.p)
        return cls(v, Residue(u, modulus))

    def is_zero(self) -> bool:
        return self.val is None


def vu_mul(x: ValuatedUnit, y: ValuatedUnit) -> ValuatedUnit:
    """Valuations add, units multiply; zero is absorbing."""
    if x.is_zero() or y.is_zero():
        return ValuatedUnit.zero()
    return ValuatedUnit(x.val + y.val, x.unit * y.unit)


def vu_div(x: ValuatedUnit, y: ValuatedUnit) -> ValuatedUnit:
    """Valuations subtract, units divide; NegativeValuation if val would drop below 0."""
    if y.is_zero():
        raise ZeroDivisionError("division by the zero valuated unit")
    if x.is_zero():
        return ValuatedUnit.zero()
    if x.val < y.val:
        raise NegativeValuation(f"valuation {x.val} - {y.val} < 0")
    return ValuatedUnit(x.val - y.val, x.unit * mod_inverse(y.unit))


def vu_collapse(x: ValuatedUnit, target: PrimePower) -> Residue:
    """Reduce p**val * unit into [0, p**e); 0 when val >= e or x is zero.

    Exactness requires the unit to be known modulo p**(e - val), which holds
    whenever the inputs were tracked at precision >= e.
    """
    if x.is_zero():
        return Residue(0, target)
    if x.unit.modulus.p != target.p:
        raise ModulusMismatch(
            f"collapse across primes {x.unit.modulus.p} and {target.p}")
    if x.val >= target.e:
        return Residue(0, target)
    return Residue(target.p ** x.val * x.unit.value, target)
