"""Exception taxonomy shared across the library."""


class CongrlabError(Exception):
    """Base class for all library-specific errors."""


class ModulusMismatch(CongrlabError):
    """Arithmetic attempted on residues with different moduli."""


class NotAUnit(CongrlabError):
    """Inversion of a residue divisible by p."""


class NotPIntegral(CongrlabError):
    """A rational with p in its denominator where a p-integral value is required."""


class NotCoprime(CongrlabError):
    """Fermat-quotient base shares a factor with p."""


class NegativeValuation(CongrlabError):
    """Valuated-unit division would produce a negative p-adic valuation."""


class BoundExceeded(CongrlabError):
    """Requested index or size is past the configured bound."""


class BadPrime(CongrlabError):
    """Prime is inadmissible for the requested computation."""


class IndexTermNotDivisible(CongrlabError):
    """A Lucas-sequence term expected to be divisible by p is not (arithmetic defect)."""


class ValuationTooLow(CongrlabError):
    """A quantity expected to carry a p-power factor does not (arithmetic defect)."""
