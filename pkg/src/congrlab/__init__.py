"""congrlab: exact verification of prime-power congruences for truncated
binomial sums with harmonic-number weights.

The library is organised in layers: `modring` (exact residue arithmetic over
prime powers), `special_values` (harmonic tables, polynomial values through
power sums, Fermat and Lucas quotients), `sums` (the weighted sum
evaluators), `oracle` (independent exact-rational ground truth and the
polynomial identity prover), `checks` (the named congruence registry and
suite runner), and `cli` (the command-line front end).
"""

from .checks import (
    CheckDescriptor,
    CheckResult,
    REGISTRY,
    SearchTarget,
    check_names,
    run_check,
    run_suite,
    search_zero,
    standard_arguments,
)
from .errors import (
    BadPrime,
    BoundExceeded,
    CongrlabError,
    IndexTermNotDivisible,
    ModulusMismatch,
    NegativeValuation,
    NotAUnit,
    NotCoprime,
    NotPIntegral,
    ValuationTooLow,
)
from .modring import (
    PadicRational,
    PrimePower,
    Residue,
    ValuatedUnit,
    embed_rational,
    jacobi_symbol,
    least_nonneg_residue,
    mod_inverse,
    mod_pow,
    vu_collapse,
    vu_div,
    vu_mul,
)
from .oracle import (
    IdentityKind,
    RationalPolynomial,
    bernoulli_number_exact,
    bernoulli_poly_eval_exact,
    euler_number_exact,
    euler_poly_eval_exact,
    oracle_sum_exact,
    reduce_mod,
    verify_poly_identity,
)
from .special_values import (
    HarmonicTables,
    LucasKind,
    bpoly_p1_diff,
    bpoly_p2_value,
    bpoly_phi1_value,
    epoly_p3_value,
    epoly_phi2_value,
    euler_number_mod,
    fermat_quotient,
    harmonic_prefixes,
    inv_square_partial,
    lucas_quotient,
    lucas_sequence_mod,
)
from .sums import (
    ConjectureKind,
    FamilyKind,
    PerturbKind,
    WeightKind,
    central_binomial_sum,
    conjecture_sum,
    harmonic_quotient,
    jacobi_like_sum,
    perturbed_sum,
)

__version__ = "0.1.0"
