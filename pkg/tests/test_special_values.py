from fractions import Fraction

import pytest

from congrlab.errors import BadPrime, NotCoprime, NotPIntegral
from congrlab.modring import PrimePower, primes_in_range
from congrlab.oracle import (
    bernoulli_number_exact,
    bernoulli_poly_eval_exact,
    euler_poly_eval_exact,
    reduce_mod,
)
from congrlab.special_values import (
    LucasKind,
    bernoulli_mod_p,
    bpoly_p1_diff,
    bpoly_p2_value,
    bpoly_p2_value_via_coefficients,
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

F = Fraction


class TestHarmonicPrefixes:
    def test_mod_25_table(self):
        tables = harmonic_prefixes(5, 2)
        assert tables.H == (0, 1, 14, 6, 0)
        assert tables.H2 == (0, 1, 20, 9, 20)

    def test_wolstenholme_endpoints(self):
        assert harmonic_prefixes(5, 1).H[4] == 0
        assert harmonic_prefixes(7, 1).H2[6] == 0
        for p in primes_in_range(5, 199):
            assert harmonic_prefixes(p, 2).H[p - 1] == 0
            assert harmonic_prefixes(p, 1).H2[p - 1] == 0

    def test_exact_agreement(self):
        for p in (5, 7, 13):
            tables = harmonic_prefixes(p, 2)
            mod = PrimePower(p, 2)
            h = h2 = F(0)
            for k in range(1, p):
                h += F(1, k)
                h2 += F(1, k * k)
                assert tables.H[k] == reduce_mod(h, mod).value
                assert tables.H2[k] == reduce_mod(h2, mod).value


class TestInvSquarePartial:
    def test_examples(self):
        assert inv_square_partial(1, 7, 2).value == 0
        assert inv_square_partial(3, 5, 1).value == 0
        assert inv_square_partial(3, 5, 1, signed=True).value == 2

    def test_against_exact_sums(self):
        # covers partial blocks, whole blocks, and the beyond-p**2 reduction
        for p in (5, 7):
            p2 = p * p
            mod = PrimePower(p, 2)
            for m in [1, 2, p, p + 1, p2 // 2, p2 - 1, p2, p2 + 3, 2 * p2 + 5, 3 * p2]:
                unsigned = sum(F(1, k * k) for k in range(1, m) if k % p)
                signed = sum(F((-1) ** (m - k), k * k) for k in range(1, m) if k % p)
                assert inv_square_partial(m, p, 2).value == reduce_mod(unsigned, mod).value
                assert inv_square_partial(m, p, 2, signed=True).value == \
                    reduce_mod(signed, mod).value

    def test_representative_independence(self):
        # the (-1)**(m-k) convention makes m and m + p**2 agree
        for p in (5, 7, 11):
            p2 = p * p
            for m in (1, 3, p + 2, p2 - 1, p2):
                assert inv_square_partial(m, p, 2, signed=True).value == \
                    inv_square_partial(m + p2, p, 2, signed=True).value
                assert inv_square_partial(m, p, 2).value == \
                    inv_square_partial(m + p2, p, 2).value

    def test_rejects_bad_m(self):
        with pytest.raises(ValueError):
            inv_square_partial(0, 5, 2)


class TestFermatQuotient:
    @pytest.mark.parametrize("a, p, e, want", [
        (2, 5, 1, 3),
        (3, 5, 2, 16),
        (2, 7, 1, 2),
    ])
    def test_examples(self, a, p, e, want):
        assert fermat_quotient(a, p, e).value == want

    def test_not_coprime(self):
        with pytest.raises(NotCoprime):
            fermat_quotient(10, 5, 1)

    def test_exact_agreement(self):
        for p in (5, 7, 11, 13):
            for a in (2, 3, 5, 7):
                if a % p == 0:
                    continue
                exact = F(a ** (p - 1) - 1, p)
                assert fermat_quotient(a, p, 2).value == \
                    reduce_mod(exact, PrimePower(p, 2)).value


class TestPolynomialValueRoutes:
    def test_bpoly_p2_examples(self):
        assert bpoly_p2_value(F(1, 3), 5).value == 3
        assert bpoly_p2_value(F(1), 11).value == 0
        assert bpoly_p2_value(F(1, 2), 7).value == 0

    def test_bpoly_p1_diff_examples(self):
        assert bpoly_p1_diff(F(1, 2), 5).value == 1
        assert bpoly_p1_diff(F(1), 11).value == 0
        assert bpoly_p1_diff(F(2, 5), 7).value == 6

    def test_epoly_p3_examples(self):
        assert epoly_p3_value(F(1, 2), 5).value == 1
        assert epoly_p3_value(F(1), 11).value == 0
        assert epoly_p3_value(F(1, 4), 7).value == 2

    def test_phi_square_examples(self):
        assert epoly_phi2_value(F(1, 2), 5).value == 11
        assert epoly_phi2_value(F(1), 5).value == 0
        assert bpoly_phi1_value(F(1, 3), 5).value == 14

    def test_against_exact_polynomials(self):
        args = [F(1, 2), F(1, 3), F(2, 3), F(1, 4), F(1, 6), F(5, 12), F(2), F(7)]
        for p in (5, 7, 11):
            n2 = p * p - p - 2
            mod1, mod2 = PrimePower(p, 1), PrimePower(p, 2)
            for a in args:
                if a.denominator % p == 0:
                    continue
                assert bpoly_p2_value(a, p).value == \
                    reduce_mod(bernoulli_poly_eval_exact(p - 2, a), mod1).value
                diff = bernoulli_poly_eval_exact(p - 1, a) - bernoulli_number_exact(p - 1)
                assert bpoly_p1_diff(a, p).value == reduce_mod(diff, mod1).value
                assert epoly_p3_value(a, p).value == \
                    reduce_mod(euler_poly_eval_exact(p - 3, a), mod1).value
                assert epoly_phi2_value(a, p).value == \
                    reduce_mod(euler_poly_eval_exact(n2, a), mod2).value
                assert bpoly_phi1_value(a, p).value == \
                    reduce_mod(bernoulli_poly_eval_exact(n2 + 1, a), mod2).value

    def test_kummer_consistency(self):
        # the mod-p**2 Euler value reduces to the mod-p one
        for p in (5, 7, 11, 13):
            for a in (F(1, 2), F(1, 4), F(3, 4), F(2)):
                assert epoly_phi2_value(a, p).value % p == epoly_p3_value(a, p).value

    def test_coefficient_route_cross_check(self):
        args = [F(1, 2), F(1, 3), F(5, 12), F(2), F(11, 12)]
        for p in (5, 7, 13, 199):
            for a in args:
                assert bpoly_p2_value(a, p) == bpoly_p2_value_via_coefficients(a, p)
        with pytest.raises(ValueError):
            bpoly_p2_value_via_coefficients(F(1, 2), 211)

    def test_not_p_integral(self):
        with pytest.raises(NotPIntegral):
            bpoly_p2_value(F(1, 5), 5)


class TestLucas:
    def test_sequence_examples(self):
        assert lucas_sequence_mod(LucasKind.FIBONACCI, 8, PrimePower(7, 2)).value == 21
        assert lucas_sequence_mod(LucasKind.PELL, 6, PrimePower(7, 2)).value == 21
        assert lucas_sequence_mod(LucasKind.S4, 6, PrimePower(5, 2)).value == 5

    def test_sequence_matches_iteration(self):
        mod = PrimePower(13, 3)
        for kind, (c, d) in [(LucasKind.FIBONACCI, (1, 1)),
                             (LucasKind.PELL, (2, 1)),
                             (LucasKind.S4, (4, -1))]:
            x0, x1 = 0, 1
            for n in range(40):
                assert lucas_sequence_mod(kind, n, mod).value == x0
                x0, x1 = x1, (c * x1 + d * x0) % mod.m

    def test_quotient_examples(self):
        assert lucas_quotient(LucasKind.FIBONACCI, 7).value == 3
        assert lucas_quotient(LucasKind.PELL, 7).value == 3
        assert lucas_quotient(LucasKind.S4, 5).value == 1

    def test_bad_prime(self):
        with pytest.raises(BadPrime):
            lucas_quotient(LucasKind.FIBONACCI, 5)


class TestEulerNumberMod:
    @pytest.mark.parametrize("p, e, want", [
        (7, 1, 5),
        (5, 1, 4),
        (5, 2, 9),
    ])
    def test_examples(self, p, e, want):
        assert euler_number_mod(p, e).value == want


class TestBernoulliModP:
    def test_against_exact(self):
        for p in (5, 7, 11, 13, 31):
            for n in range(0, p - 2, 2):
                want = reduce_mod(bernoulli_number_exact(n), PrimePower(p, 1)).value
                assert bernoulli_mod_p(n, p) == want

    def test_unsupported_indices(self):
        with pytest.raises(ValueError):
            bernoulli_mod_p(7, 11)
        with pytest.raises(ValueError):
            bernoulli_mod_p(10, 11)
