from fractions import Fraction

import pytest

from congrlab.errors import BoundExceeded, NotPIntegral
from congrlab.modring import PrimePower
from congrlab.oracle import (
    IDENTITY_SIZE_BOUNDS,
    IdentityKind,
    RationalPolynomial,
    bernoulli_number_exact,
    bernoulli_poly_eval_exact,
    euler_number_exact,
    euler_poly_eval_exact,
    iter_identity_sizes,
    oracle_sum_exact,
    reduce_mod,
    verify_poly_identity,
)
from congrlab.sums import WeightKind

F = Fraction


class TestBernoulliNumbers:
    @pytest.mark.parametrize("n, want", [
        (0, F(1)),
        (1, F(-1, 2)),
        (3, F(0)),
        (12, F(-691, 2730)),
    ])
    def test_values(self, n, want):
        assert bernoulli_number_exact(n) == want

    def test_odd_indices_vanish(self):
        assert all(bernoulli_number_exact(2 * n + 3) == 0 for n in range(26))

    def test_bound(self):
        with pytest.raises(BoundExceeded):
            bernoulli_number_exact(201)


class TestEulerNumbers:
    @pytest.mark.parametrize("n, want", [
        (0, F(1)),
        (1, F(0)),
        (2, F(-1)),
        (4, F(5)),
        (6, F(-61)),
    ])
    def test_values(self, n, want):
        assert euler_number_exact(n) == want

    def test_integrality(self):
        assert all(euler_number_exact(n).denominator == 1 for n in range(40))


class TestPolynomialValues:
    @pytest.mark.parametrize("n, x, want", [
        (3, F(1, 3), F(1, 27)),
        (0, F(7, 3), F(1)),
    ])
    def test_bernoulli_values(self, n, x, want):
        assert bernoulli_poly_eval_exact(n, x) == want

    @pytest.mark.parametrize("n, x, want", [
        (4, F(1, 2), F(5, 16)),
        (4, F(1, 4), F(57, 256)),
    ])
    def test_euler_values(self, n, x, want):
        assert euler_poly_eval_exact(n, x) == want

    def test_forward_difference(self):
        # B_n(x+1) - B_n(x) = n x**(n-1)
        points = [F(2, 7), F(-3, 5), F(11, 4), F(1), F(-9, 2)]
        for n in range(1, 61):
            for x in points:
                got = bernoulli_poly_eval_exact(n, x + 1) - bernoulli_poly_eval_exact(n, x)
                assert got == n * x ** (n - 1)

    def test_euler_complement(self):
        # E_n(x) + E_n(x+1) = 2 x**n
        points = [F(2, 7), F(-3, 5), F(11, 4), F(1), F(-9, 2)]
        for n in range(61):
            for x in points:
                got = euler_poly_eval_exact(n, x) + euler_poly_eval_exact(n, x + 1)
                assert got == 2 * x ** n

    def test_even_euler_vanishes_at_zero(self):
        assert all(euler_poly_eval_exact(2 * n + 2, 0) == 0 for n in range(26))

    def test_euler_at_one_sixth(self):
        # E_n(1/6) = 2**(-n-1) (1 + 3**(-n)) E_n for even n
        for n in range(0, 41, 2):
            want = F(1, 2 ** (n + 1)) * (1 + F(1, 3 ** n)) * euler_number_exact(n)
            assert euler_poly_eval_exact(n, F(1, 6)) == want


class TestReduceMod:
    def test_examples(self):
        assert reduce_mod(F(25, 12), PrimePower(5, 2)).value == 0
        assert reduce_mod(F(1, 27), PrimePower(5, 1)).value == 3

    def test_not_p_integral(self):
        with pytest.raises(NotPIntegral):
            reduce_mod(F(1, 5), PrimePower(5, 2))

    def test_bernoulli_p_minus_1_is_not_reducible(self):
        # by the Clausen-von Staudt shape of its denominator
        for p in (5, 7, 11):
            with pytest.raises(NotPIntegral):
                reduce_mod(bernoulli_number_exact(p - 1), PrimePower(p, 1))


class TestOracleSum:
    def test_argument_one_collapses(self):
        assert oracle_sum_exact(F(1), WeightKind.H, 5) == 0

    def test_half_with_harmonic_weight(self):
        v = oracle_sum_exact(F(1, 2), WeightKind.H, 5)
        assert reduce_mod(v, PrimePower(5, 2)).value == 3

    def test_third_with_second_order_weight(self):
        v = oracle_sum_exact(F(1, 3), WeightKind.H2_OVER_2K1, 5)
        assert reduce_mod(v, PrimePower(5, 1)).value == 1

    def test_rejects_non_integral_argument(self):
        with pytest.raises(NotPIntegral):
            oracle_sum_exact(F(1, 5), WeightKind.ONE, 5)


class TestIdentities:
    def test_first_sizes(self):
        assert verify_poly_identity(IdentityKind.LEMMA21, 1)
        assert verify_poly_identity(IdentityKind.EQ35, 1)
        assert verify_poly_identity(IdentityKind.ANDERSEN36, 5, 3)

    @pytest.mark.parametrize("kind", list(IdentityKind))
    def test_small_sizes_both_methods_agree(self, kind):
        for size in iter_identity_sizes(kind, 6):
            assert verify_poly_identity(kind, *size, method="points")
            assert verify_poly_identity(kind, *size, method="coefficients")

    def test_bounds(self):
        with pytest.raises(BoundExceeded):
            verify_poly_identity(IdentityKind.LEMMA21, 61)
        with pytest.raises(BoundExceeded):
            verify_poly_identity(IdentityKind.LEMMA21, 11, method="coefficients")
        with pytest.raises(ValueError):
            verify_poly_identity(IdentityKind.ANDERSEN36, 3, 5)
        with pytest.raises(ValueError):
            verify_poly_identity(IdentityKind.ANDERSEN36, 3)

    def test_size_bounds_cover_spec_ranges(self):
        assert IDENTITY_SIZE_BOUNDS[IdentityKind.LEMMA21] == 60
        assert IDENTITY_SIZE_BOUNDS[IdentityKind.EQ32] == 40
        assert IDENTITY_SIZE_BOUNDS[IdentityKind.ANDERSEN36] == 30


class TestRationalPolynomial:
    def test_normalization_and_equality(self):
        assert RationalPolynomial((1, 2, 0)) == RationalPolynomial((1, 2))
        assert RationalPolynomial(()).is_zero()
        assert RationalPolynomial((0, 0)).is_zero()

    def test_arithmetic(self):
        x = RationalPolynomial((0, 1))
        poly = (x - 1) * (x + 1)
        assert poly == RationalPolynomial((-1, 0, 1))
        assert poly.evaluate(F(3)) == 8
        assert (poly / 2).evaluate(2) == F(3, 2)
        assert (1 - x).evaluate(5) == -4

    def test_degree(self):
        assert RationalPolynomial((0, 0, 3)).degree == 2
        assert RationalPolynomial(()).degree == -1
