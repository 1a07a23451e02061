"""
Unit tests for phase polynomials, the Gaussian disk integral and the
auxiliary L² identities.
"""

import math
from fractions import Fraction

import pytest

from pnilrep.errors import ResourceCapError, ZeroArgumentError
from pnilrep.integrals import (
    PhasePolynomial,
    aux_lemma_ids,
    disk_integral,
    gaussian_disk_integral,
    gaussian_lambda,
    gaussian_modulus,
    lemma_regime_ok,
    numerator_at,
    p_norm,
    riemann_oscillatory_oracle,
    verify_aux_lemma,
)
from pnilrep.padic import DualElem, DualPoint


class TestPhasePolynomial:
    def test_constancy_index(self):
        """Test the index is the largest non-constant coefficient level."""
        poly = PhasePolynomial.quadratic(5, Fraction(1, 25), Fraction(2, 5))
        assert poly.constancy_index() == 2
        assert PhasePolynomial.univariate(3, [Fraction(1, 27), 1]).constancy_index() == 0

    def test_evaluate(self):
        """Test exact evaluation in ℚ_p/ℤ_p."""
        poly = PhasePolynomial.quadratic(3, Fraction(1, 9), Fraction(1, 3))
        value = poly.evaluate([2])
        assert value.as_fraction() == Fraction(1, 9)

    def test_rescale(self):
        """Test u = p^γ v scales the degree-k coefficient by p^{kγ}."""
        poly = PhasePolynomial.quadratic(5, Fraction(1, 25), Fraction(1, 5)).rescale(1)
        assert poly.coefficient((2,)) == 1
        assert poly.coefficient((1,)) == 1

    def test_merges_terms(self):
        """Test repeated monomials are merged and zeros dropped."""
        poly = PhasePolynomial.of(3, {(1, 0): Fraction(1, 3), (0, 1): 0})
        assert poly.terms == (((1, 0), Fraction(1, 3)),)
        assert poly.variables == 2

    def test_degree_limit(self):
        """Test quartic phases are rejected."""
        with pytest.raises(ValueError, match="degree"):
            PhasePolynomial.univariate(3, [0, 0, 0, 0, 1])

    def test_numerator_at(self):
        """Test ½ over 3² is 5/9 modulo ℤ₃ after inverting 2."""
        assert numerator_at(Fraction(1, 18), 3, 2) == 5
        with pytest.raises(ValueError):
            numerator_at(Fraction(1, 27), 3, 2)


class TestGaussian:
    def test_trivial(self):
        """Test ∫ e(0) = 1."""
        assert gaussian_disk_integral(0, 0, 0, 3) == pytest.approx(1)

    def test_linear_phase_vanishes(self):
        """Test b = 1/p and a = 0 integrate to 0."""
        assert gaussian_disk_integral(0, Fraction(1, 3), 0, 3) == pytest.approx(0)

    def test_quadratic(self):
        """Test a = 1/25 at p = 5 gives 1/5."""
        assert gaussian_disk_integral(Fraction(1, 25), 0, 0, 5) == pytest.approx(0.2)

    def test_small_disk(self):
        """Test on 5ℤ₅ the phase a = 1/25 is constant and the value is the disk measure."""
        assert gaussian_disk_integral(Fraction(1, 25), 0, 1, 5) == pytest.approx(0.2)

    def test_support_condition(self):
        """Test b/a outside p^γℤ_p gives 0."""
        assert gaussian_disk_integral(Fraction(1, 25), Fraction(1, 25), 1, 5) == pytest.approx(0)

    def test_dual_elem_coefficients(self):
        """Test coefficients may be dual elements."""
        value = gaussian_disk_integral(DualElem.of(5, 1, 2), DualElem.trivial(5), 0, 5)
        assert value == pytest.approx(0.2)

    def test_lambda_modulus(self):
        """Test |Λ(a, b)| = |a|_p^{-1/2}."""
        for a in (Fraction(1, 3), Fraction(2, 27), Fraction(5, 81)):
            assert abs(gaussian_lambda(a, Fraction(1, 9), 3)) == pytest.approx(gaussian_modulus(a, 3))

    def test_lambda_zero(self):
        """Test Λ needs a ≠ 0."""
        with pytest.raises(ZeroArgumentError):
            gaussian_lambda(0, 1, 3)

    def test_p_norm(self):
        """Test |2/9|₃ = 9 and |0| = 0."""
        assert p_norm(Fraction(2, 9), 3) == pytest.approx(9)
        assert p_norm(Fraction(0), 3) == 0


class TestOracle:
    @pytest.mark.parametrize(
        "a,b,gamma,prime",
        [
            (Fraction(1, 25), 0, 0, 5),
            (Fraction(0), Fraction(1, 5), 0, 5),
            (Fraction(2, 27), Fraction(1, 9), 0, 3),
            (Fraction(1, 125), Fraction(1, 25), 1, 5),
            (Fraction(1, 3), Fraction(2, 3), 0, 3),
        ],
    )
    def test_matches_closed_form(self, a, b, gamma, prime):
        """Test the Riemann sum agrees with the closed form."""
        poly = PhasePolynomial.quadratic(prime, a, b)
        oracle = riemann_oscillatory_oracle(poly, gamma=gamma)
        assert abs(oracle - gaussian_disk_integral(a, b, gamma, prime)) < 1e-9

    @pytest.mark.parametrize(
        "a,b,c,gamma,shift",
        [
            (Fraction(1, 25), Fraction(1, 5), 0, 0, 3),
            (Fraction(2, 125), Fraction(3, 25), Fraction(1, 5), 0, 7),
            (Fraction(1, 125), Fraction(1, 25), 0, 1, 10),
            (Fraction(4, 27), 0, Fraction(1, 9), 0, 5),
        ],
    )
    def test_translation_invariance(self, a, b, c, gamma, shift):
        """Test u ↦ u + t with t in the disk leaves the Riemann sum unchanged."""
        prime = 3 if Fraction(a).denominator % 3 == 0 else 5
        poly = PhasePolynomial.univariate(prime, [0, b, a, c])
        t = Fraction(shift)
        shifted = PhasePolynomial.univariate(prime, [
            c * t ** 3 + a * t * t + b * t,
            3 * c * t * t + 2 * a * t + b,
            3 * c * t + a,
            c,
        ])
        base = riemann_oscillatory_oracle(poly, gamma=gamma)
        assert abs(riemann_oscillatory_oracle(shifted, gamma=gamma) - base) < 1e-12

    def test_cap(self):
        """Test the evaluation cap."""
        poly = PhasePolynomial.quadratic(5, Fraction(1, 5 ** 6), 0)
        with pytest.raises(ResourceCapError):
            riemann_oscillatory_oracle(poly, cap=1000)

    def test_disk_integral_cubic(self):
        """Test a cubic phase with p-integral coefficients integrates to 1."""
        poly = PhasePolynomial.univariate(3, [0, 3, 0, 6])
        assert disk_integral(poly) == pytest.approx(1)

    def test_disk_integral_constant_term(self):
        """Test the constant term contributes its phase."""
        poly = PhasePolynomial.univariate(5, [Fraction(1, 5), 0, Fraction(1, 25)])
        expected = 0.2 * complex(math.cos(2 * math.pi / 5), math.sin(2 * math.pi / 5))
        assert disk_integral(poly) == pytest.approx(expected)


class TestAuxLemmas:
    def test_ids(self):
        """Test the four identities are registered."""
        assert aux_lemma_ids() == ["lemaaux", "lemaauxG53", "lemaauxG54", "lemaauxG56"]

    def test_lemaaux(self):
        """Test ∫|∫e(P)|² = 1/3 for (ξ₃, ξ₄) = (1/3, 1) and (1, 1/3)."""
        for text in ("1/3,1", "1,1/3"):
            report = verify_aux_lemma("lemaaux", DualPoint.parse(text, 3))
            assert report.lhs == pytest.approx(1 / 3)
            assert report.rhs == pytest.approx(1 / 3)

    def test_lemaaux_g56(self):
        """Test the G^{5,6} identity at norm 9."""
        report = verify_aux_lemma("lemaauxG56", DualPoint.parse("1/9,1,1", 3))
        assert report.lhs == pytest.approx(1 / 9)
        assert report.rhs == pytest.approx(1 / 9)

    def test_lemaaux_g53(self):
        """Test the G^{5,3} identity with both parameters nontrivial."""
        report = verify_aux_lemma("lemaauxG53", DualPoint.parse("1/9,1/3", 3))
        assert report.lhs == pytest.approx(report.rhs)

    def test_g54_regime(self):
        """Test the G^{5,4} identity is only claimed when |ξ₃| dominates."""
        assert lemma_regime_ok("lemaauxG54", DualPoint.parse("1,1,1/3", 3))
        assert not lemma_regime_ok("lemaauxG54", DualPoint.parse("1/3,1,1", 3))
        report = verify_aux_lemma("lemaauxG54", DualPoint.parse("1,1,1/3", 3))
        assert report.regime_ok
        assert report.lhs == pytest.approx(1 / 3)

    def test_wrong_arity(self):
        """Test the parameter count is checked."""
        with pytest.raises(ValueError, match="takes 2 parameters"):
            verify_aux_lemma("lemaaux", DualPoint.parse("1/3", 3))

    def test_unknown(self):
        """Test unknown lemma ids are rejected."""
        with pytest.raises(ValueError, match="Unknown lemma"):
            verify_aux_lemma("lemaauxG57", DualPoint.parse("1/3", 3))
