"""
Unit tests for the VT operators, sub-Laplacian symbols and spectra.
"""

from fractions import Fraction

import numpy as np
import pytest

from pnilrep.errors import NonGeneratorDirectionError, UnsupportedLawError
from pnilrep.groups import GroupElement, law_for, quotient_residues
from pnilrep.models import SpectralRegime
from pnilrep.operators import (
    check_directions,
    closed_form_spectrum,
    directional_vt_apply,
    eigenfunction,
    frequency_weight,
    hypoellipticity_margin,
    integrate_locally_constant,
    japanese_bracket,
    numeric_eigenfunctions,
    spectral_decomposition,
    spectrum_report,
    sublaplacian_symbol,
    symbol_blocks,
    vt_apply,
    vt_constant,
    vt_offset,
)
from pnilrep.padic import DualElem, DualPoint
from pnilrep.reps import TestFunction, matrix_coefficient_function


def points(law, prime, m, step=1):
    return [GroupElement.from_residues(law, prime, max(m, 1), x) for i, x in enumerate(quotient_residues(law, prime, m)) if i % step == 0]


class TestConstants:
    def test_offset(self):
        """Test (1 − 1/3)/(1 − 1/9) = 3/4."""
        assert vt_offset(3, 1, 1) == pytest.approx(0.75)

    def test_constant(self):
        """Test C_{1,1} = −9/4 at p = 3."""
        assert vt_constant(3, 1, 1) == pytest.approx(-2.25)

    def test_frequency_weight(self):
        """Test |ω|^α minus the offset, and 0 on ℤ_p."""
        assert frequency_weight(0, 3, 1) == 0
        assert frequency_weight(2, 3, 1) == 0
        assert frequency_weight(Fraction(1, 3), 3, 1) == pytest.approx(2.25)

    def test_japanese_bracket(self):
        """Test ⟨ξ⟩ = 1 + ‖ξ‖ for α = 1."""
        assert japanese_bracket(DualPoint.parse("1/9,1", 3), 1) == pytest.approx(10)

    def test_alpha_must_be_positive(self):
        """Test α ≤ 0 is rejected."""
        with pytest.raises(ValueError, match="positive"):
            japanese_bracket(DualPoint.parse("1", 3), 0)


class TestVTApply:
    def test_constant_function(self):
        """Test D^α annihilates constants."""
        law = law_for("zp")
        f = TestFunction.constant(law, 3, 2)
        for x in points(law, 3, 2):
            assert vt_apply(law, 1.5, f, x) == pytest.approx(0)

    def test_character_eigenvalue(self):
        """Test D¹ e(x/3) = 2.25·e(x/3) on ℤ₃."""
        law = law_for("zp")
        f = TestFunction.from_residue_callable(law, 3, 1, lambda x: np.exp(2j * np.pi * x[0] / 3))
        for x in points(law, 3, 1):
            assert vt_apply(law, 1, f, x) == pytest.approx(2.25 * f(x))

    def test_matrix_coefficient_eigenvalue(self, make_label):
        """Test D^α acts on the coefficients of an irreducible label by p^{Lα} − offset."""
        label = make_label("h1", 3, "1,1,1/3")
        f = TestFunction.from_callable(label.law, 3, 1, matrix_coefficient_function(label, (1,), (0,)))
        expected = 3 - vt_offset(3, 1, 3)
        for x in points(label.law, 3, 1, step=4):
            assert vt_apply(label.law, 1, f, x) == pytest.approx(expected * f(x))

    def test_directional_character(self, make_label):
        """Test ∂_X e(x₁/3) = 2.25·e(x₁/3) and ∂_Y of it vanishes."""
        law = law_for("h1")
        f = TestFunction.from_residue_callable(law, 3, 1, lambda x: np.exp(2j * np.pi * x[0] / 3))
        for x in points(law, 3, 1, step=5):
            assert directional_vt_apply(law, (1, 0), 1, f, x) == pytest.approx(2.25 * f(x))
            assert directional_vt_apply(law, (0, 1), 1, f, x) == pytest.approx(0)

    def test_directional_non_generator(self):
        """Test directions outside the generating stratum are rejected."""
        law = law_for("h1")
        f = TestFunction.constant(law, 3, 1)
        with pytest.raises(NonGeneratorDirectionError):
            directional_vt_apply(law, (0, 0, 1), 1, f, points(law, 3, 1)[0])

    def test_integrate(self):
        """Test the exact average of a character over ℤ₃² is 0 and of 1 is 1."""
        assert integrate_locally_constant(lambda y: 1, 3, 2, 1) == pytest.approx(1)
        value = integrate_locally_constant(lambda y: np.exp(2j * np.pi * y[0] / 3), 3, 2, 1)
        assert value == pytest.approx(0)


class TestDirections:
    def test_default(self):
        """Test the default directions are the unit vectors."""
        assert check_directions(law_for("b4"), 3, None) == [(1, 0), (0, 1)]

    def test_not_spanning(self):
        """Test collections that miss the stratum modulo p are rejected."""
        with pytest.raises(NonGeneratorDirectionError):
            check_directions(law_for("h1"), 3, [(1, 0), (2, 0)])
        with pytest.raises(NonGeneratorDirectionError):
            check_directions(law_for("h1"), 3, [(1, 0), (3, 3)])

    def test_mixed(self):
        """Test mixed directions that span are kept."""
        assert check_directions(law_for("h1"), 3, [(1, 1), (1, 2)]) == [(1, 1), (1, 2)]


class TestSymbols:
    def test_trivial_label(self, make_label):
        """Test the trivial label has spectrum {0}."""
        label = make_label("h1", 3, "1,1,1")
        assert closed_form_spectrum(label.law, None, 1, label) == [0]
        assert sublaplacian_symbol(label.law, None, 1, label).eigenvalues() == pytest.approx([0])

    def test_abelian(self, make_label):
        """Test ξ = (1/3, 1/9) on ℤ₃² gives 2.25 + 8.25."""
        label = make_label("zp", 3, "1/3,1/9", dim=2)
        assert closed_form_spectrum(label.law, None, 1, label) == pytest.approx([10.5])
        assert sublaplacian_symbol(label.law, None, 1, label).eigenvalues() == pytest.approx([10.5])

    def test_heisenberg_schrodinger(self, make_label):
        """Test λ = 1/3 on H₁: closed form 0, 4.5, 4.5 with matching trace."""
        label = make_label("h1", 3, "1,1,1/3")
        decomposition = spectral_decomposition(label, None, 1)
        assert decomposition.regime is SpectralRegime.SCHRODINGER
        assert decomposition.values() == pytest.approx([0, 4.5, 4.5])
        entry = next(e for e in decomposition.entries if e.h_prime == (1,))
        assert entry.value == pytest.approx(4.5)
        assert entry.frequencies[0] == DualElem.of(3, 2, 1)
        report = spectrum_report(label.law, None, 1, label)
        assert report.regime == "schrodinger"
        assert sum(report.eigenvalues_numeric) == pytest.approx(9)
        assert report.passed

    def test_hermitian(self, make_label):
        """Test the symbol is Hermitian for a G^{5,4} label."""
        label = make_label("g54", 5, "1,1,1,1/5,2/5")
        symbol = sublaplacian_symbol(label.law, None, 0.7, label)
        assert symbol.hermitian_residual() < 1e-9
        assert min(symbol.eigenvalues()) > 0

    def test_blocks(self, make_label):
        """Test the H₁ symbol is a single block and a character a 1×1 one."""
        assert symbol_blocks(make_label("h1", 3, "1,1,1/3"), None) == [[0, 1, 2]]
        assert symbol_blocks(make_label("h1", 3, "1/3,1,1"), None) == [[0]]

    def test_label_law_mismatch(self, make_label):
        """Test symbols need a label of the same law."""
        with pytest.raises(ValueError):
            sublaplacian_symbol(law_for("b4"), None, 1, make_label("h1", 3, "1,1,1/3"))

    def test_g56_has_no_closed_form(self, make_label):
        """Test the G^{5,6} closed form is refused."""
        label = make_label("g56", 5, "1,1,1,1,1/5")
        with pytest.raises(UnsupportedLawError):
            closed_form_spectrum(label.law, None, 1, label)

    def test_g56_bound(self, make_label):
        """Test G^{5,6} reports positive numeric eigenvalues."""
        label = make_label("g56", 5, "1,1,1,1,1/5")
        report = spectrum_report(label.law, None, 1, label)
        assert report.regime == SpectralRegime.NUMERIC.value
        assert report.eigenvalues_closed_form == []
        assert all(row.bound_ok for row in report.rows)
        assert report.passed


class TestEigenfunctions:
    def test_character(self, make_label):
        """Test e_ξ of a character satisfies L e = λ e."""
        label = make_label("h1", 3, "1/3,1,1")
        ef = eigenfunction(label, None, 1, ())
        assert ef.eigenvalue == pytest.approx(2.25)
        f = ef.to_test_function()
        for x in points(label.law, 3, 1, step=3):
            total = sum(directional_vt_apply(label.law, w, 1, f, x) for w in [(1, 0), (0, 1)])
            assert total == pytest.approx(ef.eigenvalue * f(x))

    def test_schrodinger_refused(self, make_label):
        """Test closed eigenfunctions are refused in the Schrödinger regime."""
        with pytest.raises(ValueError, match="regime"):
            eigenfunction(make_label("h1", 3, "1,1,1/3"), None, 1, (0,))

    def test_numeric(self, make_label):
        """Test numeric eigenfunctions of the H₁ symbol are eigenfunctions of L."""
        label = make_label("h1", 3, "1,1,1/3")
        symbol = sublaplacian_symbol(label.law, None, 1, label)
        for ef in numeric_eigenfunctions(symbol, (0,)):
            f = ef.to_test_function()
            assert f.l2_norm_squared() == pytest.approx(1.0)
            for x in points(label.law, 3, 1, step=4):
                total = sum(directional_vt_apply(label.law, w, 1, f, x) for w in [(1, 0), (0, 1)])
                assert total == pytest.approx(ef.eigenvalue * f(x), abs=1e-9)


class TestHypoelliptic:
    def test_h1_margin(self):
        """Test c* on B(1) of H₁ is attained at a character."""
        report = hypoellipticity_margin(law_for("h1"), 3, 1, 1)
        assert len(report.entries) == 10
        assert report.c_star == pytest.approx(0.75)
        assert report.argmin == "1,1/3,1"
        assert report.passed

    def test_level_zero(self):
        """Test the margin needs n ≥ 1."""
        with pytest.raises(ValueError, match="level >= 1"):
            hypoellipticity_margin(law_for("h1"), 3, 1, 0)
