"""
Unit tests for representation matrices, matrix coefficients and characters.
"""

import cmath
import itertools
import math
from fractions import Fraction

import numpy as np
import pytest

from pnilrep.duals import enumerate_dual_ball
from pnilrep.errors import IndexOutOfRangeError, InsufficientPrecisionError, ResourceCapError
from pnilrep.groups import GroupElement, identity, law_for, quotient_residues, star
from pnilrep.padic import rational_fractional_part
from pnilrep.reps import (
    character_closed_form,
    character_closed_form_residues,
    character_l2_norm,
    character_trace,
    character_trace_residues,
    class_function_l2_norm,
    expected_l2_norm,
    matrix_coefficient,
    monomial_generator,
    monomial_residues,
    monomial_table,
    realization_for,
    realization_summary,
    rep_matrix,
    rep_matrix_residues,
)


def e(value):
    return cmath.exp(2j * cmath.pi * value)


def element(label, values, precision=None):
    precision = precision or max(label.level, 1)
    return GroupElement.from_residues(label.law, label.prime, precision, values)


class TestRepMatrix:
    def test_identity(self, make_label):
        """Test π_ξ(e) = I."""
        label = make_label("g52", 3, "1,2/3,1,1/3,1/3")
        matrix = rep_matrix(label, identity(label.law, 3, 1))
        assert np.allclose(matrix.entries, np.eye(label.dim))

    def test_heisenberg_shift(self, make_label):
        """Test (1,0,0) acts on H₁ as the cyclic shift h ↦ h − 1."""
        label = make_label("h1", 3, "1,1,1/3")
        expected = np.array([[0, 0, 1], [1, 0, 0], [0, 1, 0]], dtype=complex)
        assert np.allclose(rep_matrix(label, element(label, (1, 0, 0))).entries, expected)

    def test_heisenberg_centre(self, make_label):
        """Test the centre acts by the scalar e(λz)."""
        label = make_label("h1", 3, "1,1,1/3")
        matrix = rep_matrix(label, element(label, (0, 0, 1))).entries
        assert np.allclose(matrix, e(1 / 3) * np.eye(3))

    def test_heisenberg_diagonal(self, make_label):
        """Test (0,1,0) acts by diag e(−λh)."""
        label = make_label("h1", 3, "1,1,1/3")
        matrix = rep_matrix(label, element(label, (0, 1, 0))).entries
        assert np.allclose(np.diag(matrix), [1, e(-1 / 3), e(-2 / 3)])

    def test_character_label(self, make_label):
        """Test a one-dimensional label is the character e(ξ·x) on the first stratum."""
        label = make_label("h1", 3, "1/3,2/3,1")
        matrix = rep_matrix(label, element(label, (1, 1, 2))).entries
        assert matrix.shape == (1, 1)
        assert matrix[0, 0] == pytest.approx(1)

    def test_unitary(self, make_label):
        """Test π_ξ(x) is unitary for a tilted G^{5,4} label."""
        label = make_label("g54", 5, "1,1,1,1/5,2/5")
        for values in [(1, 2, 3, 4, 0), (4, 4, 1, 0, 2)]:
            assert rep_matrix(label, element(label, values)).unitarity_residual() < 1e-10

    @pytest.mark.parametrize(
        "law_id,prime,text",
        [
            ("h1", 3, "1,1,2/3"),
            ("b4", 3, "1,1,1/3,1"),
            ("g52", 3, "1,1,2/3,1/3,1"),
            ("g53", 5, "1,1,1,1,1/5"),
            ("g54", 5, "1,1,1,2/5,1/5"),
            ("g54", 5, "1,1,1,1,2/5"),
            ("g54", 5, "1,1,1,3/25,1/5"),
            ("g54", 5, "1,1,1/25,1/5,2/5"),
            ("g55", 5, "1,1,1,1,1/5"),
            ("g56", 5, "1,1,1,1,1/5"),
        ],
    )
    def test_homomorphism(self, make_label, law_id, prime, text):
        """Test π(x ⋆ y) = π(x) π(y) on a grid of elements."""
        label = make_label(law_id, prime, text)
        d = label.law.dimension
        points = [tuple((2 * i + j * j) % prime for j in range(d)) for i in range(4)]
        for x, y in itertools.product(points, repeat=2):
            gx, gy = element(label, x), element(label, y)
            left = rep_matrix(label, star(gx, gy)).entries
            right = rep_matrix(label, gx).entries @ rep_matrix(label, gy).entries
            assert np.allclose(left, right), f"{x} * {y}"

    def test_insufficient_precision(self, make_label):
        """Test elements must carry level(ξ) digits."""
        label = make_label("h1", 3, "1,1,1/9")
        with pytest.raises(InsufficientPrecisionError):
            rep_matrix(label, GroupElement.from_residues(label.law, 3, 1, (1, 0, 0)))

    def test_law_mismatch(self, make_label):
        """Test elements of another law are rejected."""
        label = make_label("h1", 3, "1,1,1/3")
        with pytest.raises(ValueError):
            rep_matrix(label, identity(law_for("zp", 3), 3, 1))


class TestMonomial:
    def test_cycles(self, make_label):
        """Test the shift by 1 is a single 3-cycle."""
        label = make_label("h1", 3, "1,1,1/3")
        assert monomial_generator(label, element(label, (1, 0, 0))).cycles() == [[0, 2, 1]]

    def test_matches_dense(self, make_label):
        """Test the monomial form assembles to the dense matrix."""
        label = make_label("g56", 5, "1,1,1,1,1/5")
        x = element(label, (1, 2, 0, 3, 4))
        assert np.allclose(monomial_generator(label, x).to_array(), rep_matrix(label, x).entries)

    @pytest.mark.parametrize(
        "law_id,prime,text",
        [("h1", 3, "1,1,1/9"), ("g54", 5, "1,1,1,2/5,2/5"), ("g52", 3, "1,1,2/3,1/3,1")],
    )
    def test_table_matches_monomials(self, make_label, law_id, prime, text):
        """Test every row of the tabulated label agrees with the monomial matrix of its coset."""
        label = make_label(law_id, prime, text)
        table = monomial_table(label)
        assert table.columns.shape == (prime ** (label.law.dimension * label.level), label.dim)
        for i, x in enumerate(quotient_residues(label.law, prime, label.level)):
            mono = monomial_residues(label, x)
            assert tuple(table.columns[i]) == mono.columns
            assert np.allclose(table.phases[i], [phase.to_complex() for phase in mono.phases])
        assert monomial_table(label) is table

    def test_table_positions(self, make_label):
        """Test a finer quotient reads the rows of its reductions."""
        label = make_label("h1", 3, "1,1,1/3")
        table = monomial_table(label)
        rows = table.positions(2)
        for x, row in zip(quotient_residues(label.law, 3, 2), rows):
            assert tuple(table.columns[row]) == monomial_residues(label, tuple(c % 3 for c in x)).columns

    def test_table_cap(self, make_label):
        """Test the table size cap."""
        with pytest.raises(ResourceCapError):
            monomial_table(make_label("h1", 3, "1,1,1/9"), cap=1000)


class TestMatrixCoefficient:
    def test_entries(self, make_label):
        """Test coefficients agree with the matrix entries."""
        label = make_label("h1", 3, "1,1,1/3")
        x = element(label, (1, 2, 1))
        matrix = rep_matrix(label, x).entries
        for h, hp in itertools.product(range(3), repeat=2):
            assert matrix_coefficient(label, (h,), (hp,), x) == pytest.approx(matrix[h, hp])

    def test_out_of_range(self, make_label):
        """Test indices outside I_ξ raise."""
        label = make_label("h1", 3, "1,1,1/3")
        with pytest.raises(IndexOutOfRangeError):
            matrix_coefficient(label, (3,), (0,), element(label, (0, 0, 0)))


class TestRealization:
    def test_sections(self, make_label):
        """Test the realization chosen per family."""
        assert realization_for(make_label("h2", 3, "1,1,1,1,1/3")).sections == (0, 1)
        assert realization_for(make_label("g53", 5, "1,1,1,1,1/5")).sections == (0, 1)
        assert realization_for(make_label("b4", 3, "1,1,1/3,1")).sections == (0,)
        assert realization_for(make_label("h1", 3, "1,1,1")).sections == ()

    def test_tilted_summary(self, make_label):
        """Test G^{5,4} labels with ξ₅ nontrivial are tilted."""
        real = realization_for(make_label("g54", 5, "1,1,1,2/5,2/5"))
        assert real.tilt == "xi4"
        assert real.dilation == 2
        assert "tilt" in realization_summary(real)
        assert "dilated by 2" in realization_summary(real)
        assert realization_summary(realization_for(make_label("h1", 3, "1,1,1"))) is None


class TestCharacters:
    def test_trace_of_identity(self, make_label):
        """Test χ(e) = d_ξ."""
        label = make_label("h1", 3, "1,1,1/3")
        assert character_trace(label, identity(label.law, 3, 1)) == pytest.approx(3)

    def test_centre(self, make_label):
        """Test χ(0,0,1) = 3·e(1/3) on H₁."""
        label = make_label("h1", 3, "1,1,1/3")
        assert character_closed_form(label, element(label, (0, 0, 1))) == pytest.approx(3 * e(1 / 3))

    def test_off_centre_vanishes(self, make_label):
        """Test the H₁ character vanishes off the centre."""
        label = make_label("h1", 3, "1,1,1/3")
        assert character_closed_form(label, element(label, (1, 0, 0))) == pytest.approx(0)

    @pytest.mark.parametrize("law_id,prime", [("h1", 3), ("b4", 3), ("g52", 3)])
    def test_closed_form_matches_trace(self, law_id, prime):
        """Test the closed-form character equals the trace on every label of B(1)."""
        law = law_for(law_id)
        for label in enumerate_dual_ball(law, prime, 1):
            for x in quotient_residues(law, prime, 1):
                closed = character_closed_form_residues(label, x)
                assert abs(closed - character_trace_residues(label, x)) < 1e-9, f"{label} at {x}"

    def test_closed_form_matches_trace_g56(self, make_label):
        """Test the G^{5,6} character on a sample of the quotient."""
        label = make_label("g56", 5, "1,1,1,1,1/5")
        for i, x in enumerate(quotient_residues(label.law, 5, 1)):
            if i % 7:
                continue
            assert abs(character_closed_form_residues(label, x) - character_trace_residues(label, x)) < 1e-9

    def test_l2_norm(self, make_label):
        """Test ∫|χ|² = 1 for irreducible labels."""
        label = make_label("h1", 3, "1,1,1/3")
        assert character_l2_norm(label) == pytest.approx(1.0)
        assert expected_l2_norm(label) == 1

    def test_direct_sum_norm(self, make_label):
        """Test ∫|χ|² = 4 for the synthetic sum π ⊕ π."""
        label = make_label("h1", 3, "1,1,1/3")

        def doubled(x):
            return complex(np.trace(np.kron(np.eye(2), rep_matrix_residues(label, x))))

        assert class_function_l2_norm(label.law, 3, 1, doubled) == pytest.approx(4.0)

    def test_expected_l2_norm_reducible(self, make_label):
        """Test the split of the |ξ₄| > |ξ₅| family of G^{5,3}."""
        assert expected_l2_norm(make_label("g53", 5, "1,1,1,1/25,1/5")) == 5

    def test_expected_l2_norm_unknown(self, make_label):
        """Test G^{5,6} labels with ‖(ξ₃, ξ₄)‖ > |ξ₅| have no predicted norm."""
        assert expected_l2_norm(make_label("g56", 5, "1,1,1/25,1,1/5")) is None


def published_phase(xi, p, k, x, h):
    """The polynomial phase of the dilated G^{5,4} model at u = h/p^k, with ξ as exact rationals."""
    xi3, xi4, xi5 = xi[2], xi[3], xi[4]
    u = Fraction(h, p ** k)
    x1, x2, x3 = x[0], x[1], x[2]
    linear = sum((f * v for f, v in zip(xi, x)), Fraction(0))
    cubic = (xi5 ** 3 * x2 ** 3 + 3 * xi5 * x2 * u * u + 3 * xi5 ** 2 * x2 ** 2 * u) / (6 * xi4 * xi5)
    return linear + xi3 / xi4 * x2 * u + xi3 * xi5 / (2 * xi4) * x2 ** 2 + cubic + x3 * u


def published_matrix(xi, p, k, x):
    """(π(x)φ)(h) = e(P(x, h/p^k)) φ(h + p^k(ξ₄x₁ + ξ₅x₂)) on ℤ/p^k, indices as canonical residues."""
    size = p ** k
    step = (xi[3] * x[0] + xi[4] * x[1]) * size
    assert step.denominator == 1
    out = np.zeros((size, size), dtype=complex)
    for h in range(size):
        phase = rational_fractional_part(published_phase(xi, p, k, x, h), p).to_complex()
        out[h, (h + int(step)) % size] = phase
    return out


def published_character(label, x):
    """d·1[ξ₄x₁ + ξ₅x₂ ∈ ℤ_p]·e(const)·∫ over p^{−k}ℤ_p (normalized) for the ξ₅-nontrivial G^{5,4} labels."""
    p = label.prime
    f = [c.as_fraction() for c in label.xi]
    xi3, xi4, xi5 = f[2], f[3], f[4]
    k = max(c.level for c in label.xi.components[2:])
    x1, x2, x3 = x[0], x[1], x[2]
    if not rational_fractional_part(xi4 * x1 + xi5 * x2, p).is_zero:
        return 0j
    const = sum((c * v for c, v in zip(f, x)), Fraction(0))
    const += xi3 * xi5 / (2 * xi4) * x2 ** 2 + xi5 ** 2 / (6 * xi4) * x2 ** 3
    steps = p ** (k + 1)
    total = 0j
    for v in range(steps):
        u = Fraction(v, p ** k)
        g = x2 / (2 * xi4) * u * u + (xi5 / (2 * xi4) * x2 ** 2 + x3) * u + xi3 / xi4 * x2 * u
        total += rational_fractional_part(g, p).to_complex()
    return label.dim * rational_fractional_part(const, p).to_complex() * total / steps


class TestDilatedCartan:
    def test_shift_is_exact_division(self, make_label):
        """Test the dilated index moves by (ξ₄x₁ + ξ₅x₂)/p^{−k}."""
        label = make_label("g54", 5, "1,1,1,2/5,1/5")
        real = realization_for(label)
        assert real.is_dilated
        for x in [(1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (3, 4, 1, 2, 0)]:
            assert real.shift(x) == ((2 * x[0] + x[1]) % 5,)

    def test_xi5_dominant_shift(self, make_label):
        """Test the ξ₅-dominant branch uses the same exact shift."""
        label = make_label("g54", 5, "1,1,1,1/5,3/25")
        real = realization_for(label)
        assert real.tilt == "xi5"
        assert real.dilation == 3
        assert real.shift((1, 1, 0, 0, 0)) == ((5 + 3) % 25,)

    def test_xi3_dominant_not_dilated(self, make_label):
        """Test labels with ξ₃ dominating keep the tilted index."""
        real = realization_for(make_label("g54", 5, "1,1,1/25,2/5,1/5"))
        assert not real.is_dilated

    def test_dilated_coefficients(self, make_label):
        """Test row h of π(x) has its entry in column h − q(x)."""
        label = make_label("g54", 5, "1,1,1,2/5,1/5")
        x = element(label, (1, 1, 0, 0, 0))
        matrix = rep_matrix(label, x).entries
        for h in range(5):
            assert abs(matrix[h, (h - 3) % 5]) == pytest.approx(1)

    def test_polynomial_phase_is_not_a_representation(self, make_label):
        """Test the dilated model with the polynomial phase breaks π(x ⋆ y) = π(x)π(y)."""
        xi = [Fraction(0), Fraction(0), Fraction(0), Fraction(1), Fraction(1, 5)]
        law = law_for("g54")
        x = y = (0, 1, 0, 0, 0)
        xy = law.star_residues(x, y, 5 ** 3)
        assert not np.allclose(published_matrix(xi, 5, 1, xy), published_matrix(xi, 5, 1, x) @ published_matrix(xi, 5, 1, y))
        assert not np.allclose(published_matrix(xi, 5, 1, (0, 5, 0, 0, 0)), np.eye(5))
        label = make_label("g54", 5, "1,1,1,1,1/5")
        gx, gy = element(label, x), element(label, y)
        left = rep_matrix(label, star(gx, gy)).entries
        assert np.allclose(left, rep_matrix(label, gx).entries @ rep_matrix(label, gy).entries)

    def test_polynomial_phase_depends_on_representative(self):
        """Test h and h + p^k give different phases, so the model is not defined on ℤ/p^k."""
        xi = [Fraction(0), Fraction(0), Fraction(0), Fraction(1), Fraction(1, 5)]
        x = (0, 1, 0, 0, 0)
        gap = published_phase(xi, 5, 1, x, 5) - published_phase(xi, 5, 1, x, 0)
        assert not rational_fractional_part(gap, 5).is_zero

    @pytest.mark.parametrize("text", ["1,2/25,1,3/25,1/5", "1,1/5,1,2/25,4/5", "1,1,1,3/5,2/5"])
    def test_character_matches_published_display(self, make_label, rng, text):
        """Test the ξ₄-dominant character against the display with its integral over p^{−k}ℤ_p."""
        label = make_label("g54", 5, text)
        k = label.index_set[0]
        size = 5 ** k
        n4, n5 = label.xi[3].numer_at(k), label.xi[4].numer_at(k)
        modulus = 5 ** label.level
        for _ in range(15):
            x2, x3, x4, x5 = (int(v) for v in rng.integers(0, modulus, size=4))
            x1 = (-n5 * pow(n4, -1, size) * x2 + size * int(rng.integers(0, 5))) % modulus
            x = (x1, x2, x3, x4, x5)
            closed = character_closed_form_residues(label, x)
            assert closed == pytest.approx(published_character(label, x), abs=1e-9), x
            assert closed == pytest.approx(character_trace_residues(label, x), abs=1e-9), x
        off = (1, 0, 0, 0, 0)
        assert character_closed_form_residues(label, off) == pytest.approx(published_character(label, off))

    def test_xi5_dominant_character_not_scalar_along_x1(self, make_label):
        """Test |χ(1,0,0,0,0)| = √5 < d on the ξ₄-trivial label, matching the trace."""
        label = make_label("g54", 5, "1,1,1,1,1/5")
        x = (1, 0, 0, 0, 0)
        closed = character_closed_form_residues(label, x)
        assert abs(closed) == pytest.approx(math.sqrt(5))
        assert closed == pytest.approx(character_trace_residues(label, x))
