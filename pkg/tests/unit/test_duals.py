"""
Unit tests for dual membership, label dimensions and the dual balls.
"""

import pytest

from pnilrep.duals import (
    CHARACTER_BRANCH,
    atlas_for,
    canonical_tails,
    enumerate_dual_ball,
    label_for,
    membership,
    peter_weyl_check,
    provenance_notes,
    rep_dimension,
    tails,
    tails_of_level,
)
from pnilrep.errors import IndexOutOfRangeError, InvalidPrimeError, NotInDualError, ResourceCapError
from pnilrep.groups import available_laws, law_for
from pnilrep.padic import DualElem, DualPoint


def point(text, prime):
    return DualPoint.parse(text, prime)


class TestTails:
    def test_levels(self):
        """Test level-k tails have p^k − p^{k−1} elements."""
        assert len(tails_of_level(3, 0)) == 1
        assert len(tails_of_level(3, 2)) == 6
        assert len(tails(3, 2)) == 9

    def test_canonical(self):
        """Test canonical representatives of ℚ₃/3⁻¹ℤ₃ up to norm 9."""
        reps = canonical_tails(3, 2, 1)
        assert reps == (DualElem.trivial(3), DualElem.of(3, 1, 2), DualElem.of(3, 2, 2))
        assert all(r.is_canonical_mod(1) for r in reps)

    def test_canonical_without_constraint(self):
        """Test m = 0 gives every tail."""
        assert canonical_tails(5, 1, 0) == tails(5, 1)


class TestMembership:
    def test_heisenberg_member(self):
        """Test (1/9, 1, 1/3) is a canonical H₁ label."""
        result = membership(law_for("h1"), point("1/9,1,1/3", 3))
        assert result
        assert result.branch == "A1"

    def test_heisenberg_non_member(self):
        """Test (1/3, 1, 1/3) is not canonical."""
        assert not membership(law_for("h1"), point("1/3,1,1/3", 3))

    def test_characters(self):
        """Test points with trivial centre are characters."""
        result = membership(law_for("h1"), point("2/3,1/9,1", 3))
        assert result.branch == CHARACTER_BRANCH

    def test_abelian(self):
        """Test every point of ℤ_p^d is a character."""
        assert membership(law_for("zp", 2), point("1/27,2/3", 3)).branch == CHARACTER_BRANCH

    def test_wrong_arity(self):
        """Test the point needs d components."""
        with pytest.raises(ValueError, match="components"):
            membership(law_for("h1"), point("1,1/3", 3))

    def test_g52_branches(self):
        """Test the |ξ₄| > |ξ₅| and |ξ₄| ≤ |ξ₅| families of G^{5,2}."""
        g52 = law_for("g52")
        assert membership(g52, point("1,1,2/3,1/3,1", 3)).branch == "A2"
        assert membership(g52, point("1,2/3,1,1/3,1/3", 3)).branch == "A3"
        assert not membership(g52, point("1,1,1/3,1/3,1/3", 3))

    def test_g54_xi3_domination(self):
        """Test ξ₃ must vanish or dominate (ξ₄, ξ₅) on G^{5,4}."""
        g54 = law_for("g54")
        assert membership(g54, point("1,1,1/25,1/5,1/5", 5)).branch == "A4"
        assert not membership(g54, point("1,1,1/5,1/5,1/5", 5))

    def test_label_for_rejects(self):
        """Test label_for raises for non-members."""
        with pytest.raises(NotInDualError):
            label_for(law_for("h1"), point("1/3,1,1/3", 3))


class TestDimensions:
    def test_heisenberg(self):
        """Test d_ξ = |λ| on H₁."""
        assert rep_dimension(law_for("h1"), point("1,1,1/9", 3)) == 9
        assert rep_dimension(law_for("h1"), point("1,1,1", 3)) == 1

    def test_higher_heisenberg(self):
        """Test d_ξ = |λ|^d on H₂."""
        assert rep_dimension(law_for("h2"), point("1,1,1,1,1/3", 3)) == 9

    def test_g53_double_family(self):
        """Test d_ξ = |ξ₄||ξ₅| when |ξ₄| > |ξ₅| > 1."""
        label = label_for(law_for("g53"), point("1,1,1,1/25,1/5", 5))
        assert label.branch == "A2"
        assert label.index_set == (2, 1)
        assert label.dim == 125

    def test_g53_xi4_trivial(self):
        """Test d_ξ = |ξ₅|² when ξ₄ is trivial."""
        assert rep_dimension(law_for("g53"), point("1,1,1,1,1/5", 5)) == 25


class TestRepLabel:
    def test_indices(self, make_label):
        """Test the canonical order of I_ξ."""
        label = make_label("g53", 5, "1,1,1,1/25,1/5")
        indices = label.indices()
        assert len(indices) == 125
        assert indices[:2] == [(0, 0), (0, 1)]
        assert label.index_position((1, 0)) == 5

    def test_check_index(self, make_label):
        """Test out-of-range indices are rejected."""
        label = make_label("h1", 3, "1,1,1/3")
        assert label.check_index([2]) == (2,)
        with pytest.raises(IndexOutOfRangeError):
            label.check_index((3,))
        with pytest.raises(IndexOutOfRangeError):
            label.check_index((0, 0))

    def test_str(self, make_label):
        """Test the printed form."""
        assert str(make_label("h1", 3, "1,1,1/3")) == "h1[1,1,1/3]"


class TestDualBall:
    def test_h1_level_one(self):
        """Test B(1) of H₁ at p = 3 has 9 characters and 2 three-dimensional labels."""
        labels = enumerate_dual_ball(law_for("h1"), 3, 1)
        assert len(labels) == 11
        assert sorted(label.dim for label in labels) == [1] * 9 + [3, 3]
        assert labels[0].is_trivial

    def test_g52_level_one(self):
        """Test B(1) of G^{5,2} at p = 3 has 51 labels and Σd² = 243."""
        report = peter_weyl_check(law_for("g52"), 3, 1)
        assert report.label_count == 51
        assert report.sum_d_squared == 243
        assert report.passed
        assert report.branch_counts == {"A2": 6, "A3": 18, "chars": 27}

    def test_h2_level_one(self):
        """Test Σd² = 243 for H₂ at p = 3."""
        assert peter_weyl_check(law_for("h2"), 3, 1).sum_d_squared == 243

    def test_level_zero(self):
        """Test B(0) is the trivial representation alone."""
        labels = enumerate_dual_ball(law_for("g56"), 5, 0)
        assert len(labels) == 1
        assert labels[0].is_trivial

    def test_every_law_level_one(self):
        """Test the Peter–Weyl count at n = 1 for every law at its smallest prime."""
        for law in available_laws():
            report = peter_weyl_check(law, law.min_prime, 1)
            assert report.passed, f"{law.name}: {report.sum_d_squared} != {report.expected}"

    def test_members_are_unique(self):
        """Test every label is enumerated once and passes membership."""
        law = law_for("g55")
        labels = enumerate_dual_ball(law, 5, 1)
        keys = [label.xi.key for label in labels]
        assert len(set(keys)) == len(keys)
        assert all(membership(law, label.xi) for label in labels[:200])

    @pytest.mark.parametrize("law_id", ["h1", "b4", "zp"])
    def test_balls_are_nested(self, law_id):
        """Test B(1) ⊆ B(2) as labels, with the same branch and index set."""
        law = law_for(law_id)
        outer = {label.xi.key: label for label in enumerate_dual_ball(law, 3, 2)}
        for label in enumerate_dual_ball(law, 3, 1):
            assert label.xi.key in outer, str(label)
            assert outer[label.xi.key].branch == label.branch
            assert outer[label.xi.key].index_set == label.index_set

    @pytest.mark.slow
    @pytest.mark.parametrize("law_id", ["h1", "b4", "g52"])
    def test_level_two(self, law_id):
        """Test the Peter–Weyl count at n = 2, p = 3."""
        assert peter_weyl_check(law_for(law_id), 3, 2).passed

    def test_cap(self):
        """Test the enumeration cap."""
        with pytest.raises(ResourceCapError):
            enumerate_dual_ball(law_for("g52"), 3, 2, cap=1000)

    def test_invalid_prime(self):
        """Test G^{5,4} at p = 3 is rejected before enumeration."""
        with pytest.raises(InvalidPrimeError):
            enumerate_dual_ball(law_for("g54"), 3, 1)

    def test_negative_level(self):
        """Test n must be non-negative."""
        with pytest.raises(ValueError, match="non-negative"):
            enumerate_dual_ball(law_for("h1"), 3, -1)


class TestAtlas:
    def test_provenance(self):
        """Test laws with a documented reading of their index sets expose it."""
        assert "g56" in provenance_notes(law_for("g56"))
        assert provenance_notes(law_for("h1")) == {}

    def test_classify_matches_generate(self):
        """Test every generated point of B(1) of B₄ classifies."""
        atlas = atlas_for(law_for("b4"))
        for components in atlas.generate(3, 1):
            assert atlas.classify(DualPoint(tuple(components))) is not None
