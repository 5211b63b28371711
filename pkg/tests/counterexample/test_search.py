"""
Tests for the exhaustive search over admissible idempotents.
"""

import pytest

from counterexample.scene import build_scene, restrict_lambda
from counterexample.search import admissible_coefficients, brute_force_split_search, is_admissible
from exactfield.fields import Field
from gradalg.exceptions import SearchSpaceTooLarge

F2 = Field.prime_field(2)
F3 = Field.prime_field(3)


class TestBruteForceSplitSearch:
    """Test cases for brute_force_split_search."""

    def test_radius_one_over_f2(self):
        """Test the complete enumeration on the smallest window."""
        report = brute_force_split_search(1, F2)
        assert report.parameters == 6
        assert report.admissible == 8
        assert report.reaching_edge == 8
        assert report.interior_minimal == 0
        assert report.empty_support == 0
        assert report.min_max_depth == 0
        assert report.confirms_descent
        assert report.supports == {"{-1,0,1}": 2, "{-1,0}": 2, "{-1,1}": 2, "{-1}": 2}
        assert report.restricted_admissible is None
        assert report.restricts_admissibly is None

    def test_radius_one_over_f3(self):
        """Test the enumeration over F_3."""
        report = brute_force_split_search(1, F3)
        assert report.admissible == 18
        assert report.confirms_descent

    def test_thread_count_does_not_change_the_report(self, settings):
        """Test that partitioning the top row gives the same counts."""
        serial = brute_force_split_search(1, F3).as_dict()
        settings.GRADALG_THREADS = 3
        assert brute_force_split_search(1, F3).as_dict() == serial

    @pytest.mark.slow
    def test_radius_two(self):
        """Test that no admissible idempotent stops inside the radius 2 window."""
        report = brute_force_split_search(2, F2)
        assert report.parameters == 15
        assert report.admissible > 0
        assert report.confirms_descent
        assert report.restricts_admissibly

    @pytest.mark.slow
    def test_radius_three(self):
        """Test the radius 3 window over F_2."""
        report = brute_force_split_search(3, F2)
        assert report.parameters == 28
        assert report.admissible == 92288
        assert report.interior_minimal == 0
        assert report.confirms_descent
        assert report.restricted_admissible == 92288

    def test_radius_limit(self, settings):
        """Test that windows above the configured radius are refused."""
        settings.GRADALG_SEARCH_MAX_D = 1
        with pytest.raises(SearchSpaceTooLarge) as exc:
            brute_force_split_search(2, F2)
        assert exc.value.code == "search_space_too_large"
        assert exc.value.params == {'d': 2, 'max_d': 1}

    @pytest.mark.parametrize("field", [Field.prime_field(5), Field.rationals()])
    def test_unsupported_field(self, field):
        """Test that only F_2 and F_3 are searched."""
        with pytest.raises(SearchSpaceTooLarge) as exc:
            brute_force_split_search(1, field)
        assert exc.value.code == "unsupported_field"


class TestIsAdmissible:
    """Test cases for is_admissible."""

    def test_identity(self):
        """Test that the identity is admissible."""
        scene = build_scene(1, F3)
        assert is_admissible(scene, {(k, k): 1 for k in scene.degrees})

    def test_row_sum(self):
        """Test that f∘e = f needs every row to sum to one."""
        scene = build_scene(1, F3)
        assert not is_admissible(scene, {(k, k): 2 for k in scene.degrees})

    def test_idempotency(self):
        """Test a row summing to one that fails e² = e."""
        scene = build_scene(1, F3)
        lam = {(-1, -1): 1, (0, -1): 2, (0, 0): 2, (1, 1): 1}
        assert not is_admissible(scene, lam)

    def test_enumeration_is_admissible(self):
        """Test that every enumerated λ passes the direct check."""
        scene = build_scene(1, F2)
        found = list(admissible_coefficients(scene))
        assert len(found) == 8
        assert all(is_admissible(scene, lam) for lam in found)


class TestRestriction:
    """Test cases for restricting admissible idempotents to a smaller window."""

    @pytest.mark.slow
    @pytest.mark.parametrize("field", [F2, F3])
    def test_radius_two_to_one(self, field):
        """Test that every admissible e on radius 2 stays admissible on radius 1."""
        scene, smaller = build_scene(2, field), build_scene(1, field)
        found = 0
        for lam in admissible_coefficients(scene):
            assert is_admissible(smaller, restrict_lambda(scene, smaller, lam))
            found += 1
        assert found > 0

    def test_truncating_without_the_shift_breaks_the_counit(self):
        """Test that dropping only the outer degrees loses the row sums."""
        scene, smaller = build_scene(2, F2), build_scene(1, F2)
        lam = {(k, k): 1 for k in scene.degrees}
        lam.update({(0, -2): 1, (0, 0): 0})
        assert is_admissible(scene, lam)
        truncated = {(k, l): lam.get((k, l), 0) for k in smaller.degrees for l in smaller.row(k)}
        assert not is_admissible(smaller, truncated)
        assert is_admissible(smaller, restrict_lambda(scene, smaller, lam))
