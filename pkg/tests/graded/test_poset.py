"""
Tests for poset-graded algebras built from idempotent decompositions.
"""

import pytest

from exactfield.fields import Field
from graded.poset import build_poset_graded
from gradalg.exceptions import IdempotentError, TriangularityViolation
from tests.exactfield.factories import lower_triangular
from tests.graded.factories import TriangularFactory


class TestBuildPosetGraded:
    """Test cases for build_poset_graded."""

    def test_components(self):
        """Test that each arrow λ -> μ carries e_μ A e_λ."""
        algebra = TriangularFactory()
        assert algebra.dims == {"1->1": 1, "1->2": 1, "2->2": 1}
        assert algebra.local_units == {"1": (1,), "2": (1,)}

    def test_triangularity_violation(self):
        """Test that e_2 A e_1 ≠ 0 needs 1 ≤ 2."""
        ordinary = lower_triangular(Field.rationals())
        with pytest.raises(TriangularityViolation) as exc:
            build_poset_graded(
                ordinary, {"1": (1, 0, 0), "2": (0, 0, 1)}, ["1", "2"], [("1", "1"), ("2", "2")]
            )
        assert exc.value.params['source'] == "1"
        assert exc.value.params['target'] == "2"

    def test_incomplete_idempotents(self):
        """Test that the idempotents must sum to 1."""
        ordinary = lower_triangular(Field.rationals())
        with pytest.raises(IdempotentError) as exc:
            build_poset_graded(
                ordinary, {"1": (1, 0, 0), "2": (0, 0, 0)}, ["1", "2"], [("1", "1"), ("2", "2"), ("1", "2")]
            )
        assert exc.value.code == "not_complete"

    def test_non_idempotent(self):
        """Test that each e_λ must be idempotent."""
        ordinary = lower_triangular(Field.rationals())
        with pytest.raises(IdempotentError) as exc:
            build_poset_graded(ordinary, {"1": (2, 0, 0), "2": (0, 0, 1)}, ["1", "2"], [("1", "1"), ("2", "2"), ("1", "2")])
        assert exc.value.code == "not_idempotent"

    def test_index_mismatch(self):
        """Test that the idempotents must be indexed by the poset."""
        ordinary = lower_triangular(Field.rationals())
        with pytest.raises(IdempotentError) as exc:
            build_poset_graded(ordinary, {"1": (1, 0, 1)}, ["1", "2"], [("1", "1"), ("2", "2"), ("1", "2")])
        assert exc.value.code == "index_mismatch"
