"""
Tests for lifting, complete primitive sets, locality and decompositions.
"""

import pytest

from exactfield.fields import Field
from gradalg.exceptions import InputNotIdempotentModJ, NonSplitSemisimpleQuotient
from idempotents.decomposition import complete_primitive_set, decompose_projective, is_local
from idempotents.lifting import lift_idempotent, lift_orthogonal
from radical.algorithms import algebra_radical
from tests.exactfield.factories import (
    GroupAlgebraFactory,
    LowerTriangularFactory,
    TruncatedPolynomialFactory,
    gaussian_rationals,
)
from tests.graded.factories import TriangularFactory


class TestLifting:
    """Test cases for idempotent lifting modulo the radical."""

    def test_lift_to_unit(self):
        """Test that 1 + x lifts to 1 in K[x]/(x^3)."""
        algebra = TruncatedPolynomialFactory()
        radical = algebra_radical(algebra)
        assert lift_idempotent(algebra, (1, 1, 0), radical) == algebra.one

    def test_not_idempotent_mod_radical(self):
        """Test that 2 is refused."""
        algebra = TruncatedPolynomialFactory()
        with pytest.raises(InputNotIdempotentModJ):
            lift_idempotent(algebra, (2, 0, 0), algebra_radical(algebra))

    def test_lift_orthogonal(self):
        """Test that lifted representatives are orthogonal and complete."""
        algebra = LowerTriangularFactory()
        radical = algebra_radical(algebra)
        first, second = lift_orthogonal(algebra, [(1, 1, 0), (0, 0, 1)], radical, complete=True)
        assert algebra.mul(first, first) == first
        assert algebra.mul(second, second) == second
        assert algebra.mul(first, second) == algebra.zero
        assert algebra.add(first, second) == algebra.one

    def test_incomplete_representatives(self):
        """Test that the last representative must complete the sum mod J."""
        algebra = LowerTriangularFactory()
        with pytest.raises(InputNotIdempotentModJ):
            lift_orthogonal(algebra, [(1, 0, 0), (0, 0, 0)], algebra_radical(algebra), complete=True)


class TestCompletePrimitiveSet:
    """Test cases for complete_primitive_set."""

    def test_local_algebra(self):
        """Test that a local algebra has the single idempotent 1."""
        algebra = TruncatedPolynomialFactory()
        idempotents = complete_primitive_set(algebra)
        assert idempotents.elements == (algebra.one,)
        assert idempotents.primitive == (True,)

    def test_triangular(self):
        """Test two primitive idempotents in triangular matrices."""
        idempotents = complete_primitive_set(LowerTriangularFactory())
        assert len(idempotents) == 2
        assert idempotents.is_idempotent
        assert idempotents.is_orthogonal
        assert idempotents.is_complete
        assert idempotents.primitive == (True, True)

    def test_group_algebra_in_characteristic_two(self):
        """Test that F_2[C_2] is local."""
        idempotents = complete_primitive_set(GroupAlgebraFactory(field=Field.prime_field(2)))
        assert len(idempotents) == 1

    def test_non_split(self):
        """Test that Q(i) has no complete primitive set over Q."""
        with pytest.raises(NonSplitSemisimpleQuotient):
            complete_primitive_set(gaussian_rationals())

    def test_explicit_seed_recorded(self):
        """Test that the seed is reported."""
        idempotents = complete_primitive_set(GroupAlgebraFactory(), seed=7)
        assert idempotents.seed == 7
        assert idempotents.as_dict()['complete']


class TestIsLocal:
    """Test cases for locality certificates."""

    def test_local(self):
        """Test K[x]/(x^3)."""
        cert = is_local(TruncatedPolynomialFactory())
        assert cert
        assert cert.split
        assert cert.radical_dim == 2

    def test_not_local(self):
        """Test triangular matrices."""
        cert = is_local(LowerTriangularFactory())
        assert not cert
        assert cert.quotient_dim == 2

    def test_division_algebra_is_local_but_not_split(self):
        """Test Q(i)."""
        cert = is_local(gaussian_rationals())
        assert cert.is_local
        assert not cert.split


class TestDecomposeProjective:
    """Test cases for decompose_projective."""

    def test_regular_triangular_module(self):
        """Test that the triangular regular module has two summands."""
        algebra = TriangularFactory()
        decomposition = decompose_projective(algebra.regular_module())
        assert len(decomposition.summands) == 2
        assert sorted(decomposition.dims()) == [1, 2]
        for summand in decomposition.summands:
            composite = summand.projection.compose(summand.inclusion)
            assert composite.as_vector() == summand.module.identity().as_vector()
