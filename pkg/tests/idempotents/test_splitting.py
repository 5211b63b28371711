"""
Tests for primitive idempotents of split semisimple algebras.
"""

from fractions import Fraction

import pytest

from exactfield.fields import Field
from gradalg.exceptions import NonSplitSemisimpleQuotient
from idempotents.splitting import Splitter, derive_seed, factor_idempotents, minimal_polynomial
from tests.exactfield.factories import GroupAlgebraFactory, gaussian_rationals


class TestMinimalPolynomial:
    """Test cases for minimal polynomials."""

    def test_group_element(self):
        """Test that g in Q[C_2] has minimal polynomial t² − 1."""
        algebra = GroupAlgebraFactory()
        assert minimal_polynomial(algebra, algebra.basis_vector(1), algebra.one) == [-1, 0, 1]

    def test_scalar(self):
        """Test that the identity has minimal polynomial t − 1."""
        algebra = GroupAlgebraFactory()
        assert minimal_polynomial(algebra, algebra.one, algebra.one) == [-1, 1]


class TestFactorIdempotents:
    """Test cases for idempotents from coprime factors."""

    def test_split_by_group_element(self):
        """Test that t² − 1 = (t − 1)(t + 1) gives (1 ± g)/2."""
        algebra = GroupAlgebraFactory()
        parts = factor_idempotents(algebra, algebra.basis_vector(1), algebra.one)
        half = Fraction(1, 2)
        assert sorted(parts) == [(half, -half), (half, half)]

    def test_irreducible(self):
        """Test that t² + 1 does not split over Q."""
        algebra = gaussian_rationals()
        assert factor_idempotents(algebra, algebra.basis_vector(1), algebra.one) == [algebra.one]


class TestSplitter:
    """Test cases for Splitter."""

    def test_primitive_idempotents(self):
        """Test the three primitive idempotents of F_7[C_3], where t³ − 1 splits."""
        algebra = GroupAlgebraFactory(n=3, field=Field.prime_field(7))
        idempotents = Splitter(algebra).primitive_idempotents()
        assert len(idempotents) == 3
        total = algebra.zero
        for e in idempotents:
            assert algebra.mul(e, e) == e
            total = algebra.add(total, e)
        assert total == algebra.one

    def test_non_split_center(self):
        """Test that Q(i) is refused."""
        with pytest.raises(NonSplitSemisimpleQuotient) as exc:
            Splitter(gaussian_rationals()).primitive_idempotents()
        assert exc.value.params == {'center_dim': 2}

    def test_rational_c3_does_not_fully_split(self):
        """Test that Q[C_3] = Q × Q(ω) is refused."""
        with pytest.raises(NonSplitSemisimpleQuotient):
            Splitter(GroupAlgebraFactory(n=3)).primitive_idempotents()

    def test_seed_is_deterministic(self):
        """Test that equal algebras give equal seeds and equal output."""
        a, b = GroupAlgebraFactory(), GroupAlgebraFactory()
        assert derive_seed(a) == derive_seed(b)
        assert derive_seed(a, base=1) != derive_seed(a, base=2)
        assert Splitter(a).primitive_idempotents() == Splitter(b).primitive_idempotents()

    def test_has_nontrivial_idempotent(self):
        """Test the idempotent search on split and non-split algebras."""
        assert Splitter(GroupAlgebraFactory()).has_nontrivial_idempotent()
        assert not Splitter(gaussian_rationals()).has_nontrivial_idempotent()
