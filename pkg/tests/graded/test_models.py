"""
Tests for graded vector spaces, algebras, modules and homomorphisms.
"""

import pytest

from category.builders import interval_window
from category.models import Lattice
from exactfield.fields import Field
from exactfield.matrices import Matrix
from graded.functors import right_multiplication
from graded.models import GradedAlgebra, GradedHom, GradedVectorSpace
from gradalg.exceptions import DimensionMismatch, StructureError
from tests.exactfield.factories import truncated_polynomial
from tests.graded.factories import NatTruncatedFactory


class TestGradedVectorSpace:
    """Test cases for GradedVectorSpace."""

    def test_zero_components_dropped(self):
        """Test that zero-dimensional components are omitted."""
        space = GradedVectorSpace(interval_window(Lattice.NAT, 0, 2), {"0": 2, "1": 0})
        assert space.dims == {"0": 2}
        assert space.support == ("0",)
        assert space.total_dim == 2

    def test_dangling_component(self):
        """Test that components at unknown arrows are refused."""
        with pytest.raises(StructureError) as exc:
            GradedVectorSpace(interval_window(Lattice.NAT, 0, 2), {"7": 1})
        assert exc.value.code == "dangling_arrow"


class TestGradedAlgebra:
    """Test cases for GradedAlgebra."""

    def test_graded_product(self):
        """Test that x·x = x^2 lands in degree 2."""
        algebra = NatTruncatedFactory()
        assert algebra.product("1", (1,), "1", (1,)) == ("2", (1,))

    def test_product_vanishing_by_grading(self):
        """Test that x^2·x^2 vanishes because A_4 is zero."""
        algebra = NatTruncatedFactory()
        assert algebra.product("2", (1,), "2", (1,)) is None

    def test_wrong_matrix_count(self):
        """Test that action constants must match dim A_α."""
        q = Field.rationals()
        c = interval_window(Lattice.NAT, 0, 1)
        one = Matrix.identity(q, 1)
        with pytest.raises(DimensionMismatch):
            GradedAlgebra(c, q, {"0": 1}, {("0", "0"): (one, one)}, {"*": (1,)})

    def test_projective_is_cached(self):
        """Test that A[γ] is built once and concentrated above γ."""
        algebra = NatTruncatedFactory()
        projective = algebra.projective("1")
        assert projective is algebra.projective("1")
        assert projective.name == "A[1]"
        assert projective.dims == {"1": 1, "2": 1, "3": 1}

    def test_window_clips_projective(self):
        """Test that A[γ] loses the degrees past the window."""
        algebra = NatTruncatedFactory(high=4)
        assert algebra.projective("3").dims == {"3": 1, "4": 1}

    def test_from_algebra(self):
        """Test an ordinary algebra over the trivial category."""
        graded = GradedAlgebra.from_algebra(truncated_polynomial(Field.rationals(), 3), name="R")
        assert graded.dims == {"1": 3}
        assert graded.name == "R"
        assert graded.regular_module().total_dim == 3

    def test_digest_changes_with_field(self):
        """Test that the digest depends on the field."""
        assert NatTruncatedFactory().digest() != NatTruncatedFactory(field=Field.prime_field(5)).digest()


class TestGradedHom:
    """Test cases for homomorphisms and their kernels and images."""

    def test_shape_checked(self):
        """Test that blocks of the wrong shape are refused."""
        projective = NatTruncatedFactory().projective("0")
        with pytest.raises(DimensionMismatch):
            GradedHom(projective, projective, {"0": Matrix.identity(projective.field, 2)})

    def test_multiplication_by_x(self):
        """Test ρ(x): A[1] -> A[0] and its kernel and image."""
        algebra = NatTruncatedFactory()
        rho = right_multiplication(algebra, "1", "0", {"1": (1,)})
        assert not rho.is_injective()
        assert not rho.is_surjective()
        assert rho.kernel().total_dim == 1
        assert rho.kernel().dim("3") == 1
        assert rho.image().total_dim == 2

    def test_quotient_by_image(self):
        """Test that A[0] / x·A[0] is the simple module at 0."""
        algebra = NatTruncatedFactory()
        rho = right_multiplication(algebra, "1", "0", {"1": (1,)})
        quotient, projection = rho.image().quotient(name="K")
        assert quotient.dims == {"0": 1}
        assert projection.is_surjective()

    def test_identity_compose(self):
        """Test that the identity is neutral for composition."""
        projective = NatTruncatedFactory().projective("0")
        identity = projective.identity()
        assert identity.compose(identity).as_vector() == identity.as_vector()
        assert (identity - identity).is_zero()

    def test_from_vector_layout(self):
        """Test that from_vector inverts as_vector."""
        projective = NatTruncatedFactory().projective("0")
        identity = projective.identity()
        rebuilt = GradedHom.from_vector(projective, projective, identity.as_vector())
        assert rebuilt.at("2") == identity.at("2")
