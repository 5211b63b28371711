"""
Tests for the graded axiom checkers.
"""

import dataclasses

from exactfield.matrices import Matrix
from graded.models import GradedHom
from graded.validators import validate_algebra, validate_hom, validate_module
from tests.graded.factories import CyclicGradedFactory, NatTruncatedFactory, TriangularFactory


class TestValidateAlgebra:
    """Test cases for validate_algebra."""

    def test_factories_are_valid(self):
        """Test that every factory algebra passes."""
        for algebra in (NatTruncatedFactory(), TriangularFactory(), CyclicGradedFactory(n=3)):
            report = validate_algebra(algebra)
            assert report.is_valid, report.as_dict()

    def test_wrong_local_unit(self):
        """Test that a zero local unit breaks both unit laws."""
        algebra = NatTruncatedFactory()
        broken = dataclasses.replace(algebra, local_units={"*": (algebra.field.zero,)})
        codes = {error.code for error in validate_algebra(broken).errors}
        assert codes == {"left_unit", "right_unit"}


class TestValidateModule:
    """Test cases for validate_module."""

    def test_projectives_are_modules(self):
        """Test that every A[γ] passes the module axioms."""
        algebra = TriangularFactory()
        for gamma in algebra.category.support:
            assert validate_module(algebra.projective(gamma)).is_valid


class TestValidateHom:
    """Test cases for validate_hom."""

    def test_identity_is_equivariant(self):
        """Test that identities pass."""
        projective = NatTruncatedFactory().projective("0")
        assert validate_hom(projective.identity()).is_valid

    def test_truncated_identity_is_not_equivariant(self):
        """Test that keeping only the degree-0 block breaks equivariance."""
        projective = NatTruncatedFactory().projective("0")
        h = GradedHom(projective, projective, {"0": Matrix.identity(projective.field, 1)})
        report = validate_hom(h)
        assert not report.is_valid
        assert {error.code for error in report.errors} == {"not_equivariant"}
