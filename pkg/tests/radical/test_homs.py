"""
Tests for radicals of hom spaces and of modules.
"""

from covers.projective import projective_catalogue
from exactfield.fields import Field
from exactfield.matrices import RowSpace
from graded.constructions import corestrict
from graded.functors import right_multiplication
from graded.models import GradedAlgebra
from radical.homs import endomorphism_radical, hom_radical, module_radical
from tests.exactfield.factories import lower_triangular
from tests.graded.factories import NatTruncatedFactory, TriangularFactory


class TestHomRadical:
    """Test cases for J(M, N)."""

    def test_non_isomorphism_lies_in_radical(self):
        """Test that multiplication by x spans J(A[1], A[0])."""
        algebra = NatTruncatedFactory()
        radical = hom_radical(algebra.projective("1"), algebra.projective("0"))
        assert radical.hom_dim == 1
        assert radical.dim == 1

    def test_identity_not_in_radical(self):
        """Test that J(A[0], A[0]) is zero."""
        algebra = NatTruncatedFactory()
        p0 = algebra.projective("0")
        radical = hom_radical(p0, p0)
        assert radical.hom_dim == 1
        assert radical.dim == 0
        assert not radical.contains(p0.identity())

    def test_padding_does_not_change_radical(self):
        """Test that extra summands leave the corner unchanged."""
        algebra = NatTruncatedFactory()
        p0, p1, p2 = (algebra.projective(g) for g in ("0", "1", "2"))
        plain = hom_radical(p1, p0)
        padded = hom_radical(p1, p0, padding=(p2,))
        assert plain == padded
        assert padded.as_dict()['padding'] == ["A[2]"]

    def test_endomorphism_radical(self):
        """Test that End(A[0] ⊕ ...) radicals come back as homs."""
        homs, ring, radical = endomorphism_radical(NatTruncatedFactory().projective("0"))
        assert ring.dim == 1
        assert homs == []
        assert radical.dim == 0


class TestModuleRadical:
    """Test cases for rad M."""

    def test_radical_of_projective(self):
        """Test that rad A[0] is everything above degree 0."""
        algebra = NatTruncatedFactory()
        sub = module_radical(algebra.projective("0"))
        assert sub.total_dim == 2
        assert sub.dim("0") == 0

    def test_radical_of_regular_triangular(self):
        """Test that rad of the triangular regular module is the 1->2 corner."""
        algebra = TriangularFactory()
        sub = module_radical(algebra.regular_module())
        assert sub.total_dim == 1
        assert sub.dim("1->2") == 1

    def test_radical_of_top_is_zero(self):
        """Test that a simple module has zero radical."""
        algebra = NatTruncatedFactory()
        p0 = algebra.projective("0")
        top, _ = module_radical(p0).quotient()
        assert module_radical(top).is_zero()


class TestSummandRadicals:
    """Test cases for radicals between indecomposable summands."""

    def test_compression_of_the_whole_radical(self):
        """Test that J(P, Q) is cut out of J(A[1], A[1]) by inclusion and projection."""
        field = Field.rationals()
        algebra = GradedAlgebra.from_algebra(lower_triangular(field), name="T")
        catalogue = projective_catalogue(algebra)
        whole = hom_radical(algebra.projective("1"), algebra.projective("1"))
        assert len(catalogue.entries) == 2
        for p in catalogue.entries:
            for q in catalogue.entries:
                rho = right_multiplication(algebra, "1", "1", q.idempotent)
                projection = corestrict(rho, rho.image(), q.module)
                expected = hom_radical(p.module, q.module).space()
                compressed = RowSpace(
                    field,
                    expected.ncols,
                    [projection.compose(h).compose(p.inclusion).as_vector() for h in whole.basis],
                )
                assert compressed == expected
