"""
Tests for tops, projective covers and small subobjects.
"""

import pytest

from covers.covers import projective_cover, top
from covers.projective import projective_catalogue
from covers.smallness import all_submodules, is_small_subobject
from exactfield.fields import Field
from graded.models import GradedSubmodule
from gradalg.exceptions import OracleTooLarge, StructureError
from radical.homs import module_radical
from tests.graded.factories import NatTruncatedFactory, TriangularFactory


class TestTop:
    """Test cases for top."""

    def test_top_of_projective(self):
        """Test that A[0] has a simple top."""
        algebra = NatTruncatedFactory()
        result = top(algebra.projective("0"))
        assert result.multiplicities == {"P[0,1]": 1}
        assert result.module.dims == {"0": 1}
        assert result.radical.total_dim == 2

    def test_top_of_triangular_regular(self):
        """Test that the regular module has two simples in its top."""
        algebra = TriangularFactory()
        result = top(algebra.regular_module())
        assert result.multiplicities == {"P[1->1,1]": 1, "P[2->2,1]": 1}
        assert result.as_dict()['radical_dim'] == 1


class TestProjectiveCover:
    """Test cases for projective_cover."""

    def test_cover_of_simple(self):
        """Test that S[2,1] is covered by P[2,1]."""
        algebra = NatTruncatedFactory()
        catalogue = projective_catalogue(algebra)
        cover = projective_cover(catalogue.simple("P[2,1]"), catalogue)
        assert cover.labels == ("P[2,1]",)
        assert cover.kernel.total_dim == 2
        assert cover.smallness
        assert cover.epi.is_surjective()

    def test_cover_of_regular_module(self):
        """Test the cover of the triangular regular module."""
        algebra = TriangularFactory()
        cover = projective_cover(algebra.regular_module())
        assert cover.labels == ("P[1->1,1]", "P[2->2,1]")
        assert cover.kernel.is_zero()
        assert cover.multiplicities == {"P[1->1,1]": 1, "P[2->2,1]": 1}

    def test_cover_of_projective_is_an_isomorphism(self):
        """Test that a projective covers itself."""
        algebra = NatTruncatedFactory()
        cover = projective_cover(algebra.projective("1"))
        assert cover.labels == ("P[1,1]",)
        assert cover.kernel.is_zero()

    def test_cover_of_zero(self):
        """Test that the zero module has the zero cover."""
        algebra = NatTruncatedFactory()
        zero, _ = GradedSubmodule.zero(algebra.projective("0")).as_module(name="0")
        cover = projective_cover(zero)
        assert cover.labels == ()
        assert cover.as_dict()['kernel_dim'] == 0


class TestSmallness:
    """Test cases for is_small_subobject."""

    def test_radical_is_small(self):
        """Test that rad A[0] is small."""
        module = NatTruncatedFactory().projective("0")
        assert is_small_subobject(module_radical(module))

    def test_whole_module_is_not_small(self):
        """Test that a nonzero module is not small in itself."""
        module = NatTruncatedFactory().projective("0")
        assert not is_small_subobject(GradedSubmodule.whole(module))

    def test_oracle_agrees(self):
        """Test the radical criterion against submodule enumeration over F_2."""
        module = NatTruncatedFactory(field=Field.prime_field(2)).projective("0")
        radical = module_radical(module)
        certificate = is_small_subobject(radical, method="oracle")
        assert certificate.small
        assert certificate.method == "oracle"
        assert certificate.checked == 4
        assert not is_small_subobject(GradedSubmodule.whole(module), method="oracle")

    def test_uniserial_submodules(self):
        """Test that A[0] over K[x]/(x^3) is uniserial."""
        module = NatTruncatedFactory(field=Field.prime_field(3)).projective("0")
        assert sorted(s.total_dim for s in all_submodules(module)) == [0, 1, 2, 3]

    def test_oracle_needs_small_field(self):
        """Test that the oracle refuses Q."""
        module = NatTruncatedFactory().projective("0")
        with pytest.raises(OracleTooLarge) as exc:
            is_small_subobject(module_radical(module), method="oracle")
        assert exc.value.params == {'field': "Q"}

    def test_unknown_method(self):
        """Test that unknown methods are refused."""
        module = NatTruncatedFactory().projective("0")
        with pytest.raises(StructureError) as exc:
            is_small_subobject(module_radical(module), method="guess")
        assert exc.value.code == "unknown_method"
