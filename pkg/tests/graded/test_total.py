"""
Tests for the total hom algebra and its modules.
"""

import pytest

from graded.constructions import direct_sum, generated_submodule
from graded.total import TotalModule, default_generators, module_to_total, total_hom_algebra
from graded.validators import validate_module
from gradalg.exceptions import InfiniteSupport, StructureError
from tests.graded.factories import NatTruncatedFactory, TriangularFactory


class TestTotalHomAlgebra:
    """Test cases for E = End(⊕ A[γ_i])."""

    def test_dimension(self):
        """Test dim E for K[x]/(x^3) on the window {0, …, 4}."""
        algebra = NatTruncatedFactory()
        total = total_hom_algebra(algebra)
        assert total.generators == ("0", "1", "2", "3", "4")
        # pairs (i, j) with γ_i − γ_j ∈ {0, 1, 2}
        assert total.dim == 12
        assert total.algebra.is_unital()
        assert total.algebra.associativity_violations(limit=1) == []

    def test_cached(self):
        """Test that E is built once per generator list."""
        algebra = NatTruncatedFactory()
        assert total_hom_algebra(algebra) is total_hom_algebra(algebra)

    def test_block_identity_is_idempotent(self):
        """Test that 1_{γ_i} is idempotent."""
        total = total_hom_algebra(TriangularFactory())
        e = total.algebra
        for i in range(len(total.generators)):
            u = total.block_identity(i)
            assert e.mul(u, u) == u

    def test_default_generators_skip_zero_units(self):
        """Test that every arrow of a unital grading is a generator."""
        algebra = TriangularFactory()
        assert default_generators(algebra) == ("1->1", "1->2", "2->2")

    def test_unknown_generator(self):
        """Test that generators outside the support are refused."""
        with pytest.raises(StructureError):
            total_hom_algebra(NatTruncatedFactory(), ["9"])


class TestTotalModule:
    """Test cases for ⊕ M_{γ_i} as a right E-module."""

    def test_reconstruct(self):
        """Test that the graded module is recovered from the E-module."""
        algebra = NatTruncatedFactory()
        module = algebra.projective("1")
        rebuilt = module_to_total(module).reconstruct()
        assert rebuilt.dims == module.dims
        assert validate_module(rebuilt).is_valid

    def test_support_outside_generators(self):
        """Test that a module must live on the generator list."""
        algebra = NatTruncatedFactory()
        total = total_hom_algebra(algebra, ["0"])
        with pytest.raises(InfiniteSupport):
            TotalModule(total, algebra.projective("0"))


class TestConstructions:
    """Test cases for direct sums and generated submodules."""

    def test_direct_sum(self):
        """Test dims, inclusions and projections of A[0] ⊕ A[1]."""
        algebra = NatTruncatedFactory()
        p0, p1 = algebra.projective("0"), algebra.projective("1")
        total, inclusions, projections = direct_sum([p0, p1])
        assert total.dims == {"0": 1, "1": 2, "2": 2, "3": 1}
        assert validate_module(total).is_valid
        for inc, proj, summand in zip(inclusions, projections, [p0, p1]):
            assert proj.compose(inc).as_vector() == summand.identity().as_vector()

    def test_generated_submodule(self):
        """Test that x generates x·A[0]."""
        algebra = NatTruncatedFactory()
        p0 = algebra.projective("0")
        sub = generated_submodule(p0, [("1", (1,))])
        assert sub.total_dim == 2
        assert sub.is_closed()

    def test_empty_direct_sum(self):
        """Test that a direct sum needs a summand."""
        with pytest.raises(StructureError):
            direct_sum([])
