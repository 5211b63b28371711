"""
Tests for the idempotent analysis, the descent and the kernel witness.
"""

import pytest

from counterexample.analysis import (
    analyse_coefficients,
    idempotent_diagonal_check,
    kernel_witness,
    min_element_propagation,
)
from counterexample.scene import build_scene, endomorphism_from_lambda
from exactfield.fields import Field
from gradalg.exceptions import NotIdempotentOnInterior, StructureError

F2 = Field.prime_field(2)
F3 = Field.prime_field(3)


def identity_on(scene, scalar=1):
    return endomorphism_from_lambda(scene, {(k, k): scalar for k in scene.degrees})


class TestAnalyseCoefficients:
    """Test cases for analyse_coefficients."""

    def test_support(self):
        """Test that I collects the unit diagonal entries."""
        scene = build_scene(1, F2)
        analysis = analyse_coefficients(scene, {(-1, -1): 1, (0, -1): 1, (1, 1): 1})
        assert analysis.support == (-1, 1)
        assert analysis.lead(0) == -1
        assert analysis.lead(1) == 1

    def test_diagonal_failures(self):
        """Test that λ_{k,k} = 2 over F_3 is flagged on the idempotent rows."""
        scene = build_scene(1, F3)
        analysis = analyse_coefficients(scene, {(k, k): 2 for k in scene.degrees})
        assert analysis.diagonal_failures == (-1, 0)
        assert not analysis.diagonal_ok
        assert analysis.support == ()


class TestIdempotentDiagonalCheck:
    """Test cases for idempotent_diagonal_check."""

    def test_identity(self):
        """Test that the identity has I equal to the whole window."""
        scene = build_scene(2, F2)
        analysis = idempotent_diagonal_check(scene, identity_on(scene))
        assert analysis.support == (-2, -1, 0, 1, 2)
        assert analysis.diagonal_ok

    def test_not_idempotent(self):
        """Test that 2·id over F_3 is refused in the interior."""
        scene = build_scene(1, F3)
        with pytest.raises(NotIdempotentOnInterior) as exc:
            idempotent_diagonal_check(scene, identity_on(scene, 2))
        assert exc.value.params == {'degree': 0}


class TestDescent:
    """Test cases for min_element_propagation."""

    def test_identity_reaches_edge(self):
        """Test that every chain from I ends at −d."""
        scene = build_scene(2, F2)
        report = min_element_propagation(scene, identity_on(scene))
        assert report.admissible
        assert report.reaches_edge
        assert report.chains[2] == (2, 1, 0, -1, -2)
        assert report.max_depth == 4

    def test_zero_is_not_admissible(self):
        """Test that e = 0 fails f∘e = f."""
        scene = build_scene(1, F2)
        report = min_element_propagation(scene, endomorphism_from_lambda(scene, {}))
        assert not report.admissible
        assert not report.reaches_edge
        assert report.as_dict()['chains'] == {}

    def test_shifted_idempotent(self):
        """Test an idempotent whose top generator maps below the diagonal."""
        scene = build_scene(1, F2)
        lam = {(-1, -1): 1, (0, -1): 1, (1, -1): 1}
        report = min_element_propagation(scene, endomorphism_from_lambda(scene, lam))
        assert report.admissible
        assert report.chains == {-1: (-1,)}
        assert report.reaches_edge


class TestKernelWitness:
    """Test cases for kernel_witness."""

    def test_identity(self):
        """Test that a_0 ⊗ x_1 − a_1 ⊗ x_0 survives e and dies under f."""
        scene = build_scene(1, F2)
        witness = kernel_witness(scene, identity_on(scene))
        assert (witness.k, witness.l) == (1, 0)
        assert witness.nonzero
        assert witness.in_kernel

    def test_explicit_pair(self):
        """Test a pair two degrees apart."""
        scene = build_scene(2, F3)
        witness = kernel_witness(scene, identity_on(scene), pair=(1, -1))
        assert witness.nonzero
        assert witness.in_kernel
        assert witness.as_dict(F3)['l'] == -1

    def test_support_too_small(self):
        """Test that I needs two elements."""
        scene = build_scene(1, F2)
        lam = {(-1, -1): 1, (0, -1): 1, (1, -1): 1}
        with pytest.raises(StructureError) as exc:
            kernel_witness(scene, endomorphism_from_lambda(scene, lam))
        assert exc.value.code == "support_too_small"

    def test_pair_not_in_support(self):
        """Test that the pair must lie in I with l < k."""
        scene = build_scene(1, F2)
        with pytest.raises(StructureError) as exc:
            kernel_witness(scene, identity_on(scene), pair=(0, 1))
        assert exc.value.code == "not_in_support"
