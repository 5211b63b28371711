"""
Tests for semiperfectness and perfectness verdicts.
"""

from category.models import SequenceVerdict
from graded.models import GradedAlgebra
from gradalg.exceptions import NonSplitSemisimpleQuotient
from perfectness.checks import (
    arrow_certificate,
    check_perfect,
    check_semiperfect,
    end_identification,
    t_nilpotency_witness,
)
from perfectness.models import Criterion, Verdict
from tests.exactfield.factories import gaussian_rationals
from tests.graded.factories import (
    CyclicGradedFactory,
    NatTruncatedFactory,
    TriangularFactory,
    int_window_algebra,
)


class TestArrowCertificate:
    """Test cases for arrow_certificate."""

    def test_identity_component(self):
        """Test the divisor ring at the identity of a Nat window."""
        cert = arrow_certificate(NatTruncatedFactory(), "0")
        assert cert.ring_dim == 1
        assert cert.radical_dim == 0
        assert cert.nilpotency_index == 1
        assert cert.idempotents == 1
        assert cert.end_dim == 1
        assert cert.passed

    def test_non_split(self):
        """Test that Q(i) fails to certify."""
        cert = arrow_certificate(GradedAlgebra.from_algebra(gaussian_rationals()), "1")
        assert not cert.split
        assert not cert.passed
        assert cert.error == "non_split_semisimple_quotient"


class TestEndIdentification:
    """Test cases for the anti-isomorphism A(γ:γ) -> End(A[γ])."""

    def test_nat_window(self):
        """Test every arrow of the Nat window."""
        algebra = NatTruncatedFactory()
        assert all(end_identification(algebra, gamma) for gamma in algebra.category.support)

    def test_poset(self):
        """Test the triangular algebra."""
        assert end_identification(TriangularFactory(), "1->2")


class TestCheckPerfect:
    """Test cases for check_perfect."""

    def test_nat_window(self):
        """Test that K[x]/(x^3) on a Nat window is perfect."""
        result = check_perfect(NatTruncatedFactory())
        assert result.verdict == Verdict.PERFECT
        assert result.criterion == Criterion.ARTINIAN_MONOID
        assert set(result.per_arrow) == {"0", "1", "2", "3", "4"}

    def test_poset(self):
        """Test that the triangular algebra is perfect."""
        result = check_perfect(TriangularFactory())
        assert result.verdict == Verdict.PERFECT
        assert result.criterion == Criterion.POSET_GRADED

    def test_finite_group(self):
        """Test that K[C_2] graded by C_2 is perfect."""
        result = check_perfect(CyclicGradedFactory())
        assert result.verdict == Verdict.PERFECT
        assert result.criterion == Criterion.FINITE_GROUP
        assert result.as_dict()['verdict'] == "perfect"

    def test_int_window_not_verifiable(self):
        """Test that an Int window leaves the verdict open."""
        result = check_perfect(int_window_algebra())
        assert result.verdict == Verdict.NOT_VERIFIABLE
        assert result.sequence_condition.verdict == SequenceVerdict.NOT_DECIDABLE
        assert result.criterion == Criterion.SEQUENCE_REPETITION

    def test_non_split_not_verifiable(self):
        """Test that a non-split divisor ring leaves the verdict open."""
        result = check_perfect(GradedAlgebra.from_algebra(gaussian_rationals(), name="Q(i)"))
        assert result.verdict == Verdict.NOT_VERIFIABLE
        assert "1" in result.reason

    def test_thread_count_does_not_change_the_verdict(self, settings):
        """Test that certificates are independent of the worker count."""
        serial = check_perfect(NatTruncatedFactory()).as_dict()
        settings.GRADALG_THREADS = 4
        assert check_perfect(NatTruncatedFactory()).as_dict() == serial

    def test_splitting_failure_is_recorded(self, mocker):
        """Test that a splitting failure is kept in the certificates."""
        mocker.patch(
            'perfectness.checks.complete_primitive_set',
            side_effect=NonSplitSemisimpleQuotient("forced"),
        )
        result = check_perfect(TriangularFactory())
        assert result.verdict == Verdict.NOT_VERIFIABLE
        assert {c.error for c in result.per_arrow.values()} == {"non_split_semisimple_quotient"}


class TestCheckSemiperfect:
    """Test cases for check_semiperfect."""

    def test_semiperfect(self):
        """Test a split algebra."""
        result = check_semiperfect(TriangularFactory())
        assert result.verdict == Verdict.SEMIPERFECT
        assert result.sequence_condition is None

    def test_non_split(self):
        """Test that a non-split divisor ring leaves semiperfectness open."""
        result = check_semiperfect(GradedAlgebra.from_algebra(gaussian_rationals()))
        assert result.verdict == Verdict.NOT_VERIFIABLE


class TestNilpotencyWitness:
    """Test cases for t_nilpotency_witness."""

    def test_nat_window(self):
        """Test that J(E) has index 3 for K[x]/(x^3)."""
        algebra = NatTruncatedFactory()
        witness = t_nilpotency_witness(algebra)
        assert witness.generators == ("0", "1", "2", "3", "4")
        assert witness.index == 3
        assert len(witness.chain) == 2
        assert len(witness.as_dict(algebra.field)['chain']) == 2

    def test_semisimple_identity_component(self):
        """Test that K[C_2] over Q has J(E) = 0."""
        witness = t_nilpotency_witness(CyclicGradedFactory())
        assert witness.index == 1
        assert witness.chain == ()

    def test_index_grows_with_the_generators(self):
        """Test that adding generators never lowers the nilpotency index of J(E)."""
        algebra = NatTruncatedFactory()
        generators = ("0", "1", "2", "3", "4")
        indices = [t_nilpotency_witness(algebra, generators[:n]).index for n in range(1, 6)]
        assert indices == [1, 2, 3, 3, 3]

    def test_index_monotone_on_the_poset(self):
        """Test monotonicity along the support of the triangular algebra."""
        algebra = TriangularFactory()
        support = algebra.category.support
        indices = [t_nilpotency_witness(algebra, support[:n]).index for n in range(1, len(support) + 1)]
        assert indices == sorted(indices)
