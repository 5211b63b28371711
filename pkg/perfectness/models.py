"""
Verdicts and certificates for semiperfectness and perfectness.
"""

from dataclasses import dataclass, field
from enum import Enum


class Verdict(str, Enum):
    PERFECT = "perfect"
    NOT_PERFECT = "not-perfect"
    SEMIPERFECT = "semiperfect"
    NOT_SEMIPERFECT = "not-semiperfect"
    NOT_VERIFIABLE = "hypotheses-not-verifiable"


class Criterion(str, Enum):
    """The criterion a verdict rests on, chosen from the category kind."""

    SEQUENCE_REPETITION = "divisor-rings-with-sequence-repetition"
    RIGHT_DIVISOR_CHAINS = "divisor-rings-with-right-divisor-chains"
    FINITE_GROUP = "identity-component-of-finite-group-grading"
    ARTINIAN_MONOID = "identity-component-of-artinian-monoid-grading"
    POSET_GRADED = "diagonal-corners-of-poset-grading"
    SEMIPERFECT = "divisor-rings-semiperfect"


@dataclass(frozen=True)
class ArrowCertificate:
    """
    Evidence about the divisor ring A(γ:γ) of one arrow.

    Attributes:
        arrow: γ
        ring_dim: dim A(γ:γ)
        radical_dim: dim J(A(γ:γ))
        nilpotency_index: Smallest m with J^m = 0
        radical_method: How the radical was computed
        split: A(γ:γ)/J is a product of matrix algebras over K
        idempotents: Size of the complete primitive idempotent set (0 when not split)
        end_dim: dim End(A[γ]), which must equal ring_dim
        error: Error code that stopped the certificate, if any
    """

    arrow: str
    ring_dim: int
    radical_dim: int
    nilpotency_index: int
    radical_method: str
    split: bool
    idempotents: int
    end_dim: int
    error: str = None

    @property
    def passed(self):
        return self.split and self.nilpotency_index is not None and self.end_dim == self.ring_dim

    def as_dict(self):
        return {
            'ring_dim': self.ring_dim,
            'radical_dim': self.radical_dim,
            'nilpotency_index': self.nilpotency_index,
            'radical_method': self.radical_method,
            'split': self.split,
            'idempotents': self.idempotents,
            'end_dim': self.end_dim,
            'error': self.error,
        }


@dataclass(frozen=True)
class PerfectnessVerdict:
    """
    Attributes:
        verdict: Verdict
        per_arrow: Arrow -> ArrowCertificate, in support order
        sequence_condition: ArrowSequenceReport (None for semiperfectness)
        criterion: Criterion the verdict rests on
        reason: One-line justification
    """

    verdict: Verdict
    per_arrow: dict
    criterion: Criterion
    sequence_condition: object = None
    reason: str = ""

    def as_dict(self):
        out = {
            'verdict': self.verdict.value,
            'criterion': self.criterion.value,
            'reason': self.reason,
            'per_arrow': {a: c.as_dict() for a, c in self.per_arrow.items()},
        }
        if self.sequence_condition is not None:
            out['sequence_condition'] = self.sequence_condition.as_dict()
        return out


@dataclass(frozen=True)
class NilpotencyWitness:
    """
    Attributes:
        generators: Generator arrows of the total hom algebra E
        index: Nilpotency index of J(E)
        chain: f_1 … f_{m-1} in J(E) with f_{m-1}∘…∘f_1 ≠ 0, as coordinates
        labels: Basis labels of E, for reading the chain
    """

    generators: tuple
    index: int
    chain: tuple
    labels: tuple = ()

    def as_dict(self, field):
        return {
            'generators': list(self.generators),
            'index': self.index,
            'chain': [
                {self.labels[n]: field.to_json(x) for n, x in enumerate(f) if x != 0} for f in self.chain
            ],
        }


@dataclass(frozen=True)
class CoverCheck:
    module: str
    passed: bool
    summands: tuple = ()
    kernel_dim: int = 0
    error: str = None

    def as_dict(self):
        return {
            'module': self.module,
            'passed': self.passed,
            'summands': list(self.summands),
            'kernel_dim': self.kernel_dim,
            'error': self.error,
        }


@dataclass(frozen=True)
class CrossValidationReport:
    """
    Attributes:
        verdict: The perfectness verdict the run depended on
        checks: One CoverCheck per sample module
        skipped: Reason the run was skipped (verdict not perfect)
    """

    verdict: Verdict
    checks: list = field(default_factory=list)
    skipped: str = None

    @property
    def passed(self):
        return self.skipped is None and all(c.passed for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]

    def as_dict(self):
        return {
            'verdict': self.verdict.value,
            'passed': self.passed,
            'skipped': self.skipped,
            'checks': [c.as_dict() for c in self.checks],
        }
