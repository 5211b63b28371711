"""
Indecomposable projectives, tops, covers and resolutions.
"""

from collections import Counter
from dataclasses import dataclass, field


@dataclass(frozen=True, eq=False)
class ProjectiveClass:
    """
    An indecomposable projective P[γ,j] = A·u ⊆ A[γ].

    Attributes:
        label: Canonical label "P[γ,j]" (j is 1-based)
        gamma: Generating arrow
        index: j
        idempotent: u ∈ A(γ:γ) as {α: coordinates}
        module: P[γ,j] as a module
        inclusion: P[γ,j] -> A[γ]
        generator: u as a vector of P[γ,j]_γ
        top: The simple top S[γ,j]
        representative: Label of the first isomorphic entry in the catalogue
    """

    label: str
    gamma: str
    index: int
    idempotent: dict
    module: object
    inclusion: object
    generator: tuple
    top: object = None
    representative: str = None

    @property
    def is_representative(self):
        return self.representative == self.label


@dataclass(frozen=True)
class TopDecomposition:
    """
    M / rad M with its simple multiplicities.

    Attributes:
        module: The top as a module
        projection: M -> top
        radical: rad M as a GradedSubmodule of M
        multiplicities: Class label -> multiplicity
    """

    module: object
    projection: object
    radical: object
    multiplicities: dict

    def as_dict(self):
        return {
            'dims': dict(self.module.dims),
            'radical_dim': self.radical.total_dim,
            'multiplicities': dict(sorted(self.multiplicities.items())),
        }


@dataclass(frozen=True)
class SmallnessCertificate:
    """
    Attributes:
        small: Whether the subobject is small
        method: "radical" or "oracle"
        checked: Number of submodules enumerated (oracle only)
    """

    small: bool
    method: str
    checked: int = 0

    def __bool__(self):
        return self.small

    def as_dict(self):
        return {'small': self.small, 'method': self.method, 'checked': self.checked}


@dataclass(frozen=True, eq=False)
class CoverResult:
    """
    A projective cover π: P ↠ M.

    Attributes:
        target: M
        cover: P = ⊕ P[γ_i,j_i]
        epi: π
        kernel: ker π as a GradedSubmodule of P
        labels: Class label of each summand of P, in order
        generators: (arrow, vector of M) hit by the summand generators
        smallness: SmallnessCertificate for ker π ⊆ rad P
    """

    target: object
    cover: object
    epi: object
    kernel: object
    labels: tuple
    generators: tuple
    smallness: SmallnessCertificate

    @property
    def multiplicities(self):
        return dict(sorted(Counter(self.labels).items()))

    def as_dict(self):
        return {
            'target': self.target.name,
            'cover_dims': dict(self.cover.dims),
            'summands': list(self.labels),
            'kernel_dim': self.kernel.total_dim,
            'smallness': self.smallness.as_dict(),
        }


@dataclass(frozen=True, eq=False)
class ResolutionComplex:
    """
    P_n -> … -> P_1 -> P_0 -> M.

    Attributes:
        module: M
        terms: P_0 … P_n
        labels: Summand labels per term
        augmentation: ε: P_0 -> M
        differentials: d_1 … d_n, d_k: P_k -> P_{k-1}
        terminated: The last kernel is zero
    """

    module: object
    terms: tuple
    labels: tuple
    augmentation: object
    differentials: tuple
    terminated: bool

    @property
    def length(self):
        return len(self.terms) - 1

    def betti(self):
        """Homological degree -> {class label: multiplicity}."""
        return [dict(sorted(Counter(labels).items())) for labels in self.labels]

    def ranks(self):
        return [len(labels) for labels in self.labels]

    def as_dict(self):
        return {
            'module': self.module.name,
            'length': self.length,
            'terminated': self.terminated,
            'betti': self.betti(),
            'term_dims': [dict(t.dims) for t in self.terms],
        }


@dataclass(frozen=True)
class ResolutionCertificate:
    """
    Attributes:
        passed: Every stage checked out
        stage: First failing homological degree, or None
        failure: "complex", "exactness", "minimality" or "surjectivity"
        checks: Per-stage outcome list
    """

    passed: bool
    stage: int = None
    failure: str = None
    checks: list = field(default_factory=list)

    def __bool__(self):
        return self.passed

    def as_dict(self):
        return {'passed': self.passed, 'stage': self.stage, 'failure': self.failure, 'checks': self.checks}
