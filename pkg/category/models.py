"""
Grading categories.

Composition follows the convention αβ = "β first, then α", so
source(αβ) = source(β) and αβ is defined exactly when source(α) = target(β).
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

from gradalg.exceptions import StructureError

# Absorbing arrow standing for every composite that leaves a finite window.
OUT_OF_WINDOW = "<out-of-window>"


class CategoryKind(str, Enum):
    EXPLICIT_FINITE = "explicit"
    FINITE_GROUP = "group"
    MONOID_WINDOW = "window"
    POSET_INTERVAL = "poset"


class Lattice(str, Enum):
    NAT = "nat"
    INT = "int"


@dataclass(frozen=True)
class Arrow:
    id: str
    source: str
    target: str


@dataclass(frozen=True, eq=False)
class IndexCategory:
    """
    A small category given on a finite support of arrows.

    Attributes:
        kind: How the category was presented
        objects: Object ids in canonical order
        arrows: Arrow records in canonical order
        identities: Object id -> identity arrow id
        composition: (α, β) -> αβ for composable pairs; window kinds map
            composites outside the window to OUT_OF_WINDOW
        metadata: Kind-specific data (lattice, rank, window points,
            group elements, poset relation)
    """

    kind: CategoryKind
    objects: tuple
    arrows: tuple
    identities: dict
    composition: dict
    metadata: dict = field(default_factory=dict)

    @cached_property
    def _by_id(self):
        return {a.id: a for a in self.arrows}

    @property
    def support(self):
        return tuple(a.id for a in self.arrows)

    @property
    def is_window(self):
        return self.kind == CategoryKind.MONOID_WINDOW

    @property
    def lattice(self):
        return self.metadata.get('lattice')

    def arrow(self, arrow_id):
        try:
            return self._by_id[arrow_id]
        except KeyError:
            raise StructureError(f"unknown arrow {arrow_id!r}", code="unknown_arrow", params={'arrow': str(arrow_id)})

    def has_arrow(self, arrow_id):
        return arrow_id in self._by_id

    def source(self, arrow_id):
        return self.arrow(arrow_id).source

    def target(self, arrow_id):
        return self.arrow(arrow_id).target

    def identity(self, obj):
        try:
            return self.identities[obj]
        except KeyError:
            raise StructureError(f"unknown object {obj!r}", code="unknown_object", params={'object': str(obj)})

    def is_identity(self, arrow_id):
        a = self.arrow(arrow_id)
        return self.identities.get(a.source) == arrow_id

    def composable(self, alpha, beta):
        return self.source(alpha) == self.target(beta)

    def compose(self, alpha, beta):
        """
        αβ (β first), OUT_OF_WINDOW for clipped window composites, or None
        when the pair is not composable.
        """
        if not self.composable(alpha, beta):
            return None
        return self.composition.get((alpha, beta))

    def compose_in_support(self, alpha, beta):
        """αβ when it is defined and inside the support, else None."""
        gamma = self.compose(alpha, beta)
        return None if gamma in (None, OUT_OF_WINDOW) else gamma

    @cached_property
    def _factorizations(self):
        table = {a.id: [] for a in self.arrows}
        for (alpha, beta), gamma in self.composition.items():
            if gamma in table and self.composable(alpha, beta):
                table[gamma].append((alpha, beta))
        order = {a: i for i, a in enumerate(self.support)}
        return {
            gamma: tuple(sorted(pairs, key=lambda p: (order[p[0]], order[p[1]])))
            for gamma, pairs in table.items()
        }

    def factorizations(self, gamma):
        """All pairs (α, β) with αβ = γ, in canonical order."""
        self.arrow(gamma)
        return self._factorizations[gamma]

    def left_factors(self, gamma, beta):
        """All α with αβ = γ."""
        return tuple(a for a, b in self.factorizations(gamma) if b == beta)

    def arrows_from(self, obj):
        return tuple(a.id for a in self.arrows if a.source == obj)

    def arrows_to(self, obj):
        return tuple(a.id for a in self.arrows if a.target == obj)

    def describe(self):
        return {
            'kind': self.kind.value,
            'objects': list(self.objects),
            'arrows': [[a.id, a.source, a.target] for a in self.arrows],
        }


class SequenceCondition(str, Enum):
    SEQUENCE_REPETITION = "sequence-repetition"
    RIGHT_DIVISOR_CHAINS = "right-divisor-chains"


class SequenceVerdict(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    NOT_DECIDABLE = "not-decidable-for-kind"


@dataclass(frozen=True)
class ArrowSequenceReport:
    """
    Outcome of the arrow-sequence hypothesis for one category.

    Attributes:
        condition: Which sequence condition was evaluated
        verdict: holds / fails / not-decidable-for-kind
        witness: Chain of arrows exhibiting a failure (only with FAILS)
        reason: Short justification used in certificates
    """

    condition: SequenceCondition
    verdict: SequenceVerdict
    witness: tuple = ()
    reason: str = ""

    def as_dict(self):
        return {
            'condition': self.condition.value,
            'verdict': self.verdict.value,
            'witness': list(self.witness),
            'reason': self.reason,
        }
