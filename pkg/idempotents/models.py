"""
Idempotent families and projective decompositions.
"""

from dataclasses import dataclass, field

from exactfield.matrices import is_zero_vector


@dataclass(frozen=True, eq=False)
class IdempotentSet:
    """
    Idempotents of a finite-dimensional algebra.

    Attributes:
        ambient: FiniteAlgebra
        elements: Tuple of coordinate vectors
        primitive: Per-element flag, True when the corner e·A·e is local
        seed: Seed the splitting elements were drawn from
    """

    ambient: object
    elements: tuple
    primitive: tuple = ()
    seed: int = None

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def is_idempotent(self):
        a = self.ambient
        return all(a.mul(e, e) == e for e in self.elements)

    @property
    def is_orthogonal(self):
        a = self.ambient
        return all(
            is_zero_vector(a.mul(x, y))
            for i, x in enumerate(self.elements)
            for j, y in enumerate(self.elements)
            if i != j
        )

    @property
    def is_complete(self):
        a = self.ambient
        total = a.zero
        for e in self.elements:
            total = a.add(total, e)
        return total == a.one

    def as_dict(self):
        f = self.ambient.field
        return {
            'elements': [[f.to_json(x) for x in e] for e in self.elements],
            'orthogonal': self.is_orthogonal,
            'complete': self.is_complete,
            'primitive': list(self.primitive),
            'seed': self.seed,
        }


@dataclass(frozen=True)
class LocalityCertificate:
    """
    Attributes:
        is_local: A/J is a division ring
        quotient_dim: dim A/J
        radical_dim: dim J
        split: A/J ≅ K (only then is locality decided exactly)
    """

    is_local: bool
    quotient_dim: int
    radical_dim: int
    split: bool

    def __bool__(self):
        return self.is_local

    def as_dict(self):
        return {
            'local': self.is_local,
            'quotient_dim': self.quotient_dim,
            'radical_dim': self.radical_dim,
            'split': self.split,
        }


@dataclass(frozen=True, eq=False)
class Summand:
    """
    One completely indecomposable summand of a projective.

    Attributes:
        idempotent: Idempotent endomorphism of the parent (GradedHom)
        module: The summand as a module
        projection: parent -> summand
        inclusion: summand -> parent
        label: Isomorphism class label, when known
    """

    idempotent: object
    module: object
    projection: object
    inclusion: object
    label: str = None


@dataclass(frozen=True, eq=False)
class ProjectiveDecomposition:
    parent: object
    summands: tuple = field(default=())

    def dims(self):
        return [s.module.total_dim for s in self.summands]

    def as_dict(self):
        return {
            'parent': self.parent.name,
            'summands': [
                {'label': s.label, 'dims': dict(s.module.dims)} for s in self.summands
            ],
        }
