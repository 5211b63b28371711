"""
Ideals of finite-dimensional algebras and radicals of hom spaces.
"""

from dataclasses import dataclass, field

from exactfield.matrices import RowSpace


@dataclass(frozen=True)
class RadicalCertificate:
    """
    Evidence attached to a computed radical.

    Attributes:
        method: "trace-form" or "iterated-trace-form"
        nilpotency_index: Smallest m with J^m = 0
        quotient_dim: dim A/J
        steps: Dimensions of the successive trace-form kernels
    """

    method: str
    nilpotency_index: int
    quotient_dim: int
    steps: tuple = ()

    def as_dict(self):
        return {
            'method': self.method,
            'nilpotency_index': self.nilpotency_index,
            'quotient_dim': self.quotient_dim,
            'steps': list(self.steps),
        }


@dataclass(frozen=True, eq=False)
class AlgebraIdeal:
    """
    A two-sided ideal given by its reduced basis.

    Attributes:
        ambient: FiniteAlgebra
        space: RowSpace of coordinate vectors
        certificate: RadicalCertificate when the ideal is a computed radical
    """

    ambient: object
    space: RowSpace
    certificate: RadicalCertificate = None

    @property
    def dim(self):
        return self.space.dim

    @property
    def basis(self):
        return self.space.basis

    def contains(self, x):
        return self.space.contains(x)

    def contains_space(self, space):
        return self.space.contains_space(space)

    def is_ideal(self):
        return self.ambient.is_ideal(self.space)

    def __eq__(self, other):
        return isinstance(other, AlgebraIdeal) and self.space == other.space

    def __hash__(self):
        return hash(self.space)

    def as_dict(self):
        f = self.ambient.field
        out = {
            'dim': self.dim,
            'ambient_dim': self.ambient.dim,
            'basis': [[f.to_json(x) for x in row] for row in self.basis],
        }
        if self.certificate is not None:
            out['certificate'] = self.certificate.as_dict()
        return out


@dataclass(frozen=True, eq=False)
class HomRadical:
    """
    J(M, N) as a space of homomorphisms.

    Attributes:
        source, target: GradedModule
        basis: List of GradedHom spanning J(M, N)
        hom_dim: dim Hom(M, N)
        padding: Names of the extra summands used in the embedding
    """

    source: object
    target: object
    basis: list
    hom_dim: int
    padding: tuple = field(default=())

    @property
    def dim(self):
        return len(self.basis)

    def space(self):
        n = len(self.basis[0].as_vector()) if self.basis else _hom_width(self.source, self.target)
        return RowSpace(self.source.field, n, [h.as_vector() for h in self.basis])

    def contains(self, hom):
        return self.space().contains(hom.as_vector())

    def __eq__(self, other):
        return isinstance(other, HomRadical) and self.space() == other.space()

    def __hash__(self):
        return hash(self.space())

    def as_dict(self):
        f = self.source.field
        return {
            'source': self.source.name,
            'target': self.target.name,
            'dim': self.dim,
            'hom_dim': self.hom_dim,
            'padding': list(self.padding),
            'basis': [[f.to_json(x) for x in h.as_vector()] for h in self.basis],
        }


def _hom_width(source, target):
    return sum(source.dim(g) * target.dim(g) for g in source.category.support)
