"""
The catalogue of indecomposable projectives P[γ,j] and their simple tops.

End(A[γ]) ≅ A(γ:γ)^op through right multiplication, so a complete primitive
idempotent set u_1 … u_n of the divisor ring splits A[γ] into the summands
A·u_j. Two summands are isomorphic exactly when some composite P -> Q -> P
of basis homs is an automorphism (their endomorphism rings are local).
"""

import logging
from dataclasses import dataclass
from functools import cached_property

from exactfield.matrices import RowSpace, unit_vector
from graded.functors import generator, right_multiplication
from graded.homs import divisor_element, divisor_space, hom_space
from graded.total import default_generators
from idempotents.decomposition import complete_primitive_set
from radical.homs import module_radical

from .models import ProjectiveClass

logger = logging.getLogger(__name__)


def _isomorphic(p, q):
    if p.dims != q.dims:
        return False
    forward = hom_space(p, q)
    if not forward:
        return False
    backward = hom_space(q, p)
    return any(g.compose(h).is_injective() for h in forward for g in backward)


def divisor_action_dim(module, element, gamma):
    """dim u·M_γ for u ∈ A(γ:γ)."""
    f = module.field
    d = module.dim(gamma)
    rows = [module.act_divisor(element, gamma, unit_vector(f, d, i)) for i in range(d)]
    return RowSpace(f, d, rows).dim


@dataclass(frozen=True, eq=False)
class ProjectiveCatalogue:
    """
    Attributes:
        algebra: GradedAlgebra
        generators: Arrows whose projectives were split
        entries: ProjectiveClass per (γ, j), in generator order
    """

    algebra: object
    generators: tuple
    entries: tuple

    @cached_property
    def by_label(self):
        return {p.label: p for p in self.entries}

    def __getitem__(self, label):
        return self.by_label[label]

    @property
    def representatives(self):
        return tuple(p for p in self.entries if p.is_representative)

    def labels(self):
        return [p.label for p in self.entries]

    def simple(self, label):
        return self.by_label[label].top

    def classify(self, module):
        """Label of the representative isomorphic to an indecomposable projective, or None."""
        for p in self.representatives:
            if _isomorphic(p.module, module):
                return p.label
        return None

    def describe(self):
        return {
            p.label: {'dims': dict(p.module.dims), 'isomorphic_to': p.representative}
            for p in self.entries
        }


def _split_generator(algebra, gamma, seed):
    space = divisor_space(algebra, gamma, gamma)
    idempotents = complete_primitive_set(space.ring, seed)
    parent = algebra.projective(gamma)
    g = generator(algebra, gamma)
    out = []
    for j, coords in enumerate(idempotents, start=1):
        u = divisor_element(space, coords)
        rho = right_multiplication(algebra, gamma, gamma, u)
        image = rho.image()
        label = f"P[{gamma},{j}]"
        module, inclusion = image.as_module(name=label)
        vector = image.space(gamma).coordinates(rho.apply(gamma, g))
        out.append((label, j, u, module, inclusion, vector))
    return out


def projective_catalogue(algebra, generators=None, seed=None):
    """
    Split every A[γ] into indecomposables and group them into isomorphism classes.

    Args:
        generators: Arrows to use (default: every arrow with a nonzero generator)
        seed: Splitting seed for the divisor rings

    Raises:
        NonSplitSemisimpleQuotient: If some A(γ:γ)/J is not split over K
    """
    generators = default_generators(algebra) if generators is None else tuple(generators)
    cache = algebra.__dict__.setdefault('_catalogue_cache', {})
    key = (generators, seed)
    if key in cache:
        return cache[key]
    entries = []
    representatives = []
    for gamma in generators:
        for label, j, u, module, inclusion, vector in _split_generator(algebra, gamma, seed):
            representative = next((r.label for r in representatives if _isomorphic(r.module, module)), label)
            radical = module_radical(module)
            top, _ = radical.quotient(name=f"S[{gamma},{j}]")
            entry = ProjectiveClass(label, gamma, j, u, module, inclusion, vector, top, representative)
            entries.append(entry)
            if representative == label:
                representatives.append(entry)
    catalogue = ProjectiveCatalogue(algebra, generators, tuple(entries))
    logger.info(
        f"{len(entries)} indecomposable projectives in {len(representatives)} classes over {len(generators)} generators"
    )
    cache[key] = catalogue
    return catalogue
