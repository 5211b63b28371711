"""
Complete primitive idempotent sets, locality and decompositions of projectives.
"""

import logging

from graded.constructions import corestrict
from graded.homs import end_algebra, endomorphism_from
from radical.algorithms import algebra_radical

from .lifting import lift_orthogonal
from .models import IdempotentSet, LocalityCertificate, ProjectiveDecomposition, Summand
from .splitting import Splitter, derive_seed

logger = logging.getLogger(__name__)


def corner_is_split_local(algebra, e, radical):
    """e·A·e / e·J·e ≅ K, i.e. the corner is local with trivial residue ring."""
    corner = algebra.corner(e)[1]
    inside = algebra.span_products([algebra.mul(e, j) for j in radical.basis], [e])
    return len(corner) - inside.dim == 1


def complete_primitive_set(algebra, seed=None):
    """
    Orthogonal primitive idempotents summing to 1.

    The semisimple quotient A/J is split into primitive idempotents, which are
    then lifted one by one.

    Args:
        algebra: Unital FiniteAlgebra
        seed: Overrides the digest-derived seed

    Raises:
        NonSplitSemisimpleQuotient: If A/J is not a product of matrix algebras over K
        CharacteristicTooSmall: Under the "refuse" policy
    """
    if algebra.dim == 0:
        return IdempotentSet(algebra, (), (), seed)
    radical = algebra_radical(algebra)
    seed = derive_seed(algebra) if seed is None else seed
    quotient = algebra.quotient(radical.space)
    representatives = [quotient.lift(e) for e in Splitter(quotient.algebra, seed).primitive_idempotents()]
    lifted = lift_orthogonal(algebra, representatives, radical, complete=True)
    primitive = tuple(corner_is_split_local(algebra, e, radical) for e in lifted)
    logger.info(f"{len(lifted)} primitive idempotents in a {algebra.dim}-dimensional algebra")
    return IdempotentSet(algebra, tuple(lifted), primitive, seed)


def is_local(algebra):
    """
    Decide whether A/J is a division ring.

    A split quotient is decided exactly (local iff dim A/J = 1). Otherwise the
    quotient is searched for a nontrivial idempotent.

    Returns:
        LocalityCertificate
    """
    radical = algebra_radical(algebra)
    quotient_dim = algebra.dim - radical.dim
    if quotient_dim <= 1:
        return LocalityCertificate(quotient_dim == 1, quotient_dim, radical.dim, quotient_dim == 1)
    quotient = algebra.quotient(radical.space).algebra
    local = not Splitter(quotient).has_nontrivial_idempotent()
    return LocalityCertificate(local, quotient_dim, radical.dim, False)


def decompose_projective(module, labels=None, seed=None):
    """
    Split a module into completely indecomposable summands along a complete
    primitive idempotent set of End(M).

    Args:
        labels: Optional callable summand module -> label

    Returns:
        ProjectiveDecomposition
    """
    ring, basis = end_algebra(module)
    idempotents = complete_primitive_set(ring, seed)
    summands = []
    for n, coords in enumerate(idempotents):
        e = endomorphism_from(module, basis, coords)
        image = e.image()
        part, inclusion = image.as_module(name=f"{module.name}_{n + 1}")
        projection = corestrict(e, image, part)
        label = labels(part) if labels else None
        summands.append(Summand(e, part, projection, inclusion, label))
    logger.debug(f"{module.name} splits into {len(summands)} summands")
    return ProjectiveDecomposition(module, tuple(summands))
