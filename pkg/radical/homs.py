"""
Radicals of hom spaces and of modules.

J(M, N) is read off the radical of End(M ⊕ N) through the corner
e_N · J · e_M. Padding the sum with further modules C gives the same corner,
which tests exercise.
"""

import logging

from exactfield.matrices import RowSpace
from graded.constructions import direct_sum
from graded.homs import end_algebra, endomorphism_from, hom_space
from graded.models import GradedHom, GradedSubmodule
from graded.total import module_to_total

from .algorithms import algebra_radical
from .models import HomRadical

logger = logging.getLogger(__name__)


def hom_radical(source, target, padding=()):
    """
    J(M, N) via End(M ⊕ N ⊕ C_1 ⊕ …).

    Args:
        padding: Extra modules C appended to the direct sum
    """
    same = source is target
    summands = [source] if same else [source, target]
    summands.extend(padding)
    total, inclusions, projections = direct_sum(summands, name="X")
    ring, basis = end_algebra(total)
    radical = algebra_radical(ring)
    inc = inclusions[0]
    proj = projections[0] if same else projections[1]
    f = source.field
    vectors = []
    for coords in radical.basis:
        h = endomorphism_from(total, basis, coords)
        vectors.append(proj.compose(h).compose(inc).as_vector())
    width = sum(source.dim(g) * target.dim(g) for g in source.category.support)
    space = RowSpace(f, width, vectors)
    homs = [GradedHom.from_vector(source, target, row) for row in space.basis]
    hom_dim = len(hom_space(source, target))
    logger.debug(f"J({source.name}, {target.name}) has dimension {len(homs)} inside a {hom_dim}-dimensional hom space")
    return HomRadical(source, target, homs, hom_dim, tuple(c.name for c in padding))


def endomorphism_radical(module):
    """J(End M) as homomorphisms, together with the endomorphism algebra."""
    ring, basis = end_algebra(module)
    radical = algebra_radical(ring)
    return [endomorphism_from(module, basis, coords) for coords in radical.basis], ring, radical


def module_radical(module, total=None):
    """
    rad M = M·J(E) read back degree-wise.

    Args:
        total: TotalHomAlgebra to use (default: generators on the support of M)

    Returns:
        GradedSubmodule of M
    """
    if module.is_zero():
        return GradedSubmodule.zero(module)
    representation = module_to_total(module, total)
    radical = algebra_radical(representation.total.algebra)
    space = representation.span_action(representation.full_basis(), radical.basis)
    sub = representation.submodule_from(space)
    logger.debug(f"rad {module.name} has dimension {sub.total_dim} of {module.total_dim}")
    return sub
