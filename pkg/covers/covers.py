"""
Tops and projective covers.

A cover is assembled from the catalogue: for each class P = A·u (u ∈ A(γ:γ))
the homs P -> M correspond to elements of u·M_γ. Elements are picked greedily
while they are new modulo rad M plus what is already generated; each pick
adds one simple to the top, so the resulting map is a cover.
"""

import logging

from exactfield.matrices import unit_vector
from graded.constructions import direct_sum, generated_submodule, sum_of_homs_from
from graded.functors import hom_from_generator
from graded.models import GradedHom, GradedModule, GradedSubmodule
from gradalg.exceptions import LiftFailure, StructureError
from radical.homs import module_radical

from .models import CoverResult, TopDecomposition
from .projective import divisor_action_dim, projective_catalogue
from .smallness import is_small_subobject

logger = logging.getLogger(__name__)


def top(module, catalogue=None):
    """
    M / rad M with the multiplicity of every simple S[γ,j].

    Raises:
        StructureError: If the simples of the catalogue do not account for the top
    """
    catalogue = catalogue or projective_catalogue(module.algebra)
    radical = module_radical(module)
    quotient, projection = radical.quotient(name=f"top({module.name})")
    multiplicities = {}
    accounted = 0
    for p in catalogue.representatives:
        if not quotient.dim(p.gamma):
            continue
        hom_dim = divisor_action_dim(quotient, p.idempotent, p.gamma)
        end_dim = divisor_action_dim(p.top, p.idempotent, p.gamma)
        n = hom_dim // end_dim
        if n:
            multiplicities[p.label] = n
            accounted += n * p.top.total_dim
    if accounted != quotient.total_dim:
        logger.error(f"simples account for {accounted} of the {quotient.total_dim}-dimensional top of {module.name}")
        raise StructureError("the catalogue does not account for the top", code="top_mismatch")
    return TopDecomposition(quotient, projection, radical, multiplicities)


def _zero_module(algebra, name):
    return GradedModule(algebra, {}, {}, name=name)


def projective_cover(module, catalogue=None):
    """
    A projective cover π: ⊕ P[γ,j] ↠ M with ker π ⊆ rad(⊕ P[γ,j]).

    Raises:
        NonSplitSemisimpleQuotient: From splitting the divisor rings
        LiftFailure: If the assembled map is not a cover
    """
    algebra = module.algebra
    catalogue = catalogue or projective_catalogue(algebra)
    f = module.field
    if module.is_zero():
        cover = _zero_module(algebra, "0")
        kernel = GradedSubmodule.zero(cover)
        return CoverResult(module, cover, GradedHom.zero(cover, module), kernel, (), (), is_small_subobject(kernel))
    whole = GradedSubmodule.whole(module)
    reached = module_radical(module)
    picks = []
    for p in catalogue.representatives:
        gamma = p.gamma
        d = module.dim(gamma)
        for i in range(d):
            if reached == whole:
                break
            w = module.act_divisor(p.idempotent, gamma, unit_vector(f, d, i))
            if reached.space(gamma).contains(w):
                continue
            reached = reached + generated_submodule(module, [(gamma, w)])
            picks.append((p, w))
    if reached != whole:
        logger.error(f"generators found for {module.name} do not reach the whole module")
        raise LiftFailure(f"no cover found for {module.name}", params={'module': module.name})
    labels = tuple(p.label for p, _ in picks)
    cover, _, _ = direct_sum([p.module for p, _ in picks], name=" ⊕ ".join(labels))
    components = [
        hom_from_generator(algebra.projective(p.gamma), p.gamma, module, w).compose(p.inclusion) for p, w in picks
    ]
    epi = sum_of_homs_from(components, cover, module)
    if not epi.is_surjective():
        logger.error(f"cover of {module.name} is not surjective")
        raise LiftFailure(f"cover of {module.name} is not surjective")
    kernel = epi.kernel()
    smallness = is_small_subobject(kernel)
    if not smallness:
        logger.error(f"kernel of the cover of {module.name} is not inside the radical")
        raise LiftFailure(f"kernel of the cover of {module.name} is not small")
    logger.info(f"cover of {module.name}: {' ⊕ '.join(labels)}, kernel dimension {kernel.total_dim}")
    return CoverResult(module, cover, epi, kernel, labels, tuple((p.gamma, w) for p, w in picks), smallness)
