"""
Minimal projective resolutions by iterated covers of kernels, and an
independent verifier.
"""

import logging

from radical.homs import module_radical

from .covers import projective_cover
from .models import ResolutionCertificate, ResolutionComplex
from .projective import projective_catalogue

logger = logging.getLogger(__name__)


def minimal_resolution(module, length, catalogue=None):
    """
    P_length -> … -> P_0 -> M, stopping early once a kernel vanishes.

    Args:
        length: Highest homological degree to compute (≥ 0)
    """
    catalogue = catalogue or projective_catalogue(module.algebra)
    cover = projective_cover(module, catalogue)
    terms = [cover.cover]
    labels = [cover.labels]
    differentials = []
    kernel = cover.kernel
    for k in range(1, length + 1):
        if kernel.is_zero():
            break
        syzygy, inclusion = kernel.as_module(name=f"Ω{k}({module.name})")
        step = projective_cover(syzygy, catalogue)
        differentials.append(inclusion.compose(step.epi))
        terms.append(step.cover)
        labels.append(step.labels)
        kernel = step.kernel
        logger.debug(f"stage {k} of the resolution of {module.name}: {len(step.labels)} summands")
    terminated = kernel.is_zero()
    logger.info(f"resolution of {module.name} computed to length {len(terms) - 1}, terminated={terminated}")
    return ResolutionComplex(
        module, tuple(terms), tuple(labels), cover.epi, tuple(differentials), terminated
    )


def _check(resolution):
    """Yield (stage, failure or None) for every check, in order."""
    eps = resolution.augmentation
    yield 0, None if eps.is_surjective() else "surjectivity"
    yield 0, None if module_radical(eps.source).contains(eps.kernel()) else "minimality"
    maps = [eps, *resolution.differentials]
    for k in range(1, len(maps)):
        d, previous = maps[k], maps[k - 1]
        yield k, None if previous.compose(d).is_zero() else "complex"
        yield k, None if d.image() == previous.kernel() else "exactness"
        yield k, None if module_radical(d.target).contains(d.image()) else "minimality"
    if resolution.terminated:
        yield len(maps) - 1, None if maps[-1].kernel().is_zero() else "exactness"


def verify_resolution(resolution):
    """
    Re-check a resolution: ε onto, d∘d = 0, exactness, and minimality
    (ker ε ⊆ rad P_0 and im d_k ⊆ rad P_{k-1}).

    Returns:
        ResolutionCertificate naming the first failing stage
    """
    checks = []
    for stage, failure in _check(resolution):
        checks.append({'stage': stage, 'failure': failure})
        if failure:
            logger.warning(f"resolution of {resolution.module.name} fails {failure} at stage {stage}")
            return ResolutionCertificate(False, stage, failure, checks)
    return ResolutionCertificate(True, None, None, checks)
