"""
Sample modules and the constructive cross-check of a perfect verdict: every
sample must receive a verified projective cover.
"""

import logging
import random

from covers.covers import projective_cover
from covers.projective import projective_catalogue
from graded.constructions import generated_submodule
from graded.validators import validate_hom
from gradalg.exceptions import GradedAlgebraError
from idempotents.splitting import derive_seed

from .checks import check_perfect
from .models import CoverCheck, CrossValidationReport, Verdict

logger = logging.getLogger(__name__)


def _random_vector(rng, field, dim):
    while True:
        if field.is_finite:
            v = tuple(field(rng.randrange(field.prime)) for _ in range(dim))
        else:
            v = tuple(field(rng.randint(-2, 2)) for _ in range(dim))
        if any(x != 0 for x in v):
            return v


def sample_modules(algebra, quotients=2, seed=None):
    """
    The simple tops of every indecomposable projective class plus seeded
    quotients A[γ]/A·v for pseudorandom homogeneous v.

    Args:
        quotients: Quotients per generator
        seed: Overrides the digest-derived seed
    """
    catalogue = projective_catalogue(algebra)
    rng = random.Random(derive_seed(algebra) if seed is None else seed)
    samples = [p.top for p in catalogue.representatives]
    for gamma in catalogue.generators:
        projective = algebra.projective(gamma)
        degrees = list(projective.support)
        for n in range(quotients):
            delta = degrees[rng.randrange(len(degrees))]
            v = _random_vector(rng, algebra.field, projective.dim(delta))
            sub = generated_submodule(projective, [(delta, v)])
            module, _ = sub.quotient(name=f"A[{gamma}]/A·v{n + 1}@{delta}")
            samples.append(module)
    return samples


def cross_validate_perfectness(algebra, modules=None, verdict=None):
    """
    Build and verify a projective cover of every sample module.

    Failures are reported in the result, never raised. The run is skipped
    unless the algebra was certified perfect.
    """
    verdict = verdict or check_perfect(algebra)
    if verdict.verdict != Verdict.PERFECT:
        logger.warning(f"cross validation skipped: {algebra.name} is {verdict.verdict.value}")
        return CrossValidationReport(verdict.verdict, skipped=verdict.reason)
    modules = sample_modules(algebra) if modules is None else modules
    checks = []
    for module in modules:
        try:
            cover = projective_cover(module)
        except GradedAlgebraError as exc:
            logger.error(f"no cover for {module.name}: {exc}")
            checks.append(CoverCheck(module.name, False, error=exc.code))
            continue
        passed = (
            cover.epi.is_surjective()
            and cover.smallness.small
            and validate_hom(cover.epi).is_valid
        )
        checks.append(CoverCheck(module.name, passed, cover.labels, cover.kernel.total_dim))
    report = CrossValidationReport(verdict.verdict, checks)
    logger.info(f"cross validation of {algebra.name}: {len(checks)} modules, passed={report.passed}")
    return report
