"""
Idempotent analysis of equivariant endomorphisms of F.

For an e with e² = e on the interior degrees |n| ≤ d − 1 and f∘e = f on
|n| ≤ d, let I be the set of k with λ_{k,k} = 1. The leading coefficient of
e(a_0 ⊗ x_{k-1}) lies in I below k, so descending from any k ∈ I never
stops inside the window; the chains all end at the lower edge -d. A cover
would need an I with an interior minimum, which the descent rules out.
"""

import logging

from gradalg.exceptions import NotIdempotentOnInterior, StructureError

from .models import DescentReport, IdempotentAnalysis, KernelWitness
from .scene import lambda_from_endomorphism

logger = logging.getLogger(__name__)

VANISHING = "vanishing-generator-image"
LEADING_OUTSIDE = "leading-index-outside-I"


def analyse_coefficients(scene, coefficients):
    """IdempotentAnalysis straight from λ, with no GradedHom built."""
    fld = scene.field
    lam = {(k, l): fld(coefficients.get((k, l), 0)) for k in scene.degrees for l in scene.row(k)}
    support = tuple(k for k in scene.degrees if lam[(k, k)] == fld.one)
    failures = tuple(
        k for k in scene.idempotent_rows
        if fld.mul(lam[(k, k)], lam[(k, k)]) != lam[(k, k)]
    )
    return IdempotentAnalysis(lam, support, failures)


def idempotent_diagonal_check(scene, e):
    """
    Check e² = e on the interior and return λ, I and the diagonal failures.

    Raises:
        NotEquivariant: If e is not a module map
        NotIdempotentOnInterior: Naming the first degree where e² ≠ e
    """
    lam = lambda_from_endomorphism(scene, e)
    square = e.compose(e)
    for n in range(-(scene.d - 1), scene.d):
        if square.at(str(n)) != e.at(str(n)):
            raise NotIdempotentOnInterior(
                f"e² ≠ e in degree {n}", params={'degree': n}
            )
    analysis = analyse_coefficients(scene, lam)
    logger.debug(f"I = {list(analysis.support)} for d={scene.d}")
    return analysis


def descend(scene, analysis):
    """Descent chains from every k ∈ I, assuming the precondition holds."""
    members = set(analysis.support)
    chains, violations = {}, []
    for k in analysis.support:
        chain = [k]
        while chain[-1] - 1 >= -scene.d:
            l = analysis.lead(chain[-1] - 1)
            if l is None:
                violations.append((chain[-1], VANISHING))
                break
            if l not in members:
                violations.append((chain[-1], LEADING_OUTSIDE))
                break
            chain.append(l)
        chains[k] = tuple(chain)
    return DescentReport(True, chains, tuple(violations), -scene.d)


def satisfies_counit(scene, e):
    """f∘e = f on every degree |n| ≤ d."""
    fe = scene.counit.compose(e)
    return all(fe.at(str(n)) == scene.counit.at(str(n)) for n in scene.degrees)


def min_element_propagation(scene, e, analysis=None):
    """
    Run the descent on e.

    The report is not admissible when f∘e ≠ f somewhere on |n| ≤ d; no
    error is raised for that.
    """
    analysis = analysis or idempotent_diagonal_check(scene, e)
    if not satisfies_counit(scene, e):
        logger.info(f"f∘e ≠ f on the window of radius {scene.d}; descent does not apply")
        return DescentReport(False, edge=-scene.d)
    report = descend(scene, analysis)
    if report.violations:
        logger.warning(f"descent stopped inside the window at {list(report.violations)}")
    return report


def kernel_witness(scene, e, analysis=None, pair=None):
    """
    v = a_0 ⊗ x_k − a_{k-l} ⊗ x_l has e(v) ≠ 0 and f(e(v)) = 0 whenever
    k, l ∈ I and l < k.

    Args:
        pair: (k, l); defaults to the two largest elements of I

    Raises:
        StructureError: If I has fewer than two elements or the pair is not in I
    """
    analysis = analysis or idempotent_diagonal_check(scene, e)
    support = analysis.support
    if pair is None:
        if len(support) < 2:
            raise StructureError(
                f"I = {list(support)} has no pair l < k", code="support_too_small", params={'I': list(support)}
            )
        pair = (support[-1], support[-2])
    k, l = pair
    if k not in support or l not in support or not l < k:
        raise StructureError(f"({k}, {l}) is not a pair l < k in I", code="not_in_support", params={'pair': [k, l]})
    fld = scene.field
    positions = scene.positions[k]
    v = [fld.zero] * len(positions)
    v[positions[(0, k)]] = fld.one
    v[positions[(k - l, l)]] = fld.neg(fld.one)
    image = e.apply(str(k), tuple(v))
    fe = scene.counit.apply(str(k), image)
    return KernelWitness(
        k, l, tuple(v), tuple(image), any(x != 0 for x in image), all(x == 0 for x in fe)
    )
