"""
Exhaustive enumeration of the admissible idempotents on small windows.

Admissible means equivariant with f∘e = f on |n| ≤ d and e² = e on
|n| ≤ d − 1. In λ these read: every row sums to 1, and every row k < d
satisfies Σ_{m ≤ l ≤ k} λ_{k,l} λ_{l,m} = λ_{k,m}. Rows are enumerated in
ascending order so each idempotency equation only involves rows already
fixed. The top row k = d carries no idempotency equation and is used to
partition the work. For d ≥ 2 every admissible λ is also restricted to
the window of radius d − 1 and checked there.
"""

import itertools
import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor

from django.conf import settings

from gradalg.exceptions import SearchSpaceTooLarge

from .analysis import analyse_coefficients, descend
from .models import SearchReport
from .scene import build_scene, restrict_lambda

logger = logging.getLogger(__name__)

SEARCH_FIELDS = (2, 3)


def _row_candidates(scene, k):
    """Row k assignments with Σ_l λ_{k,l} = 1; the diagonal is solved for."""
    fld = scene.field
    off = [l for l in scene.row(k) if l != k]
    for values in itertools.product(fld.elements(), repeat=len(off)):
        row = {(k, l): c for l, c in zip(off, values)}
        total = fld.zero
        for c in values:
            total = fld.add(total, c)
        row[(k, k)] = fld.sub(fld.one, total)
        yield row


def _row_idempotent(scene, lam, k):
    fld = scene.field
    row = scene.row(k)
    for m in row:
        total = fld.zero
        for l in row:
            if l >= m:
                total = fld.add(total, fld.mul(lam[(k, l)], lam[(l, m)]))
        if total != lam[(k, m)]:
            return False
    return True


def is_admissible(scene, coefficients):
    """f∘e = f on |n| ≤ d and e² = e on |n| ≤ d − 1, read on λ."""
    fld = scene.field
    lam = {(k, l): fld(coefficients.get((k, l), 0)) for k in scene.degrees for l in scene.row(k)}
    for k in scene.degrees:
        total = fld.zero
        for l in scene.row(k):
            total = fld.add(total, lam[(k, l)])
        if total != fld.one:
            return False
    return all(_row_idempotent(scene, lam, k) for k in scene.idempotent_rows)


def admissible_coefficients(scene):
    """Every admissible λ on the scene, prefixes first and the top row last."""
    prefixes = _prefixes(scene)
    for top in _row_candidates(scene, scene.d):
        for prefix in prefixes:
            yield {**prefix, **top}


def _prefixes(scene):
    """Every assignment of the rows -d … d-1 satisfying their equations."""
    prefixes = [{}]
    for k in scene.idempotent_rows:
        extended = []
        for lam in prefixes:
            for row in _row_candidates(scene, k):
                candidate = {**lam, **row}
                if _row_idempotent(scene, candidate, k):
                    extended.append(candidate)
        prefixes = extended
        logger.debug(f"rows up to {k}: {len(prefixes)} partial assignments")
    return prefixes


def _tally(scene, smaller, prefixes, tops):
    counts, supports, depth = Counter(), Counter(), None
    for top in tops:
        for prefix in prefixes:
            lam = {**prefix, **top}
            analysis = analyse_coefficients(scene, lam)
            report = descend(scene, analysis)
            counts['admissible'] += 1
            if smaller is not None:
                counts['restricted_admissible'] += is_admissible(smaller, restrict_lambda(scene, smaller, lam))
            counts['diagonal_ok'] += analysis.diagonal_ok
            counts['reaching_edge'] += report.reaches_edge
            counts['interior_minimal'] += bool(report.violations)
            counts['empty_support'] += not analysis.support
            supports["{" + ",".join(str(k) for k in analysis.support) + "}"] += 1
            depth = report.max_depth if depth is None else min(depth, report.max_depth)
    return counts, supports, depth


def brute_force_split_search(d, field):
    """
    Enumerate every admissible e on the window of radius d.

    Raises:
        SearchSpaceTooLarge: Above GRADALG_SEARCH_MAX_D or outside F_2 and F_3

    Returns:
        SearchReport
    """
    if field.prime not in SEARCH_FIELDS:
        raise SearchSpaceTooLarge(
            f"exhaustive search runs over F_2 or F_3 only, not {field.tag}",
            code="unsupported_field",
            params={'field': field.tag},
        )
    if d > settings.GRADALG_SEARCH_MAX_D:
        raise SearchSpaceTooLarge(
            f"window radius {d} exceeds GRADALG_SEARCH_MAX_D={settings.GRADALG_SEARCH_MAX_D}",
            params={'d': d, 'max_d': settings.GRADALG_SEARCH_MAX_D},
        )
    scene = build_scene(d, field)
    smaller = build_scene(d - 1, field) if d > 1 else None
    prefixes = _prefixes(scene)
    tops = list(_row_candidates(scene, d))
    workers = min(settings.GRADALG_THREADS, len(tops))
    chunks = [tops[i::workers] for i in range(workers)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        partials = list(pool.map(lambda chunk: _tally(scene, smaller, prefixes, chunk), chunks))

    counts, supports, depths = Counter(), Counter(), []
    for partial_counts, partial_supports, depth in partials:
        counts.update(partial_counts)
        supports.update(partial_supports)
        if depth is not None:
            depths.append(depth)
    report = SearchReport(
        d,
        field.tag,
        scene.parameter_count(),
        counts['admissible'],
        counts['diagonal_ok'],
        counts['reaching_edge'],
        counts['interior_minimal'],
        counts['empty_support'],
        min(depths, default=0),
        dict(supports),
        counts['restricted_admissible'] if smaller is not None else None,
    )
    logger.info(
        f"d={d} over {field.tag}: {report.admissible} admissible idempotents, "
        f"descent confirmed={report.confirms_descent}"
    )
    return report
