"""
Axiom checks for grading categories.
"""

import itertools

from gradalg.exceptions import StructureError
from gradalg.validation import ValidationReport

from .models import OUT_OF_WINDOW, CategoryKind


def validate_category(c):
    """
    Check identities, closure and associativity on the support.

    Window kinds skip triples with a clipped intermediate composite, since
    those composites are zero by definition.

    Returns:
        ValidationReport (empty iff c is a category on its support)

    Raises:
        StructureError: If arrows or identities reference unknown ids
    """
    report = ValidationReport('category')
    objects = set(c.objects)
    for a in c.arrows:
        if a.source not in objects or a.target not in objects:
            raise StructureError(
                f"arrow {a.id!r} has an unknown endpoint", code="dangling_arrow", params={'arrow': a.id}
            )
    for obj in c.objects:
        ident = c.identities.get(obj)
        if ident is None or not c.has_arrow(ident):
            report.add(f"object {obj} has no identity arrow", 'missing_identity', object=obj)
            continue
        if c.source(ident) != obj or c.target(ident) != obj:
            report.add(f"identity {ident} is not an endo-arrow of {obj}", 'identity_endpoints', object=obj)

    support = c.support
    for alpha, beta in itertools.product(support, repeat=2):
        gamma = c.composition.get((alpha, beta))
        if not c.composable(alpha, beta):
            if gamma is not None:
                report.add(
                    f"{alpha}·{beta} is defined although the arrows are not composable",
                    'composite_of_non_composable',
                    pair=[alpha, beta],
                )
            continue
        if gamma is None:
            report.add(f"{alpha}·{beta} is not defined", 'missing_composite', pair=[alpha, beta])
            continue
        if gamma == OUT_OF_WINDOW:
            if c.kind != CategoryKind.MONOID_WINDOW:
                report.add(f"{alpha}·{beta} leaves the support", 'composite_outside_support', pair=[alpha, beta])
            continue
        if c.source(gamma) != c.source(beta) or c.target(gamma) != c.target(alpha):
            report.add(
                f"{alpha}·{beta} = {gamma} has the wrong endpoints", 'composite_endpoints', pair=[alpha, beta]
            )

    for alpha in support:
        left = c.identities.get(c.target(alpha))
        right = c.identities.get(c.source(alpha))
        if left is not None and c.composition.get((left, alpha)) != alpha:
            report.add(f"1·{alpha} ≠ {alpha}", 'left_identity_law', arrow=alpha)
        if right is not None and c.composition.get((alpha, right)) != alpha:
            report.add(f"{alpha}·1 ≠ {alpha}", 'right_identity_law', arrow=alpha)

    def composite(x, y):
        gamma = c.composition.get((x, y))
        return None if gamma in (None, OUT_OF_WINDOW) or not c.composable(x, y) else gamma

    for alpha, beta, gamma in itertools.product(support, repeat=3):
        ab = composite(alpha, beta)
        bg = composite(beta, gamma)
        if ab is None or bg is None:
            continue
        left = c.composition.get((ab, gamma))
        right = c.composition.get((alpha, bg))
        if left != right:
            report.add(
                f"({alpha}·{beta})·{gamma} = {left} but {alpha}·({beta}·{gamma}) = {right}",
                'associativity',
                triple=[alpha, beta, gamma],
            )
    return report
