"""
Divisibility queries and the arrow-sequence hypotheses of the perfectness
criteria.
"""

import logging

from .models import (
    ArrowSequenceReport,
    CategoryKind,
    Lattice,
    SequenceCondition,
    SequenceVerdict,
)

logger = logging.getLogger(__name__)


def right_divisor(c, gamma, beta):
    """
    True iff some α has αβ = γ.

    Raises:
        StructureError: If either arrow is unknown
    """
    c.arrow(gamma)
    c.arrow(beta)
    return any(b == beta for _, b in c.factorizations(gamma))


def check_sequence_condition(c, algebra_support=None):
    """
    Decide the arrow-sequence hypothesis for the categories we can certify.

    Args:
        c: IndexCategory
        algebra_support: Arrows carrying nonzero algebra components
            (defaults to the whole support)

    Returns:
        ArrowSequenceReport
    """
    support = tuple(c.support if algebra_support is None else algebra_support)
    if c.kind == CategoryKind.EXPLICIT_FINITE:
        report = ArrowSequenceReport(
            SequenceCondition.SEQUENCE_REPETITION,
            SequenceVerdict.HOLDS,
            reason=f"finitely many arrows ({len(c.support)}): every infinite sequence repeats an arrow",
        )
    elif c.kind == CategoryKind.FINITE_GROUP:
        report = ArrowSequenceReport(
            SequenceCondition.SEQUENCE_REPETITION,
            SequenceVerdict.HOLDS,
            reason=f"finite group with algebra support of size {len(support)}",
        )
    elif c.kind == CategoryKind.POSET_INTERVAL:
        report = ArrowSequenceReport(
            SequenceCondition.RIGHT_DIVISOR_CHAINS,
            SequenceVerdict.HOLDS,
            reason=f"finite poset category ({len(c.support)} arrows): descending divisor chains repeat",
        )
    elif c.lattice == Lattice.NAT:
        report = ArrowSequenceReport(
            SequenceCondition.SEQUENCE_REPETITION,
            SequenceVerdict.HOLDS,
            reason="Nat^k is artinian and 0 is its least element",
        )
    else:
        report = ArrowSequenceReport(
            SequenceCondition.SEQUENCE_REPETITION,
            SequenceVerdict.NOT_DECIDABLE,
            reason="Int^k is an infinite group; a finite window certifies nothing about it",
        )
        logger.warning(f"sequence condition not decidable for {c.kind.value} over {c.lattice}")
    return report
