"""
Brute-force largest nilpotent ideal, used to cross-check algebra_radical.

Over a finite field every element is enumerated and the result is the
radical. Over Q only the coefficient box {−1, 0, 1}^n is enumerated, so the
result is a nilpotent ideal contained in the radical: a lower bound that is
exact only when the radical is spanned by box vectors.
"""

import itertools
import logging

from django.conf import settings

from exactfield.matrices import RowSpace
from gradalg.exceptions import OracleTooLarge

from .algorithms import power_chain
from .models import AlgebraIdeal

logger = logging.getLogger(__name__)


def _candidates(algebra):
    f = algebra.field
    values = list(f.elements()) if f.is_finite else [f(-1), f.zero, f.one]
    for coords in itertools.product(values, repeat=algebra.dim):
        if any(c != 0 for c in coords):
            yield tuple(coords)


def largest_nilpotent_ideal(algebra):
    """
    Sum of the nilpotent principal ideals AxA over all enumerated x.

    Over F_p this is the radical. Over Q it is a heuristic lower bound;
    compare it with algebra_radical only for algebras whose radical has a
    basis of {−1, 0, 1} vectors.

    Raises:
        OracleTooLarge: Above GRADALG_ORACLE_MAX_DIM or for primes above
            GRADALG_ORACLE_MAX_FIELD
    """
    f = algebra.field
    if algebra.dim > settings.GRADALG_ORACLE_MAX_DIM:
        raise OracleTooLarge(
            f"oracle limited to dimension {settings.GRADALG_ORACLE_MAX_DIM}, got {algebra.dim}",
            params={'dim': algebra.dim},
        )
    if f.is_finite and f.prime > settings.GRADALG_ORACLE_MAX_FIELD:
        raise OracleTooLarge(
            f"oracle limited to primes ≤ {settings.GRADALG_ORACLE_MAX_FIELD}, got {f.prime}",
            params={'prime': f.prime},
        )
    total = RowSpace(f, algebra.dim)
    for x in _candidates(algebra):
        if total.contains(x):
            continue
        ideal = algebra.two_sided_ideal([x])
        if not power_chain(algebra, ideal)[-1].dim:
            total = total + ideal
    logger.debug(f"oracle radical of a {algebra.dim}-dimensional algebra has dimension {total.dim}")
    return AlgebraIdeal(algebra, total)
