"""
Small subobjects.

For a finite-dimensional module the radical is the largest small submodule,
so X is small in M iff X ⊆ rad M. Over F_2 and F_3 the definition itself can
be checked by enumerating every submodule.
"""

import itertools
import logging

from django.conf import settings

from graded.constructions import generated_submodule
from graded.models import GradedSubmodule
from gradalg.exceptions import OracleTooLarge, StructureError
from radical.homs import module_radical

from .models import SmallnessCertificate

logger = logging.getLogger(__name__)


def _check_bounds(module):
    f = module.field
    if not f.is_finite or f.prime > settings.GRADALG_ORACLE_MAX_FIELD:
        raise OracleTooLarge(
            f"submodule enumeration needs F_p with p ≤ {settings.GRADALG_ORACLE_MAX_FIELD}, got {f.tag}",
            params={'field': f.tag},
        )
    if module.total_dim > settings.GRADALG_ORACLE_MAX_DIM:
        raise OracleTooLarge(
            f"submodule enumeration limited to total dimension {settings.GRADALG_ORACLE_MAX_DIM}, got {module.total_dim}",
            params={'dim': module.total_dim},
        )


def all_submodules(module):
    """
    Every submodule of a small module over a small prime field.

    Raises:
        OracleTooLarge: Outside GRADALG_ORACLE_MAX_FIELD / GRADALG_ORACLE_MAX_DIM
    """
    _check_bounds(module)
    f = module.field
    cyclic = []
    for gamma in module.support:
        for v in itertools.product(f.elements(), repeat=module.dim(gamma)):
            if any(v):
                cyclic.append(generated_submodule(module, [(gamma, v)]))
    cyclic = list(dict.fromkeys(cyclic))
    zero = GradedSubmodule.zero(module)
    seen = {zero}
    pending = [zero]
    while pending:
        current = pending.pop()
        for c in cyclic:
            if current.contains(c):
                continue
            larger = current + c
            if larger not in seen:
                seen.add(larger)
                pending.append(larger)
    logger.debug(f"{module.name} has {len(seen)} submodules")
    return list(seen)


def is_small_subobject(sub, method="radical"):
    """
    Decide whether X + S = M forces S = M.

    Args:
        sub: GradedSubmodule X of M
        method: "radical" (X ⊆ rad M) or "oracle" (every submodule S enumerated)

    Returns:
        SmallnessCertificate
    """
    module = sub.ambient
    if method == "radical":
        return SmallnessCertificate(module_radical(module).contains(sub), "radical")
    if method != "oracle":
        raise StructureError(f"unknown smallness method {method!r}", code="unknown_method")
    whole = GradedSubmodule.whole(module)
    submodules = all_submodules(module)
    for s in submodules:
        if s != whole and sub + s == whole:
            return SmallnessCertificate(False, "oracle", len(submodules))
    return SmallnessCertificate(True, "oracle", len(submodules))
