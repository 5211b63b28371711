"""
Lifting idempotents modulo a nilpotent ideal.

e ← 3e² − 2e³ squares the defect: if e² − e ∈ J^k then the new e satisfies
e² − e ∈ J^{2k}.
"""

import logging
import math

from gradalg.exceptions import InputNotIdempotentModJ, LiftFailure

logger = logging.getLogger(__name__)


def _step(algebra, e):
    f = algebra.field
    e2 = algebra.mul(e, e)
    e3 = algebra.mul(e2, e)
    return tuple(f.sub(f.mul(f(3), a), f.mul(f(2), b)) for a, b in zip(e2, e3))


def lift_idempotent(algebra, x, radical):
    """
    An idempotent e with e ≡ x mod J.

    Args:
        algebra: FiniteAlgebra A
        x: Ambient representative of an idempotent of A/J
        radical: AlgebraIdeal J (with certificate)

    Raises:
        InputNotIdempotentModJ: If x² − x ∉ J
        LiftFailure: If the iteration does not stabilise within the bound
    """
    x = tuple(x)
    defect = algebra.sub(algebra.mul(x, x), x)
    if not radical.contains(defect):
        raise InputNotIdempotentModJ("x² − x does not lie in the radical")
    index = radical.certificate.nilpotency_index if radical.certificate else algebra.dim + 1
    bound = max(1, math.ceil(math.log2(max(index, 1)))) + 1
    e = x
    for _ in range(bound + 1):
        if algebra.mul(e, e) == e:
            return e
        e = _step(algebra, e)
    logger.error(f"idempotent lifting did not stabilise after {bound} steps")
    raise LiftFailure(f"lifting did not stabilise after {bound} steps")


def lift_orthogonal(algebra, representatives, radical, complete=False):
    """
    Lift pairwise orthogonal idempotents of A/J to orthogonal idempotents of A.

    Each representative is first compressed into f·A·f, f = 1 − Σ(previous
    lifts), and lifted there. With complete=True the last idempotent is
    1 − Σ(previous lifts).
    """
    f = algebra.field
    lifted = []
    remainder = algebra.one
    for n, x in enumerate(representatives):
        if complete and n == len(representatives) - 1:
            e = remainder
            defect = algebra.sub(e, tuple(x))
            if not radical.contains(defect):
                raise InputNotIdempotentModJ("the representatives do not sum to 1 modulo the radical")
        else:
            compressed = algebra.mul(algebra.mul(remainder, tuple(x)), remainder)
            e = lift_idempotent(algebra, compressed, radical)
        lifted.append(e)
        remainder = tuple(f.sub(a, b) for a, b in zip(remainder, e))
    return lifted
