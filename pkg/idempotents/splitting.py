"""
Primitive idempotents of a split semisimple algebra.

Central idempotents come from factoring minimal polynomials of central
elements. Inside a simple block, idempotents come from factoring minimal
polynomials of compressed elements until every corner is one-dimensional.
Candidates are a seeded random element, the basis, pairwise sums and further
seeded random combinations.
"""

import logging
import random
from fractions import Fraction

from django.conf import settings
from sympy import QQ, Poly, Rational, Symbol

from exactfield.matrices import CoordinateSystem, RowSpace, is_zero_vector, vec_add, vec_axpy
from gradalg.exceptions import NonSplitSemisimpleQuotient

logger = logging.getLogger(__name__)

T = Symbol('t')
RANDOM_CANDIDATES = 64


def derive_seed(algebra, base=None):
    """Settings seed mixed with the algebra's structure-constant digest."""
    base = settings.GRADALG_SEED if base is None else base
    return base ^ int(algebra.digest()[:16], 16)


def minimal_polynomial(algebra, x, unit):
    """
    Monic minimal polynomial of x in the unital subalgebra with identity `unit`.

    Returns:
        Coefficients c_0 … c_d (low to high), c_d = 1
    """
    f = algebra.field
    if is_zero_vector(unit):
        return [f.one]
    powers = [tuple(unit)]
    while True:
        following = algebra.mul(powers[-1], x)
        coords = CoordinateSystem(f, powers, algebra.dim).coordinates(following)
        if coords is not None:
            return [f.neg(c) for c in coords] + [f.one]
        powers.append(following)


def _to_poly(field, coeffs):
    high_first = list(reversed(coeffs))
    if field.is_finite:
        return Poly([int(c) for c in high_first], T, modulus=field.prime)
    return Poly([Rational(c.numerator, c.denominator) for c in high_first], T, domain=QQ)


def _from_poly(field, poly):
    return [field(Fraction(str(c))) for c in reversed(poly.all_coeffs())]


def evaluate(algebra, coeffs, x, unit):
    """p(x) with x⁰ = unit."""
    f = algebra.field
    out = (f.zero,) * algebra.dim
    power = tuple(unit)
    for n, c in enumerate(coeffs):
        if n:
            power = algebra.mul(power, x)
        if c != 0:
            out = vec_axpy(f, c, power, out)
    return out


def factor_idempotents(algebra, x, unit):
    """
    Orthogonal idempotents summing to `unit`, one per coprime primary factor
    of the minimal polynomial of x.

    Returns:
        list of idempotents; just [unit] when the minimal polynomial is primary
    """
    f = algebra.field
    m = _to_poly(f, minimal_polynomial(algebra, x, unit))
    _, factors = m.factor_list()
    if len(factors) < 2:
        return [tuple(unit)]
    out = []
    for p, k in factors:
        q = p ** k
        rest = m.quo(q)
        _, t, _ = q.gcdex(rest)
        # t·rest ≡ 1 mod q and ≡ 0 mod rest
        g = (t * rest).rem(m)
        out.append(evaluate(algebra, _from_poly(f, g), x, unit))
    return out


class Splitter:
    """
    Splits a semisimple algebra into primitive idempotents.

    Attributes:
        algebra: FiniteAlgebra with zero radical
        seed: Seed of the pseudorandom candidates
    """

    def __init__(self, algebra, seed=None):
        self.algebra = algebra
        self.seed = derive_seed(algebra) if seed is None else seed
        self.rng = random.Random(self.seed)

    def _random_element(self, rows):
        f = self.algebra.field
        out = (f.zero,) * self.algebra.dim
        for row in rows:
            c = self.rng.randrange(f.prime) if f.is_finite else self.rng.randint(-3, 3)
            out = vec_axpy(f, f(c), row, out)
        return out

    def _candidates(self, rows):
        f = self.algebra.field
        rows = list(rows)
        yield self._random_element(rows)
        yield from rows
        for i, x in enumerate(rows):
            for y in rows[i + 1:]:
                yield vec_add(f, x, y)
        for _ in range(RANDOM_CANDIDATES):
            yield self._random_element(rows)

    def split(self, unit, rows):
        """
        Split `unit` with an element of unit·span(rows)·unit.

        Returns:
            list of at least two orthogonal idempotents summing to `unit`, or None
        """
        a = self.algebra
        for y in self._candidates(rows):
            x = a.mul(a.mul(unit, y), unit)
            parts = factor_idempotents(a, x, unit)
            if len(parts) > 1:
                return parts
        return None

    def central_idempotents(self):
        """
        Primitive central idempotents.

        Raises:
            NonSplitSemisimpleQuotient: For a block whose center is larger than K
        """
        a = self.algebra
        center = a.center()
        pending = [a.one]
        blocks = []
        while pending:
            c = pending.pop()
            block_center = RowSpace(a.field, a.dim, [a.mul(c, z) for z in center.basis])
            if block_center.dim <= 1:
                blocks.append(c)
                continue
            parts = self.split(c, block_center.basis)
            if parts is None:
                raise NonSplitSemisimpleQuotient(
                    f"simple component with a {block_center.dim}-dimensional center over {a.field.tag}",
                    params={'center_dim': block_center.dim},
                )
            pending.extend(parts)
        return blocks

    def primitive_idempotents(self):
        """
        A complete set of primitive orthogonal idempotents, sorted by coordinates.

        Raises:
            NonSplitSemisimpleQuotient: For a block that is not a full matrix algebra over K
        """
        a = self.algebra
        if a.dim == 0:
            return []
        out = []
        for c in self.central_idempotents():
            pending = [c]
            while pending:
                u = pending.pop()
                _, corner = a.corner(u)
                if len(corner) <= 1:
                    out.append(u)
                    continue
                parts = self.split(u, corner)
                if parts is None:
                    logger.warning(f"a {len(corner)}-dimensional corner does not split over {a.field.tag}")
                    raise NonSplitSemisimpleQuotient(
                        f"a {len(corner)}-dimensional corner of the semisimple quotient does not split",
                        params={'corner_dim': len(corner)},
                    )
                pending.extend(parts)
        out.sort()
        logger.debug(f"{len(out)} primitive idempotents with seed {self.seed}")
        return out

    def has_nontrivial_idempotent(self):
        """Search the candidates for an idempotent other than 0 and 1."""
        a = self.algebra
        if a.dim <= 1:
            return False
        basis = [a.basis_vector(i) for i in range(a.dim)]
        return self.split(a.one, basis) is not None
