"""
Factory classes for generating graded algebras in tests.
"""

import factory

from category.builders import GROUP_OBJECT, from_group, interval_window
from category.models import Lattice
from exactfield.fields import Field
from exactfield.matrices import Matrix
from graded.models import GradedAlgebra
from graded.poset import build_poset_graded
from tests.exactfield.factories import lower_triangular

TWO_CHAIN = (["1", "2"], [("1", "1"), ("2", "2"), ("1", "2")])


def _one(field):
    return (Matrix(field, ((field.one,),), 1),)


def nat_truncated(field, n=3, high=4):
    """K[x]/(x^n) graded by degree on the Nat window {0, …, high}."""
    c = interval_window(Lattice.NAT, 0, high)
    degrees = range(min(n, high + 1))
    return GradedAlgebra(
        c,
        field,
        {str(k): 1 for k in degrees},
        {(str(k), str(l)): _one(field) for k in degrees for l in degrees if k + l < n and k + l <= high},
        {GROUP_OBJECT: (field.one,)},
        {str(k): [f"x^{k}"] for k in degrees},
        name=f"K[x]/(x^{n})",
    )


def triangular(field):
    """Lower triangular 2x2 matrices graded by the chain 1 ≤ 2."""
    elements, relation = TWO_CHAIN
    return build_poset_graded(
        lower_triangular(field),
        {"1": (1, 0, 0), "2": (0, 0, 1)},
        elements,
        relation,
        name="T2",
    )


def cyclic_graded(field, n=2):
    """K[C_n] graded by C_n, one dimension per group element."""
    elements = [f"g{i}" for i in range(n)]
    table = [[elements[(i + j) % n] for j in range(n)] for i in range(n)]
    c = from_group(elements, table)
    return GradedAlgebra(
        c,
        field,
        {g: 1 for g in elements},
        {(a, b): _one(field) for a in elements for b in elements},
        {GROUP_OBJECT: (field.one,)},
        name=f"K[C{n}]",
    )


def int_window_algebra():
    """K[a]/(a^3) over F_2 in degrees 0, 1, 2 of the Int window {-1, …, 2}."""
    f = Field.prime_field(2)
    degrees = ("0", "1", "2")
    return GradedAlgebra(
        interval_window(Lattice.INT, -1, 2),
        f,
        {d: 1 for d in degrees},
        {(a, b): _one(f) for a in degrees for b in degrees if int(a) + int(b) <= 2},
        {GROUP_OBJECT: (f.one,)},
        name="K[a]/(a^3)",
    )


class NatTruncatedFactory(factory.Factory):
    """Factory for K[x]/(x^n) on a Nat window."""

    class Meta:
        model = GradedAlgebra

    field = factory.LazyFunction(Field.rationals)
    n = 3
    high = 4

    @classmethod
    def _create(cls, model_class, field, n, high):
        return nat_truncated(field, n, high)

    _build = _create


class TriangularFactory(factory.Factory):
    """Factory for the poset-graded triangular algebra."""

    class Meta:
        model = GradedAlgebra

    field = factory.LazyFunction(Field.rationals)

    @classmethod
    def _create(cls, model_class, field):
        return triangular(field)

    _build = _create


class CyclicGradedFactory(factory.Factory):
    """Factory for group-graded cyclic group algebras."""

    class Meta:
        model = GradedAlgebra

    field = factory.LazyFunction(Field.rationals)
    n = 2

    @classmethod
    def _create(cls, model_class, field, n):
        return cyclic_graded(field, n)

    _build = _create
