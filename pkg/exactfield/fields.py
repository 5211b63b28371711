"""
Exact scalar arithmetic over the rationals and prime fields.

Matrices store raw values (Fraction for Q, int in [0, p) for F_p) and do
their arithmetic through the owning Field; Scalar wraps one value together
with its field for callers that want checked operator arithmetic. Row
reduction goes through sympy's DomainMatrix, so each Field also names its
sympy domain and converts values to and from it.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from sympy import GF, QQ, isprime

from gradalg.exceptions import FieldMismatch, StructureError

MAX_PRIME = 2 ** 31


@cache
def _prime_domain(p):
    return GF(p, symmetric=False)


@dataclass(frozen=True)
class Field:
    """
    The base field K.

    Attributes:
        prime: None for the rationals, otherwise the characteristic p
    """

    prime: int = None

    def __post_init__(self):
        if self.prime is not None:
            if not isinstance(self.prime, int) or not isprime(self.prime):
                raise StructureError(f"{self.prime!r} is not a prime", code="not_prime")
            if self.prime >= MAX_PRIME:
                raise StructureError(
                    f"prime fields are limited to p < 2^31, got {self.prime}", code="prime_too_large"
                )

    @classmethod
    def rationals(cls):
        return cls(None)

    @classmethod
    def prime_field(cls, p):
        return cls(p)

    @property
    def tag(self):
        return "Q" if self.prime is None else f"F_{self.prime}"

    @property
    def characteristic(self):
        return 0 if self.prime is None else self.prime

    @property
    def is_finite(self):
        return self.prime is not None

    @property
    def zero(self):
        return Fraction(0) if self.prime is None else 0

    @property
    def one(self):
        return Fraction(1) if self.prime is None else 1

    def __call__(self, value):
        """
        Coerce ints, Fractions, "p/q" strings and Scalars into this field.

        Raises:
            FieldMismatch: If a Scalar from another field is passed
        """
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"cannot coerce {value.field.tag} scalar into {self.tag}")
            return value.value
        if isinstance(value, str):
            value = Fraction(value.strip())
        if self.prime is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.prime == 0:
                raise StructureError(
                    f"{value} has no image in {self.tag}", code="denominator_divisible_by_p"
                )
            return value.numerator * pow(value.denominator, -1, self.prime) % self.prime
        return int(value) % self.prime

    def add(self, a, b):
        return a + b if self.prime is None else (a + b) % self.prime

    def sub(self, a, b):
        return a - b if self.prime is None else (a - b) % self.prime

    def mul(self, a, b):
        return a * b if self.prime is None else (a * b) % self.prime

    def neg(self, a):
        return -a if self.prime is None else (-a) % self.prime

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError(f"zero has no inverse in {self.tag}")
        return 1 / a if self.prime is None else pow(a, -1, self.prime)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    @staticmethod
    def is_zero(a):
        return a == 0

    def elements(self):
        """Enumerate a finite field in canonical order."""
        if self.prime is None:
            raise StructureError("the rationals cannot be enumerated", code="infinite_field")
        return range(self.prime)

    def to_json(self, a):
        if self.prime is not None:
            return int(a)
        return int(a) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def to_integer(self, a):
        """Canonical integer lift of an F_p element."""
        if self.prime is None:
            raise StructureError("integer lifts exist only over prime fields", code="infinite_field")
        return int(a)

    @property
    def domain(self):
        """The sympy domain: QQ, or GF(p) with canonical representatives."""
        return QQ if self.prime is None else _prime_domain(self.prime)

    def to_domain(self, a):
        a = self(a)
        if self.prime is None:
            return QQ(a.numerator, a.denominator)
        return self.domain(a)

    def from_domain(self, x):
        if self.prime is None:
            return Fraction(int(QQ.numer(x)), int(QQ.denom(x)))
        return int(self.domain.to_int(x)) % self.prime

    def __str__(self):
        return self.tag


@dataclass(frozen=True)
class Scalar:
    """A field element tagged with its field; arithmetic across fields is refused."""

    value: object
    field: Field

    @classmethod
    def of(cls, field, value):
        return cls(field(value), field)

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(
                    f"{self.field.tag} and {other.field.tag} scalars cannot be combined"
                )
            return other.value
        return self.field(other)

    def __add__(self, other):
        return Scalar(self.field.add(self.value, self._other(other)), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field.sub(self.value, self._other(other)), self.field)

    def __rsub__(self, other):
        return Scalar(self.field.sub(self._other(other), self.value), self.field)

    def __mul__(self, other):
        return Scalar(self.field.mul(self.value, self._other(other)), self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(self.field.neg(self.value), self.field)

    def inverse(self):
        return Scalar(self.field.inv(self.value), self.field)

    def __truediv__(self, other):
        return Scalar(self.field.div(self.value, self._other(other)), self.field)

    def __bool__(self):
        return not self.field.is_zero(self.value)

    def __str__(self):
        return str(self.field.to_json(self.value))
