"""
Domain errors shared by every app.

All errors are ValidationErrors so callers can treat malformed algebraic
input the same way Django code treats malformed form input.
"""

import re

from django.core.exceptions import ValidationError


def _snake(name):
    return re.sub(r'(?<!^)(?=[A-Z])', '_', name).lower()


class GradedAlgebraError(ValidationError):
    """Base class; the default code is the snake_case class name."""

    def __init__(self, message, code=None, params=None):
        super().__init__(message, code=code or _snake(type(self).__name__), params=params)

    def __str__(self):
        return self.message


class FieldMismatch(GradedAlgebraError):
    pass


class DimensionMismatch(GradedAlgebraError):
    pass


class StructureError(GradedAlgebraError):
    pass


class NotAPoset(GradedAlgebraError):
    pass


class NotAGroup(GradedAlgebraError):
    pass


class WindowError(GradedAlgebraError):
    pass


class TriangularityViolation(GradedAlgebraError):
    pass


class IdempotentError(GradedAlgebraError):
    pass


class InfiniteSupport(GradedAlgebraError):
    pass


class CharacteristicTooSmall(GradedAlgebraError):
    pass


class NotUnital(GradedAlgebraError):
    pass


class InputNotIdempotentModJ(GradedAlgebraError):
    pass


class NonSplitSemisimpleQuotient(GradedAlgebraError):
    pass


class LiftFailure(GradedAlgebraError):
    pass


class OracleTooLarge(GradedAlgebraError):
    pass


class NotEquivariant(GradedAlgebraError):
    pass


class NotIdempotentOnInterior(GradedAlgebraError):
    pass


class SearchSpaceTooLarge(GradedAlgebraError):
    pass


class SceneFormatError(GradedAlgebraError):
    pass
