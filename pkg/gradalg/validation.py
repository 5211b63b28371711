"""
Validation reports returned by the axiom checkers.
"""

from dataclasses import dataclass, field

from django.core.exceptions import ValidationError


@dataclass
class ValidationReport:
    """
    Collected axiom violations for one object.

    Attributes:
        subject: What was checked ("category", "algebra", "module:X", ...)
        errors: One ValidationError per violation, with code and params
    """

    subject: str
    errors: list = field(default_factory=list)

    @property
    def is_valid(self):
        return not self.errors

    def add(self, message, code, **params):
        self.errors.append(ValidationError(message, code=code, params=params))

    def extend(self, other):
        self.errors.extend(other.errors)

    def raise_if_invalid(self):
        if self.errors:
            raise ValidationError(list(self.errors))

    def as_dict(self):
        return {
            'subject': self.subject,
            'valid': self.is_valid,
            'violations': [
                {'code': error.code, 'message': error.message, 'params': error.params or {}}
                for error in self.errors
            ],
        }
