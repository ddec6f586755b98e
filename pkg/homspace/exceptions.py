from django.core.exceptions import ValidationError


class InvalidSimpleType(ValidationError):
    """Unknown family, rank outside the family's range, or a malformed type token."""


class DomainError(ValidationError):
    """Argument outside the domain of an operation."""


class InvariantViolation(AssertionError):
    """A computed quantity contradicts its closed form. Always a bug, never bad input."""


def message_of(exc: ValidationError) -> str:
    return "; ".join(exc.messages)
