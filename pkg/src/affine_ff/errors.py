"""Exception hierarchy shared by every module of the package."""


class FieldError(ValueError):
    """Base class for all errors raised by affine_ff."""


class NotPrime(FieldError):
    pass


class NotIrreducible(FieldError):
    pass


class SpecMismatch(FieldError):
    """Operands live in different fields."""


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class CapExceeded(FieldError):
    """A field is too large to enumerate under the configured cap."""


class NotADivisor(FieldError):
    pass


class ParamMismatch(FieldError):
    """Equation parameters do not fit the field they are applied to."""


class NoSuchElement(FieldError):
    pass


class NotSolvable(FieldError):
    pass


class InternalConsistencyError(AssertionError):
    """A closed-form result disagreed with its own predicted invariant."""
