"""Exception types shared across the package."""


class RangeError(ValueError):
    """An integer argument is outside its documented range."""


class NotIrreducibleError(ValueError):
    """A modulus polynomial factors over GF(2)."""


class FieldMismatchError(ValueError):
    """Operands belong to different fields."""


class PreconditionError(ValueError):
    """A documented method precondition does not hold."""


class InternalRankError(RuntimeError):
    """The quadratic-map matrix does not have rank m-1.

    Signals either a non-irreducible modulus that slipped through
    validation or an implementation bug; never expected in normal use.
    """
