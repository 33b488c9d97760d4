"""Exception hierarchy shared by every module."""


class CoendError(Exception):
    """Base class for all errors raised by coendcalc."""


class CategoryError(CoendError, ValueError):
    """Malformed category description."""


class MissingIdentity(CategoryError):
    pass


class NonComposablePair(CategoryError):
    pass


class AssociativityViolation(CategoryError):
    pass


class UnitViolation(CategoryError):
    pass


class FunctorError(CoendError, ValueError):
    """A table that was supposed to describe a functor does not."""


class ShapeMismatch(CoendError, ValueError):
    """Components or arguments do not fit the declared indexing."""


class MissingLeg(ShapeMismatch):
    pass


class SizeCapExceeded(CoendError, RuntimeError):
    """A search or construction grew past the configured bound."""


class NotWellDefined(CoendError, ValueError):
    """A map out of a quotient is not constant on some class."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAnAdjunction(CoendError, ValueError):
    pass


class AssociativityIsoFailure(CoendError, ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class UnitIsoFailure(CoendError, ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class FormatError(CoendError, ValueError):
    """Input document does not follow the file format."""
