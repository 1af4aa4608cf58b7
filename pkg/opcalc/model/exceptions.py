class OperadError(Exception):
    """Base class of every error raised by the operad calculus."""


class DimensionError(OperadError):
    pass


class DomainError(OperadError):
    pass


class CompositionRangeError(OperadError):
    pass


class EmptyFlowError(OperadError):
    pass


class PreconditionError(OperadError):
    pass


class ResourceCapError(OperadError):
    pass


class SerializationError(OperadError):
    pass


class AssociativityRequiredError(OperadError):
    """Raised when an operation needs an associative ground operation.

    `entries` holds the nonzero associator coefficients as
    ((j1, j2, j3, k), value) pairs.
    """

    def __init__(self, message, entries=()):
        super().__init__(message)
        self.entries = tuple(entries)
