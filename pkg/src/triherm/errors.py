"""Exception hierarchy shared by all modules."""


class TriHermError(Exception):
    """Base class for library errors."""


class ZeroDiscriminant(TriHermError):
    pass


class BadCharacteristic(TriHermError):
    pass


class NonUnit(TriHermError):
    pass


class DescentFailure(TriHermError):
    """A value expected to lie in a smaller ring has a nonzero extra component."""

    def __init__(self, message, component=None):
        super().__init__(message)
        self.component = component


class IrrationalRoot(TriHermError):
    pass


class SplitAlgebra(TriHermError):
    pass


class InvariantViolation(TriHermError, AssertionError):
    """A forced identity failed at runtime. Always a defect, never bad input."""


class CapExceeded(TriHermError):
    pass


class NonMaximalOrder(TriHermError):
    pass


class MalformedLaurent(TriHermError):
    pass
