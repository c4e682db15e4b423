"""Exception hierarchy shared across the package."""


class RigmatError(Exception):
    pass


class CapExceeded(RigmatError):
    """An enumeration or exhaustive check would exceed its hard size cap."""


class MatroidError(RigmatError, ValueError):
    pass


class EmptyFamily(MatroidError):
    pass


class UnequalCardinality(MatroidError):
    pass


class ExchangeViolation(MatroidError):
    def __init__(self, b1, b2, x):
        self.b1, self.b2, self.x = b1, b2, x
        super().__init__(f"basis exchange fails for B1={b1!r}, B2={b2!r}, x={x!r}")


class TNotClosed(MatroidError):
    pass


class GenericityNotCertified(RigmatError):
    pass


class PreconditionNotMet(RigmatError):
    pass


class ResidueMismatch(RigmatError):
    """Modular and exact rational rank disagree; the modular fast path is unreliable."""
