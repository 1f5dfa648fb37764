"""Exception types shared across the workbench."""


class OperadkitError(Exception):
    """Base class for all workbench errors."""


class EmptyConfigurationError(OperadkitError):
    pass


class OutOfBoundsError(OperadkitError):
    def __init__(self, label, message=None):
        self.label = label
        super().__init__(message or f"piece {label} is not inside the ambient region")


class OverlapError(OperadkitError):
    def __init__(self, label_a, label_b, message=None):
        self.labels = (label_a, label_b)
        super().__init__(message or f"pieces {label_a} and {label_b} overlap")


class BelowAxisError(OperadkitError):
    def __init__(self, label):
        self.label = label
        super().__init__(f"disk {label} crosses the real axis")


class NoSemidiskError(OperadkitError):
    pass


class ArityMismatchError(OperadkitError):
    def __init__(self, expected, got):
        self.expected = expected
        self.got = got
        super().__init__(f"expected {expected} inner configurations, got {got}")


class DegreeMismatchError(OperadkitError):
    def __init__(self, expected, got):
        self.expected = expected
        self.got = got
        super().__init__(f"degree mismatch: expected {expected}, got {got}")


class BaseMismatchError(OperadkitError):
    pass


class MissingUnitError(OperadkitError):
    pass


class ArityOverflowError(OperadkitError):
    def __init__(self, arity, max_arity):
        self.arity = arity
        self.max_arity = max_arity
        super().__init__(f"arity {arity} exceeds the configured bound {max_arity}")


class MalformedTreeError(OperadkitError):
    pass


class UnstableTreeError(OperadkitError):
    pass


class ColorViolationError(OperadkitError):
    pass


class InvalidFixtureError(OperadkitError):
    """Raised when a JSON fixture file is malformed."""
