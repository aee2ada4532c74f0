"""Exception types shared across the package."""


class ShiparkError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(ShiparkError):
    """Input violates a documented precondition or domain invariant."""


class ParseError(ShiparkError):
    """Malformed wire input: bad JSON, wrong schema, bad inline syntax."""


class CapExceeded(ShiparkError):
    """Enumeration request exceeds the configured resource cap."""


class AlgorithmInvariantError(ShiparkError):
    """An internal invariant failed.  Always a bug, never a user error."""


class OnHyperplaneError(ShiparkError):
    """A query point lies on an arrangement hyperplane.

    Carries the first offending pair (j, k) in canonical order and the
    value of x_j - x_k there (0 or 1 for arrangement hyperplanes, 0 for
    braid-cell ties).
    """

    def __init__(self, pair, value):
        self.pair = pair
        self.value = value
        j, k = pair
        super().__init__(f"point lies on hyperplane x{j} - x{k} = {value}")
