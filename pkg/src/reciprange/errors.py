"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """Raised for malformed or out-of-domain inputs (bad entries, negative xi, ...)."""


class UnsupportedDimensionError(ValueError):
    """Raised when a closed-form operation is asked for a dimension it does not cover."""
