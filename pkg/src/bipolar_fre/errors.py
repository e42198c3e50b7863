"""Exception hierarchy shared by the solver, the oracle and the CLI."""


class BipolarError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(BipolarError, ValueError):
    """Matrix or vector shapes do not agree."""


class RangeError(BipolarError, ValueError):
    """A scalar lies outside the unit interval."""

    def __init__(self, value, where=None):
        self.value = value
        self.where = where
        loc = f" at {where}" if where else ""
        super().__init__(f"value {value} outside [0, 1]{loc}")


class ParseError(BipolarError, ValueError):
    """A problem or solution document could not be read."""


class ContractViolation(BipolarError):
    """An operation was called on input that breaks its precondition."""


class EnumerationCapExceeded(BipolarError):
    """Exhaustive enumeration was refused because the instance is too wide."""

    def __init__(self, what, size, cap):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(
            f"instance too large for exhaustive enumeration: {what} needs "
            f"2^{size} subsets, cap is 2^{cap}"
        )
