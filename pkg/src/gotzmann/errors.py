"""Exception types shared across the package."""


class GotzmannError(Exception):
    pass


class CapacityError(GotzmannError):
    """An enumeration would exceed the configured size cap."""


class ScanExhausted(GotzmannError):
    """A lex scan ran off the top of S_{n,d} (t too small) without matching its target cost."""


class FitUnstable(GotzmannError):
    """A polynomial fit changed when the sample window was shifted."""


class ThresholdNotFound(GotzmannError):
    """No Gotzmann exponent was found within the search cap."""

    def __init__(self, cap):
        super().__init__(f"no Gotzmann exponent t <= {cap}")
        self.cap = cap


class InconsistencyError(GotzmannError):
    """Two routes that must agree did not. Always a bug."""
