"""Exception types shared across the package."""


class HeraldKitError(Exception):
    """Base class for all heraldkit errors."""


class ParameterError(HeraldKitError, ValueError):
    """A physical or configuration parameter is outside its valid domain."""


class GainRangeError(ParameterError):
    """Gain estimation left the weak-gain regime (lambda^2 >= 1)."""


class EventFormatError(HeraldKitError, ValueError):
    """An event file is malformed; the message carries file/row context."""


class ClassicalBoundError(HeraldKitError, AssertionError):
    """A supposedly classical model violated the B >= 0 bound beyond tolerance.

    This firing for a genuinely classical intensity model indicates an
    implementation bug, not a physics result.
    """
