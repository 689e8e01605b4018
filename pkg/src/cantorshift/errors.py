"""Exception hierarchy shared by all modules."""


class ExpansionError(Exception):
    """Base class for all domain errors raised by this package."""


class DivergentSeriesError(ExpansionError):
    """A tail ratio fell outside [0, 1); the series does not converge."""


class DigitRangeError(ExpansionError):
    """A digit lies outside the alphabet of its position."""


class AlignmentError(ExpansionError):
    """A periodic digit tail is not aligned with the system's period."""


class OutOfIntervalError(ExpansionError):
    """A value lies outside the representable interval (or cylinder)."""


class InexactDecodeError(ExpansionError):
    """No exact tail was recognized within the requested decode depth."""


class VariantError(ExpansionError):
    """The requested shift variant is not admissible for the system."""


class DocumentError(ExpansionError):
    """A JSON document failed to parse or validate; message carries a path."""
