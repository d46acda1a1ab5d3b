"""Exception types shared across the toolkit.

The CLI maps ConfigError to exit code 2 and every NumericGuardError
subclass to exit code 3; everything else is a plain bug.
"""


class HorokronError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(HorokronError):
    """Malformed or unknown configuration input."""


class NumericGuardError(HorokronError):
    """A numeric precondition or precision cap was violated."""


class NearParabolicError(NumericGuardError):
    """|cz+d| underflowed; the map is numerically parabolic at z."""


class NonIntegralError(NumericGuardError):
    """Matrix entries are not within tolerance of integers."""


class IterationLimitError(NumericGuardError):
    """Fundamental-domain reduction hit the step cap (y underflow)."""


class DepthUnreliableError(NumericGuardError):
    """Continued-fraction digits requested beyond float reliability."""


class PrecisionExceededError(NumericGuardError):
    """Constructed denominators exceed the exact-certification cap."""


class EmptyWindowError(NumericGuardError):
    """The escape window [M_lo, M_hi] contains no integer for this q."""


class CertificationError(NumericGuardError):
    """An exact inequality certificate could not be established."""


class GuardError(NumericGuardError):
    """Generic contract guard (e.g. m=0 term with nu*gamma >= 1)."""
