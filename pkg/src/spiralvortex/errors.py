"""Domain errors.

Every error carries a stable ``code`` (the class name) which the CLI prints
verbatim so failures can be grepped.
"""


class SpiralVortexError(Exception):
    """Base class for all domain errors raised by this package."""

    @property
    def code(self) -> str:
        return type(self).__name__


class InvalidParameter(SpiralVortexError, ValueError):
    pass


class SingularPoint(SpiralVortexError, ValueError):
    pass


class RadialField(SpiralVortexError, ValueError):
    pass


class DegenerateStart(SpiralVortexError, ValueError):
    pass


class BadRange(SpiralVortexError, ValueError):
    pass


class SingularStart(SpiralVortexError, ValueError):
    pass


class TooShort(SpiralVortexError, ValueError):
    pass


class ContourThroughSingularity(SpiralVortexError, ValueError):
    pass


class BadContour(SpiralVortexError, ValueError):
    pass


class ClockwiseContour(SpiralVortexError, ValueError):
    pass


class BadRadius(SpiralVortexError, ValueError):
    pass


class NotSpiral(SpiralVortexError, ValueError):
    pass


class IllConditioned(SpiralVortexError, ValueError):
    pass


class BadExponent(SpiralVortexError, ValueError):
    pass


class NegativeZ(SpiralVortexError, ValueError):
    pass


class AmbiguousGap(SpiralVortexError, ValueError):
    pass


class DegenerateData(SpiralVortexError, ValueError):
    pass


class EmptyTrace(SpiralVortexError, ValueError):
    pass


class IoError(SpiralVortexError, OSError):
    pass
