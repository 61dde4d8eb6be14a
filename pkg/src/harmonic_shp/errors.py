"""Exception hierarchy shared by every module of the package."""


class HarmonicError(ValueError):
    """Base class for all domain errors raised by harmonic_shp."""


class B1TooLarge(HarmonicError):
    pass


class SignConventionViolation(HarmonicError):
    pass


class PointOutsideDisk(HarmonicError):
    pass


class DegenerateDenominator(HarmonicError):
    pass


class OriginExcluded(HarmonicError):
    pass


class WeightsNotConvex(HarmonicError):
    pass


class IndexOutOfRange(HarmonicError):
    pass


class ParamOutOfRange(HarmonicError):
    pass


class PreconditionViolated(HarmonicError):
    pass
