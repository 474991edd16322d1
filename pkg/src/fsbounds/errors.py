"""Exception hierarchy.

Every error raised on purpose by the package derives from :class:`FSBoundsError`,
which is itself a :class:`ValueError` so callers that only care about "bad input"
can catch that.
"""


class FSBoundsError(ValueError):
    pass


class DivisionByNonUnit(FSBoundsError):
    """Series division by a series whose constant term vanishes."""


class NonVanishingInner(FSBoundsError):
    """Composition with an inner series whose constant term is not zero."""


class InvalidKernelParam(FSBoundsError):
    pass


class InvalidJanowskiParams(FSBoundsError):
    pass


class InvalidTarget(FSBoundsError):
    pass


class InconsistentSeries(FSBoundsError):
    """A target's series disagrees with its declared B1/B2."""


class NotSchwarz(FSBoundsError):
    pass


class InvalidClassSpec(FSBoundsError):
    pass


class OutOfRange(FSBoundsError):
    pass


class OutOfDisk(FSBoundsError):
    pass


class UnknownSpecialization(FSBoundsError):
    pass


class ConfigError(FSBoundsError):
    pass
