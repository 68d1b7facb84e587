"""Exception hierarchy shared by every module."""


class WVOError(Exception):
    pass


class DimensionError(WVOError, ValueError):
    pass


class PreconditionError(WVOError):
    """An operation was called outside its stated domain."""


class QualificationError(PreconditionError):
    pass


class UnsupportedDimension(WVOError):
    pass


class TheoremViolation(WVOError):
    """A check that the theory guarantees came out false; always a bug."""


class SchemaError(WVOError, ValueError):
    pass


class PlotUnavailable(WVOError):
    pass
