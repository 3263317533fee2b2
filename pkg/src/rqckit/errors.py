"""Exception types shared across the package."""


class RqckitError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatch(RqckitError):
    """Operands have incompatible shapes or factorizations."""


class ValidationError(RqckitError):
    """Input fails a structural validity requirement."""


class NotHermitian(ValidationError):
    pass


class NotPSD(ValidationError):
    pass


class TraceNotOne(ValidationError):
    pass


class NotPure(ValidationError):
    pass


class NoConvergence(RqckitError):
    """Iterative solver exhausted its sweep budget."""


class InvalidRank(RqckitError):
    pass


class InvalidProbabilities(RqckitError):
    pass


class UnsupportedDimension(RqckitError):
    pass


class DegenerateSigma(RqckitError):
    """Reference state has a degenerate spectrum where a unique eigenbasis is required."""


class UnknownCheck(RqckitError):
    pass


class UnknownChannel(RqckitError):
    pass


class ParseError(RqckitError):
    """Malformed input file or configuration."""


class ConsistencyError(RqckitError):
    """A computed quantity violated an internal sanity bound (beyond rounding)."""
