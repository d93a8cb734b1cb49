"""Exception types shared across the package."""


class HyperqError(Exception):
    """Base class for all errors raised by this package."""


class SchemaError(HyperqError):
    """An input file does not conform to the hyperq/1 JSON schema."""


class BoundExceeded(HyperqError):
    """An exhaustive enumeration was requested past its size gate."""


class OrderBoundExceeded(HyperqError):
    """Group enumeration exceeded the configured order bound."""


class NotModular(HyperqError):
    """An atom table does not resolve to a hypergroupoid (unit resolution failed)."""


class DimensionMismatch(HyperqError):
    """Matrix shapes do not compose."""


class InfiniteCoefficient(HyperqError):
    """A finite coefficient was required but an infinite weight appeared."""


class ZeroWeight(HyperqError):
    """A weight that must be nonzero is zero."""


class NotSemisimple(HyperqError):
    """The hypergroupoid admits no simple factorization for some arrow."""
