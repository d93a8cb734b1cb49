"""Extended natural numbers.

Finite values are plain Python ints; ``INF`` is a single absorbing
infinity.  The one convention that matters for convolution is

    0 * INF == INF * 0 == 0

since an infinite count weighted by a zero coefficient contributes an
empty sum.  Addition by INF is absorbing, and INF compares strictly
above every int.
"""

from __future__ import annotations


class _Infinity:
    """Singleton infinite value; do not instantiate, use ``INF``."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        # matches the JSON sentinel and the element literal grammar
        return "inf"

    def __eq__(self, other):
        return other is self

    def __ne__(self, other):
        return other is not self

    def __hash__(self):
        return hash("hyperq.extnat.INF")

    def __add__(self, other):
        _require_extnat(other)
        return self

    __radd__ = __add__

    def __mul__(self, other):
        _require_extnat(other)
        if other == 0:
            return 0
        return self

    __rmul__ = __mul__

    # INF is the top element.
    def __lt__(self, other):
        _require_extnat(other)
        return False

    def __le__(self, other):
        _require_extnat(other)
        return other is self

    def __gt__(self, other):
        _require_extnat(other)
        return other is not self

    def __ge__(self, other):
        _require_extnat(other)
        return True


INF = _Infinity()

# An extended natural is either a nonnegative int or INF.
ExtNat = int | _Infinity


def _require_extnat(value):
    if isinstance(value, _Infinity):
        return
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"not an extended natural: {value!r}")
    if value < 0:
        raise ValueError(f"extended naturals are nonnegative, got {value}")


def check_extnat(value: ExtNat) -> ExtNat:
    """Validate and return ``value``."""
    _require_extnat(value)
    return value


def is_finite(value: ExtNat) -> bool:
    return value is not INF


def extnat_to_json(value: ExtNat):
    """JSON encoding: finite values as ints, infinity as the string "inf"."""
    return "inf" if value is INF else value


def extnat_from_json(obj) -> ExtNat:
    if obj == "inf":
        return INF
    if isinstance(obj, int) and not isinstance(obj, bool) and obj >= 0:
        return obj
    raise ValueError(f"expected a nonnegative int or \"inf\", got {obj!r}")
