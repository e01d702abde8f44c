"""Exact generalized intervals over the extended rational line.

Endpoints are :class:`fractions.Fraction` values or ``±math.inf``.  Finite
endpoints are always stored as ``Fraction`` so every comparison is exact.

Internally an interval is handled through a pair of *keys*.  A key is a
``(value, eps)`` pair with ``eps`` in {-1, 0, +1}, read as "value minus an
infinitesimal", "value", "value plus an infinitesimal".  The lower key of
``[a, ...`` is ``(a, 0)`` and of ``]a, ...`` is ``(a, 1)``; the upper key of
``..., b]`` is ``(b, 0)`` and of ``..., b[`` is ``(b, -1)``.  A point ``x`` lies in
the interval iff ``lo_key <= (x, 0) <= hi_key``.  Union, complement and
disjointness all reduce to tuple comparisons on keys.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

__all__ = [
    "NEG_INF",
    "POS_INF",
    "Interval",
    "IntervalKind",
    "Key",
    "abuts",
    "as_endpoint",
    "disjoint",
    "format_rational",
    "interval_from_keys",
    "kind",
    "noncut_count",
    "parse_rational",
]

NEG_INF = -math.inf
POS_INF = math.inf

Endpoint = Union[Fraction, float]
Key = tuple  # (Endpoint, int)

_RAT = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")
_DEC = re.compile(r"^\s*[+-]?(\d+\.?\d*|\.\d+)\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, an integer, or a plain decimal such as ``0.25`` (read exactly)."""
    m = _RAT.match(text)
    if m:
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(num, den)
    if _DEC.match(text):
        return Fraction(text.strip())
    raise ValueError(f"not a rational literal: {text!r}")


def format_rational(x: Endpoint) -> str:
    if x == POS_INF:
        return "+inf"
    if x == NEG_INF:
        return "-inf"
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def as_endpoint(x) -> Endpoint:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not an endpoint")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        if math.isinf(x):
            return x
        raise TypeError(f"float endpoint {x!r}; use Fraction for exactness")
    if isinstance(x, str):
        s = x.strip().lower()
        if s in ("inf", "+inf", "∞", "+∞"):
            return POS_INF
        if s in ("-inf", "-∞", "−∞"):
            return NEG_INF
        return parse_rational(s)
    raise TypeError(f"cannot use {x!r} as an endpoint")


class IntervalKind(enum.Enum):
    SINGLETON = "singleton"
    COMPACT = "compact"
    HALF_OPEN = "half-open"
    OPEN = "open"

    @property
    def noncuts(self) -> int:
        return _NONCUTS[self]


_NONCUTS = {
    IntervalKind.SINGLETON: 1,
    IntervalKind.COMPACT: 2,
    IntervalKind.HALF_OPEN: 1,
    IntervalKind.OPEN: 0,
}


@dataclass(frozen=True)
class Interval:
    """A nonempty interval with per-end closedness.

    Infinite ends are always open, and a degenerate interval must be a
    closed singleton ``[a, a]``.
    """

    lo: Endpoint
    lo_closed: bool
    hi: Endpoint
    hi_closed: bool

    def __post_init__(self):
        lo, hi = as_endpoint(self.lo), as_endpoint(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if lo == POS_INF or hi == NEG_INF:
            raise ValueError("interval cannot start at +inf or end at -inf")
        if (lo == NEG_INF and self.lo_closed) or (hi == POS_INF and self.hi_closed):
            raise ValueError("an infinite end cannot be closed")
        if lo > hi:
            raise ValueError(f"empty interval: lo {lo} > hi {hi}")
        if lo == hi and not (self.lo_closed and self.hi_closed):
            raise ValueError("degenerate interval must be the closed singleton")

    # constructors -----------------------------------------------------

    @classmethod
    def closed(cls, a, b) -> Interval:
        return cls(a, True, b, True)

    @classmethod
    def open(cls, a, b) -> Interval:
        return cls(a, False, b, False)

    @classmethod
    def closed_open(cls, a, b) -> Interval:
        return cls(a, True, b, False)

    @classmethod
    def open_closed(cls, a, b) -> Interval:
        return cls(a, False, b, True)

    @classmethod
    def point(cls, a) -> Interval:
        return cls(a, True, a, True)

    @classmethod
    def real_line(cls) -> Interval:
        return cls(NEG_INF, False, POS_INF, False)

    @classmethod
    def parse(cls, text: str) -> Interval:
        """Parse ``[a,b]``, ``[a,b[``, ``]a,b]`` or ``]a,b[``."""
        s = text.strip()
        if len(s) < 5 or s[0] not in "[]" or s[-1] not in "[]":
            raise ValueError(f"not an interval: {text!r}")
        body = s[1:-1].split(",")
        if len(body) != 2:
            raise ValueError(f"not an interval: {text!r}")
        return cls(as_endpoint(body[0]), s[0] == "[", as_endpoint(body[1]), s[-1] == "]")

    # keys -------------------------------------------------------------

    @property
    def lo_key(self) -> Key:
        return (self.lo, 0 if self.lo_closed else 1)

    @property
    def hi_key(self) -> Key:
        return (self.hi, 0 if self.hi_closed else -1)

    # predicates -------------------------------------------------------

    @property
    def is_bounded(self) -> bool:
        return math.isfinite(self.lo) and math.isfinite(self.hi)

    @property
    def is_degenerate(self) -> bool:
        return self.lo == self.hi

    @property
    def kind(self) -> IntervalKind:
        if self.lo == self.hi:
            return IntervalKind.SINGLETON
        if self.lo_closed and self.hi_closed:
            return IntervalKind.COMPACT
        if self.lo_closed or self.hi_closed:
            return IntervalKind.HALF_OPEN
        return IntervalKind.OPEN

    @property
    def length(self):
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        if isinstance(x, float) and math.isinf(x):
            return False
        return self.lo_key <= (x, 0) <= self.hi_key

    def shift(self, d: Fraction) -> Interval:
        if d == 0:
            return self
        return Interval(self.lo + d, self.lo_closed, self.hi + d, self.hi_closed)

    def intersection(self, other: Interval) -> Interval | None:
        lo = max(self.lo_key, other.lo_key)
        hi = min(self.hi_key, other.hi_key)
        return interval_from_keys(lo, hi)

    def sample_point(self) -> Fraction:
        """Some rational point of the interval (the midpoint when bounded)."""
        if self.lo == self.hi:
            return self.lo
        if self.is_bounded:
            return (self.lo + self.hi) / 2
        if math.isfinite(self.lo):
            return self.lo + 1
        if math.isfinite(self.hi):
            return self.hi - 1
        return Fraction(0)

    def __str__(self) -> str:
        return "{}{},{}{}".format(
            "[" if self.lo_closed else "]",
            format_rational(self.lo),
            format_rational(self.hi),
            "]" if self.hi_closed else "[",
        )


def interval_from_keys(lo: Key, hi: Key) -> Interval | None:
    """The interval with the given keys, or None when no real point fits."""
    if lo > hi:
        return None
    if lo[0] == hi[0] and not (lo[1] == 0 and hi[1] == 0):
        return None
    return Interval(lo[0], lo[1] == 0, hi[0], hi[1] == 0)


def kind(i: Interval) -> IntervalKind:
    return i.kind


def noncut_count(i: Interval) -> int:
    return i.kind.noncuts


def disjoint(a: Interval, b: Interval) -> bool:
    return a.hi_key < b.lo_key or b.hi_key < a.lo_key


def abuts(a: Interval, b: Interval) -> bool:
    """True when disjoint ``a`` and ``b`` touch, so their union is an interval."""
    if not disjoint(a, b):
        raise ValueError(f"{a} and {b} overlap")
    first, second = (a, b) if a.hi_key < b.lo_key else (b, a)
    # touching means no real point fits strictly between them
    return first.hi == second.lo and (first.hi_closed != second.lo_closed)
