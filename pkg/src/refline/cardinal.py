"""Counting alphabet for partition types: finite naturals, aleph-0 and the continuum.

Only the cardinals that can occur in a type quadruple are representable.
The continuum is an opaque top element; nothing sits strictly between
aleph-0 and it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

__all__ = [
    "ALEPH0",
    "CONTINUUM",
    "Cardinal",
    "as_cardinal",
    "card_add",
    "card_le",
    "card_mul",
    "fin",
]

_FINITE, _ALEPH0, _CONTINUUM = 0, 1, 2


@dataclass(frozen=True, order=True)
class Cardinal:
    """A value of {0, 1, 2, ...} u {aleph0, continuum}.

    Ordering compares ``(rank, n)``, which is the natural total order:
    every finite value is below aleph0, which is below the continuum.
    """

    rank: int
    n: int = 0

    def __post_init__(self):
        if self.rank not in (_FINITE, _ALEPH0, _CONTINUUM):
            raise ValueError(f"bad cardinal rank {self.rank!r}")
        if not isinstance(self.n, int) or isinstance(self.n, bool):
            raise TypeError(f"finite part must be an int, got {self.n!r}")
        if self.rank == _FINITE and self.n < 0:
            raise ValueError(f"negative count {self.n}")
        if self.rank != _FINITE and self.n != 0:
            raise ValueError("infinite cardinals carry no finite part")

    @property
    def is_finite(self) -> bool:
        return self.rank == _FINITE

    @property
    def is_countable(self) -> bool:
        return self.rank <= _ALEPH0

    def __int__(self) -> int:
        if not self.is_finite:
            raise OverflowError(f"{self} has no integer value")
        return self.n

    def __bool__(self) -> bool:
        return not (self.is_finite and self.n == 0)

    def __add__(self, other: CardinalLike) -> Cardinal:
        return card_add(self, as_cardinal(other))

    __radd__ = __add__

    def __mul__(self, other: CardinalLike) -> Cardinal:
        return card_mul(self, as_cardinal(other))

    __rmul__ = __mul__

    def __sub__(self, other: CardinalLike) -> Cardinal:
        """Finite difference; ``aleph0 - n`` is aleph0. Undefined otherwise."""
        other = as_cardinal(other)
        if self.is_finite and other.is_finite:
            if other.n > self.n:
                raise ValueError(f"{self} - {other} is negative")
            return Cardinal(_FINITE, self.n - other.n)
        if not self.is_finite and other.is_finite:
            return self
        raise ValueError(f"{self} - {other} is not determined")

    def __str__(self) -> str:
        if self.rank == _FINITE:
            return str(self.n)
        return "aleph0" if self.rank == _ALEPH0 else "continuum"

    def __repr__(self) -> str:
        if self.rank == _FINITE:
            return f"fin({self.n})"
        return "ALEPH0" if self.rank == _ALEPH0 else "CONTINUUM"

    @classmethod
    def parse(cls, text: str) -> Cardinal:
        s = text.strip().lower()
        if s in ("aleph0", "aleph_0", "ℵ0", "ℵ₀"):
            return ALEPH0
        if s in ("continuum", "c", "𝔠"):
            return CONTINUUM
        if s.isdigit():
            return fin(int(s))
        raise ValueError(f"not a cardinal: {text!r}")


CardinalLike = Union[Cardinal, int]


def fin(n: int) -> Cardinal:
    return Cardinal(_FINITE, n)


ALEPH0 = Cardinal(_ALEPH0)
CONTINUUM = Cardinal(_CONTINUUM)


def as_cardinal(x: CardinalLike) -> Cardinal:
    if isinstance(x, Cardinal):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return fin(x)
    if isinstance(x, str):
        return Cardinal.parse(x)
    raise TypeError(f"cannot interpret {x!r} as a cardinal")


def card_add(a: Cardinal, b: Cardinal) -> Cardinal:
    if a.is_finite and b.is_finite:
        return fin(a.n + b.n)
    return max(a, b)


def card_mul(a: Cardinal, b: Cardinal) -> Cardinal:
    if a.is_finite and b.is_finite:
        return fin(a.n * b.n)
    # zero annihilates even the continuum
    if not a or not b:
        return fin(0)
    return max(a, b)


def card_le(a: Cardinal, b: Cardinal) -> bool:
    return a <= b
