"""Decisions on type quadruples of locally connected refinements of the line.

Admissible types are exactly ``Q1 u Q2``:

* ``Q1``: all four entries countable and either ``a + b + 1 = d``, or
  ``a + b + 1 > d`` with ``g = aleph0``;
* ``Q2``: ``a = continuum`` with the other three entries countable.

Embeddability uses the two positive statements (a separable space embeds
in every non-discrete one; every space embeds in a non-separable,
non-discrete one) plus two converses from subspace heredity: a subspace of
a discrete space is discrete, and a subspace of a separable metrizable
space is separable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cardinal import ALEPH0, CONTINUUM, fin
from .partition import TypeQuadruple

__all__ = [
    "EmbedVerdict",
    "InadmissibleType",
    "compare",
    "embeddable",
    "homeomorphic",
    "in_q1",
    "in_q2",
    "inadmissible_reason",
    "is_admissible",
    "is_discrete",
    "is_separable",
]

DISCRETE = TypeQuadruple(CONTINUUM, fin(0), fin(0), fin(0))


class InadmissibleType(ValueError):
    pass


@dataclass(frozen=True)
class EmbedVerdict:
    forward: bool
    backward: bool
    homeomorphic: bool

    def __post_init__(self):
        if self.homeomorphic and not (self.forward and self.backward):
            raise ValueError("homeomorphic spaces embed both ways")

    def __str__(self) -> str:
        b = lambda v: "true" if v else "false"
        return f"homeomorphic={b(self.homeomorphic)} forward={b(self.forward)} backward={b(self.backward)}"


def in_q1(t: TypeQuadruple) -> bool:
    a, b, g, d = t
    if not all(x.is_countable for x in t):
        return False
    s = a + b + 1
    return s == d or (s > d and g == ALEPH0)


def in_q2(t: TypeQuadruple) -> bool:
    return t.alpha == CONTINUUM and all(x.is_countable for x in (t.beta, t.gamma, t.delta))


def is_admissible(t: TypeQuadruple) -> bool:
    return in_q1(t) or in_q2(t)


def inadmissible_reason(t: TypeQuadruple) -> str | None:
    """Which clause a type fails, or None for admissible types."""
    if is_admissible(t):
        return None
    a, b, g, d = t
    if not a.is_countable:
        return "alpha is uncountable but not continuum"  # unreachable with this alphabet
    s = a + b + 1
    if s < d:
        return f"alpha+beta+1 = {s} < delta = {d}"
    return f"alpha+beta+1 = {s} > delta = {d} requires gamma = aleph0, got {g}"


def _check(*types: TypeQuadruple) -> None:
    for t in types:
        reason = inadmissible_reason(t)
        if reason:
            raise InadmissibleType(f"{t} is not admissible: {reason}")


def is_separable(t: TypeQuadruple) -> bool:
    _check(t)
    return t.alpha.is_countable


def is_discrete(t: TypeQuadruple) -> bool:
    _check(t)
    return t == DISCRETE


def homeomorphic(t1: TypeQuadruple, t2: TypeQuadruple) -> bool:
    _check(t1, t2)
    return t1 == t2


def embeddable(t1: TypeQuadruple, t2: TypeQuadruple) -> bool:
    """Whether the refinement of type ``t1`` is homeomorphic to a subspace of one of type ``t2``."""
    _check(t1, t2)
    if is_discrete(t2):
        return is_discrete(t1)
    return is_separable(t1) or not is_separable(t2)


def compare(t1: TypeQuadruple, t2: TypeQuadruple) -> EmbedVerdict:
    return EmbedVerdict(embeddable(t1, t2), embeddable(t2, t1), homeomorphic(t1, t2))
