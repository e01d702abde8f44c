"""Finite descriptions of interval partitions of the real line.

A :class:`PartitionDesc` is a finite list of blocks.  Every real number not
covered by a block is its own singleton member (the *fill*), so partitions
with continuum many members still have finite descriptions.

Blocks
------
``Single(interval)``
    one member.
``Arith(proto, stride, count)``
    members ``proto + n*stride`` for ``0 <= n < count``.
``HarmonicFill(anchor, length, side, stride, count, split)``
    ``count`` cells; cell ``n`` is the open interval of the given length
    starting at ``anchor + n*stride`` and is tiled by countably many
    half-open members ``[a + L/(k+1), a + L/k[`` (``side="left"``, members
    accumulate at the left end) or their mirror images (``side="right"``).
    With ``split=True`` each tile ``[x, y[`` is instead the singleton ``{x}``
    plus the open ``]x, y[``; this is what stripping noncut points produces.

All data is rational, so every infinite family is eventually periodic and
validation, complements and types are computed exactly by sweeping a
bounded window and reading off the periodic tails.
"""

from __future__ import annotations

import enum
import json
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import gcd
from typing import Union

from .cardinal import ALEPH0, CONTINUUM, Cardinal, as_cardinal, fin
from .interval import (
    NEG_INF,
    POS_INF,
    Interval,
    IntervalKind,
    format_rational,
    interval_from_keys,
    parse_rational,
)

__all__ = [
    "Arith",
    "Block",
    "Complement",
    "HarmonicFill",
    "PartitionDesc",
    "PartitionError",
    "Side",
    "Single",
    "TypeQuadruple",
    "Violation",
    "apply_83",
    "apply_84",
    "complement_components",
    "compute_type",
    "noncut_total",
    "synthesize",
    "validate",
]


class PartitionError(ValueError):
    """Raised when a description is invalid or an operation's side condition fails."""

    def __init__(self, message: str, violations: Sequence[Violation] = ()):
        super().__init__(message)
        self.violations = list(violations)


class Side(enum.Enum):
    LEFT = "left"  # members accumulate at the cell's left end
    RIGHT = "right"


def _rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    raise TypeError(f"expected a rational, got {x!r}")


def _count(x) -> Cardinal:
    c = as_cardinal(x)
    if not c.is_countable:
        raise ValueError("a block family has at most aleph0 members")
    return c


# ---------------------------------------------------------------------------
# blocks


@dataclass(frozen=True)
class Single:
    interval: Interval

    def members_of_kind(self) -> dict[IntervalKind, Cardinal]:
        return {self.interval.kind: fin(1)}

    def iter_members(self) -> Iterator[Interval]:
        yield self.interval


@dataclass(frozen=True)
class Arith:
    proto: Interval
    stride: Fraction
    count: Cardinal

    def __post_init__(self):
        object.__setattr__(self, "stride", _rat(self.stride))
        object.__setattr__(self, "count", _count(self.count))
        if not self.proto.is_bounded:
            raise ValueError("arith prototype must be bounded")
        if self.stride == 0:
            raise ValueError("arith stride must be nonzero")

    def member(self, n: int) -> Interval:
        return self.proto.shift(n * self.stride)

    def members_of_kind(self) -> dict[IntervalKind, Cardinal]:
        return {self.proto.kind: self.count}

    def iter_members(self) -> Iterator[Interval]:
        n = 0
        while self.count.rank > 0 or n < self.count.n:
            yield self.member(n)
            n += 1


@dataclass(frozen=True)
class HarmonicFill:
    anchor: Fraction
    length: Fraction
    side: Side = Side.LEFT
    stride: Fraction = Fraction(0)
    count: Cardinal = fin(1)
    split: bool = False

    def __post_init__(self):
        object.__setattr__(self, "anchor", _rat(self.anchor))
        object.__setattr__(self, "length", _rat(self.length))
        object.__setattr__(self, "stride", _rat(self.stride))
        object.__setattr__(self, "count", _count(self.count))
        object.__setattr__(self, "side", Side(self.side))
        if self.length <= 0:
            raise ValueError("harmonic cell length must be positive")
        if self.stride == 0 and (self.count.rank > 0 or self.count.n > 1):
            raise ValueError("several harmonic cells need a nonzero stride")

    def cell(self, n: int) -> Interval:
        a = self.anchor + n * self.stride
        return Interval.open(a, a + self.length)

    def cell_members(self, n: int) -> Iterator[Interval]:
        """Members of cell ``n``, outermost tile first (infinite)."""
        a = self.anchor + n * self.stride
        L = self.length
        k = 1
        while True:
            if self.side is Side.LEFT:
                lo, hi = a + L / (k + 1), a + L / k
                if self.split:
                    yield Interval.point(lo)
                    yield Interval.open(lo, hi)
                else:
                    yield Interval.closed_open(lo, hi)
            else:
                b = a + L
                lo, hi = b - L / k, b - L / (k + 1)
                if self.split:
                    yield Interval.open(lo, hi)
                    yield Interval.point(hi)
                else:
                    yield Interval.open_closed(lo, hi)
            k += 1

    def members_of_kind(self) -> dict[IntervalKind, Cardinal]:
        per_cell = self.count * ALEPH0
        if self.split:
            return {IntervalKind.SINGLETON: per_cell, IntervalKind.OPEN: per_cell}
        return {IntervalKind.HALF_OPEN: per_cell}

    def iter_cells(self) -> Iterator[Interval]:
        n = 0
        while self.count.rank > 0 or n < self.count.n:
            yield self.cell(n)
            n += 1


Block = Union[Single, Arith, HarmonicFill]


# ---------------------------------------------------------------------------
# footprint families


@dataclass(frozen=True)
class _Family:
    """Covered set of a block: footprints ``proto + n*stride`` for ``n < count``."""

    proto: Interval
    stride: Fraction
    count: Cardinal
    block: int

    @property
    def infinite(self) -> bool:
        return not self.count.is_finite

    def footprint(self, n: int) -> Interval:
        return self.proto.shift(n * self.stride)

    def last(self) -> Interval:
        return self.footprint(self.count.n - 1)


def _families(blocks: Sequence[Block]) -> list[_Family]:
    out = []
    for i, b in enumerate(blocks):
        if isinstance(b, Single):
            out.append(_Family(b.interval, Fraction(0), fin(1), i))
        elif isinstance(b, Arith):
            if b.count:
                out.append(_Family(b.proto, b.stride, b.count, i))
        elif isinstance(b, HarmonicFill):
            if b.count:
                out.append(_Family(b.cell(0), b.stride, b.count, i))
        else:
            raise TypeError(f"unknown block {b!r}")
    return out


def _lcm(a: Fraction, b: Fraction) -> Fraction:
    # smallest positive rational that is an integer multiple of both
    a, b = abs(a), abs(b)
    num = a.numerator * b.numerator // gcd(a.numerator, b.numerator)
    return Fraction(num, gcd(a.denominator, b.denominator))


@dataclass
class _Layout:
    fams: list[_Family]
    left: Fraction
    right: Fraction
    period_left: Fraction | None
    period_right: Fraction | None

    @property
    def window(self) -> tuple[Fraction, Fraction]:
        return (self.left - 3 * (self.period_left or 1), self.right + 3 * (self.period_right or 1))


def _layout(blocks: Sequence[Block]) -> _Layout:
    fams = _families(blocks)
    ends: list[Fraction] = []
    p_left = p_right = None
    for f in fams:
        pieces = [f.proto] if f.infinite else [f.proto, f.last()]
        for iv in pieces:
            ends.extend(x for x in (iv.lo, iv.hi) if math.isfinite(x))
        if f.infinite:
            if f.stride > 0:
                p_right = f.stride if p_right is None else _lcm(p_right, f.stride)
            else:
                p_left = -f.stride if p_left is None else _lcm(p_left, f.stride)
    left = min(ends) if ends else Fraction(0)
    right = max(ends) if ends else Fraction(0)
    return _Layout(fams, left, right, p_left, p_right)


def _expand(layout: _Layout) -> list[tuple[Interval, int]]:
    """All footprints meeting the sweep window, clipped to it."""
    w0, w1 = layout.window
    win = Interval.closed(w0, w1)
    out = []
    for f in layout.fams:
        n = 0
        while f.count.rank > 0 or n < f.count.n:
            fp = f.footprint(n)
            if f.infinite and (fp.lo > w1 or fp.hi < w0):
                break
            clipped = fp.intersection(win)
            if clipped is not None:
                out.append((clipped, f.block))
            n += 1
    out.sort(key=lambda t: (t[0].lo_key, t[0].hi_key))
    return out


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class Violation:
    block_a: int
    block_b: int
    witness: Fraction

    def __str__(self) -> str:
        return f"blocks {self.block_a} and {self.block_b} overlap at {format_rational(self.witness)}"


def _sweep(layout: _Layout):
    """Return ``(violations, gaps)`` for the window of ``layout``."""
    w0, w1 = layout.window
    fps = _expand(layout)
    violations: dict[tuple[int, int], Violation] = {}
    gaps: list[Interval] = []
    reach: tuple = (w0, -1)  # everything at or below this key is accounted for
    reach_fp: tuple[Interval, int] | None = None
    for fp, blk in fps:
        if fp.lo_key <= reach:
            assert reach_fp is not None
            inter = fp.intersection(reach_fp[0])
            pair = (min(blk, reach_fp[1]), max(blk, reach_fp[1]))
            if inter is not None and pair not in violations:
                violations[pair] = Violation(pair[0], pair[1], inter.sample_point())
        else:
            gap = interval_from_keys((reach[0], reach[1] + 1), (fp.lo_key[0], fp.lo_key[1] - 1))
            if gap is not None:
                gaps.append(gap)
        if fp.hi_key > reach:
            reach, reach_fp = fp.hi_key, (fp, blk)
    gap = interval_from_keys((reach[0], reach[1] + 1), (w1, 0))
    if gap is not None:
        gaps.append(gap)
    return list(violations.values()), gaps


def validate(desc: PartitionDesc) -> list[Violation]:
    """Overlaps between members; an empty list means the description is valid."""
    violations, _ = _sweep(_layout(desc.blocks))
    return violations


def _require_valid(desc: PartitionDesc) -> _Layout:
    layout = _layout(desc.blocks)
    violations, _ = _sweep(layout)
    if violations:
        raise PartitionError("invalid partition: " + "; ".join(map(str, violations)), violations)
    return layout


# ---------------------------------------------------------------------------
# complement


@dataclass(frozen=True)
class Complement:
    """Maximal intervals of the uncovered set.

    ``core`` lists components explicitly.  Each interval ``I`` in ``right``
    stands for ``I + n*right_period`` for all ``n >= 0``; likewise ``left``
    with ``I - n*left_period``.
    """

    core: tuple[Interval, ...] = ()
    right: tuple[Interval, ...] = ()
    right_period: Fraction | None = None
    left: tuple[Interval, ...] = ()
    left_period: Fraction | None = None

    @property
    def is_empty(self) -> bool:
        return not (self.core or self.right or self.left)

    @property
    def has_nondegenerate(self) -> bool:
        return any(not iv.is_degenerate for iv in (*self.core, *self.right, *self.left))

    def point_count(self) -> Cardinal:
        """Number of uncovered points, assuming every component is a point."""
        if self.right or self.left:
            return ALEPH0
        return fin(len(self.core))

    def __contains__(self, x) -> bool:
        if any(x in iv for iv in self.core):
            return True
        for reps, period, sign in ((self.right, self.right_period, 1), (self.left, self.left_period, -1)):
            for iv in reps:
                # shift x back to the representative
                n = math.floor((x - iv.lo) / period) if sign > 0 else math.floor((iv.hi - x) / period)
                for m in (n - 1, n, n + 1):
                    if m >= 0 and x in iv.shift(sign * m * period):
                        return True
        return False

    def as_blocks(self) -> list[Block]:
        out: list[Block] = [Single(iv) for iv in self.core]
        out += [Arith(iv, self.right_period, ALEPH0) for iv in self.right]
        out += [Arith(iv, -self.left_period, ALEPH0) for iv in self.left]
        return out

    def __iter__(self) -> Iterator[Interval]:
        yield from self.core
        yield from self.right
        yield from self.left


def _complement(layout: _Layout, gaps: list[Interval]) -> Complement:
    w0, w1 = layout.window
    pl, pr = layout.period_left, layout.period_right
    bl = layout.left - pl if pl else None
    br = layout.right + pr if pr else None
    core, right, left = [], [], []
    for g in gaps:
        if pr and g.lo >= br:
            if g.lo < br + pr:
                right.append(g)
            continue
        if pl and g.hi <= bl:
            if g.hi > bl - pl:
                left.append(g)
            continue
        # a gap reaching a window edge on a side with no periodic family is unbounded
        lo_closed, hi_closed, lo, hi = g.lo_closed, g.hi_closed, g.lo, g.hi
        if not pl and lo == w0:
            lo, lo_closed = NEG_INF, False
        if not pr and hi == w1:
            hi, hi_closed = POS_INF, False
        core.append(Interval(lo, lo_closed, hi, hi_closed))
    return Complement(tuple(core), tuple(right), pr if right else None, tuple(left), pl if left else None)


def complement_components(desc: PartitionDesc) -> Complement:
    layout = _require_valid(desc)
    _, gaps = _sweep(layout)
    return _complement(layout, gaps)


# ---------------------------------------------------------------------------
# types


@dataclass(frozen=True)
class TypeQuadruple:
    """Numbers of singleton, compact, half-open and open members."""

    alpha: Cardinal
    beta: Cardinal
    gamma: Cardinal
    delta: Cardinal

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            object.__setattr__(self, name, as_cardinal(getattr(self, name)))
        for name in ("beta", "gamma", "delta"):
            if not getattr(self, name).is_countable:
                raise ValueError(f"{name} must be countable")

    def __iter__(self):
        return iter((self.alpha, self.beta, self.gamma, self.delta))

    def __str__(self) -> str:
        return "({},{},{},{})".format(*self)

    @classmethod
    def parse(cls, text: str) -> TypeQuadruple:
        s = text.strip()
        if not (s.startswith("(") and s.endswith(")")):
            raise ValueError(f"type must look like (a,b,g,d): {text!r}")
        parts = s[1:-1].split(",")
        if len(parts) != 4:
            raise ValueError(f"type needs four entries: {text!r}")
        return cls(*(Cardinal.parse(p) for p in parts))


def _kind_totals(blocks: Sequence[Block]) -> dict[IntervalKind, Cardinal]:
    totals = {k: fin(0) for k in IntervalKind}
    for b in blocks:
        for k, c in b.members_of_kind().items():
            totals[k] = totals[k] + c
    return totals


def compute_type(desc: PartitionDesc) -> TypeQuadruple:
    comp = complement_components(desc)
    totals = _kind_totals(desc.blocks)
    fill = CONTINUUM if comp.has_nondegenerate else comp.point_count()
    return TypeQuadruple(
        totals[IntervalKind.SINGLETON] + fill,
        totals[IntervalKind.COMPACT],
        totals[IntervalKind.HALF_OPEN],
        totals[IntervalKind.OPEN],
    )


def noncut_total(desc: PartitionDesc) -> Cardinal:
    """Sum of noncut counts over all members, fill singletons included."""
    comp = complement_components(desc)
    total = CONTINUUM if comp.has_nondegenerate else comp.point_count()
    for b in desc.blocks:
        for k, c in b.members_of_kind().items():
            total = total + c * k.noncuts
    return total


# ---------------------------------------------------------------------------
# descriptions and text form


def _leftmost_key(b: Block):
    if isinstance(b, Single):
        return b.interval.lo_key
    if isinstance(b, Arith):
        first, step = b.proto, b.stride
    else:
        first, step = b.cell(0), b.stride
    if b.count.is_finite:
        n = max(b.count.n - 1, 0)
        return min(first.lo_key, first.shift(n * step).lo_key)
    return first.lo_key if step > 0 else (NEG_INF, 1)


def _block_to_json(b: Block) -> dict:
    if isinstance(b, Single):
        return {"tag": "single", "interval": str(b.interval)}
    if isinstance(b, Arith):
        return {
            "tag": "arith",
            "proto": str(b.proto),
            "stride": format_rational(b.stride),
            "count": str(b.count),
        }
    d = {
        "tag": "harmonic",
        "anchor": format_rational(b.anchor),
        "length": format_rational(b.length),
        "side": b.side.value,
        "stride": format_rational(b.stride),
        "count": str(b.count),
    }
    if b.split:
        d["split"] = True
    return d


def _block_from_json(d: dict) -> Block:
    tag = d.get("tag")
    try:
        if tag == "single":
            return Single(Interval.parse(d["interval"]))
        if tag == "arith":
            return Arith(Interval.parse(d["proto"]), parse_rational(str(d["stride"])),
                         Cardinal.parse(str(d["count"])))
        if tag == "harmonic":
            return HarmonicFill(
                parse_rational(str(d["anchor"])),
                parse_rational(str(d["length"])),
                Side(d.get("side", "left")),
                parse_rational(str(d.get("stride", "0"))),
                Cardinal.parse(str(d.get("count", "1"))),
                bool(d.get("split", False)),
            )
    except KeyError as e:
        raise ValueError(f"block {d!r} is missing field {e}") from None
    raise ValueError(f"unknown block tag {tag!r}")


@dataclass(frozen=True)
class PartitionDesc:
    blocks: tuple[Block, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))

    def canonical(self) -> PartitionDesc:
        """Blocks sorted by leftmost covered point."""
        return PartitionDesc(sorted(self.blocks, key=lambda b: (_leftmost_key(b), json.dumps(_block_to_json(b)))))

    def to_json(self) -> str:
        blocks = [_block_to_json(b) for b in self.canonical().blocks]
        return json.dumps({"blocks": blocks}, indent=2)

    @classmethod
    def from_json(cls, text: str) -> PartitionDesc:
        data = json.loads(text)
        if not isinstance(data, dict) or not isinstance(data.get("blocks"), list):
            raise ValueError('partition document needs a "blocks" array')
        return cls(tuple(_block_from_json(b) for b in data["blocks"]))


# ---------------------------------------------------------------------------
# transformations


def _strip_interval(iv: Interval) -> list[Interval]:
    """Split an interval into its noncut endpoints and what remains."""
    if iv.is_degenerate or not (iv.lo_closed or iv.hi_closed):
        return [iv]
    out = []
    if iv.lo_closed:
        out.append(Interval.point(iv.lo))
    out.append(Interval.open(iv.lo, iv.hi))
    if iv.hi_closed:
        out.append(Interval.point(iv.hi))
    return out


def apply_84(desc: PartitionDesc) -> PartitionDesc:
    """Turn every noncut endpoint of every member into its own singleton member."""
    _require_valid(desc)
    out: list[Block] = []
    for b in desc.blocks:
        if isinstance(b, Single):
            out += [Single(iv) for iv in _strip_interval(b.interval)]
        elif isinstance(b, Arith):
            out += [Arith(iv, b.stride, b.count) for iv in _strip_interval(b.proto)]
        else:
            out.append(replace(b, split=True))
    return PartitionDesc(out).canonical()


def _carve_chain(iv: Interval, k: Cardinal) -> list[Block]:
    """Cut ``k`` half-open members off an unbounded open interval, keeping an open rest."""
    if iv.hi == POS_INF:
        g = iv.lo + 1 if math.isfinite(iv.lo) else Fraction(0)
        rest = Interval.open(iv.lo, g)
        first = Interval.closed_open(g, g + 1)
        if not k.is_finite:
            return [Single(rest), Arith(first, 1, ALEPH0)]
        n = k.n
        return [Single(rest), *_family_block(first, 1, fin(n - 1)), Single(Interval(g + n - 1, True, POS_INF, False))]
    g = iv.hi - 1
    rest = Interval.open(g, iv.hi)
    first = Interval.open_closed(g - 1, g)
    if not k.is_finite:
        return [Single(rest), Arith(first, -1, ALEPH0)]
    n = k.n
    return [Single(rest), Arith(first, -1, n - 1), Single(Interval(NEG_INF, False, g - n + 1, True))]


def _fill_open(iv: Interval, stride: Fraction = Fraction(0), count: Cardinal = fin(1)) -> list[Block]:
    """Replace an open interval (or family of them) by countably many half-open members."""
    if iv.is_bounded:
        return [HarmonicFill(iv.lo, iv.length, Side.LEFT, stride, count)]
    if math.isfinite(iv.lo):
        return [Arith(Interval.open_closed(iv.lo, iv.lo + 1), 1, ALEPH0)]
    if math.isfinite(iv.hi):
        return [Arith(Interval.closed_open(iv.hi - 1, iv.hi), -1, ALEPH0)]
    return [Arith(Interval.closed_open(0, 1), 1, ALEPH0), Arith(Interval.closed_open(-1, 0), -1, ALEPH0)]


def apply_83(desc: PartitionDesc, gamma_new, delta_new) -> PartitionDesc:
    """Raise the half-open count, or trade open members for half-open ones.

    Allowed targets are ``gamma_new >= gamma`` with ``delta_new == delta``
    (half-open members carved off the rightmost unbounded open member), and
    ``gamma_new == aleph0`` with ``delta_new < delta`` (surplus open members
    tiled by half-open ones).
    """
    gamma_new, delta_new = as_cardinal(gamma_new), as_cardinal(delta_new)
    if not (gamma_new.is_countable and delta_new.is_countable):
        raise PartitionError("gamma and delta must be countable")
    t = compute_type(desc)
    blocks = list(desc.blocks)
    if gamma_new >= t.gamma and delta_new == t.delta:
        if gamma_new == t.gamma:
            return PartitionDesc(blocks).canonical()
        extra = ALEPH0 if not gamma_new.is_finite else gamma_new - t.gamma
        unbounded = [i for i, b in enumerate(blocks)
                     if isinstance(b, Single) and b.interval.kind is IntervalKind.OPEN
                     and not b.interval.is_bounded]
        if not unbounded:
            raise PartitionError("no unbounded open member to carve")
        # rightmost: one reaching +inf if there is one
        unbounded.sort(key=lambda i: blocks[i].interval.hi_key)
        j = unbounded[-1]
        blocks[j:j + 1] = _carve_chain(blocks[j].interval, extra)
        return PartitionDesc(blocks).canonical()

    if gamma_new == ALEPH0 and delta_new < t.delta:
        kept = fin(0)
        for b in blocks:
            if isinstance(b, HarmonicFill) and b.split:
                kept = kept + b.members_of_kind()[IntervalKind.OPEN]
        if kept > delta_new:
            raise PartitionError("open members inside split harmonic cells cannot be replaced")
        quota = delta_new.n - kept.n
        out: list[Block] = []
        for b in sorted(blocks, key=_leftmost_key):
            if isinstance(b, Single) and b.interval.kind is IntervalKind.OPEN:
                if quota > 0:
                    quota -= 1
                    out.append(b)
                else:
                    out += _fill_open(b.interval)
            elif isinstance(b, Arith) and b.proto.kind is IntervalKind.OPEN and b.count:
                keep = b.count.n if b.count.is_finite and b.count.n <= quota else quota
                if keep:
                    out.append(Arith(b.proto, b.stride, keep))
                quota -= keep
                rest = b.count - keep
                if rest:
                    out += _fill_open(b.member(keep), b.stride, rest)
            else:
                out.append(b)
        return PartitionDesc(out).canonical()

    raise PartitionError(
        f"({gamma_new},{delta_new}) is not reachable from gamma={t.gamma}, delta={t.delta}: "
        "need gamma' >= gamma and delta' = delta, or gamma' = aleph0 and delta' < delta"
    )


# ---------------------------------------------------------------------------
# synthesis


def _family_block(proto: Interval, stride: int, count: Cardinal) -> list[Block]:
    if not count:
        return []
    if count == fin(1):
        return [Single(proto)]
    return [Arith(proto, stride, count)]


def _base_layout(alpha: Cardinal, beta: Cardinal) -> PartitionDesc:
    """Singletons at 3n, compacts [3n+1, 3n+2], and the open gaps between them."""
    w = _family_block(Interval.point(0), 3, alpha) + _family_block(Interval.closed(1, 2), 3, beta)
    gaps = complement_components(PartitionDesc(w)).as_blocks()
    return PartitionDesc(w + gaps).canonical()


def synthesize(t: TypeQuadruple) -> PartitionDesc:
    """A description whose computed type is ``t``; ``t`` must be admissible."""
    from .classify import in_q1, in_q2

    if in_q2(t):
        blocks = (_family_block(Interval.closed(0, 1), 6, t.beta)
                  + _family_block(Interval.closed_open(2, 3), 6, t.gamma)
                  + _family_block(Interval.open(4, 5), 6, t.delta))
        return PartitionDesc(blocks).canonical()
    if not in_q1(t):
        raise PartitionError(f"type {t} is not admissible")
    base = _base_layout(t.alpha, t.beta)
    if t.alpha + t.beta + 1 == t.delta:
        return apply_83(base, t.gamma, t.delta) if t.gamma else base
    return apply_83(base, ALEPH0, t.delta)
