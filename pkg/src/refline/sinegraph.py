"""The graphs F[g] assembled from oscillating sine arcs.

For a sequence ``g`` over {1, 2} with infinitely many 2s, ``F[g]`` is zero at
every non-positive integer and on ``[0, 1]``, carries the arc
``sin(1/((x-u)(v-x)))`` on every negative unit gap, and on ``]k, k+1]`` for
``k >= 1`` has either an arc on ``]k, k+1[`` followed by the point ``k+1``
(``g(k) = 1``) or an arc on ``]k, k+1/2[`` followed by zero on
``[k+1/2, k+1]`` (``g(k) = 2``).

Every piece is one path component.  Numbering the components so that the
segment ``[0, 1]`` has index 0 and reading off their noncut counts gives the
digit word ``... 1 0 1 0 2 0 g(1) 0 g(2) 0 ...``, from which ``g`` is decoded.

Only eventually periodic ``g`` are representable (:class:`GSeq`).
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .interval import Interval, abuts, parse_rational

__all__ = [
    "ChainError",
    "ComponentDescriptor",
    "Const",
    "DecodeError",
    "DigitWindow",
    "GSeq",
    "OrientationUndecidable",
    "Piece",
    "PieceFn",
    "Recovered",
    "ScaledSineArc",
    "SineArc",
    "adjacent",
    "build_pieces",
    "component",
    "components",
    "decode",
    "discontinuities",
    "encode",
    "f_eval",
    "gamma",
    "homeomorphic_fg",
    "recover_order",
    "remark_counterexample",
    "sample_csv",
    "sigma_eval",
]

Number = Union[int, float, Fraction]


# ---------------------------------------------------------------------------
# sequences


def _primitive_root(word: tuple[int, ...]) -> tuple[int, ...]:
    n = len(word)
    for p in range(1, n + 1):
        if n % p == 0 and word[:p] * (n // p) == word:
            return word[:p]
    return word


@dataclass(frozen=True)
class GSeq:
    """``g(1), g(2), ...`` given as ``prefix`` followed by ``tail`` repeated forever.

    Instances are kept canonical (primitive tail, shortest prefix), so ``==``
    is equality of the denoted sequences.
    """

    prefix: tuple[int, ...]
    tail: tuple[int, ...]

    def __post_init__(self):
        prefix, tail = tuple(self.prefix), tuple(self.tail)
        if not tail:
            raise ValueError("tail must be nonempty")
        if any(d not in (1, 2) for d in prefix + tail):
            raise ValueError("digits of g must be 1 or 2")
        if 2 not in tail:
            raise ValueError("not in Omega: g must take the value 2 infinitely often")
        tail = _primitive_root(tail)
        while prefix and prefix[-1] == tail[-1]:
            prefix = prefix[:-1]
            tail = tail[-1:] + tail[:-1]
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "tail", tail)

    def __call__(self, n: int) -> int:
        if n < 1:
            raise IndexError("g is indexed from 1")
        i = n - 1
        if i < len(self.prefix):
            return self.prefix[i]
        return self.tail[(i - len(self.prefix)) % len(self.tail)]

    def head(self, k: int) -> tuple[int, ...]:
        return tuple(self(n) for n in range(1, k + 1))

    def __str__(self) -> str:
        return "prefix={};tail={}".format("".join(map(str, self.prefix)), "".join(map(str, self.tail)))

    @classmethod
    def parse(cls, text: str) -> GSeq:
        fields = {}
        for part in text.split(";"):
            if not part.strip():
                continue
            key, sep, val = part.partition("=")
            if not sep or key.strip() not in ("prefix", "tail"):
                raise ValueError(f"bad sequence spec {text!r}; expected prefix=<word>;tail=<word>")
            val = val.strip()
            if any(c not in "12" for c in val):
                raise ValueError(f"words must be over {{1,2}}: {val!r}")
            fields[key.strip()] = tuple(int(c) for c in val)
        if "tail" not in fields:
            raise ValueError(f"missing tail in {text!r}")
        return cls(fields.get("prefix", ()), fields["tail"])


def homeomorphic_fg(g: GSeq, h: GSeq) -> bool:
    return g == h


# ---------------------------------------------------------------------------
# pieces


@dataclass(frozen=True)
class Const:
    value: Fraction = Fraction(0)


@dataclass(frozen=True)
class SineArc:
    u: Fraction
    v: Fraction


@dataclass(frozen=True)
class ScaledSineArc:
    u: Fraction
    v: Fraction
    scale: Fraction


Form = Union[Const, SineArc, ScaledSineArc]


def sigma_eval(u, v, x: float) -> float:
    """``sin(1/((x-u)(v-x)))`` for ``u < x < v``."""
    if not (u < x < v):
        raise ValueError(f"x = {x} is outside ]{u}, {v}[")
    x = float(x)
    return math.sin(1.0 / ((x - float(u)) * (float(v) - x)))


@dataclass(frozen=True)
class Piece:
    domain: Interval
    form: Form

    def __call__(self, x) -> float:
        f = self.form
        if isinstance(f, Const):
            return float(f.value)
        y = sigma_eval(f.u, f.v, x)
        return y * float(f.scale) if isinstance(f, ScaledSineArc) else y

    @property
    def is_arc(self) -> bool:
        return isinstance(self.form, (SineArc, ScaledSineArc))


class PieceFn:
    """A piecewise function given by a stream of pieces with disjoint domains.

    ``pieces`` may be an infinite iterable; the stream is materialised
    lazily and indexable.  ``locate`` must be supplied for infinite streams.
    """

    def __init__(self, pieces: Iterable[Piece], locate=None):
        self._iter = iter(pieces)
        self._cache: list[Piece] = []
        self._locate = locate

    def __getitem__(self, i: int) -> Piece:
        while len(self._cache) <= i:
            try:
                self._cache.append(next(self._iter))
            except StopIteration:
                raise IndexError(i) from None
        return self._cache[i]

    def __iter__(self) -> Iterator[Piece]:
        i = 0
        while True:
            try:
                yield self[i]
            except IndexError:
                return
            i += 1

    def __len__(self) -> int:
        self._cache.extend(self._iter)
        return len(self._cache)

    def locate(self, x) -> Piece:
        if self._locate is not None:
            return self._locate(x)
        hits = [p for p in self if x in p.domain]
        if len(hits) != 1:
            raise ValueError(f"{len(hits)} pieces contain {x}")
        return hits[0]

    def __call__(self, x) -> float:
        return self.locate(x)(x)


def _as_window(window) -> Interval:
    if isinstance(window, Interval):
        iv = window
    else:
        lo, hi = window
        iv = Interval.closed(lo, hi)
    if not iv.is_bounded:
        raise ValueError("window must be bounded")
    return iv


# ---------------------------------------------------------------------------
# components of F[g]


@dataclass(frozen=True)
class ComponentDescriptor:
    footprint: Interval
    noncuts: int
    position_index: int

    def __post_init__(self):
        if self.noncuts != self.footprint.kind.noncuts:
            raise ValueError(f"{self.footprint} has {self.footprint.kind.noncuts} noncut points")


def _piece(g: GSeq, i: int) -> Piece:
    """The path component with position index ``i``."""
    zero = Const()
    h = Fraction(1, 2)
    if i == 0:
        return Piece(Interval.closed(0, 1), zero)
    if i < 0:
        m = (-i + 1) // 2
        if i % 2:  # arc ]-m, -m+1[
            return Piece(Interval.open(-m, -m + 1), SineArc(Fraction(-m), Fraction(-m + 1)))
        return Piece(Interval.point(-m), zero)
    k = (i + 1) // 2
    k_ = Fraction(k)
    if g(k) == 1:
        if i % 2:
            return Piece(Interval.open(k, k + 1), SineArc(k_, k_ + 1))
        return Piece(Interval.point(k + 1), zero)
    if i % 2:
        return Piece(Interval.open(k, k_ + h), SineArc(k_, k_ + h))
    return Piece(Interval.closed(k_ + h, k + 1), zero)


def _index_of(g: GSeq, x) -> int:
    """Position index of the component containing ``x``."""
    if x < 0:
        m = math.floor(-x)
        if x == -m:
            return -2 * m
        return -(2 * (m + 1) - 1)  # x in ]-(m+1), -m[
    if x <= 1:
        return 0
    k = math.ceil(x) - 1  # x in ]k, k+1]
    if g(k) == 1:
        return 2 * k if x == k + 1 else 2 * k - 1
    return 2 * k - 1 if x < k + Fraction(1, 2) else 2 * k


def component(g: GSeq, i: int) -> ComponentDescriptor:
    fp = _piece(g, i).domain
    return ComponentDescriptor(fp, fp.kind.noncuts, i)


def components(g: GSeq, index_range) -> list[ComponentDescriptor]:
    """Components with indices in ``range`` or an inclusive ``(lo, hi)`` pair, in order."""
    if not isinstance(index_range, range):
        lo, hi = index_range
        index_range = range(lo, hi + 1)
    return [component(g, i) for i in index_range]


def build_pieces(g: GSeq, window) -> PieceFn:
    """Pieces of F[g] meeting ``window``, domains clipped so they partition it."""
    w = _as_window(window)
    first, last = _index_of(g, w.lo), _index_of(g, w.hi)
    out = []
    for i in range(first, last + 1):
        p = _piece(g, i)
        dom = p.domain.intersection(w)
        if dom is not None:
            out.append(Piece(dom, p.form))
    return PieceFn(out)


def f_eval(g: GSeq, x: Number) -> float:
    return _piece(g, _index_of(g, Fraction(x)))(x)


def adjacent(p: ComponentDescriptor, q: ComponentDescriptor) -> bool:
    """Consecutive components: their footprints touch, so the union is connected."""
    if p == q:
        return False
    return abuts(p.footprint, q.footprint)


# ---------------------------------------------------------------------------
# digit words


class DecodeError(ValueError):
    pass


@dataclass(frozen=True)
class DigitWindow:
    """Finite window of the digit word around its anchor 2.

    ``left`` and ``right`` are read outward from the anchor, nearest first.
    """

    left: tuple[int, ...]
    right: tuple[int, ...]

    def check(self) -> None:
        for j, d in enumerate(self.left, start=1):
            if d != (j + 1) % 2:
                raise DecodeError(f"left of the anchor digit -{j} must be {(j + 1) % 2}, got {d}")
        for j, d in enumerate(self.right, start=1):
            if j % 2 and d != 0:
                raise DecodeError(f"digit +{j} must be 0 (a separator), got {d}")
            if not j % 2 and d not in (1, 2):
                raise DecodeError(f"digit +{j} must be 1 or 2, got {d}")

    def __str__(self) -> str:
        digits = [str(d) for d in reversed(self.left)] + ["^2"] + [str(d) for d in self.right]
        return " ".join(digits)

    @classmethod
    def parse(cls, text: str) -> DigitWindow:
        tokens = text.split()
        marks = [i for i, t in enumerate(tokens) if t.startswith("^")]
        if len(marks) > 1:
            raise DecodeError("more than one anchor mark")
        try:
            digits = [int(t.lstrip("^")) for t in tokens]
        except ValueError:
            raise DecodeError(f"non-digit token in {text!r}") from None
        if any(d not in (0, 1, 2) for d in digits):
            raise DecodeError("digits must be 0, 1 or 2")
        twos = [i for i, d in enumerate(digits) if d == 2]
        if not twos:
            raise DecodeError("no anchor: the window contains no digit 2")
        a = marks[0] if marks else twos[0]
        if digits[a] != 2:
            raise DecodeError("the anchor mark must sit on a 2")
        if twos[0] != a:
            raise DecodeError("a 2 occurs left of the anchor")
        w = cls(tuple(reversed(digits[:a])), tuple(digits[a + 1:]))
        w.check()
        return w


def encode(g: GSeq, n: int) -> DigitWindow:
    """``n`` digits on each side of the anchor."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    left = tuple((j + 1) % 2 for j in range(1, n + 1))
    right = tuple(0 if j % 2 else g(j // 2) for j in range(1, n + 1))
    return DigitWindow(left, right)


def decode(window: DigitWindow | str) -> tuple[int, ...]:
    """``g(1..k)`` for the ``k`` sequence positions visible right of the anchor."""
    if isinstance(window, str):
        window = DigitWindow.parse(window)
    window.check()
    return tuple(window.right[1::2])


# ---------------------------------------------------------------------------
# order recovery


class ChainError(ValueError):
    """Components do not form a single chain under adjacency."""


class OrientationUndecidable(ValueError):
    """The window does not determine which end of the chain is the left one."""


@dataclass(frozen=True)
class Recovered:
    """A chain in left-to-right order; ``anchor`` is the position of the [0, 1] segment."""

    chain: tuple[ComponentDescriptor, ...]
    anchor: int

    @property
    def digits(self) -> tuple[int, ...]:
        return tuple(c.noncuts for c in self.chain)

    def relative_indices(self) -> list[int]:
        return [i - self.anchor for i in range(len(self.chain))]


def _chain(items: Sequence[ComponentDescriptor]) -> list[ComponentDescriptor]:
    n = len(items)
    if n == 0:
        raise ChainError("no components")
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if adjacent(items[i], items[j]):
                nbrs[i].append(j)
                nbrs[j].append(i)
    if any(len(a) > 2 for a in nbrs):
        raise ChainError("a component has more than two neighbours")
    ends = [i for i in range(n) if len(nbrs[i]) <= 1]
    if n > 1 and len(ends) != 2:
        raise ChainError("adjacency graph is not a path")
    order, prev, cur = [ends[0]], None, ends[0]
    while True:
        nxt = [j for j in nbrs[cur] if j != prev]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
        order.append(cur)
    if len(order) != n:
        raise ChainError("components do not form one contiguous run")
    return [items[i] for i in order]


def recover_order(items: Iterable[ComponentDescriptor]) -> Recovered:
    """Rebuild the left-to-right order of a window of components centred on the anchor.

    The chain comes from adjacency alone.  The anchor segment is taken to be
    the middle component, so the window must hold an odd number of
    components with a 2-noncut one in the middle (as ``components(g, (-k, k))``
    does).  The chain is then turned so that the side of the anchor with more
    2-noncut components is the right side.  :class:`OrientationUndecidable`
    is raised when the middle is not a 2, when both sides hold equally many
    2s, or when neither reading fits a digit window around an anchor; no
    orientation is ever guessed.
    """
    chain = _chain(list(items))
    digits = [c.noncuts for c in chain]
    n = len(chain)
    if n % 2 == 0:
        raise OrientationUndecidable("an even number of components has no middle to serve as the anchor")
    mid = n // 2
    if digits[mid] != 2:
        raise OrientationUndecidable("the middle component is not a 2-noncut segment: the window lacks the anchor")
    left, right = digits[:mid].count(2), digits[mid + 1:].count(2)
    if left == right:
        raise OrientationUndecidable(f"{left} two(s) on each side of the anchor: both orientations fit")
    if left > right:
        chain.reverse()
    rec = Recovered(tuple(chain), mid)
    try:
        DigitWindow(tuple(reversed(rec.digits[:mid])), rec.digits[mid + 1:]).check()
    except DecodeError as e:
        raise OrientationUndecidable(f"the noncut counts do not read as a window around the anchor: {e}") from None
    return rec


# ---------------------------------------------------------------------------
# discontinuities


def _arc_anchored_at(p: Piece, x) -> bool:
    f = p.form
    if isinstance(f, ScaledSineArc) and f.scale == 0:
        return False
    return p.is_arc and (f.u == x or f.v == x)


def discontinuities(fn: PieceFn, window) -> list[Fraction]:
    """Junction points in ``window`` where the piecewise function is discontinuous.

    A junction is discontinuous iff a neighbouring arc piece oscillates into
    it, or a neighbouring constant differs from the value there.  Interiors
    of pieces are continuous.  ``fn`` must cover ``window`` with a finite
    stream of pieces extending beyond it on both sides.
    """
    w = _as_window(window)
    pieces = sorted(fn, key=lambda p: p.domain.lo_key)
    out = set()
    for left, right in zip(pieces, pieces[1:]):
        x = left.domain.hi
        if x not in w:
            continue
        here = left if x in left.domain else right
        other = right if here is left else left
        if _arc_anchored_at(other, x) or isinstance(other.form, Const) and other.form.value != here(x):
            out.add(x)
    return sorted(out)


def gamma(g: GSeq, window) -> list[Fraction]:
    w = _as_window(window)
    wide = Interval.closed(w.lo - 1, w.hi + 1)
    return discontinuities(build_pieces(g, wide), w)


# ---------------------------------------------------------------------------
# the scaled counterexample


def remark_counterexample(window) -> PieceFn:
    """Zero except for the arcs ``2^-n sin(...)`` on ``]2^-n, 2^-n+1[``, ``n >= 1``.

    Pieces are streamed as: the part of the window at or left of 0, the part
    at or right of 1, then arcs and their left endpoints moving towards 0.
    The stream is infinite whenever the window reaches 0.
    """
    w = _as_window(window)

    def arc(n: int) -> Piece:
        u, v = Fraction(1, 2 ** n), Fraction(1, 2 ** (n - 1))
        return Piece(Interval.open(u, v), ScaledSineArc(u, v, u))

    def stream():
        for iv in (Interval(-math.inf, False, 0, True), Interval(1, True, math.inf, False)):
            dom = iv.intersection(w)
            if dom is not None:
                yield Piece(dom, Const())
        n = 1
        while Fraction(1, 2 ** (n - 1)) > w.lo:
            u = Fraction(1, 2 ** n)
            for p in (arc(n), Piece(Interval.point(u), Const())):
                dom = p.domain.intersection(w)
                if dom is not None:
                    yield Piece(dom, p.form)
            n += 1

    def locate(x) -> Piece:
        x = Fraction(x)
        if x not in w:
            raise ValueError(f"{x} outside the window {w}")
        if x <= 0 or x >= 1:
            return Piece(Interval.point(x), Const())
        n = 1
        while Fraction(1, 2 ** n) > x:
            n += 1
        if Fraction(1, 2 ** n) == x:
            return Piece(Interval.point(x), Const())
        return arc(n)

    return PieceFn(stream(), locate)


# ---------------------------------------------------------------------------
# sampling


def sample_csv(g: GSeq, window, step) -> str:
    """CSV rows ``x,y`` on the grid ``lo, lo+step, ...`` up to ``hi``."""
    w = _as_window(window)
    step = Fraction(step) if not isinstance(step, str) else parse_rational(step)
    if step <= 0:
        raise ValueError("step must be positive")
    rows = ["x,y"]
    x = w.lo
    while x <= w.hi:
        rows.append(f"{float(x)!r},{f_eval(g, x)!r}")
        x += step
    return "\n".join(rows) + "\n"
