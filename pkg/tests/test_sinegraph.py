import itertools
import math
import random
from fractions import Fraction

import mpmath
import pytest
from fgtools import expand, grid_sequences, oscillation_oracle, raw_grid, sigma_oracle
from hypothesis import given, settings
from hypothesis import strategies as st

from refline import GSeq, Interval, decode, encode, f_eval, gamma
from refline.sinegraph import (
    ChainError,
    Const,
    DecodeError,
    DigitWindow,
    OrientationUndecidable,
    ScaledSineArc,
    SineArc,
    adjacent,
    build_pieces,
    component,
    components,
    discontinuities,
    homeomorphic_fg,
    recover_order,
    remark_counterexample,
    sample_csv,
    sigma_eval,
)

F = Fraction
TWO = GSeq((), (2,))
RAW = raw_grid()
GRID = grid_sequences()


# ---------------------------------------------------------------------------
# sequences


def test_gseq_canonical_forms():
    assert GSeq((), (1, 2)) == GSeq((1,), (2, 1))
    assert GSeq((2, 2), (2, 2)) == TWO
    assert GSeq((1, 2), (1, 2, 1, 2)).tail == (1, 2) and GSeq((1, 2), (1, 2, 1, 2)).prefix == ()
    assert str(GSeq.parse("prefix=1;tail=2")) == "prefix=1;tail=2"


def test_gseq_rejects():
    with pytest.raises(ValueError, match="Omega"):
        GSeq((2,), (1,))
    for bad in ["tail=3", "prefix=1", "tail=", "head=1;tail=2"]:
        with pytest.raises(ValueError):
            GSeq.parse(bad)


def test_homeomorphic_fg_examples():
    assert homeomorphic_fg(GSeq((), (1, 2)), GSeq((1,), (2, 1)))
    assert not homeomorphic_fg(TWO, GSeq((), (1, 2)))
    assert homeomorphic_fg(TWO, TWO)


def test_grid_size():
    assert len(RAW) == 31 * 9
    assert len(GRID) < len(RAW)  # e.g. prefix 2 with tail 2 is the tail 2 alone


# ---------------------------------------------------------------------------
# evaluation


def test_sigma_matches_high_precision_sine():
    assert abs(sigma_eval(0, 2, 1) - float(mpmath.sin(1))) < 1e-12
    assert -1 <= sigma_eval(0, 2, 1.999) <= 1
    with pytest.raises(ValueError):
        sigma_eval(0, 2, 2)


@settings(max_examples=300)
@given(st.fractions(min_value=F(1, 50), max_value=F(49, 50)))
def test_sigma_against_oracle_away_from_ends(t):
    u, v = F(-3), F(-1)
    x = u + t * (v - u)
    assert abs(sigma_eval(u, v, x) - sigma_oracle(u, v, x)) < 1e-9


def test_pieces_examples():
    pieces = list(build_pieces(TWO, (1, 2)))
    assert [p.form for p in pieces][-2:] == [SineArc(1, F(3, 2)), Const()]
    assert [p.domain for p in pieces][-2:] == [Interval.open(1, F(3, 2)), Interval.closed(F(3, 2), 2)]
    pieces = list(build_pieces(GSeq((1,), (2,)), (1, 2)))
    assert [(p.domain, p.form) for p in pieces][-2:] == [(Interval.open(1, 2), SineArc(1, 2)),
                                                         (Interval.point(2), Const())]
    pieces = list(build_pieces(TWO, (-2, 0)))
    assert [p.domain for p in pieces] == [Interval.point(-2), Interval.open(-2, -1), Interval.point(-1),
                                          Interval.open(-1, 0), Interval.closed(0, 0)]
    assert [p.form for p in pieces][1::2] == [SineArc(-2, -1), SineArc(-1, 0)]


def test_f_eval_examples():
    assert f_eval(TWO, F(1, 2)) == 0
    assert f_eval(TWO, -3) == 0
    assert f_eval(TWO, F(5, 4)) == sigma_eval(1, F(3, 2), F(5, 4))


@pytest.mark.parametrize("g", GRID[::7])
def test_pieces_cover_window_exactly_once(g):
    rng = random.Random(str(g))
    fn = build_pieces(g, (-6, 8))
    pieces = list(fn)
    for _ in range(300):
        x = F(rng.randint(-6 * 48, 8 * 48), 48)
        assert sum(x in p.domain for p in pieces) == 1
        y = fn(x)
        assert abs(y) <= 1
        assert y == f_eval(g, x)


@pytest.mark.parametrize("g", GRID[::5])
def test_zero_at_junctions(g):
    for k in range(-10, 20):
        for x in (F(k), F(2 * k + 1, 2)):
            if x > 1 and x.denominator == 2 and g(math.floor(x)) == 1:
                continue  # interior of an arc
            if x < 0 and x.denominator == 2:
                continue
            assert f_eval(g, x) == 0.0


# ---------------------------------------------------------------------------
# components


def test_components_around_the_segment():
    cs = components(TWO, (-2, 2))
    assert [c.noncuts for c in cs] == [1, 0, 2, 0, 2]
    assert [str(c.footprint) for c in cs] == ["[-1,-1]", "]-1,0[", "[0,1]", "]1,3/2[", "[3/2,2]"]
    cs = components(GSeq((1,), (2,)), (1, 2))
    assert [str(c.footprint) for c in cs] == ["]1,2[", "[2,2]"]
    assert [c.noncuts for c in cs] == [0, 1]


def test_adjacent_examples():
    c = {i: component(TWO, i) for i in range(-2, 3)}
    assert adjacent(c[-2], c[-1])
    assert adjacent(c[0], c[1])
    assert not adjacent(c[-2], c[0])


def _probe_noncuts(fp: Interval, rng) -> int:
    """Count sampled points whose removal leaves the footprint in one piece.

    Removing ``x`` disconnects the footprint exactly when points of it lie
    on both sides of ``x``; nearby probes stand in for "both sides".
    """
    eps = F(1, 10**6)
    inner = [fp.lo + (fp.hi - fp.lo) * F(rng.randint(1, 99), 100) for _ in range(5)] if fp.lo < fp.hi else []
    cands = {x for x in (fp.lo, fp.hi) if x in fp} | set(inner)
    return sum(1 for x in cands if not ((x - eps) in fp and (x + eps) in fp))


def test_noncut_counts_match_probe():
    rng = random.Random(7)
    for _ in range(50):
        g = rng.choice(GRID)
        c = component(g, rng.randint(-30, 30))
        assert _probe_noncuts(c.footprint, rng) == c.noncuts


@pytest.mark.parametrize("g", GRID[::9])
def test_components_are_consecutive_and_fill_the_line(g):
    cs = components(g, (-20, 20))
    for a, b in zip(cs, cs[1:]):
        assert adjacent(a, b)
        assert a.footprint.hi == b.footprint.lo


# ---------------------------------------------------------------------------
# digit words


def test_encode_examples():
    assert encode(TWO, 6).right == (0, 2, 0, 2, 0, 2)
    assert encode(GSeq((1,), (2,)), 4).right == (0, 1, 0, 2)
    assert encode(TWO, 4).left == (0, 1, 0, 1)
    assert str(encode(TWO, 4)) == "1 0 1 0 ^2 0 2 0 2"


def test_decode_examples():
    assert decode(encode(GSeq((), (1, 2)), 8)) == (1, 2, 1, 2)
    assert decode("1 0 1 0 2 0 2 0 1") == (2, 1)
    assert decode("0 ^2 0 1 0") == (1,)
    for bad in ["1 2 1 0 2 0 1", "1 0 1 0 1", "0 0 2 0 1", "1 0 2 1 1", "1 0 ^1 0 2", "1 0 2 0 x"]:
        with pytest.raises(DecodeError):
            decode(bad)


def test_digit_window_text_roundtrip():
    w = encode(GSeq((2, 1), (1, 1, 2)), 9)
    assert DigitWindow.parse(str(w)) == w


def test_decode_encode_roundtrip_on_grid():
    for p, t in RAW:
        g = GSeq(p, t)
        for k in range(13):
            assert decode(encode(g, 2 * k)) == expand(p, t, k)


def test_homeomorphic_fg_matches_expanded_words():
    horizon = 4 + 2 * 6  # longest prefix plus twice the lcm of the tail lengths
    words = {(p, t): expand(p, t, horizon) for p, t in RAW}
    for a, b in itertools.product(RAW, repeat=2):
        assert homeomorphic_fg(GSeq(*a), GSeq(*b)) == (words[a] == words[b])


def test_encode_distinguishes_grid():
    n = 2 * (6 + 4 + 1)
    seen = {}
    for g in GRID:
        w = str(encode(g, n))
        assert w not in seen, (g, seen.get(w))
        seen[w] = g


# ---------------------------------------------------------------------------
# order recovery


def _palindrome(digits):
    return tuple(digits) == tuple(reversed(digits))


def test_recover_example():
    cs = components(TWO, (-2, 2))
    shuffled = cs[:]
    random.Random(1).shuffle(shuffled)
    rec = recover_order(shuffled)
    assert list(rec.chain) == cs
    assert rec.chain[rec.anchor].footprint == Interval.closed(0, 1)
    assert recover_order(list(reversed(cs))) == rec


def test_recover_left_only_window_is_undecidable():
    with pytest.raises(OrientationUndecidable):
        recover_order(components(TWO, (-6, -2)))  # the window [-3,-1] on the line


def test_recover_rejects_broken_chains():
    with pytest.raises(ChainError):
        recover_order(components(TWO, (-3, -2)) + components(TWO, (1, 2)))
    with pytest.raises(ChainError):
        recover_order([])


@pytest.mark.parametrize("g", GRID)
def test_recover_is_correct_or_undecidable(g):
    rng = random.Random(str(g))
    for k in range(1, 9):
        cs = components(g, (-k, k))
        shuffled = cs[:]
        rng.shuffle(shuffled)
        try:
            rec = recover_order(shuffled)
        except OrientationUndecidable:
            # the noncut word reads the same both ways, so nothing can orient it
            assert _palindrome([c.noncuts for c in cs])
            continue
        assert list(rec.chain) == cs
        assert rec.relative_indices() == list(range(-k, k + 1))


def test_palindromic_windows_are_the_only_undecidable_ones():
    undecided = 0
    for g in GRID:
        for k in range(2, 9):
            cs = components(g, (-k, k))
            digits = [c.noncuts for c in cs]
            try:
                recover_order(cs)
            except OrientationUndecidable:
                undecided += 1
                assert _palindrome(digits)
            else:
                assert not _palindrome(digits)
    assert undecided > 0


# ---------------------------------------------------------------------------
# discontinuities


def expected_gamma(g, n):
    pts = {F(k) for k in range(-n, n + 1)}
    pts |= {F(2 * k + 1, 2) for k in range(1, n) if g(k) == 2}
    return sorted(pts)


def test_gamma_examples():
    assert gamma(TWO, (-2, 2)) == [-2, -1, 0, 1, F(3, 2), 2]
    assert F(1, 2) not in gamma(TWO, (0, 1))
    assert gamma(TWO, (-5, -3)) == [-5, -4, -3]


@pytest.mark.parametrize("g", GRID[::14])
def test_gamma_matches_oscillation_oracle(g):
    rng = random.Random(str(g))
    got = set(gamma(g, (-4, 4)))
    fn = build_pieces(g, (-5, 5))
    cands = {F(k, 4) for k in range(-16, 17)}
    assert got <= cands
    for c in sorted(cands):
        assert oscillation_oracle(fn, c, rng) == (c in got), c


@pytest.mark.parametrize("g", GRID[::3])
def test_gamma_exact_count(g):
    for n in range(1, 11):
        pts = gamma(g, (-n, n))
        assert pts == expected_gamma(g, n)
        twos = sum(g(k) == 2 for k in range(1, n))
        assert len(pts) == 2 * n + 1 + twos


def test_discontinuities_on_custom_pieces():
    from refline.sinegraph import Piece, PieceFn

    fn = PieceFn([Piece(Interval(-2, True, 0, False), Const(1)), Piece(Interval.closed(0, 1), Const()),
                  Piece(Interval.open_closed(1, 2), Const())])
    assert discontinuities(fn, (-1, 2)) == [0]


# ---------------------------------------------------------------------------
# the scaled counterexample


def test_remark_values():
    fn = remark_counterexample((-1, 1))
    x = F(3, 4)
    expected = 0.5 * math.sin(1 / ((3 / 4 - 1 / 2) * (1 - 3 / 4)))
    assert abs(fn(x) - expected) < 1e-12
    assert fn(F(0)) == 0 and fn(F(-1)) == 0
    assert fn(F(1, 8)) == 0


def test_remark_arcs_and_continuity_at_zero():
    fn = remark_counterexample((F(1, 64), 1))
    arcs = [p for p in fn if p.is_arc]
    expected = [ScaledSineArc(F(1, 2 ** n), F(1, 2 ** (n - 1)), F(1, 2 ** n)) for n in range(1, 7)]
    assert [p.form for p in arcs] == expected
    assert discontinuities(fn, (F(1, 64), 1)) == [F(1, 2 ** n) for n in range(6, -1, -1)]
    wide = remark_counterexample((-1, 1))
    rng = random.Random(3)
    for _ in range(300):
        x = F(rng.uniform(-1e-3, 1e-3))
        assert abs(wide(x)) <= abs(x) * 2 + 1e-15  # amplitude 2^-n on ]2^-n, 2^-n+1[


# ---------------------------------------------------------------------------
# sampling


def test_sample_csv():
    text = sample_csv(TWO, (1, 2), F(1, 4))
    rows = [r.split(",") for r in text.strip().splitlines()]
    assert rows[0] == ["x", "y"]
    ys = {float(x): float(y) for x, y in rows[1:]}
    assert ys[1.5] == ys[1.75] == ys[2.0] == 0.0
    assert len(ys) == 5


def test_decided_anchorless_windows_mimic_anchored_ones():
    # a run right of [0, 1] that still gets oriented has exactly the noncut word
    # of the centred window of another sequence, so no rule could refuse it
    mimics = 0
    for g in GRID[::4]:
        for lo in range(1, 9):
            for span in (2, 8, 16):
                cs = components(g, (lo, lo + span))
                try:
                    rec = recover_order(cs)
                except OrientationUndecidable:
                    continue
                mimics += 1
                k = span // 2
                heads = rec.digits[k + 2::2]
                other = GSeq(tuple(heads), (2,))
                assert [c.noncuts for c in components(other, (-k, k))] == list(rec.digits)
    assert mimics > 0


def test_recover_even_and_offcentre_windows_are_undecidable():
    with pytest.raises(OrientationUndecidable):
        recover_order(components(TWO, (-2, 3)))
    with pytest.raises(OrientationUndecidable):
        recover_order(components(TWO, (-1, 5)))
