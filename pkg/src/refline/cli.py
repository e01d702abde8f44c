"""Command line front end.

Every verb prints to stdout (or ``--out``).  Failures print one line
``error <CODE>: <detail>`` to stderr, possibly followed by more detail
lines, and exit nonzero.
"""

from __future__ import annotations

import argparse
import shlex
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import classify as cls
from . import sinegraph as sg
from .interval import format_rational, parse_rational
from .partition import (
    PartitionDesc,
    PartitionError,
    TypeQuadruple,
    compute_type,
    synthesize,
    validate,
)

EXIT_CODES = {
    "USAGE": 2,
    "PARSE_ERROR": 3,
    "INVALID_PARTITION": 4,
    "INADMISSIBLE": 5,
    "NOT_IN_OMEGA": 6,
    "DECODE_ERROR": 7,
    "IO_ERROR": 8,
}


class CliError(Exception):
    def __init__(self, code: str, detail: str, extra: list[str] | None = None):
        super().__init__(detail)
        self.code = code
        self.detail = detail
        self.extra = extra or []


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError("USAGE", message)


def _type(text: str) -> TypeQuadruple:
    try:
        return TypeQuadruple.parse(text)
    except ValueError as e:
        raise CliError("PARSE_ERROR", str(e)) from None


def _admissible_type(text: str) -> TypeQuadruple:
    t = _type(text)
    reason = cls.inadmissible_reason(t)
    if reason:
        raise CliError("INADMISSIBLE", f"{t}: {reason}")
    return t


def _gseq(text: str | None) -> sg.GSeq:
    if not text:
        raise CliError("USAGE", "--g is required")
    try:
        return sg.GSeq.parse(text)
    except ValueError as e:
        code = "NOT_IN_OMEGA" if "Omega" in str(e) else "PARSE_ERROR"
        raise CliError(code, str(e)) from None


def _window(text: str | None) -> tuple[Fraction, Fraction]:
    if not text:
        raise CliError("USAGE", "--window lo:hi is required")
    lo, sep, hi = text.partition(":")
    try:
        if not sep:
            raise ValueError("expected lo:hi")
        a, b = parse_rational(lo), parse_rational(hi)
    except ValueError as e:
        raise CliError("PARSE_ERROR", f"bad window {text!r}: {e}") from None
    if a > b:
        raise CliError("PARSE_ERROR", f"empty window {text!r}")
    return a, b


def _read_partition(path: str | None) -> PartitionDesc:
    if not path:
        raise CliError("USAGE", "--partition is required")
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise CliError("IO_ERROR", str(e)) from None
    try:
        return PartitionDesc.from_json(text)
    except ValueError as e:
        raise CliError("PARSE_ERROR", str(e)) from None


# ---------------------------------------------------------------------------
# verbs


def run_classify(args) -> str:
    desc = _read_partition(args.partition)
    violations = validate(desc)
    if violations:
        raise CliError("INVALID_PARTITION", f"{len(violations)} overlap(s)", [str(v) for v in violations])
    t = compute_type(desc)
    words = [str(t), "Q1" if cls.in_q1(t) else "Q2"]
    if cls.is_separable(t):
        words.append("separable")
    if cls.is_discrete(t):
        words.append("discrete")
    return " ".join(words) + "\n"


def run_synthesize(args) -> str:
    if len(args.type or []) != 1:
        raise CliError("USAGE", "synthesize takes exactly one --type")
    t = _admissible_type(args.type[0])
    return synthesize(t).to_json() + "\n"


def run_compare(args) -> str:
    if len(args.type or []) != 2:
        raise CliError("USAGE", "compare takes two --type options")
    t1, t2 = (_admissible_type(s) for s in args.type)
    return str(cls.compare(t1, t2)) + "\n"


def run_fg_encode(args) -> str:
    g = _gseq(args.g)
    n = 8 if args.n is None else args.n
    if n < 0:
        raise CliError("PARSE_ERROR", "--n must be nonnegative")
    return str(sg.encode(g, n)) + "\n"


def run_fg_decode(args) -> str:
    text = args.digits
    if text is None:
        raise CliError("USAGE", "fg-decode needs --digits '<window>'")
    try:
        head = sg.decode(text)
    except sg.DecodeError as e:
        raise CliError("DECODE_ERROR", str(e)) from None
    return " ".join(map(str, head)) + "\n"


def run_fg_sample(args) -> str:
    g = _gseq(args.g)
    lo, hi = _window(args.window)
    try:
        step = parse_rational(args.step or "1/100")
    except ValueError as e:
        raise CliError("PARSE_ERROR", str(e)) from None
    if step <= 0:
        raise CliError("PARSE_ERROR", "--step must be positive")
    return sg.sample_csv(g, (lo, hi), step)


def run_fg_gamma(args) -> str:
    g = _gseq(args.g)
    pts = sg.gamma(g, _window(args.window))
    return " ".join(format_rational(p) for p in pts) + "\n"


def run_fg_components(args) -> str:
    g = _gseq(args.g)
    n = 4 if args.n is None else args.n
    lines = [f"{c.position_index}\t{c.footprint}\t{c.noncuts}" for c in sg.components(g, (-n, n))]
    return "\n".join(lines) + "\n"


VERBS = {
    "classify": run_classify,
    "synthesize": run_synthesize,
    "compare": run_compare,
    "fg-encode": run_fg_encode,
    "fg-decode": run_fg_decode,
    "fg-sample": run_fg_sample,
    "fg-gamma": run_fg_gamma,
    "fg-components": run_fg_components,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="refline", description="Interval-partition types of the real line and the sine-arc graphs F[g].")
    p.add_argument("verb", nargs="?", choices=sorted(VERBS))
    p.add_argument("--type", action="append", help="type quadruple, e.g. '(0,0,0,1)'")
    p.add_argument("--partition", help="partition JSON file")
    p.add_argument("--g", help="sequence, e.g. 'prefix=1;tail=2'")
    p.add_argument("--window", help="lo:hi with rational ends")
    p.add_argument("--step", help="sample step (rational)")
    p.add_argument("--n", type=int, help="digits per side (fg-encode) or index radius (fg-components)")
    p.add_argument("--digits", help="digit window for fg-decode, '^' marks the anchor")
    p.add_argument("--out", help="write output here instead of stdout")
    p.add_argument("--manifest", help="file with one request per line; run them all")
    return p


_VALUED = {"--type", "--partition", "--g", "--window", "--step", "--n", "--digits", "--out", "--manifest"}


def _glue(argv: list[str]) -> list[str]:
    # lets values such as "-2:2" follow their option as a separate token
    out, it = [], iter(argv)
    for tok in it:
        if tok in _VALUED:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def _parse(argv: list[str]) -> argparse.Namespace:
    return build_parser().parse_args(_glue(argv))


def _execute(argv: list[str]) -> tuple[int, str, str]:
    """Run one request, returning ``(status, stdout, stderr)``."""
    try:
        args = _parse(argv)
        if args.manifest:
            raise CliError("USAGE", "manifests cannot be nested")
        if not args.verb:
            raise CliError("USAGE", "a verb or --manifest is required")
        out = VERBS[args.verb](args)
        if args.out:
            try:
                Path(args.out).write_text(out)
            except OSError as e:
                raise CliError("IO_ERROR", str(e)) from None
            out = ""
        return 0, out, ""
    except CliError as e:
        err = "\n".join([f"error {e.code}: {e.detail}", *e.extra]) + "\n"
        return EXIT_CODES[e.code], "", err
    except (PartitionError, cls.InadmissibleType, sg.OrientationUndecidable, sg.ChainError) as e:
        return EXIT_CODES["PARSE_ERROR"], "", f"error PARSE_ERROR: {e}\n"


def run_manifest(path: str, jobs: int = 4) -> tuple[int, str, str]:
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as e:
        return EXIT_CODES["IO_ERROR"], "", f"error IO_ERROR: {e}\n"
    requests = [shlex.split(ln) for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_execute, requests))
    status = max((r[0] for r in results), default=0)
    return status, "".join(r[1] for r in results), "".join(r[2] for r in results)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        manifest = _parse(argv).manifest
    except CliError:
        manifest = None
    if manifest:
        status, out, err = run_manifest(manifest)
    else:
        status, out, err = _execute(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return status


if __name__ == "__main__":
    sys.exit(main())
