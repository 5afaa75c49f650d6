"""Command-line front end: ``zetaline <subcommand> [options]``.

Reports go to standard output as CSV (default) or JSON; diagnostics go to
standard error. Exit status is 0 on success, 2 for invalid arguments or
preconditions, 3 for file and parse errors, and 1 when ``verify`` finds a
failing check.
"""

from __future__ import annotations

import argparse
import logging
import math
import os
import sys

import numpy as np

from . import acceptance
from .core import DEFAULT_CONFIG, z_function
from .errors import PreconditionError, ZeroFileError
from .gaps import (
    GAP_MARGIN,
    ab_measure,
    abd_counts,
    fujii_bound,
    gap_power_sum,
    gap_report,
    pair_correlation,
    starred_gap_sum,
)
from .report import emit_report
from .storage import cross_check, load_or_scan, load_zero_table, save_zero_table
from .values import (
    band_measure,
    clt_distribution,
    level_set_measure,
    selberg_moment,
    small_exponent_integral,
    s_diff_moment,
)
from .zeros import verify_completeness

log = logging.getLogger("zetaline")

COMMANDS = {
    "eval": "Evaluate theta(t), Z(t) and zeta(1/2+it) with an error bound, by the "
    "Riemann-Siegel formula (Euler-Maclaurin at low heights).",
    "zeros": "List the zeros of Z in (from, to], checked against "
    "N(T) = (T/2pi) log(T/2pi) - T/2pi + 7/8 + S(T).",
    "measure": "mu{0 < t <= T : |zeta(1/2+it)| <= c}, whose main term is T/2.",
    "band": "mu{0 < t <= T : c1 <= |zeta(1/2+it)| <= c2}, compared with "
    "T * int exp(-pi v^2) dv over [log c1, log c2] / sqrt(pi log log T).",
    "distribution": "Empirical law of log|zeta(1/2+it)| / sqrt(1/2 log log T) against "
    "the probability integral Phi, with the KS distance.",
    "moments": "(1/T) int |zeta|^(2k (2 log log T)^-1/2) dt against exp(k^2/2); with "
    "--lambda also int_0^T |zeta|^lambda dt for lambda <= (psi log log T)^-1/2.",
    "sdiff": "int_T^{T+H} (S(t+h) - S(t))^(2k) dt against "
    "H (2k)! / ((2 pi^2)^k k!) log^k(2 + h log T).",
    "gaps": "Zero gaps gamma_{n+1} - gamma_n for gamma_n <= T, their power sums "
    "sum gap^alpha, and the counts A(T), B(T) = N0(T) - A(T), D(T).",
    "fujii": "sum over gamma_n <= T of gap^2 against 9 * 2 pi T / log(T/2pi).",
    "abmeasure": "mu(A(T)) and mu(B(T)) where A(T) = {t : |zeta(1/2+it)| <= "
    "gamma_+(t) - gamma_-(t)}; B(T) has measure T + o(T).",
    "abd": "A(T): gaps with max |zeta| <= gap; B(T) = N0(T) - A(T); D(T); and the "
    "starred sum of gaps below (log log T)^6 / log T whose max exceeds the gap.",
    "paircorr": "Pairs 0 < gamma - gamma' <= 2 pi alpha / log(T/2pi) over N(T), "
    "against int_0^alpha 1 - (sin pi t / pi t)^2 dt.",
    "verify": "Run the reproduction checklist at a height tier and print one "
    "PASS/FAIL line per check.",
    "ingest": "Load a published zero table (plain text or cached) and re-save or "
    "list it; completeness is checked against the Riemann-von Mangoldt main term.",
    "crosscheck": "Compare a zero file with zeros computed over its range, "
    "matching ordinates in order within a tolerance.",
}


def _floats(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _common(p):
    p.add_argument("--format", choices=("csv", "json"), default="csv", help="report format")
    p.add_argument("--cache-dir", default=None, help="zero-table cache (default $ZETALINE_CACHE_DIR)")
    p.add_argument(
        "--jobs", type=int, default=os.cpu_count() or 1, help="worker processes (default: all cores)"
    )
    p.add_argument("--step", type=float, default=None, help="sampling step (default per command)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="zetaline",
        description="Zeta on the critical line: values, zeros, and their statistics.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    def add(name):
        p = sub.add_parser(name, help=COMMANDS[name], description=COMMANDS[name])
        _common(p)
        return p

    p = add("eval")
    p.add_argument("--T", type=float, help="a single height")
    p.add_argument("--from", dest="t_from", type=float, help="first height of a grid")
    p.add_argument("--to", dest="t_to", type=float, help="last height of a grid")

    p = add("zeros")
    p.add_argument("--from", dest="t_from", type=float, default=0.0)
    p.add_argument("--to", dest="t_to", type=float, required=True)

    p = add("measure")
    p.add_argument("--T", type=float, required=True)
    p.add_argument("--c", type=float, required=True)

    p = add("band")
    p.add_argument("--T", type=float, required=True)
    p.add_argument("--c1", type=float, required=True)
    p.add_argument("--c2", type=float, required=True)

    p = add("distribution")
    p.add_argument("--T", type=float, required=True)

    p = add("moments")
    p.add_argument("--T", type=float, required=True)
    p.add_argument("--k", type=float, default=1.0)
    p.add_argument("--lambda", dest="lam", type=float, default=None)

    p = add("sdiff")
    p.add_argument("--T", type=float, required=True)
    p.add_argument("--H", type=float, required=True)
    p.add_argument("--h", type=float, default=0.1)
    p.add_argument("--k", type=int, default=1)

    p = add("gaps")
    p.add_argument("--T", type=float, required=True)
    p.add_argument("--alpha", type=_floats, default=[1.0, 2.0], help="comma-separated exponents")

    p = add("fujii")
    p.add_argument("--T", type=float, required=True)

    p = add("abmeasure")
    p.add_argument("--T", type=float, required=True)

    p = add("abd")
    p.add_argument("--T", type=float, required=True)

    p = add("paircorr")
    p.add_argument("--T", type=float, required=True)
    p.add_argument(
        "--alpha", type=_floats, default=list(acceptance.PAIR_ALPHAS), help="comma-separated alphas"
    )

    p = add("verify")
    p.add_argument("--tier", choices=tuple(acceptance.TIERS), default="small")

    p = add("ingest")
    p.add_argument("path")
    p.add_argument("--input-format", choices=("plain_text", "cached"), default="plain_text")
    p.add_argument("--out", default=None, help="also save the table in the cached format")

    p = add("crosscheck")
    p.add_argument("path")
    p.add_argument("--input-format", choices=("plain_text", "cached"), default="plain_text")
    p.add_argument("--tol", type=float, default=1e-6)
    return parser


def _positive(name, value):
    if not (value is not None and math.isfinite(value) and value > 0):
        raise PreconditionError(f"--{name} must be positive, got {value}")
    return value


def _table(args, upto):
    return load_or_scan(0.0, upto, DEFAULT_CONFIG, cache_dir=args.cache_dir, jobs=args.jobs)


def _dispatch(args, out):
    cmd = args.command
    cfg = DEFAULT_CONFIG
    if cmd == "eval":
        if args.T is not None:
            return z_function(args.T, cfg)
        if args.t_from is None or args.t_to is None:
            raise PreconditionError("eval needs --T or both --from and --to")
        step = _positive("step", args.step if args.step is not None else 1.0)
        ts = np.arange(args.t_from, args.t_to + 0.5 * step, step)
        return [z_function(float(t), cfg) for t in ts]
    if cmd == "zeros":
        _positive("to", args.t_to)
        if args.t_from == 0:
            return load_or_scan(0.0, args.t_to, cfg, args.step, args.cache_dir, args.jobs)
        return load_or_scan(args.t_from, args.t_to, cfg, args.step, False, args.jobs)
    if cmd == "measure":
        return level_set_measure(_positive("T", args.T), args.c, cfg, args.step)
    if cmd == "band":
        return band_measure(_positive("T", args.T), args.c1, args.c2, cfg, args.step)
    if cmd == "distribution":
        return clt_distribution(_positive("T", args.T), args.step, cfg=cfg)
    if cmd == "moments":
        m = selberg_moment(_positive("T", args.T), args.k, args.step, cfg)
        if args.lam is None:
            return m
        s = small_exponent_integral(args.T, args.lam, args.step, cfg)
        return {
            "T": m.T, "k": m.k, "exponent": m.exponent, "empirical": m.empirical,
            "predicted": m.predicted, "rel_error": m.rel_error, "lambda": s.lam,
            "lambda_max": s.lam_max, "integral": s.value, "integral_ratio_to_T": s.ratio_to_T,
        }
    if cmd == "sdiff":
        T = _positive("T", args.T)
        return s_diff_moment(T, args.H, args.h, args.k, _table(args, T + args.H + GAP_MARGIN))
    if cmd in ("gaps", "fujii", "abmeasure", "abd", "paircorr"):
        T = _positive("T", args.T)
    if cmd == "gaps":
        return gap_report(_table(args, T + GAP_MARGIN), T, cfg, args.alpha)
    if cmd == "fujii":
        s = gap_power_sum(_table(args, T + GAP_MARGIN), T, 2.0)
        bound = fujii_bound(T)
        return {"T": T, "sum_sq_gaps": s, "bound": bound, "ratio": s / bound, "holds": s <= bound}
    if cmd == "abmeasure":
        return ab_measure(_table(args, T + GAP_MARGIN), T, cfg, args.step)
    if cmd == "abd":
        table = _table(args, T + GAP_MARGIN)
        c = abd_counts(table, T, cfg)
        s = starred_gap_sum(table, T, cfg)
        return {
            "T": T, "A": c.A, "B": c.B, "D": c.D, "N0": c.N0, "B_over_N0": c.B / max(c.N0, 1),
            "starred_sum": s.value, "starred_count": s.count, "complement_sum": s.complement,
            "complement_count": s.complement_count, "gap_cap": s.threshold,
            "gap_cap_vacuous": s.threshold_vacuous,
        }
    if cmd == "paircorr":
        return pair_correlation(_table(args, T), T, args.alpha)
    if cmd == "verify":
        results = acceptance.run(
            args.tier, cfg, args.cache_dir, args.jobs,
            emit=lambda line: (out.write(line + "\n"), out.flush()),
        )
        return all(r.passed for r in results)
    if cmd == "ingest":
        table = load_zero_table(args.path, args.input_format)
        rep = verify_completeness(table)
        log.info("ingested %d ordinates; count check %s", len(table), "passed" if rep.passed else "failed")
        if args.out:
            save_zero_table(table, args.out)
        return table
    if cmd == "crosscheck":
        ingested = load_zero_table(args.path, args.input_format)
        # scan a little past the file's range so a zero on its edge is computed too
        lo, hi = ingested.range_lo, ingested.range_hi + 1.0
        computed = load_or_scan(lo, hi, cfg, None, args.cache_dir if lo == 0 else False, args.jobs)
        return cross_check(computed, ingested, args.tol)
    raise PreconditionError(f"unknown command {cmd!r}")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="zetaline: %(message)s",
        stream=sys.stderr,
    )
    out = sys.stdout
    try:
        if args.jobs < 1:
            raise PreconditionError("--jobs must be at least 1")
        result = _dispatch(args, out)
    except PreconditionError as exc:
        print(f"zetaline: error: {exc}", file=sys.stderr)
        return 2
    except (ZeroFileError, OSError) as exc:
        print(f"zetaline: error: {exc}", file=sys.stderr)
        return 3
    if args.command == "verify":
        return 0 if result else 1
    payload = emit_report(result, args.format)
    if hasattr(out, "buffer"):
        out.flush()
        out.buffer.write(payload)
        out.buffer.flush()
    else:
        out.write(payload.decode("utf-8"))
    return 0


if __name__ == "__main__":
    sys.exit(main())
