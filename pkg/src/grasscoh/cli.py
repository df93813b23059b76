"""Command-line entry point.

Exit status: 0 when every check holds (or is not applicable), 2 when at
least one instance fails (its witness is printed), 1 on usage or internal
errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import __version__
from .endo import check_lemma_m2, induction_step_demo
from .filtration import CHECKERS, check_conj4prime, subalgebra_hilb
from .lefschetz import check_hard_lefschetz
from .qseries import grassmannian_hilb, prop5_check
from .runner import SWEEP_CLAIMS, SweepConfig, default_cache_path, sweep, write_reports
from .selftest import run_selftest

EXIT_OK, EXIT_ERROR, EXIT_FAILS = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="grasscoh", description="Exact checks in the cohomology ring of the Grassmannian.")
    p.add_argument("--version", action="version", version=f"grasscoh {__version__}")
    p.add_argument("-v", "--verbose", action="store_true", help="per-instance log lines on stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("hilb", help="Hilbert series of R^{k,l} or of the subalgebra R^{k,l,m}")
    s.add_argument("k", type=int)
    s.add_argument("l", type=int)
    s.add_argument("m", type=int, nargs="?")
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("prop5", help="the q-binomial decomposition identity")
    s.add_argument("k", type=int)
    s.add_argument("l", type=int)

    s = sub.add_parser("check", help="one conjecture instance")
    s.add_argument("claim", choices=sorted(CHECKERS))
    s.add_argument("k", type=int)
    s.add_argument("l", type=int)
    s.add_argument("m", type=int)
    s.add_argument("--printed-threshold", action="store_true",
                   help="conj4prime only: saturate from kl-2m instead of kl-m")

    s = sub.add_parser("lefschetz", help="Hard Lefschetz invertibility in every degree")
    s.add_argument("k", type=int)
    s.add_argument("l", type=int)

    s = sub.add_parser("lemma-m2", help="degree-two endomorphism system")
    s.add_argument("k", type=int)
    s.add_argument("l", type=int)

    s = sub.add_parser("induction", help="induction step for e_m at one instance")
    s.add_argument("k", type=int)
    s.add_argument("l", type=int)
    s.add_argument("m", type=int)

    s = sub.add_parser("sweep", help="run many instances")
    s.add_argument("--k-max", type=int, default=4)
    s.add_argument("--l-max", type=int, default=5)
    s.add_argument("--k-min", type=int, default=1)
    s.add_argument("--l-min", type=int, default=1)
    s.add_argument("--claims", nargs="+", choices=SWEEP_CLAIMS)
    s.add_argument("--m-policy", choices=("all", "boundary", "explicit"), default="all")
    s.add_argument("--m", type=int, nargs="+", dest="m_values", default=[])
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--out")
    s.add_argument("--cache", help=f"JSONL result cache (default ${'GRASSCOH_CACHE'} or .grasscoh-cache.jsonl)")
    s.add_argument("--no-cache", action="store_true")
    s.add_argument("--force", action="store_true", help="recompute cached instances that hold")
    s.add_argument("--transposed", action="store_true", help="also run l < k")
    s.add_argument("--no-timing", action="store_true", help="write elapsed_ms as 0 for byte-stable output")

    sub.add_parser("selftest", help="all oracle cross-checks at desk scale")
    return p


def _emit(report, out) -> int:
    out.write(report.to_json() + "\n")
    return EXIT_FAILS if report.failed else EXIT_OK


def _dispatch(args, out) -> int:
    if args.command == "hilb":
        if args.m is None:
            poly = grassmannian_hilb(args.k, args.l)
        else:
            poly = subalgebra_hilb(args.k, args.l, args.m)
        out.write((json.dumps(poly.to_json()) if args.json else str(poly)) + "\n")
        return EXIT_OK
    if args.command == "prop5":
        return _emit(prop5_check(args.k, args.l), out)
    if args.command == "check":
        if args.claim == "conj4prime":
            reading = "printed" if args.printed_threshold else "equivalent"
            return _emit(check_conj4prime(args.k, args.l, args.m, reading), out)
        if args.printed_threshold:
            raise UsageError("--printed-threshold applies to conj4prime only")
        return _emit(CHECKERS[args.claim](args.k, args.l, args.m), out)
    if args.command == "lefschetz":
        return _emit(check_hard_lefschetz(args.k, args.l), out)
    if args.command == "lemma-m2":
        rep = check_lemma_m2(args.k, args.l)
        res = rep.details.get("result")
        if res is not None:
            sols = ", ".join(f"({x}, {y})" for x, y in sorted(res.solutions, reverse=True))
            out.write(f"solutions: {sols}\n")
            if res.residual_r3 is not None:
                out.write(f"residual_r3: {res.residual_r3}\n")
            out.write(f"branch: {res.branch}\n")
        return _emit(rep, out)
    if args.command == "induction":
        rep = induction_step_demo(args.k, args.l, args.m)
        for name, stage in rep.details.get("stages", {}).items():
            out.write(f"{name}: {json.dumps(stage, default=str)}\n")
        return _emit(rep, out)
    if args.command == "sweep":
        return _run_sweep(args, out)
    if args.command == "selftest":
        ok = run_selftest(lambda line: out.write(line + "\n"))
        return EXIT_OK if ok else EXIT_FAILS
    raise UsageError(f"unknown command {args.command}")


def _run_sweep(args, out) -> int:
    cache = None if args.no_cache else (args.cache or default_cache_path())
    cfg = SweepConfig(
        k_max=args.k_max, l_max=args.l_max, k_min=args.k_min, l_min=args.l_min,
        m_policy=args.m_policy, m_values=tuple(args.m_values),
        claims=tuple(args.claims) if args.claims else SweepConfig.claims,
        jobs=args.jobs, out=args.out, cache=cache, force=args.force,
        transposed=args.transposed, timing=not args.no_timing,
    )
    result = sweep(cfg)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            write_reports(result.reports, fh)
    else:
        write_reports(result.reports, out)
    summary = ", ".join(f"{v}={n}" for v, n in sorted(result.counts.items()))
    print(
        f"sweep: {len(result.reports)} instances ({summary}); "
        f"computed {result.computed}, skipped {result.skipped} cached"
        + (f", ignored {result.bad_cache_lines} corrupted cache lines" if result.bad_cache_lines else ""),
        file=sys.stderr,
    )
    return EXIT_FAILS if result.any_failed else EXIT_OK


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_ERROR
    except SystemExit as exc:  # --help / --version
        return EXIT_OK if not exc.code else EXIT_ERROR
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(message)s", stream=sys.stderr)
    try:
        return _dispatch(args, out)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, OSError) as exc:
        print(f"grasscoh: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
