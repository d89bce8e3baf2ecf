"""Command line driver: run verification suites over parameter grids and
dump operators as sparse triplet files.

    qhowe verify all --m 1:3 --N 1:3 --format json --out report.json
    qhowe dump braiding --m 2 --k 1 --l 1 --out beta.txt

Reports are deterministic for a fixed configuration: checks are sorted and
wall times are excluded from JSON unless --timings is given.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import os
import sys
import time
from dataclasses import dataclass
from typing import Optional

from . import __version__, braidgrp, geomcheck, howe, ktheory
from .howe import HoweSpace, admissible_families
from .qmodule import mono_str
from .report import CheckResult, Report

SUITES = ("howe", "braiding", "ktheory", "geom", "all")
ALGEBRAIC_CEILING_M = 4
ALGEBRAIC_CEILING_N = 4
GEOM_CEILING_M = 6


@dataclass
class SuiteConfig:
    suite: str
    m_range: tuple[int, int]
    n_range: tuple[int, int]
    coproduct: str = "standard"
    weyl_variant: Optional[str] = None
    grading_sign: Optional[int] = None
    fmt: str = "text"
    out: Optional[str] = None
    jobs: int = 1
    timings: bool = False
    beyond_desk: bool = False


def parse_range(text: str) -> tuple[int, int]:
    if ":" in text:
        lo, hi = text.split(":", 1)
        lo, hi = int(lo), int(hi)
    else:
        lo = hi = int(text)
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return lo, hi


def _variant(config: SuiteConfig):
    if config.weyl_variant in (None, "auto"):
        return None
    return braidgrp.parse_variant(config.weyl_variant)


def _conventions(config: SuiteConfig) -> dict:
    variant = _variant(config) or braidgrp.selected_variant()
    eps = config.grading_sign if config.grading_sign is not None else ktheory.grading_sign()
    return {
        "coproduct": config.coproduct,
        "weyl_variant": braidgrp.variant_name(variant),
        "grading_sign": eps,
        "pairing": "sum(mu_a nu_a) - sum(mu) sum(nu)/m",
        "beta_vs_weyl_sign": "(-1)^(kl+k)",
    }


def _suite_tasks(config: SuiteConfig):
    m_lo, m_hi = config.m_range
    n_lo, n_hi = config.n_range
    cop = config.coproduct
    var = _variant(config)
    tasks = []

    def grid():
        for m in range(m_lo, m_hi + 1):
            for N in range(n_lo, n_hi + 1):
                if N <= 2 * m:
                    yield m, N

    if config.suite in ("howe", "all"):
        for m, N in grid():
            tasks.append(lambda m=m, N=N: howe.verify_commuting(m, N, cop))
            tasks.append(
                lambda m=m, N=N: [
                    r
                    for i, k, l in admissible_families(m, N)
                    for r in howe.verify_divided_transport(HoweSpace(m, N, cop), i, k, l)
                ]
            )
    if config.suite in ("braiding", "all"):
        for m in range(m_lo, m_hi + 1):
            for d in range(1, m + 1):
                tasks.append(lambda m=m, d=d: braidgrp.verify_eq_comm(m, d, cop, var))
                tasks.append(lambda m=m, d=d: braidgrp.verify_hightolow(m, d, cop, var))
            tasks.append(lambda m=m: braidgrp.verify_braid_relations(m, 1, cop, var))
            tasks.append(lambda m=m: braidgrp.verify_word_independence(m, 1, cop, var))
        for m, N in grid():
            tasks.append(lambda m=m, N=N: braidgrp.verify_family_scalars(m, N, cop, var))
            for k in range(0, min(m, N) + 1):
                l = N - k
                if l > m:
                    continue
                tasks.append(lambda m=m, k=k, l=l: braidgrp.verify_beta_t_theorem(m, k, l, cop, var))
    if config.suite in ("ktheory", "all"):
        for m, N in grid():
            tasks.append(lambda m=m, N=N: ktheory.verify_commutator(m, N, cop))
            tasks.append(lambda m=m, N=N: ktheory.verify_divided_products(m, N, 3, cop))
            tasks.append(lambda m=m, N=N: ktheory.verify_ee_deformed_shadow(m, N, 3, cop))
            tasks.append(lambda m=m, N=N: ktheory.verify_rickard_equals_t(m, N, cop))
    if config.suite in ("geom", "all"):
        for m in range(m_lo, m_hi + 1):
            for k in range(0, m + 1):
                for l in range(0, m + 1):
                    tasks.append(lambda m=m, k=k, l=l: geomcheck.verify_dims(m, k, l))
                    tasks.append(lambda m=m, k=k, l=l: geomcheck.verify_canonical(m, k, l))
                    tasks.append(lambda m=m, k=k, l=l: geomcheck.fiber_bundle_facts(m, k, l))
                    for r in range(0, l + 1):
                        if k + r <= m:
                            tasks.append(
                                lambda m=m, k=k, l=l, r=r: geomcheck.adjunction_shifts(m, k, l, r)
                            )
            for a in range(0, m + 1):
                for b in range(0, m - a + 1):
                    for c in range(0, m - a - b + 1):
                        tasks.append(lambda m=m, a=a, b=b, c=c: geomcheck.codim_checks(m, a, b, c))
    return tasks


def run_suite(config: SuiteConfig) -> Report:
    if config.suite not in SUITES:
        raise ValueError(f"unknown suite {config.suite!r}")
    if not config.beyond_desk:
        ceiling_m = GEOM_CEILING_M if config.suite == "geom" else ALGEBRAIC_CEILING_M
        if config.m_range[1] > ceiling_m or (
            config.suite != "geom" and config.n_range[1] > ALGEBRAIC_CEILING_N
        ):
            raise ValueError(
                "range exceeds the desk-scale ceiling; pass --beyond-desk to "
                "acknowledge the exponential cost"
            )
    report = Report(version=__version__, conventions=_conventions(config))
    tasks = _suite_tasks(config)

    def run_one(task):
        t0 = time.perf_counter()
        try:
            results = task()
        except Exception as exc:  # arithmetic errors become failed checks
            results = [
                CheckResult(
                    "internal.error",
                    {"task": getattr(task, "__qualname__", "suite task")},
                    "fail",
                    f"{type(exc).__name__}: {exc}",
                )
            ]
        ms = (time.perf_counter() - t0) * 1000.0
        for r in results:
            if r.ms is None:
                r.ms = round(ms / max(len(results), 1), 3)
        return results

    if config.jobs > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=config.jobs) as pool:
            for results in pool.map(run_one, tasks):
                report.extend(results)
    else:
        for task in tasks:
            report.extend(run_one(task))
    return report


# ---------------------------------------------------------------------------
# operator dumps

DUMP_KINDS = ("rmatrix", "braiding", "weyl_t", "rickard", "e", "f")


def dump_operator(kind: str, m: int, k: int, l: int, r: Optional[int] = None,
                  coproduct: str = "standard") -> str:
    """Sparse triplet serialization: header `rows cols`, then sorted lines
    `rowLabel colLabel scalarText`."""
    N = k + l
    space = HoweSpace(m, N, coproduct)
    if kind == "rmatrix":
        op = braidgrp.half_twist_R(m, k, l, coproduct)
        nrows = len(space.block_basis(k, l))
    elif kind == "braiding":
        op = braidgrp.braiding_beta(m, k, l, coproduct)
        nrows = len(space.block_basis(l, k))
    elif kind == "weyl_t":
        op = braidgrp.howe_weyl_op(m, N, coproduct).restrict(space.block_basis(k, l))
        nrows = len(space.block_basis(l, k))
    elif kind == "rickard":
        op = ktheory.rickard_euler(m, k, l, coproduct=coproduct)
        nrows = len(space.block_basis(l, k))
    elif kind in ("e", "f"):
        rr = 1 if r is None else r
        if kind == "e":
            op = ktheory.matrix_e(m, N, rr, k, l, coproduct)
            nrows = len(space.block_basis(k - rr, l + rr)) if 0 <= k - rr and l + rr <= m else 0
        else:
            op = ktheory.matrix_f(m, N, rr, k, l, coproduct)
            nrows = len(space.block_basis(k + rr, l - rr)) if k + rr <= m and 0 <= l - rr else 0
    else:
        raise ValueError(f"unknown dump kind {kind!r}")
    ncols = len(space.block_basis(k, l))
    lines = [f"{nrows} {ncols}"]
    for row, col, scalar in op.to_triplets(mono_str):
        lines.append(f"{row} {col} {scalar}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qhowe", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites over a grid")
    v.add_argument("suite", nargs="?", choices=SUITES, default=None)
    v.add_argument("--suite", dest="suite_flag", choices=SUITES, default=None)
    v.add_argument("--m", type=parse_range, default=(1, 3), help="m or lo:hi")
    v.add_argument("--N", type=parse_range, default=(1, 3), help="N or lo:hi")
    v.add_argument("--coproduct", choices=("standard", "flipped"), default="standard")
    v.add_argument("--weyl-variant", default="auto",
                   choices=("auto", "fef+1", "fef-1", "efe+1", "efe-1"))
    v.add_argument("--grading-sign", type=int, choices=(-1, 1), default=None)
    v.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    v.add_argument("--out", default=None)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--timings", action="store_true")
    v.add_argument("--beyond-desk", action="store_true",
                   help="allow ranges past the desk-scale ceilings")

    d = sub.add_parser("dump", help="write an operator as sparse triplets")
    d.add_argument("kind", choices=DUMP_KINDS)
    d.add_argument("--m", type=int, required=True)
    d.add_argument("--k", type=int, required=True)
    d.add_argument("--l", type=int, required=True)
    d.add_argument("--r", type=int, default=None)
    d.add_argument("--coproduct", choices=("standard", "flipped"), default="standard")
    d.add_argument("--out", default=None)
    return parser


def _output_path(out: Optional[str]) -> Optional[str]:
    if out is None:
        return None
    base = os.environ.get("QHOWE_OUT_DIR", "")
    return os.path.join(base, out) if base else out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        suite = args.suite or args.suite_flag
        if suite is None:
            parser.error("a suite is required (positional or --suite)")
        if args.suite and args.suite_flag and args.suite != args.suite_flag:
            parser.error("conflicting suite arguments")
        config = SuiteConfig(
            suite=suite,
            m_range=args.m,
            n_range=args.N,
            coproduct=args.coproduct,
            weyl_variant=args.weyl_variant,
            grading_sign=args.grading_sign,
            fmt=args.fmt,
            out=args.out,
            jobs=args.jobs,
            timings=args.timings,
            beyond_desk=args.beyond_desk,
        )
        try:
            report = run_suite(config)
        except ValueError as exc:
            parser.error(str(exc))
        payload = (
            report.json_bytes(timings=config.timings)
            if config.fmt == "json"
            else report.text().encode()
        )
        path = _output_path(config.out)
        if path:
            with open(path, "wb") as fh:
                fh.write(payload)
        else:
            sys.stdout.write(payload.decode())
        return 0 if report.all_pass() else 1
    if args.command == "dump":
        try:
            text = dump_operator(args.kind, args.m, args.k, args.l, args.r, args.coproduct)
        except ValueError as exc:
            parser.error(str(exc))
        path = _output_path(args.out)
        if path:
            with open(path, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0
    return 2


if __name__ == "__main__":
    sys.exit(main())
