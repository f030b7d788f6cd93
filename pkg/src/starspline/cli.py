"""Command-line front end.

Subcommands: ``dim`` (bounds and dimensions over an (r, d) grid),
``table`` (CSV dimension tables), ``dual`` (dual point
configuration dump), ``reduce`` (reduction trace with its certified
bounds), ``waldschmidt`` (Waldschmidt bounds and oracle estimates) and
``check`` (threshold and soundness assertions, exit status driven).

All numeric output is exact integers or rationals rendered ``p/q``.
Re-running a command with the same flags and seeds is byte-identical.
An optional append-only cache maps content hashes of (star, r, d, mode)
to computed dimensions; recomputing a cached key and getting a different
value is a hard error, never a silent overwrite.
"""

from __future__ import annotations

import argparse
import hashlib
import os
import sys
from fractions import Fraction

from . import bounds, fatpoints, splinedim, starmesh
from .errors import StarSplineError
from .monomials import binom

CACHE_ENV = "STARSPLINE_CACHE"


def _parse_range(text: str) -> range:
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
    else:
        lo = hi = int(text)
    if hi < lo:
        raise ValueError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _load_star(args) -> tuple[starmesh.VertexStar, str]:
    if args.catalog:
        star = starmesh.catalog(args.catalog, seed=args.star_seed,
                                denominator_scale=args.star_scale)
        label = args.catalog
    else:
        star = starmesh.load_star(args.star_file)
        label = os.path.basename(args.star_file)
    return star, label


def _fmt(value) -> str:
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else \
            f"{value.numerator}/{value.denominator}"
    return str(value)


class ResultCache:
    """Append-only text cache ``<sha256 hash> <integer>`` per line."""

    def __init__(self, path):
        self.path = path
        self.values: dict[str, int] = {}
        if path and os.path.exists(path):
            with open(path, "r", encoding="utf-8") as fh:
                for line in fh:
                    key, _, val = line.strip().partition(" ")
                    if key:
                        self.values[key] = int(val)

    @staticmethod
    def key(star: starmesh.VertexStar, r: int, d: int, mode: str) -> str:
        payload = f"{starmesh.star_to_text(star)}|r={r}|d={d}|mode={mode}"
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()

    def fetch(self, key):
        return self.values.get(key)

    def store(self, key: str, value: int) -> None:
        old = self.values.get(key)
        if old is not None:
            if old != value:
                raise StarSplineError(
                    f"cache mismatch for {key}: recorded {old}, computed {value}"
                )
            return
        self.values[key] = value
        if self.path:
            with open(self.path, "a", encoding="utf-8") as fh:
                fh.write(f"{key} {value}\n")

    def dimension(self, star, r, d, mode, compute):
        key = self.key(star, r, d, mode)
        cached = self.fetch(key)
        value = compute()
        if cached is not None and cached != value:
            raise StarSplineError(
                f"cache mismatch for (r={r}, d={d}, {mode}): "
                f"recorded {cached}, computed {value}"
            )
        self.store(key, value)
        return value


def _open_cache(args) -> ResultCache:
    path = args.cache or os.environ.get(CACHE_ENV)
    return ResultCache(path)


def _dim_cell(star, label, r, d, args, cache):
    """One report cell: (binom, bound, dim, certification state)."""
    trivial = binom(d + 2, 2)
    if star.is_closed:
        report = bounds.homog_lower_bound(star, r, d,
                                          use_distinct=args.use_distinct)
        bound = report.lbcs
        lower = report.best_lower
    else:
        bound = bounds.lbos(star, r, d)
        lower = max(trivial, bound)
    if args.exact:
        mode = "exact"
        value = cache.dimension(
            star, r, d, mode, lambda: splinedim.homog_dim(star, r, d)
        )
    else:
        mode = f"gendim:trials={args.trials}:seed={args.seed}:scale={args.scale}"
        value = cache.dimension(
            star, r, d, mode,
            lambda: splinedim.generic_homog_dim(
                star, r, d, trials=args.trials, seed=args.seed,
                denominator_scale=args.scale,
            ),
        )
    state = "certified" if value == lower else "bounded"
    return trivial, bound, value, state


def cmd_dim(args) -> int:
    star, label = _load_star(args)
    cache = _open_cache(args)
    kind_col = "lbcs" if star.is_closed else "lbos"
    col = "dim" if args.exact else "gendim"
    print(f"# star {label} ({star.kind})")
    print(f"r d binom {kind_col} {col} state")
    for r in _parse_range(args.r):
        for d in _parse_range(args.d):
            trivial, bound, value, state = _dim_cell(
                star, label, r, d, args, cache
            )
            print(f"{r} {d} {trivial} {bound} {value} {state}")
    return 0


def cmd_table(args) -> int:
    star, label = _load_star(args)
    cache = _open_cache(args)
    out = []
    if args.mode == "generic":
        out.append("r,d,binom,lbcs,gendim")
        for r in _parse_range(args.r):
            for d in _parse_range(args.d):
                trivial = binom(d + 2, 2)
                bound = bounds.lbcs(star, r, d, use_distinct=args.use_distinct)
                mode = f"gendim:trials={args.trials}:seed={args.seed}:scale={args.scale}"
                value = cache.dimension(
                    star, r, d, mode,
                    lambda: splinedim.generic_homog_dim(
                        star, r, d, trials=args.trials, seed=args.seed,
                        denominator_scale=args.scale,
                    ),
                )
                out.append(f"{r},{d},{trivial},{bound},{value}")
    else:
        out.append("r,d,f,lbcs1,symdim")
        for r in _parse_range(args.r):
            for d in _parse_range(args.d):
                f_col = binom(d + 2, 2) + binom(d + 1 - r, 2)
                bound = bounds.lbcs(star, r, d, use_distinct=True)
                value = cache.dimension(
                    star, r, d, "exact",
                    lambda: splinedim.homog_dim(star, r, d),
                )
                out.append(f"{r},{d},{f_col},{bound},{value}")
    text = "\n".join(out) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_dual(args) -> int:
    star, label = _load_star(args)
    config = fatpoints.dual_config(star)
    sys.stdout.write(fatpoints.config_to_text(config))
    return 0


def cmd_reduce(args) -> int:
    star, label = _load_star(args)
    config = fatpoints.dual_config(star)
    mult = [args.m] * len(config.points)
    if args.sequence:
        seq = tuple(int(t) for t in args.sequence.split(","))
    else:
        seq = fatpoints.greedy_sequence(config, mult)
    rv = fatpoints.reduce(config, mult, seq)
    print(f"# star {label}, uniform multiplicity {args.m}")
    print("lines " + " ".join(str(i) for i in rv.line_sequence))
    print("entries " + " ".join(str(e) for e in rv.entries))
    print("residuals " + " ".join(str(m) for m in rv.residual_multiplicities))
    print(f"full {str(fatpoints.is_full(rv)).lower()}")
    if fatpoints.is_full(rv):
        for d in _parse_range(args.d) if args.d else ():
            lo, hi = fatpoints.cht_dim_bounds(rv, d)
            print(f"dim_bounds d={d} {lo} {hi}")
        if all(e > 0 for e in rv.entries):
            lo, hi = fatpoints.alpha_bound(rv)
            print(f"alpha_bounds {lo} {hi}")
    return 0


def cmd_waldschmidt(args) -> int:
    star, label = _load_star(args)
    config = fatpoints.dual_config(star)
    print(f"# star {label}: {len(config.points)} dual points, "
          f"{len(config.lines)} dual lines")
    try:
        lower = fatpoints.waldschmidt_lower(config)
        print(f"waldschmidt_lower {_fmt(lower)}")
        print(f"fullness_degree r={args.r} {fatpoints.fullness_degree(lower, args.r)}")
    except StarSplineError as exc:
        print(f"waldschmidt_lower n/a ({exc})")
    estimates = fatpoints.waldschmidt_estimate(config, args.smax)
    alpha1 = estimates[0].numerator // estimates[0].denominator \
        if estimates[0].denominator == 1 else None
    for s, est in enumerate(estimates, start=1):
        print(f"alpha_ratio s={s} {_fmt(est)}")
    if alpha1 is not None:
        print(f"chudnovsky_lower {_fmt(fatpoints.chudnovsky_lower(alpha1))}")
    return 0


def cmd_check(args) -> int:
    star, label = _load_star(args)
    failures = []
    expectations = {}
    if args.expect:
        with open(args.expect, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.split("#", 1)[0].strip()
                if line:
                    r_, d_, v_ = (int(t) for t in line.split())
                    expectations[(r_, d_)] = v_
    for r in _parse_range(args.r):
        if args.exact:
            test_star = star
        else:
            test_star = starmesh.perturb(star, args.seed,
                                         splinedim.GENDIM_SCALE)
        if star.is_closed:
            if not splinedim.whiteley_check(test_star, r):
                failures.append(f"whiteley r={r}")
                print(f"FAIL whiteley r={r}")
            else:
                print(f"ok whiteley r={r}")
            dg = bounds.d_gamma(len(star.interior_edges), r)
            for d in range(dg + 1, 3 * r + 4):
                report = bounds.homog_lower_bound(test_star, r, d)
                value = splinedim.homog_dim(test_star, r, d)
                if report.best_lower > value:
                    failures.append(f"soundness r={r} d={d}")
                    print(f"FAIL soundness r={r} d={d}: "
                          f"bound {report.best_lower} > dim {value}")
                    break
            else:
                print(f"ok soundness r={r}")
        for (r_, d_), expected in expectations.items():
            if r_ != r:
                continue
            value = splinedim.homog_dim(test_star, r_, d_)
            if value != expected:
                failures.append(f"expect r={r_} d={d_}")
                print(f"FAIL expect r={r_} d={d_}: computed {value}, "
                      f"expected {expected}")
            else:
                print(f"ok expect r={r_} d={d_}")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starspline",
        description="Exact spline dimensions and certified bounds on vertex stars",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_star_source(p):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--catalog", choices=starmesh.CATALOG_NAMES,
                         help="named star from the catalog")
        src.add_argument("--star-file", help="star description file")
        p.add_argument("--star-seed", type=int, default=None,
                       help="perturbation seed applied to the catalog star")
        p.add_argument("--star-scale", type=int, default=1000,
                       help="perturbation denominator scale for --star-seed")

    def add_grid(p):
        p.add_argument("--r", required=True, help="order r or range lo..hi")
        p.add_argument("--d", required=True, help="degree d or range lo..hi")

    def add_gendim(p):
        p.add_argument("--trials", type=int, default=3)
        p.add_argument("--seed", type=int, default=1)
        p.add_argument("--scale", type=int, default=splinedim.GENDIM_SCALE,
                       help="gendim perturbation denominator scale")
        p.add_argument("--exact", action="store_true",
                       help="exact dimension of the star as given (no trials)")
        p.add_argument("--use-distinct", action="store_true",
                       help="build edge profiles from distinct-plane counts")
        p.add_argument("--cache", default=None,
                       help=f"result cache path (or ${CACHE_ENV})")

    p = sub.add_parser("dim", help="bound and dimension report per grid cell")
    add_star_source(p)
    add_grid(p)
    add_gendim(p)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("table", help="CSV table reproduction")
    add_star_source(p)
    add_grid(p)
    add_gendim(p)
    p.add_argument("--mode", choices=("generic", "distinct"), default="generic")
    p.add_argument("--output", default=None, help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("dual", help="dump the dual point/line configuration")
    add_star_source(p)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("reduce", help="reduction vector and certified bounds")
    add_star_source(p)
    p.add_argument("--m", type=int, required=True, help="uniform multiplicity")
    p.add_argument("--sequence", default=None,
                   help="comma-separated line indices (default: greedy)")
    p.add_argument("--d", default=None, help="degree(s) for dimension bounds")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("waldschmidt", help="Waldschmidt bounds and estimates")
    add_star_source(p)
    p.add_argument("--smax", type=int, default=3)
    p.add_argument("--r", type=int, default=1,
                   help="order for the fullness-degree report")
    p.set_defaults(func=cmd_waldschmidt)

    p = sub.add_parser("check", help="threshold and soundness assertions")
    add_star_source(p)
    p.add_argument("--r", required=True, help="order r or range lo..hi")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--exact", action="store_true",
                   help="run the checks on the star as given, unperturbed")
    p.add_argument("--expect", default=None,
                   help="file of 'r d dim' expectations to verify")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (StarSplineError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
