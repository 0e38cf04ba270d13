"""Command line interface.

Subcommands: polys (polynomial tables), trees (enumeration and censuses),
series (exact Taylor coefficients), check (the verification suite), wfun
(Lambert W values and derivatives).  All output is byte-deterministic for
a fixed invocation; --out writes the same bytes to a file instead of
stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace
from fractions import Fraction

from .polys import Poly, gen_F, gen_G, gen_H, gen_P, gen_Q, shift
from .series import series_T, series_W
from .suite import CHECK_NAMES, SuiteConfig, run_suite
from .trees import enumerate_greg, imp_polynomial, u_bound, unl_polynomial
from .wfunc import eval_W, nth_derivative_W

_VERTEX_CAP = 11          # trees work caps at 11 total vertices
_IMP_CAP = 7              # n^(n-1) rooted trees; 8 would be ~2M

_PLAIN_FAMILIES = {"F": gen_F, "G": gen_G, "H": gen_H, "P": gen_P}
_SHIFT_FAMILIES = {"F-shift": gen_F, "G-shift": gen_G, "H-shift": gen_H}
FAMILY_CHOICES = ("F", "G", "H", "P", "Q", "F-shift", "G-shift", "H-shift")

# aliases accepted by `check` beside full names
CHECK_ALIASES = {
    "egf": "egf-theorem",
    "bernstein": "bernstein-signs",
    "golden": "golden-tables",
    "reversion": "reversion-lemma",
}

# which budget --n-max tunes, per check
_N_MAX_FIELD = {
    "egf-theorem": "egf_n_max",
    "bernstein-signs": "bernstein_n_max",
    "def-identity-F": "series_n_max",
    "def-identity-G": "series_n_max",
    "def-identity-H": "series_n_max",
    "def-identity-P": "series_n_max",
    "interconversion": "poly_rows",
    "reciprocity": "reciprocity_rows",
    "shifted-positivity": "positivity_rows",
    "q-specializations": "q_rows",
}


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _bfile(rows: list[list[int]]) -> str:
    lines = []
    index = 0
    for row in rows:
        for value in row:
            index += 1
            lines.append(f"{index} {value}")
    return "\n".join(lines) + "\n"


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


# ── polys ─────────────────────────────────────────────────────────────────

def _run_polys(args, parser) -> int:
    family, n = args.family, args.n
    if n < 1:
        parser.error("N must be >= 1")
    if family == "Q":
        if args.format == "bfile":
            parser.error("the Q triangle holds polynomials, not integers; no b-file form")
        triangle = gen_Q(n)
        if args.format == "text":
            text = "\n".join(" | ".join(str(q) for q in triangle[m]) for m in range(1, n + 1)) + "\n"
        elif args.format == "json":
            text = _json_text([[q.to_json() for q in triangle[m]] for m in range(1, n + 1)])
        else:
            lines = ["n,k,j,coefficient"]
            for m in range(1, n + 1):
                for k, q in enumerate(triangle[m]):
                    lines += [f"{m},{k},{j},{c}" for j, c in enumerate(q.coeffs)]
            text = "\n".join(lines) + "\n"
        _emit(text, args.out)
        return 0
    if family in _PLAIN_FAMILIES:
        rows = _PLAIN_FAMILIES[family](n)
    else:
        rows = [shift(p, -1) for p in _SHIFT_FAMILIES[family](n)]
    if args.format == "text":
        text = "\n".join(str(p) for p in rows) + "\n"
    elif args.format == "json":
        text = _json_text([p.to_json() for p in rows])
    elif args.format == "csv":
        lines = ["n,k,coefficient"]
        for m, p in enumerate(rows, start=1):
            lines += [f"{m},{k},{c}" for k, c in enumerate(p.coeffs)]
        text = "\n".join(lines) + "\n"
    else:
        if family == "P":
            parser.error("P rows have mixed signs; b-file output is for the nonnegative tables")
        text = _bfile([list(p.coeffs) for p in rows])
    _emit(text, args.out)
    return 0


# ── trees ─────────────────────────────────────────────────────────────────

def _census_output(args, parser, counts: list[int], column: str, meta: dict) -> int:
    if args.format == "text":
        text = "\n".join(f"{i} {c}" for i, c in enumerate(counts)) + "\n"
    elif args.format == "json":
        text = _json_text({**meta, "counts": counts})
    elif args.format == "csv":
        text = "\n".join([f"{column},count"] + [f"{i},{c}" for i, c in enumerate(counts)]) + "\n"
    else:
        text = _bfile([counts])
    _emit(text, args.out)
    return 0


def _run_trees(args, parser) -> int:
    n, variant = args.n, args.variant
    if n < 1:
        parser.error("N must be >= 1")
    if args.action == "census-imp":
        if variant not in ("rooted", "unrooted"):
            parser.error("census-imp applies to rooted or unrooted trees")
        if n > _IMP_CAP:
            parser.error(f"census-imp caps at n = {_IMP_CAP}")
        counts = list(imp_polynomial(n, rooted=(variant == "rooted")).coeffs)
        return _census_output(args, parser, counts, "imp",
                              {"n": n, "variant": variant, "statistic": "imp"})
    if n + u_bound(n, variant) > _VERTEX_CAP:
        parser.error(f"{variant} trees at n = {n} can reach "
                     f"{n + u_bound(n, variant)} vertices; the cap is {_VERTEX_CAP}")
    if args.action == "census-unl":
        poly = unl_polynomial(n, variant)
        counts = [0] * (u_bound(n, variant) + 1)
        for u, c in enumerate(poly.coeffs):
            counts[u] = c
        return _census_output(args, parser, counts, "u",
                              {"n": n, "variant": variant, "statistic": "unl"})
    # list
    if args.format == "text":
        text = "\n\n".join(t.to_text() for t in enumerate_greg(n, variant)) + "\n"
    elif args.format == "json":
        text = _json_text([t.to_json_dict() for t in enumerate_greg(n, variant)])
    else:
        parser.error("tree listings come as text or json")
    _emit(text, args.out)
    return 0


# ── series ────────────────────────────────────────────────────────────────

def _run_series(args, parser) -> int:
    order = args.order
    if order < 0:
        parser.error("ORDER must be >= 0")
    which = args.which
    s = series_W(order) if which == "W" else series_T(int(which[1]), order)
    coeffs = s.to_json()
    if args.format == "text":
        text = "\n".join(coeffs) + "\n"
    elif args.format == "json":
        text = _json_text({"series": which, "order": order, "coefficients": coeffs})
    elif args.format == "csv":
        text = "\n".join(["k,coefficient"] + [f"{k},{c}" for k, c in enumerate(coeffs)]) + "\n"
    else:
        parser.error("series coefficients are rationals; no b-file form")
    _emit(text, args.out)
    return 0


# ── check ─────────────────────────────────────────────────────────────────

def _run_check(args, parser) -> int:
    profile = os.environ.get("GREGTREES_PROFILE", "default")
    if profile not in ("default", "quick"):
        parser.error(f"GREGTREES_PROFILE={profile!r}; valid values: default, quick")
    config = SuiteConfig.quick() if (args.quick or profile == "quick") else SuiteConfig()
    if args.corrupt is not None:
        config = replace(config, corrupt=args.corrupt)
    if args.jobs < 1:
        parser.error("--jobs must be >= 1")

    target = args.name
    if target in CHECK_ALIASES:
        target = CHECK_ALIASES[target]
    if target != "all" and target not in CHECK_NAMES:
        parser.error(f"unknown check {target!r}; valid: all, "
                     + ", ".join(CHECK_NAMES) + "; aliases: " + ", ".join(CHECK_ALIASES))

    overrides = {}
    if args.x:
        if target != "egf-theorem":
            parser.error("--x tunes the egf-theorem check")
        try:
            overrides["egf_x_samples"] = tuple(Fraction(v) for v in args.x)
        except (ValueError, ZeroDivisionError):
            parser.error(f"--x values must be rationals, got {args.x}")
    if args.n_max is not None:
        field = _N_MAX_FIELD.get(target)
        if field is None:
            parser.error(f"--n-max does not apply to {target!r}")
        overrides[field] = args.n_max
    if args.samples is not None:
        if target != "halfplane":
            parser.error("--samples tunes the halfplane check")
        overrides["halfplane_samples"] = args.samples
    if args.seed is not None:
        if target != "halfplane":
            parser.error("--seed tunes the halfplane check")
        overrides["halfplane_seed"] = args.seed
    if overrides:
        config = replace(config, **overrides)

    try:
        result = run_suite(config, only=None if target == "all" else [target])
    except ValueError as exc:
        parser.error(str(exc))
    text = result.to_json() if args.format == "json" else result.to_text()
    _emit(text, args.out)
    return 0 if result.ok else 1


# ── wfun ──────────────────────────────────────────────────────────────────

def _parse_z(value: str, parser):
    try:
        return float(value)
    except ValueError:
        pass
    try:
        return complex(value)
    except ValueError:
        parser.error(f"cannot parse z from {value!r}")


def _run_wfun(args, parser) -> int:
    z = _parse_z(args.z, parser)
    if args.n_max < 0:
        parser.error("--n-max must be >= 0")
    try:
        res = eval_W(z)
    except ValueError as exc:
        parser.error(str(exc))
    real_positive = not isinstance(res.z, complex) and res.z > 0
    derivs = []
    if real_positive:
        derivs = [nth_derivative_W(res.z, k) for k in range(1, args.n_max + 1)]
    if args.format == "text":
        lines = [f"W({res.z!r}) = {res.w!r}",
                 f"residual = {res.residual:.3e}",
                 f"iterations = {res.iterations}"]
        lines += [f"d^{k} W = {v!r}" for k, v in enumerate(derivs, start=1)]
        if args.n_max > 0 and not real_positive:
            lines.append("derivatives: printed for real z > 0 only")
        text = "\n".join(lines) + "\n"
    elif args.format == "json":
        def num(c):
            return [c.real, c.imag] if isinstance(c, complex) else c
        text = _json_text({"z": num(res.z), "w": num(res.w),
                           "residual": res.residual, "iterations": res.iterations,
                           "derivatives": derivs})
    else:
        parser.error("wfun output comes as text or json")
    _emit(text, args.out)
    return 0


# ── parser ────────────────────────────────────────────────────────────────

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gregtrees",
        description="Tree-function derivative polynomials, Greg tree enumeration, "
                    "and the identity verification suite.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, formats=("text", "json", "csv", "bfile")):
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--out", metavar="PATH", default=None,
                       help="write output to PATH instead of stdout")

    p = sub.add_parser("polys", help="polynomial family tables, rows 1..N")
    p.add_argument("family", choices=FAMILY_CHOICES)
    p.add_argument("n", type=int, metavar="N")
    add_common(p)
    p.set_defaults(run=_run_polys)

    p = sub.add_parser("trees", help="enumerate Greg trees or print censuses")
    p.add_argument("variant", choices=("unrooted", "rooted", "relaxed", "birooted"))
    p.add_argument("n", type=int, metavar="N")
    p.add_argument("action", choices=("list", "census-unl", "census-imp"))
    add_common(p)
    p.set_defaults(run=_run_trees)

    p = sub.add_parser("series", help="exact Taylor coefficients through ORDER")
    p.add_argument("which", choices=("T0", "T1", "T2", "W"))
    p.add_argument("order", type=int, metavar="ORDER")
    add_common(p)
    p.set_defaults(run=_run_series)

    p = sub.add_parser("check", help="run the verification suite")
    p.add_argument("name", nargs="?", default="all",
                   help="check name or 'all' (default)")
    p.add_argument("--quick", action="store_true",
                   help="reduced budgets (also via GREGTREES_PROFILE=quick)")
    p.add_argument("--corrupt", metavar="FAMILY:ROW", default=None,
                   help="bump one stored polynomial, to see the checks catch it")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker count; checks currently run sequentially")
    p.add_argument("--x", action="append", metavar="RATIONAL",
                   help="sample points for the egf-theorem check")
    p.add_argument("--n-max", type=int, default=None, help="depth override for one check")
    p.add_argument("--samples", type=int, default=None, help="halfplane sample count")
    p.add_argument("--seed", type=int, default=None, help="halfplane sampler seed")
    add_common(p, formats=("text", "json"))
    p.set_defaults(run=_run_check)

    p = sub.add_parser("wfun", help="evaluate W and its derivatives")
    p.add_argument("z", metavar="Z", help="real or complex, e.g. 0.5 or 1+2j")
    p.add_argument("--n-max", type=int, default=4,
                   help="derivatives to print for real z > 0 (default 4)")
    add_common(p, formats=("text", "json"))
    p.set_defaults(run=_run_wfun)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.run(args, parser)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
