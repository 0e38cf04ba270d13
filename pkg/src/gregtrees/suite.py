"""The verification suite: every identity the library exposes, as checks.

``run_suite`` executes a fixed list of named checks and returns a
``SuiteResult`` whose JSON and text renderings are byte-deterministic for
a given configuration.  Budgets live in ``SuiteConfig``; the ``quick``
profile trims them for smoke runs.  A check reads the configuration and
the shared polynomial bundle, nothing else, so checks cannot mask each
other's failures.

``SuiteConfig.corrupt`` ("G:3" bumps the constant term of the stored G_3)
exists to demonstrate sensitivity: a corrupted bundle must trip every
check that consumes the corrupted row and no check that does not.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, fields, replace
from fractions import Fraction
from typing import Callable, Sequence

from . import series as _series
from . import trees as _trees
from . import wfunc as _wfunc
from .polys import Poly, gen_F, gen_G, gen_H, gen_P, gen_Q, shift
from .report import CheckReport, jsonable

X = Poly((0, 1))
ONE_PLUS_X = Poly((1, 1))

# frozen reference rows, coefficients lowest degree first
_GOLDEN: dict[str, list[list[int]]] = {
    "F": [[1], [4, 3], [27, 40, 15], [256, 565, 420, 105],
          [3125, 9156, 10150, 5040, 945],
          [46656, 170359, 250768, 185850, 69300, 10395]],
    "G": [[1], [2, 1], [9, 10, 3], [64, 113, 70, 15],
          [625, 1526, 1450, 630, 105],
          [7776, 24337, 31346, 20650, 6930, 945]],
    "H": [[1], [1], [3, 1], [16, 13, 3], [125, 171, 85, 15],
          [1296, 2551, 2005, 735, 105],
          [16807, 43653, 47586, 26950, 7875, 945]],
}
_GOLDEN_SHIFT: dict[str, list[list[int]]] = {
    "F": [[1], [1, 3], [2, 10, 15], [6, 40, 105, 105],
          [24, 196, 700, 1260, 945],
          [120, 1148, 5068, 12600, 17325, 10395]],
    "G": [[1], [1, 1], [2, 4, 3], [6, 18, 25, 15],
          [24, 96, 190, 210, 105],
          [120, 600, 1526, 2380, 2205, 945]],
    "H": [[1], [1], [2, 1], [6, 7, 3], [24, 46, 40, 15],
          [120, 326, 430, 315, 105],
          [720, 2556, 4536, 4900, 3150, 945]],
}


@dataclass(frozen=True)
class SuiteConfig:
    """Budgets for one suite run.  A budget of zero skips its check."""

    poly_rows: int = 40                 # recursion-level polynomial identities
    positivity_rows: int = 50
    reciprocity_rows: int = 30
    q_rows: int = 12
    series_n_max: int = 6               # derivative identities, exact series
    series_order: int = 20
    egf_n_max: int = 6
    egf_x_samples: tuple = (0, 1, 2, Fraction(1, 2), Fraction(-1, 2))
    gh_order: int = 10
    census_n_max: int = 5               # unrooted / rooted / relaxed enumerations
    census_birooted_n_max: int = 3
    imp_rows: int = 7
    restriction_n_max: int = 3
    restriction_extra: int = 3
    beta_depth: int = 6                 # improper-edge census vs derivative series
    beta_order: int = 12
    bernstein_points: tuple = (0.1, 1.0, 10.0)
    bernstein_n_max: int = 15
    halfplane_samples: int = 1000
    halfplane_seed: int = 42
    corrupt: str | None = None          # "G:3" bumps the stored G_3 by +1

    @classmethod
    def quick(cls) -> "SuiteConfig":
        return cls(poly_rows=12, positivity_rows=15, reciprocity_rows=10, q_rows=8,
                   series_n_max=4, series_order=12, egf_n_max=4,
                   egf_x_samples=(0, 1), gh_order=6,
                   census_n_max=4, census_birooted_n_max=2, imp_rows=5,
                   restriction_n_max=2, restriction_extra=2,
                   beta_depth=4, beta_order=10,
                   bernstein_n_max=8, halfplane_samples=200)

    def budget_dict(self) -> dict:
        return {f.name: jsonable(getattr(self, f.name)) for f in fields(self)}


@dataclass
class SuiteResult:
    reports: list[CheckReport]
    budget: dict

    @property
    def counts(self) -> dict[str, int]:
        passed = sum(1 for r in self.reports if r.passed is True)
        failed = sum(1 for r in self.reports if r.passed is False)
        skipped = sum(1 for r in self.reports if r.skipped)
        return {"pass": passed, "fail": failed, "skip": skipped,
                "total": len(self.reports)}

    @property
    def ok(self) -> bool:
        return not any(r.passed is False for r in self.reports)

    def failed_names(self) -> list[str]:
        return [r.name for r in self.reports if r.passed is False]

    def to_json_dict(self) -> dict:
        return {"checks": [r.to_json() for r in self.reports],
                "summary": self.counts, "budget": self.budget}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        lines = []
        for r in self.reports:
            if r.skipped:
                lines.append(f"SKIP {r.name}")
            elif r.passed:
                extra = ""
                if "passed_samples" in r.params:
                    extra = f" {r.params['passed_samples']}/{r.params['samples']}"
                lines.append(f"PASS {r.name}{extra}")
            else:
                lines.append(f"FAIL {r.name}: {r.witness}")
        c = self.counts
        lines.append(f"{c['pass']} passed, {c['fail']} failed, {c['skip']} skipped")
        return "\n".join(lines) + "\n"


# ── polynomial bundle ─────────────────────────────────────────────────────

def _parse_corrupt(spec: str) -> tuple[str, int]:
    family, _, row = spec.partition(":")
    if family not in ("F", "G", "H", "P") or not row.isdigit() or int(row) < 1:
        raise ValueError(f"corrupt spec {spec!r}; want FAMILY:ROW with family F, G, H or P")
    return family, int(row)


def _make_bundle(config: SuiteConfig) -> dict[str, list[Poly]]:
    rows = max(config.poly_rows, config.positivity_rows, config.reciprocity_rows,
               config.q_rows + 1, config.imp_rows, config.egf_n_max,
               config.series_n_max, config.gh_order, config.census_n_max,
               config.census_birooted_n_max, 7)
    bundle = {"F": gen_F(rows), "G": gen_G(rows), "H": gen_H(rows), "P": gen_P(rows)}
    if config.corrupt is not None:
        family, row = _parse_corrupt(config.corrupt)
        if row > rows:
            raise ValueError(f"corrupt row {row} beyond generated {rows}")
        bundle[family][row - 1] = bundle[family][row - 1] + Poly((1,))
    return bundle


# ── individual checks ─────────────────────────────────────────────────────

def _check_golden(bundle) -> CheckReport:
    name = "golden-tables"
    for family, table in _GOLDEN.items():
        for i, coeffs in enumerate(table):
            got = bundle[family][i]
            if list(got.coeffs) != coeffs:
                return CheckReport.fail(name, f"{family}_{i + 1} = {got}", family=family, row=i + 1)
    for family, table in _GOLDEN_SHIFT.items():
        for i, coeffs in enumerate(table):
            got = shift(bundle[family][i], -1)
            if list(got.coeffs) != coeffs:
                return CheckReport.fail(name, f"{family}_{i + 1}(x-1) = {got}",
                                        family=family, row=i + 1, shifted=True)
    return CheckReport.ok(name, rows={f: len(t) for f, t in _GOLDEN.items()})


def _check_positivity(bundle, rows: int) -> CheckReport:
    name = "shifted-positivity"
    for family in ("F", "G", "H"):
        for i in range(rows):
            p = shift(bundle[family][i], -1)
            if any(c < 0 for c in p.coeffs):
                return CheckReport.fail(name, f"{family}_{i + 1}(x-1) = {p}",
                                        family=family, row=i + 1)
    for i in range(rows):
        q = bundle["P"][i] if i % 2 == 0 else -bundle["P"][i]
        cs = q.coeffs
        if any(c <= 0 for c in cs):
            return CheckReport.fail(name, f"(-1)^{i} P_{i + 1} = {q}", family="P", row=i + 1)
        peak = max(range(len(cs)), key=lambda j: cs[j])
        rising = all(cs[j] <= cs[j + 1] for j in range(peak))
        falling = all(cs[j] >= cs[j + 1] for j in range(peak, len(cs) - 1))
        if not (rising and falling):
            return CheckReport.fail(name, f"(-1)^{i} P_{i + 1} = {q} is not unimodal",
                                    family="P", row=i + 1)
    return CheckReport.ok(name, rows=rows)


def _check_interconversion(bundle, rows: int) -> CheckReport:
    name = "interconversion"
    for n in range(1, rows + 1):
        h = bundle["H"][n - 1]
        built = Poly((n, n - 1)) * h + Poly((0, 1, 1)) * h.derivative()
        if built != bundle["G"][n - 1]:
            return CheckReport.fail(name, f"n={n}: (n+(n-1)x) H_n + (x+x^2) H_n' = {built}", n=n)
    return CheckReport.ok(name, rows=rows)


def _check_reciprocity(bundle, rows: int) -> CheckReport:
    name = "reciprocity"
    for n in range(1, rows + 1):
        g = shift(bundle["G"][n - 1], -1)
        p = shift(bundle["P"][n - 1], -1)
        if n % 2 == 0:
            p = -p
        if tuple(reversed(g.coeffs)) != p.coeffs:
            return CheckReport.fail(name, f"n={n}: reversed G_n(x-1) != (-1)^(n-1) P_n(x-1)", n=n)
    return CheckReport.ok(name, rows=rows)


def _check_q_specializations(bundle, rows: int) -> CheckReport:
    """Row sums of the Q triangle at x = -1, 0, 1 are shifted F, G, H rows.

    The x = 1 line lands one H row further down: sum_k Q_{n,k}(1) x^k is
    H_{n+1}(x-1), so the H comparison carries offset 1.
    """
    name = "q-specializations"
    triangle = gen_Q(rows)
    for n in range(1, rows + 1):
        row = triangle[n]
        for value, family, offset in ((-1, "F", -1), (0, "G", 0), (1, "H", 1)):
            got = Poly(q(value) for q in row)
            if family == "F":
                want = Poly((1,)) if n == 1 else X * shift(bundle["F"][n - 2], -1)
            else:
                want = shift(bundle[family][n - 1 + offset], -1)
            if got != want:
                return CheckReport.fail(
                    name, f"n={n}, x={value}: row evaluates to {got}, want {want}",
                    n=n, x=value, family=family)
    return CheckReport.ok(name, rows=rows, h_row_offset=1)


def _check_census_unl(bundle, variant: str, n_max: int) -> CheckReport:
    name = f"census-unl-{variant}"
    expect: Callable[[int], Poly] = {
        "unrooted": lambda n: bundle["H"][n - 1],
        "rooted": lambda n: bundle["G"][n - 1],
        "relaxed": lambda n: ONE_PLUS_X * bundle["G"][n - 1],
        "birooted": lambda n: ONE_PLUS_X**3 * bundle["F"][n - 1],
    }[variant]
    for n in range(1, n_max + 1):
        got = _trees.unl_polynomial(n, variant)
        if got != expect(n):
            return CheckReport.fail(name, f"n={n}: census {got}, expected {expect(n)}",
                                    n=n, variant=variant)
    return CheckReport.ok(name, n_max=n_max, variant=variant)


def _check_census_imp(bundle, rooted: bool, rows: int) -> CheckReport:
    name = f"census-imp-{'rooted' if rooted else 'unrooted'}"
    family = "G" if rooted else "H"
    for n in range(1, rows + 1):
        got = _trees.imp_polynomial(n, rooted)
        want = shift(bundle[family][n - 1], -1)
        if got != want:
            return CheckReport.fail(name, f"n={n}: imp census {got}, expected {want}",
                                    n=n, rooted=rooted)
    return CheckReport.ok(name, rows=rows, rooted=rooted)


def _restriction_expected(n: int, u: int, rooted: bool, m: int) -> int:
    """Series prediction for the fiber count over a census class."""
    order = m - n + 1
    t = _series.series_T(1, order)
    inv = t.geom_inverse()
    base = (n * t).exp() * inv ** (n - 1 + (1 if rooted else 0)) * (t * inv) ** u
    value = base.egf_coefficient(m - n)
    assert value.denominator == 1
    return int(value)


def _check_restriction(rooted: bool, n_max: int, extra: int) -> CheckReport:
    name = f"restriction-fiber-{'rooted' if rooted else 'unrooted'}"
    variant = "rooted" if rooted else "unrooted"
    trees_checked = 0
    for n in range(1, n_max + 1):
        for t in _trees.enumerate_greg(n, variant):
            census = _trees.restriction_census(t, n + extra)
            for j, m in enumerate(range(n, n + extra + 1)):
                if m == n:
                    want = 1 if t.u == 0 else 0
                else:
                    want = _restriction_expected(n, t.u, rooted, m)
                if census[j] != want:
                    return CheckReport.fail(
                        name, f"tree {t}: {census[j]} preimages at m={m}, series expects {want}",
                        n=n, m=m)
            trees_checked += 1
    return CheckReport.ok(name, n_max=n_max, extra=extra, trees=trees_checked)


def _check_imp_series(rooted: bool, depth: int, order: int) -> CheckReport:
    censuses = {n: _trees.imp_census(n, rooted) for n in range(1, depth + 1)}
    return _series.check_imp_census_series(censuses, rooted=rooted, order=order)


# ── runner ────────────────────────────────────────────────────────────────

CHECK_NAMES = (
    "golden-tables", "shifted-positivity", "interconversion", "reciprocity",
    "q-specializations",
    "def-identity-F", "def-identity-G", "def-identity-H", "def-identity-P",
    "basic-identities", "reversion-lemma", "egf-theorem", "gh-functional",
    "census-unl-unrooted", "census-unl-rooted", "census-unl-relaxed",
    "census-unl-birooted", "census-imp-rooted", "census-imp-unrooted",
    "restriction-fiber-unrooted", "restriction-fiber-rooted",
    "imp-census-series-unrooted", "imp-census-series-rooted",
    "bernstein-signs", "halfplane",
)


def run_suite(config: SuiteConfig | None = None,
              only: Sequence[str] | None = None) -> SuiteResult:
    """Run the checks in declaration order.

    `only` restricts execution to the named checks; the rest appear in the
    result as skipped, so the report shape does not depend on the filter.
    """
    config = config or SuiteConfig()
    if only is not None:
        unknown = sorted(set(only) - set(CHECK_NAMES))
        if unknown:
            raise ValueError(f"unknown checks {unknown}; valid names: {', '.join(CHECK_NAMES)}")
    bundle = _make_bundle(config)
    c = config

    table: dict[str, tuple[int, Callable[[], CheckReport]]] = {
        "golden-tables": (1, lambda: _check_golden(bundle)),
        "shifted-positivity": (c.positivity_rows, lambda: _check_positivity(bundle, c.positivity_rows)),
        "interconversion": (c.poly_rows, lambda: _check_interconversion(bundle, c.poly_rows)),
        "reciprocity": (c.reciprocity_rows, lambda: _check_reciprocity(bundle, c.reciprocity_rows)),
        "q-specializations": (c.q_rows, lambda: _check_q_specializations(bundle, c.q_rows)),
        "def-identity-F": (c.series_n_max, lambda: _series.check_def_identity(
            "F", c.series_n_max, c.series_order, polys=bundle["F"])),
        "def-identity-G": (c.series_n_max, lambda: _series.check_def_identity(
            "G", c.series_n_max, c.series_order, polys=bundle["G"])),
        "def-identity-H": (c.series_n_max, lambda: _series.check_def_identity(
            "H", c.series_n_max, c.series_order, polys=bundle["H"])),
        "def-identity-P": (c.series_n_max, lambda: _series.check_def_identity(
            "P", c.series_n_max, c.series_order, polys=bundle["P"])),
        "basic-identities": (c.series_order, lambda: _series.check_basic_identities(c.series_order)),
        "reversion-lemma": (c.series_order, lambda: _series.check_reversion_lemma(c.series_order)),
        "egf-theorem": (c.egf_n_max, lambda: _series.check_egf_theorem(
            c.egf_x_samples, c.egf_n_max, polys=bundle)),
        "gh-functional": (c.gh_order, lambda: _series.check_gh_functional(
            c.egf_x_samples, c.gh_order, polys=bundle)),
        "census-unl-unrooted": (c.census_n_max, lambda: _check_census_unl(bundle, "unrooted", c.census_n_max)),
        "census-unl-rooted": (c.census_n_max, lambda: _check_census_unl(bundle, "rooted", c.census_n_max)),
        "census-unl-relaxed": (c.census_n_max, lambda: _check_census_unl(bundle, "relaxed", c.census_n_max)),
        "census-unl-birooted": (c.census_birooted_n_max, lambda: _check_census_unl(
            bundle, "birooted", c.census_birooted_n_max)),
        "census-imp-rooted": (c.imp_rows, lambda: _check_census_imp(bundle, True, c.imp_rows)),
        "census-imp-unrooted": (c.imp_rows, lambda: _check_census_imp(bundle, False, c.imp_rows)),
        "restriction-fiber-unrooted": (c.restriction_n_max, lambda: _check_restriction(
            False, c.restriction_n_max, c.restriction_extra)),
        "restriction-fiber-rooted": (c.restriction_n_max, lambda: _check_restriction(
            True, c.restriction_n_max, c.restriction_extra)),
        "imp-census-series-unrooted": (c.beta_depth, lambda: _check_imp_series(
            False, c.beta_depth, c.beta_order)),
        "imp-census-series-rooted": (c.beta_depth, lambda: _check_imp_series(
            True, c.beta_depth, c.beta_order)),
        "bernstein-signs": (c.bernstein_n_max, lambda: _wfunc.check_bernstein(
            c.bernstein_points, c.bernstein_n_max)),
        "halfplane": (c.halfplane_samples, lambda: _wfunc.check_halfplane(
            c.halfplane_samples, c.halfplane_seed)),
    }
    assert tuple(table) == CHECK_NAMES

    reports = []
    for check_name in CHECK_NAMES:
        budget, runner = table[check_name]
        if budget <= 0 or (only is not None and check_name not in only):
            reports.append(CheckReport.skip(check_name))
        else:
            reports.append(runner())
    return SuiteResult(reports=reports, budget=config.budget_dict())
