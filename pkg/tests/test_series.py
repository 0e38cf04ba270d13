"""Exact power-series arithmetic and the series-level identity checks."""

from fractions import Fraction

import pytest

from gregtrees.polys import Poly, gen_G, gen_H
from gregtrees.series import (
    RatSeries,
    check_basic_identities,
    check_def_identity,
    check_egf_theorem,
    check_gh_functional,
    check_imp_census_series,
    check_reversion_lemma,
    nth_derivative,
    poly_at_series,
    reversion,
    rhs_series,
    series_T,
    series_W,
)
from gregtrees.trees import imp_census

F = Fraction


def test_tree_series_coefficients():
    t = series_T(1, 6)
    assert t.coeffs == (0, 1, 1, F(3, 2), F(8, 3), F(125, 24), F(54, 5))
    t0 = series_T(0, 4)
    assert t0.coeffs == (0, 1, 2, F(9, 2), F(32, 3))
    t2 = series_T(2, 4)
    assert t2.coeffs == (0, 1, F(1, 2), F(1, 2), F(2, 3))
    w = series_W(5)
    assert w.coeffs == (0, 1, -1, F(3, 2), -F(8, 3), F(125, 24))


def test_series_equality_and_construction():
    s = RatSeries([1, 2, 3])
    assert s.order == 2
    assert s.coeff(1) == 2
    assert RatSeries([1, 2, 3], order=4).coeffs == (1, 2, 3, 0, 0)
    assert RatSeries([1, 2, 3], order=1).coeffs == (1, 2)
    assert RatSeries.const(5, 3).coeffs == (5, 0, 0, 0)
    assert RatSeries.var(2).coeffs == (0, 1, 0)
    assert RatSeries.zero(0).coeffs == (0,)


def test_arithmetic_truncates_to_min_order():
    a = RatSeries([1, 1, 1, 1])
    b = RatSeries([1, 2])
    assert (a + b).order == 1
    assert (a * b).coeffs == (1, 3)
    assert (a - b).coeffs == (0, -1)
    assert (2 * a).coeffs == (2, 2, 2, 2)
    assert (a * F(1, 2)).coeff(0) == F(1, 2)


def test_derive_integrate_nth():
    s = RatSeries([5, 1, 3, 7])
    assert s.derive().coeffs == (1, 6, 21)
    assert s.derive().integrate().coeffs == (0, 1, 3, 7)
    assert s.nth_derivative(2).coeffs == (6, 42)
    with pytest.raises(ValueError):
        RatSeries([1]).derive().derive()
    with pytest.raises(ValueError):
        s.nth_derivative(4)
    assert nth_derivative(s, 3) == s.derive().derive().derive()


def test_egf_coefficient():
    t = series_T(1, 8)
    assert [t.egf_coefficient(n) for n in range(1, 9)] == [n ** (n - 1) for n in range(1, 9)]


def test_compose_exp_reciprocal():
    order = 12
    z = RatSeries.var(order)
    e = z.exp()
    assert e.coeff(0) == 1
    assert e.coeff(5) == F(1, 120)
    geom = (1 - z).reciprocal()
    assert geom.coeffs == tuple([1] * (order + 1))
    assert z.geom_inverse() == geom
    # exp(z) o (z + z^2) == exp(z + z^2)
    inner = z + z * z
    assert e.compose(inner) == inner.exp()
    with pytest.raises(ValueError):
        e.compose(RatSeries.const(1, order))  # inner constant term must vanish
    with pytest.raises(ValueError):
        (z + 0).reciprocal()  # constant term must be a unit
    with pytest.raises(ValueError):
        (1 + z).geom_inverse()  # geometric form needs constant 0


def test_poly_at_series():
    order = 8
    t = series_T(1, order)
    p = Poly((2, 0, 3))  # 3x^2 + 2
    assert poly_at_series(p, t) == 3 * t * t + RatSeries.const(2, order)


def test_reversion_against_known_inverse():
    order = 10
    z = RatSeries.var(order)
    f = z * (-z).exp()  # z e^{-z}
    g = reversion(f)
    assert g == series_T(1, order)
    assert f.compose(g) == z
    assert g.compose(f) == z


def test_reversion_lagrange_inversion_oracle():
    """Coefficients of the inverse from the Lagrange formula
    [z^n] g = (1/n) [w^{n-1}] (w/f(w))^n, computed independently."""
    order = 9
    z = RatSeries.var(order)
    f = z + 3 * z * z + RatSeries([0, 0, 0, F(1, 3)], order)
    g = reversion(f)
    # w/f(w) as a series: divide out one factor of w
    base = RatSeries(f.coeffs[1:]).reciprocal()
    for n in range(1, order + 1):
        power = base
        for _ in range(n - 1):
            power = power * base
        assert g.coeff(n) == power.coeff(n - 1) / n


def test_reversion_rejects_bad_input():
    with pytest.raises(ValueError):
        reversion(RatSeries([1, 1]))  # nonzero constant
    with pytest.raises(ValueError):
        reversion(RatSeries([0, 0, 1]))  # vanishing linear term


def test_basic_identities_and_reversion_checks():
    assert check_basic_identities(25).passed
    assert check_reversion_lemma(25).passed


@pytest.mark.parametrize("family", ["F", "G", "H", "P"])
def test_def_identities(family):
    report = check_def_identity(family, 6, 20)
    assert report.passed, report.witness


def test_def_identity_needs_margin():
    with pytest.raises(ValueError):
        check_def_identity("G", 10, 12)


def test_rhs_series_first_derivatives():
    order = 10
    # T' equals the G display at n = 1
    assert nth_derivative(series_T(1, order), 1) == rhs_series("G", 1, order).truncate(order - 1)
    # W' equals the P display at n = 1
    assert nth_derivative(series_W(order), 1) == rhs_series("P", 1, order).truncate(order - 1)


def test_egf_theorem_samples():
    report = check_egf_theorem([0, 1, 2, F(1, 2)], 5)
    assert report.passed, report.witness


def test_egf_theorem_rejects_pole():
    with pytest.raises(ValueError):
        check_egf_theorem([0, -1], 3)


def test_egf_census_totals_at_x_one():
    """At x = 1 the rooted census series counts all rooted trees with
    interchangeable extra vertices: 1, 3, 22, 262, 4336."""
    totals = [sum(p.coeffs) for p in gen_G(5)]
    assert totals == [1, 3, 22, 262, 4336]
    assert totals == [sum(p.coeffs) for p in gen_G(5)]
    report = check_egf_theorem([1], 5)
    assert report.passed, report.witness


def test_gh_functional():
    report = check_gh_functional([0, 1, 2, F(-1, 2)], 10)
    assert report.passed, report.witness


@pytest.mark.parametrize("rooted", [False, True])
def test_imp_census_series(rooted):
    censuses = {n: imp_census(n, rooted) for n in range(1, 5)}
    report = check_imp_census_series(censuses, rooted=rooted, order=10)
    assert report.passed, report.witness


def test_imp_census_series_detects_bad_census():
    censuses = {n: imp_census(n, False) for n in range(1, 4)}
    bad = list(censuses[3])
    bad[0] += 1
    censuses[3] = tuple(bad)
    report = check_imp_census_series(censuses, rooted=False, order=10)
    assert report.passed is False
    assert report.witness


def test_series_json_round_trip():
    t = series_T(1, 6)
    data = t.to_json()
    assert data[3] == "3/2"
    assert RatSeries.from_json(data) == t
    assert RatSeries.from_json(RatSeries([1, F(-2, 7)]).to_json()).coeff(1) == F(-2, 7)
