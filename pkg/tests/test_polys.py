"""Exact checks for the polynomial families and their triangle."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gregtrees.polys import (
    Poly,
    X,
    coefficient_rows,
    double_factorial,
    eval_rational,
    gen_F,
    gen_G,
    gen_H,
    gen_P,
    gen_Q,
    shift,
)

# frozen rows, coefficients lowest degree first
GOLDEN = {
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
GOLDEN_SHIFTED = {
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
GENERATORS = {"F": gen_F, "G": gen_G, "H": gen_H}


@pytest.mark.parametrize("family", ["F", "G", "H"])
def test_golden_rows(family):
    rows = GENERATORS[family](len(GOLDEN[family]))
    assert coefficient_rows(rows) == GOLDEN[family]


@pytest.mark.parametrize("family", ["F", "G", "H"])
def test_golden_rows_shifted(family):
    rows = GENERATORS[family](len(GOLDEN_SHIFTED[family]))
    assert [list(shift(p, -1).coeffs) for p in rows] == GOLDEN_SHIFTED[family]


def test_degrees_and_leading_coefficients():
    n_max = 40
    F, G, H = gen_F(n_max), gen_G(n_max), gen_H(n_max)
    for n in range(1, n_max + 1):
        assert F[n - 1].degree == n - 1
        assert F[n - 1].leading_coefficient == double_factorial(2 * n - 1)
        assert G[n - 1].degree == n - 1
        assert G[n - 1].leading_coefficient == double_factorial(2 * n - 3)
        assert H[n - 1].degree == max(n - 2, 0)
        # (2n-5)!! needs n >= 2; the degree-0 row H_1 = 1 sits outside the law
        assert H[n - 1].leading_coefficient == (1 if n == 1 else double_factorial(2 * n - 5))


def test_constant_terms_count_cayley_trees():
    n_max = 25
    F, G, H = gen_F(n_max), gen_G(n_max), gen_H(n_max)
    for n in range(1, n_max + 1):
        assert eval_rational(F[n - 1], 0) == Fraction(n) ** n
        assert eval_rational(G[n - 1], 0) == Fraction(n) ** (n - 1)
        assert eval_rational(H[n - 1], 0) == Fraction(n) ** (n - 2)


def test_shifted_G_recursion():
    # substituting x-1 into the raising recursion leaves x^2 G~' + n(1+x) G~
    n_max = 40
    G = [shift(p, -1) for p in gen_G(n_max)]
    for n in range(1, n_max):
        assert G[n] == Poly((n, n)) * G[n - 1] + Poly((0, 0, 1)) * G[n - 1].derivative()


def test_interconversion_H_to_G():
    n_max = 40
    G, H = gen_G(n_max), gen_H(n_max)
    for n in range(1, n_max + 1):
        h = H[n - 1]
        assert G[n - 1] == Poly((n, n - 1)) * h + Poly((0, 1, 1)) * h.derivative()


def test_P_small_rows():
    P = gen_P(2)
    assert P[0] == Poly((1,))
    assert P[1] == Poly((-2, -1))


def test_P_sign_and_unimodality():
    for n, p in enumerate(gen_P(50), start=1):
        q = p if n % 2 == 1 else -p
        assert q.degree == n - 1
        cs = q.coeffs
        assert all(c > 0 for c in cs)
        peak = max(range(len(cs)), key=lambda j: cs[j])
        assert all(cs[j] <= cs[j + 1] for j in range(peak))
        assert all(cs[j] >= cs[j + 1] for j in range(peak, len(cs) - 1))


def test_P_G_coefficient_reciprocity():
    G, P = gen_G(30), gen_P(30)
    for n in range(1, 31):
        g = shift(G[n - 1], -1)
        p = shift(P[n - 1], -1)
        if n % 2 == 0:
            p = -p
        assert tuple(reversed(g.coeffs)) == p.coeffs


def test_Q_first_rows():
    t = gen_Q(4)
    assert t[1] == (Poly((1,)),)
    assert t[2] == (Poly((1, 1)), Poly((1,)))
    assert t[3] == (Poly((2, 3, 1)), Poly((4, 3)), Poly((3,)))
    assert t[4] == (Poly((6, 11, 6, 1)), Poly((18, 22, 6)), Poly((25, 15)), Poly((15,)))


def test_Q_triangle_shape_and_indexing():
    t = gen_Q(6)
    assert len(t) == 6
    for n in range(1, 7):
        assert len(t[n]) == n
    with pytest.raises(IndexError):
        t[0]
    with pytest.raises(IndexError):
        t[7]


@pytest.mark.parametrize("x_value, family, row_offset", [(-1, "F", -1), (0, "G", 0), (1, "H", 1)])
def test_Q_specializations(x_value, family, row_offset):
    """Row sums sum_k Q_{n,k}(x0) x^k against the shifted families.

    x0 = -1 gives x*F_{n-1}(x-1) (degenerating to 1 at n = 1), x0 = 0
    gives G_n(x-1), and x0 = 1 gives the H row one index further down,
    H_{n+1}(x-1).
    """
    rows = 12
    t = gen_Q(rows)
    table = GENERATORS[family](rows + 1)
    for n in range(1, rows + 1):
        got = Poly(q(x_value) for q in t[n])
        if family == "F":
            want = Poly((1,)) if n == 1 else X * shift(table[n - 2], -1)
        else:
            want = shift(table[n - 1 + row_offset], -1)
        assert got == want, n


def test_str_rendering():
    G = gen_G(3)
    assert str(G[0]) == "1"
    assert str(G[1]) == "x+2"
    assert str(G[2]) == "3x^2+10x+9"
    assert str(gen_P(2)[1]) == "-x-2"
    assert str(Poly()) == "0"
    assert str(Poly((0, 1))) == "x"
    assert str(Poly((0, -1, 0, 2))) == "2x^3-x"


def test_shift_round_trip_and_evaluation():
    p = gen_F(5)[4]
    assert shift(shift(p, -1), 1) == p
    for a in (-2, -1, 0, 3):
        q = shift(p, a)
        for v in (-3, 0, 2, Fraction(1, 2)):
            assert q(v) == p(v + a)


def test_derivative_and_arithmetic_basics():
    p = Poly((1, 2, 3))  # 3x^2 + 2x + 1
    assert p.derivative() == Poly((2, 6))
    assert Poly((1,)).derivative() == Poly()
    assert p + Poly() == p
    assert p - p == Poly()
    assert not Poly()
    assert (X + 1) ** 2 == Poly((1, 2, 1))
    assert 2 * p == p + p


coeff_lists = st.lists(st.integers(min_value=-50, max_value=50), max_size=6)


@settings(max_examples=150, deadline=None)
@given(coeff_lists, coeff_lists, st.integers(min_value=-5, max_value=5))
def test_evaluation_is_ring_homomorphism(a, b, v):
    p, q = Poly(a), Poly(b)
    assert (p + q)(v) == p(v) + q(v)
    assert (p * q)(v) == p(v) * q(v)
    assert (p - q)(v) == p(v) - q(v)


@settings(max_examples=150, deadline=None)
@given(coeff_lists, st.integers(min_value=-4, max_value=4))
def test_shift_matches_composition(a, c):
    p = Poly(a)
    q = shift(p, c)
    for v in (-2, 0, 1, 3):
        assert q(v) == p(v + c)


@settings(max_examples=100, deadline=None)
@given(coeff_lists)
def test_json_round_trip(a):
    p = Poly(a)
    assert Poly.from_json(p.to_json()) == p
    assert all(isinstance(s, str) for s in p.to_json())


def test_trailing_zeros_are_normalized():
    assert Poly((1, 2, 0, 0)) == Poly((1, 2))
    assert Poly((0,)) == Poly(())
    assert Poly((0, 0)).degree == Poly().degree


def test_double_factorial_values():
    assert [double_factorial(k) for k in (-1, 0, 1, 2, 3, 5, 7)] == [1, 1, 1, 2, 3, 15, 105]
    with pytest.raises(ValueError):
        double_factorial(-2)
