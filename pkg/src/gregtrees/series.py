"""Truncated formal power series over exact rationals.

A ``RatSeries`` holds the coefficients of z^0..z^N for an explicit
truncation order N.  Binary operations truncate to the smaller operand
order; composition-style operations (compose, exp, geometric inverse,
reversion) require the inner series to vanish at 0 and raise ValueError
otherwise.  No floating point anywhere.

The checks at the bottom compare independently computed expansions of the
tree function T (T = z e^T, T(z) = -W(-z)) and its relatives

    T_0 = 1/(1-T)            (bi-rooted trees, up to (1+x)^3)
    T_1 = T                  (rooted labeled trees, sum n^{n-1} z^n/n!)
    T_2 = T - T^2/2          (unrooted labeled trees, sum n^{n-2} z^n/n!)

against the closed forms of their n-th derivatives built from the census
polynomials, and report the first mismatching coefficient as a witness.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .polys import Poly, gen_F, gen_G, gen_H, gen_P
from .report import CheckReport


class RatSeries:
    """Series truncated at an explicit order, coefficients in Q."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int], order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("negative truncation order")
            cs = cs[: order + 1] + [Fraction(0)] * (order + 1 - len(cs))
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs = tuple(cs)

    # ── construction helpers ──────────────────────────────────────────

    @classmethod
    def zero(cls, order: int) -> "RatSeries":
        return cls([0], order)

    @classmethod
    def const(cls, c: Fraction | int, order: int) -> "RatSeries":
        return cls([c], order)

    @classmethod
    def var(cls, order: int) -> "RatSeries":
        """The series z."""
        return cls([0, 1], order)

    # ── basic accessors ───────────────────────────────────────────────

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k]

    def egf_coefficient(self, n: int) -> Fraction:
        """n! times the coefficient of z^n."""
        return self.coeffs[n] * math.factorial(n)

    def truncate(self, order: int) -> "RatSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series from order {self.order} to {order}")
        return RatSeries(self.coeffs[: order + 1])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RatSeries([{', '.join(str(c) for c in self.coeffs)}])"

    # ── ring operations (result order = min of operand orders) ────────

    def _coerce(self, other) -> "RatSeries | None":
        if isinstance(other, RatSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return RatSeries([other], self.order)
        return None

    def __add__(self, other) -> "RatSeries":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return RatSeries([self.coeffs[k] + o.coeffs[k] for k in range(n + 1)])

    __radd__ = __add__

    def __neg__(self) -> "RatSeries":
        return RatSeries([-c for c in self.coeffs])

    def __sub__(self, other) -> "RatSeries":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "RatSeries":
        return (-self) + other

    def __mul__(self, other) -> "RatSeries":
        if isinstance(other, (int, Fraction)):
            return RatSeries([c * other for c in self.coeffs])
        if not isinstance(other, RatSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if a:
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return RatSeries(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RatSeries":
        if k < 0:
            raise ValueError("negative power; use reciprocal() first")
        out = RatSeries.const(1, self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # ── calculus ──────────────────────────────────────────────────────

    def derive(self) -> "RatSeries":
        if self.order == 0:
            raise ValueError("derivative of an order-0 series has no coefficients")
        return RatSeries([k * self.coeffs[k] for k in range(1, self.order + 1)])

    def integrate(self) -> "RatSeries":
        """Antiderivative with constant 0; order grows by one."""
        return RatSeries([Fraction(0)] + [self.coeffs[k] / (k + 1) for k in range(self.order + 1)])

    def nth_derivative(self, n: int) -> "RatSeries":
        if n < 0:
            raise ValueError("negative derivative order")
        if n > self.order:
            raise ValueError(f"derivative order {n} exceeds truncation order {self.order}")
        if n == 0:
            return self
        out = [
            self.coeffs[k + n] * Fraction(math.factorial(k + n), math.factorial(k))
            for k in range(self.order - n + 1)
        ]
        return RatSeries(out)

    # ── composition-style operations ──────────────────────────────────

    def compose(self, inner: "RatSeries") -> "RatSeries":
        """self(inner); requires inner(0) = 0."""
        if inner.coeffs[0] != 0:
            raise ValueError("composition requires the inner series to vanish at 0")
        n = min(self.order, inner.order)
        acc = RatSeries.const(self.coeffs[n] if n <= self.order else 0, n)
        for k in range(n - 1, -1, -1):
            acc = acc * inner.truncate(n) + self.coeffs[k]
        return acc

    def exp(self) -> "RatSeries":
        """exp(self); requires constant term 0."""
        if self.coeffs[0] != 0:
            raise ValueError("exp requires a series vanishing at 0")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        out[0] = Fraction(1)
        for m in range(1, n + 1):
            s = Fraction(0)
            for j in range(1, m + 1):
                if self.coeffs[j]:
                    s += j * self.coeffs[j] * out[m - j]
            out[m] = s / m
        return RatSeries(out)

    def reciprocal(self) -> "RatSeries":
        """1/self; requires a nonzero constant term."""
        if self.coeffs[0] == 0:
            raise ValueError("reciprocal requires a unit constant term")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        out[0] = 1 / self.coeffs[0]
        for m in range(1, n + 1):
            s = Fraction(0)
            for j in range(1, m + 1):
                if self.coeffs[j]:
                    s += self.coeffs[j] * out[m - j]
            out[m] = -s / self.coeffs[0]
        return RatSeries(out)

    def geom_inverse(self) -> "RatSeries":
        """1/(1 - self); requires constant term 0."""
        if self.coeffs[0] != 0:
            raise ValueError("geometric inverse requires a series vanishing at 0")
        return (1 - self).reciprocal()

    # ── serialization ─────────────────────────────────────────────────

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "RatSeries":
        return cls([Fraction(s) for s in data])


# ── the tree-function family ──────────────────────────────────────────────

def series_T(alpha: int, order: int) -> RatSeries:
    """sum_{n>=1} n^{n-alpha} z^n / n! truncated at `order`."""
    coeffs = [Fraction(0)] + [
        Fraction(n) ** (n - alpha) / math.factorial(n) for n in range(1, order + 1)
    ]
    return RatSeries(coeffs)


def series_W(order: int) -> RatSeries:
    """Principal Lambert W branch: sum_{n>=1} (-n)^{n-1} z^n / n!."""
    coeffs = [Fraction(0)] + [
        Fraction((-n) ** (n - 1), math.factorial(n)) for n in range(1, order + 1)
    ]
    return RatSeries(coeffs)


def poly_at_series(p: Poly, g: RatSeries) -> RatSeries:
    """p(g) by Horner; g may have any constant term (p is a polynomial)."""
    acc = RatSeries.zero(g.order)
    for c in reversed(p.coeffs):
        acc = acc * g + c
    return acc


def reversion(f: RatSeries) -> RatSeries:
    """Compositional inverse g with f(g) = z, by series Newton iteration.

    Requires f(0) = 0 and f'(0) != 0.  The result has the same order and
    satisfies f(g) = z exactly to that order.
    """
    if f.coeffs[0] != 0:
        raise ValueError("reversion requires a series vanishing at 0")
    if f.order < 1 or f.coeffs[1] == 0:
        raise ValueError("reversion requires a nonzero linear coefficient")
    n = f.order
    fprime = RatSeries([k * f.coeffs[k] for k in range(1, n + 1)] + [0])
    z = RatSeries.var(n)
    g = RatSeries([0, 1 / f.coeffs[1]], n)
    steps = max(1, n).bit_length() + 1
    for _ in range(steps):
        g = g - (f.compose(g) - z) * fprime.compose(g).reciprocal()
    if f.compose(g) != z:
        raise ArithmeticError("reversion failed to converge")  # unreachable for valid input
    return g


def nth_derivative(f: RatSeries, n: int) -> RatSeries:
    return f.nth_derivative(n)


# ── closed forms of the n-th derivatives ──────────────────────────────────

_FAMILY_ALPHA = {"F": 0, "G": 1, "H": 2}


def rhs_series(family: str, n: int, order: int, poly: Poly | None = None) -> RatSeries:
    """Closed form of the n-th derivative of the family's base series.

    F: e^{nT} (1-T)^{-(n+2)} F_n(T/(1-T))   for T_0 = 1/(1-T)
    G: e^{nT} (1-T)^{-n}     G_n(T/(1-T))   for T_1 = T
    H: e^{nT} (1-T)^{-(n-1)} H_n(T/(1-T))   for T_2 = T - T^2/2
    P: e^{-nW} (1+W)^{-(2n-1)} P_n(W)       for W itself
    """
    if n < 1:
        raise ValueError("derivative index must be >= 1")
    if family == "P":
        if poly is None:
            poly = gen_P(n)[n - 1]
        w = series_W(order)
        inv = (-w).geom_inverse()  # 1/(1+W)
        return (-n * w).exp() * inv ** (2 * n - 1) * poly_at_series(poly, w)
    if family not in _FAMILY_ALPHA:
        raise ValueError(f"unknown family {family!r}")
    if poly is None:
        poly = {"F": gen_F, "G": gen_G, "H": gen_H}[family](n)[n - 1]
    t = series_T(1, order)
    inv = t.geom_inverse()  # 1/(1-T)
    ratio = t * inv  # T/(1-T)
    exponent = {"F": n + 2, "G": n, "H": n - 1}[family]
    return (n * t).exp() * inv ** exponent * poly_at_series(poly, ratio)


def check_def_identity(
    family: str,
    n_max: int,
    order: int,
    polys: Sequence[Poly] | None = None,
) -> CheckReport:
    """Exact comparison of d^n/dz^n of the base series with its closed form.

    `polys` may inject the polynomial sequence (row n at index n-1);
    omitted, the sequence is generated from the recursions.
    """
    if order < n_max + 5:
        raise ValueError(f"order {order} too small for n_max {n_max}; need order >= n_max + 5")
    name = f"def-identity-{family}"
    base = series_W(order) if family == "P" else series_T(_FAMILY_ALPHA[family], order)
    if polys is None:
        polys = {"F": gen_F, "G": gen_G, "H": gen_H, "P": gen_P}[family](n_max)
    for n in range(1, n_max + 1):
        lhs = base.nth_derivative(n)
        rhs = rhs_series(family, n, order, poly=polys[n - 1]).truncate(order - n)
        if lhs != rhs:
            k = next(i for i in range(order - n + 1) if lhs.coeffs[i] != rhs.coeffs[i])
            return CheckReport.fail(
                name,
                f"n={n}: coefficient of z^{k} differs: derivative {lhs.coeffs[k]}, closed form {rhs.coeffs[k]}",
                family=family, n_max=n_max, order=order,
            )
    return CheckReport.ok(name, family=family, n_max=n_max, order=order)


# ── basic identities and the reversion lemma ──────────────────────────────

def check_basic_identities(order: int) -> CheckReport:
    """1 + T_0 = 1/(1-T), T_2' = T/z, T_2 = T - T^2/2, T(z) = -W(-z), exactly.

    The sums behind series_T start at n = 1, so the geometric identity
    carries the explicit constant 1 on the T_0 side.
    """
    t = series_T(1, order)
    t0 = series_T(0, order)
    t2 = series_T(2, order)
    w = series_W(order)
    failures = []
    if t.geom_inverse() != 1 + t0:
        failures.append("1/(1-T) != 1 + T_0")
    t_over_z = RatSeries(t.coeffs[1:])  # T/z, valid since T(0) = 0
    if t2.derive() != t_over_z:
        failures.append("T_2' != T/z")
    if t - t * t * Fraction(1, 2) != t2:
        failures.append("T - T^2/2 != T_2")
    minus_w_minus_z = RatSeries([-c if k % 2 == 0 else c for k, c in enumerate(w.coeffs)])
    if minus_w_minus_z != t:
        failures.append("-W(-z) != T")
    if failures:
        return CheckReport.fail("basic-identities", "; ".join(failures), order=order)
    return CheckReport.ok("basic-identities", order=order)


def check_reversion_lemma(order: int) -> CheckReport:
    """The inverse of T/(1-T) is (z/(1+z)) e^{-z/(1+z)}; the inverse of z e^{-z} is T."""
    t = series_T(1, order)
    z = RatSeries.var(order)
    ratio = t * t.geom_inverse()
    frac = z * (1 + z).reciprocal()  # z/(1+z)
    target = frac * (-frac).exp()
    failures = []
    if reversion(ratio) != target:
        failures.append("reversion(T/(1-T)) != (z/(1+z))e^{-z/(1+z)}")
    if ratio.compose(target) != z:
        failures.append("(T/(1-T)) o ((z/(1+z))e^{-z/(1+z)}) != z")
    if reversion(z * (-z).exp()) != t:
        failures.append("reversion(z e^{-z}) != T")
    if failures:
        return CheckReport.fail("reversion-lemma", "; ".join(failures), order=order)
    return CheckReport.ok("reversion-lemma", order=order)


# ── generating function in the census variable ────────────────────────────

def _shifted_tree_series(s0: Fraction, order: int) -> RatSeries:
    """u-series sigma with T(((u+x)/(1+x)) e^{-x/(1+x)}) = s0 + sigma, s0 = x/(1+x).

    Substituting into T = z e^T and cancelling e^{-x/(1+x)} exactly leaves

        s0 + sigma = (s0 + (1-s0) u) e^sigma,  sigma(0) = 0,

    a purely rational equation solved by series Newton; the derivative has
    unit constant term 1 - s0 != 0 for every x != -1.
    """
    a = RatSeries([s0, 1 - s0], order)
    sigma = RatSeries.zero(order)
    for _ in range(max(1, order).bit_length() + 1):
        e = sigma.exp()
        sigma = sigma - (sigma + s0 - a * e) * (1 - a * e).reciprocal()
    if sigma + s0 != a * sigma.exp():
        raise ArithmeticError("shifted tree series failed to converge")  # unreachable
    return sigma


def check_egf_theorem(
    x_samples: Sequence[Fraction | int],
    n_max: int,
    order: int | None = None,
    polys: Mapping[str, Sequence[Poly]] | None = None,
) -> CheckReport:
    """The census polynomials are the u-Taylor coefficients of the tree series.

    With A(u) = ((u+x)/(1+x)) e^{-x/(1+x)} and S = T(A(u)):

        sum u^n/n! G_n(x) = S                         (G_0 = x/(1+x))
        sum u^n/n! F_n(x) = (1+x)^{-2} / (1 - S)      (F_0 = 1/(1+x))
        sum u^n/n! H_n(x) = (1+x) (S - S^2/2)         (H_0 = x(x+2)/(2(x+1)))

    checked exactly at each sample, n = 0..n_max.
    """
    if order is None:
        order = n_max + 2
    if polys is None:
        polys = {"F": gen_F(n_max), "G": gen_G(n_max), "H": gen_H(n_max)}
    name = "egf-theorem"
    xs = [Fraction(x) for x in x_samples]
    for x in xs:
        if x == -1:
            raise ValueError("x = -1 is outside the domain of the substitution")
        s0 = x / (1 + x)
        s = _shifted_tree_series(s0, order) + s0
        series = {
            "G": s,
            "F": ((1 - s0) ** 2) * (1 - s).reciprocal(),
            "H": (1 + x) * (s - s * s * Fraction(1, 2)),
        }
        constants = {
            "G": x / (1 + x),
            "F": Fraction(1) / (1 + x),
            "H": Fraction(x * (x + 2), 2) / (x + 1),
        }
        for fam in ("F", "G", "H"):
            if series[fam].coeffs[0] != constants[fam]:
                return CheckReport.fail(
                    name, f"family {fam}, x={x}: constant term {series[fam].coeffs[0]} != {constants[fam]}",
                    x_samples=xs, n_max=n_max, order=order,
                )
            for n in range(1, n_max + 1):
                got = series[fam].egf_coefficient(n)
                want = polys[fam][n - 1](x)
                if got != want:
                    return CheckReport.fail(
                        name, f"family {fam}, x={x}, n={n}: series gives {got}, polynomial gives {want}",
                        x_samples=xs, n_max=n_max, order=order,
                    )
    return CheckReport.ok(name, x_samples=xs, n_max=n_max, order=order)


def check_gh_functional(
    x_samples: Sequence[Fraction | int],
    order: int,
    polys: Mapping[str, Sequence[Poly]] | None = None,
) -> CheckReport:
    """Tail generating functions satisfy H~ = G~ - ((1+x)/2) G~^2 at each sample."""
    if polys is None:
        polys = {"G": gen_G(order), "H": gen_H(order)}
    name = "gh-functional"
    xs = [Fraction(x) for x in x_samples]
    for x in xs:
        gt = RatSeries([0] + [polys["G"][n - 1](x) / math.factorial(n) for n in range(1, order + 1)])
        ht = RatSeries([0] + [polys["H"][n - 1](x) / math.factorial(n) for n in range(1, order + 1)])
        want = gt - gt * gt * Fraction(1 + x, 2)
        if ht != want:
            k = next(i for i in range(order + 1) if ht.coeffs[i] != want.coeffs[i])
            return CheckReport.fail(
                name, f"x={x}: coefficient of u^{k}: H side {ht.coeffs[k]}, G side {want.coeffs[k]}",
                x_samples=xs, order=order,
            )
    return CheckReport.ok(name, x_samples=xs, order=order)


def check_imp_census_series(
    censuses: Mapping[int, Sequence[int]],
    rooted: bool,
    order: int,
) -> CheckReport:
    """Resummation of the improper-edge census reproduces derivative series.

    For the census c_j = #{trees of size n with imp = j}:

        e^{nT} (1-T)^{-(n-1)} sum_j c_j (1-T)^{-j}  =  d^n/dz^n T_2   (unrooted census)
        e^{nT} (1-T)^{-n}     sum_j c_j (1-T)^{-j}  =  d^n/dz^n T_1   (rooted census)

    compared exactly to the shared truncation order.
    """
    name = f"imp-census-series-{'rooted' if rooted else 'unrooted'}"
    t = series_T(1, order)
    inv = t.geom_inverse()
    base = series_T(1, order) if rooted else series_T(2, order)
    for n in sorted(censuses):
        counts = censuses[n]
        acc = RatSeries.zero(order)
        for j, c in enumerate(counts):
            if c:
                acc = acc + c * inv ** j
        exponent = n if rooted else n - 1
        display = (n * t).exp() * inv ** exponent * acc
        lhs = base.nth_derivative(n)
        if display.truncate(order - n) != lhs:
            k = next(i for i in range(order - n + 1) if display.coeffs[i] != lhs.coeffs[i])
            return CheckReport.fail(
                name, f"n={n}: coefficient of z^{k}: census side {display.coeffs[k]}, derivative {lhs.coeffs[k]}",
                n_values=sorted(censuses), order=order, rooted=rooted,
            )
    return CheckReport.ok(name, n_values=sorted(censuses), order=order, rooted=rooted)
