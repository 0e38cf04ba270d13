"""Exact integer polynomials and the census sequences of the tree function.

The tree function T(z) = -W(-z) = sum_{n>=1} n^{n-1} z^n/n! satisfies
T = z e^T.  Its derivatives, and those of 1/(1-T) and of the unrooted-tree
series sum n^{n-2} z^n/n!, are governed by three sequences of integer
polynomials generated by first-order recursions of the common shape

    X_{n+1}(x) = (a_n + b_n x) X_n(x) + (1+x)^2 X_n'(x),      X_1 = 1,

with (a_n, b_n) = (2n+2, n+2) for F, (2n, n) for G and (2n-1, n-1) for H.

* ``G_n`` counts rooted Greg trees with n labeled vertices by number of
  unlabeled vertices (coefficient triangle A048160 in the OEIS).
* ``H_n`` counts unrooted Greg trees the same way (A048159).
* ``F_n`` counts bi-rooted Greg trees after multiplication by (1+x)^3.
* ``P_n`` is the derivative polynomial of the principal Lambert W branch,
  obtained from G_n by a homogenized sign substitution.
* ``Q_{n,k}`` is a Ramanujan-style refinement whose specializations at
  x = -1, 0, 1 recover the shifted F, G and H rows.

Everything is exact: coefficients are Python ints, and evaluation goes
through ``fractions.Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence


class Poly:
    """Dense univariate polynomial with exact integer coefficients.

    Coefficients are stored lowest degree first with no trailing zeros;
    the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree, with the convention deg 0 = -1."""
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == (() if other == 0 else (other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Poly | int") -> "Poly":
        if isinstance(other, int):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: "Poly | int") -> "Poly":
        return self + (-other)

    def __rsub__(self, other: int) -> "Poly":
        return (-self) + other

    def __mul__(self, other: "Poly | int") -> "Poly":
        if isinstance(other, int):
            return Poly(other * c for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def __call__(self, x):
        """Horner evaluation; exact for int/Fraction, works for float/complex."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                var = "x" if k == 1 else f"x^{k}"
                body = var if a == 1 else f"{a}{var}"
            parts.append(sign + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)})"

    def to_json(self) -> list[str]:
        """Coefficients as decimal strings, lowest degree first."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Poly":
        return cls(int(s) for s in data)


X = Poly((0, 1))


@dataclass(frozen=True)
class PolyTriangle:
    """Triangle of polynomials; row n (1-based) has `row_length(n)` entries."""

    rows: tuple[tuple[Poly, ...], ...]

    def __len__(self) -> int:
        return len(self.rows)

    def __getitem__(self, n: int) -> tuple[Poly, ...]:
        """Row for index n, 1-based."""
        if not 1 <= n <= len(self.rows):
            raise IndexError(f"row {n} out of range 1..{len(self.rows)}")
        return self.rows[n - 1]

    def __iter__(self) -> Iterator[tuple[Poly, ...]]:
        return iter(self.rows)


# ── generators ────────────────────────────────────────────────────────────

def _gen_recursive(n_max: int, a0: int, b0: int, step_a: int, step_b: int) -> list[Poly]:
    # X_{n+1} = (a_n + b_n x) X_n + (1+x)^2 X_n', coefficients a_n = a0 + step_a*n etc.
    sq = Poly((1, 2, 1))
    out: list[Poly] = []
    if n_max >= 1:
        out.append(Poly((1,)))
    for n in range(1, n_max):
        lin = Poly((a0 + step_a * n, b0 + step_b * n))
        out.append(lin * out[-1] + sq * out[-1].derivative())
    return out


def gen_F(n_max: int) -> list[Poly]:
    """F_1..F_{n_max}: derivative polynomials of 1/(1-T); deg F_n = n-1."""
    return _gen_recursive(n_max, 2, 2, 2, 1)


def gen_G(n_max: int) -> list[Poly]:
    """G_1..G_{n_max}: rooted Greg tree census polynomials; deg G_n = n-1."""
    return _gen_recursive(n_max, 0, 0, 2, 1)


def gen_H(n_max: int) -> list[Poly]:
    """H_1..H_{n_max}: unrooted Greg tree census polynomials; deg H_n = max(n-2, 0)."""
    return _gen_recursive(n_max, -1, -1, 2, 1)


def gen_P(n_max: int) -> list[Poly]:
    """P_1..P_{n_max}: Lambert W derivative polynomials.

    P_n(x) = (-1-x)^{n-1} G_n(-x/(1+x)), expanded without leaving Z[x] as
    (-1)^{n-1} sum_k g_{n,k} (-x)^k (1+x)^{n-1-k}.  (-1)^{n-1} P_n has
    positive unimodal coefficients and degree n-1.
    """
    out: list[Poly] = []
    one_plus_x = Poly((1, 1))
    for n, g in enumerate(gen_G(n_max), start=1):
        pw = [Poly((1,))]
        for _ in range(n - 1):
            pw.append(pw[-1] * one_plus_x)
        acc = Poly()
        for k, coeff in enumerate(g.coeffs):
            sign = -coeff if k % 2 else coeff
            acc = acc + sign * (X ** k) * pw[n - 1 - k]
        out.append(acc if (n - 1) % 2 == 0 else -acc)
    return out


def gen_Q(n_max: int) -> PolyTriangle:
    """Refinement triangle: Q_{1,0} = 1 and

        Q_{n,k} = (x + n - 1) Q_{n-1,k} + (n + k - 2) Q_{n-1,k-1}

    with out-of-range entries zero; row n holds Q_{n,0}..Q_{n,n-1}.
    """
    if n_max < 1:
        return PolyTriangle(())
    rows: list[tuple[Poly, ...]] = [(Poly((1,)),)]
    for n in range(2, n_max + 1):
        prev = rows[-1]
        row = []
        for k in range(n):
            acc = Poly()
            if k <= n - 2:
                acc = Poly((n - 1, 1)) * prev[k]
            if k >= 1:
                acc = acc + (n + k - 2) * prev[k - 1]
            row.append(acc)
        rows.append(tuple(row))
    return PolyTriangle(tuple(rows))


# ── operations ────────────────────────────────────────────────────────────

def shift(p: Poly, a: int) -> Poly:
    """The polynomial q with q(x) = p(x + a), computed exactly over Z."""
    base = Poly((a, 1))
    acc = Poly()
    for c in reversed(p.coeffs):
        acc = acc * base + c
    return acc


def eval_rational(p: Poly, q: Fraction | int) -> Fraction:
    """Exact evaluation p(q) by Horner."""
    return p(Fraction(q))


def coefficient_rows(polys: Iterable[Poly]) -> list[list[int]]:
    """Coefficient lists, lowest degree first, one row per polynomial."""
    return [list(p.coeffs) for p in polys]


def double_factorial(k: int) -> int:
    """k!! with the usual empty-product conventions ((-1)!! = 0!! = 1)."""
    if k < -1:
        raise ValueError("double factorial of an integer below -1")
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out
