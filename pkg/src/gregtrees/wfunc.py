"""Principal-branch Lambert W: evaluation, derivatives, sign checks.

W solves w e^w = z.  The principal branch is real-analytic on
(-1/e, inf), has a branch point at z = -1/e, and the cut (-inf, -1/e].
Evaluation is Halley iteration from a regime-chosen seed; every returned
value satisfies the residual contract |w e^w - z| <= 1e-13 max(1, |z|).

Derivatives come from closed forms in the census polynomials:

    d^n W           = (-1)^{n-1} e^{-nw} (1+w)^{-n}     G_n(-w/(1+w))
    d^n (W^2/2 + W) = (-1)^{n-1} e^{-nw} (1+w)^{-(n-1)} H_n(-w/(1+w))
    d^n (W/(1+W))   = (-1)^{n-1} e^{-nw} (1+w)^{-(n+2)} F_n(-w/(1+w))

so on z > 0 each n-th derivative has sign (-1)^{n-1}: the three
functions are Bernstein functions (derivatives completely monotone).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .polys import Poly, gen_F, gen_G, gen_H
from .report import CheckReport

_INV_E = math.exp(-1.0)

_MAX_ITER = 50
_STEP_TOL = 1e-15
_RESIDUAL_TOL = 1e-13

BERNSTEIN_FAMILIES = ("W", "half-square", "ratio")


@dataclass(frozen=True)
class WEval:
    """One Lambert W evaluation with its convergence record."""

    z: complex | float
    w: complex | float
    residual: float
    iterations: int


def _seed(z: complex | float) -> complex | float:
    is_real = not isinstance(z, complex)
    if abs(z + _INV_E) <= 0.3:
        # branch-point series in p = sqrt(2(ez+1))
        s = 2.0 * (math.e * z + 1.0)
        p = math.sqrt(s) if is_real else cmath.sqrt(s)
        return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)))
    if abs(z) <= 0.8:
        # W(z) = z + O(z^2); the identity seed also keeps the iteration on
        # the principal branch in the annulus past 1/e, where a log seed
        # can defect to an adjacent branch
        return z
    if is_real:
        if z >= math.e:
            return math.log(z) - math.log(math.log(z))
        return math.log1p(z)
    return cmath.log(z)


def eval_W(z: complex | float) -> WEval:
    """Principal-branch W(z) by Halley iteration.

    Real z on the cut (z <= -1/e) raises ValueError.  A result violating
    the residual contract raises ArithmeticError; with the seeds above
    that does not happen on the cut-free plane.
    """
    if isinstance(z, complex) and z.imag == 0.0:
        z = z.real
    if not isinstance(z, complex):
        z = float(z)
        if z <= -_INV_E:
            raise ValueError(f"z={z!r} lies on the branch cut (-inf, -1/e]")
    if z == 0:
        return WEval(z=z, w=0.0, residual=0.0, iterations=0)
    exp = cmath.exp if isinstance(z, complex) else math.exp
    w = _seed(z)
    iterations = 0
    for iterations in range(1, _MAX_ITER + 1):
        ew = exp(w)
        f = w * ew - z
        w1 = w + 1.0
        if w1 == 0:
            w = w + 1e-6
            continue
        dw = f / (ew * w1 - (w + 2.0) * f / (2.0 * w1))
        w = w - dw
        if abs(dw) <= _STEP_TOL * (1.0 + abs(w)):
            break
    residual = abs(w * exp(w) - z)
    if residual > _RESIDUAL_TOL * max(1.0, abs(z)):
        raise ArithmeticError(f"W({z!r}) did not converge: residual {residual:.3e}")
    return WEval(z=z, w=w, residual=residual, iterations=iterations)


@lru_cache(maxsize=None)
def _family_rows(n_max: int) -> dict[str, list[Poly]]:
    return {"W": gen_G(n_max), "half-square": gen_H(n_max), "ratio": gen_F(n_max)}


def family_derivative(family: str, z: float, n: int) -> float:
    """n-th derivative at real z > -1/e of W, W^2/2 + W, or W/(1+W)."""
    if family not in BERNSTEIN_FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if n < 1:
        raise ValueError("derivative index must be >= 1")
    w = eval_W(float(z)).w
    x = -w / (1.0 + w)
    rows = _family_rows(n)
    poly = rows[family][n - 1]
    exponent = {"W": n, "half-square": n - 1, "ratio": n + 2}[family]
    value = poly(x) * math.exp(-n * w) / (1.0 + w) ** exponent
    return value if n % 2 == 1 else -value


def nth_derivative_W(z: float, n: int) -> float:
    """d^n W / dz^n at real z > -1/e."""
    return family_derivative("W", z, n)


# order-4 central stencils: offset -> coefficient, antisymmetric for odd n
_FD_STENCILS: dict[int, tuple[tuple[int, float], ...]] = {
    1: ((1, 2.0 / 3.0), (2, -1.0 / 12.0)),
    2: ((0, -5.0 / 2.0), (1, 4.0 / 3.0), (2, -1.0 / 12.0)),
    3: ((1, -13.0 / 8.0), (2, 1.0), (3, -1.0 / 8.0)),
    4: ((0, 28.0 / 3.0), (1, -13.0 / 2.0), (2, 2.0), (3, -1.0 / 6.0)),
}

_FD_STEP_BASE = {1: 1e-3, 2: 1e-3, 3: 2e-3, 4: 5e-3}


def finite_difference_W(z: float, n: int, h: float | None = None) -> float:
    """Order-4 central finite difference for d^n W, n <= 4.  Independent
    of the closed forms; used to cross-check them.

    The default step scales with 1 + z: the high derivatives entering the
    truncation error shrink like powers of 1/z, so a wider stencil at
    large z trades no accuracy there while taming roundoff in the tiny
    derivative values.
    """
    if n not in _FD_STENCILS:
        raise ValueError("stencils cover n = 1..4")
    if h is None:
        h = _FD_STEP_BASE[n] * (1.0 + abs(z))
    total = 0.0
    for offset, c in _FD_STENCILS[n]:
        if offset == 0:
            total += c * eval_W(z).w
        else:
            right = eval_W(z + offset * h).w
            left = eval_W(z - offset * h).w
            total += c * (right + left) if n % 2 == 0 else c * (right - left)
    return total / h**n


# ── checks ────────────────────────────────────────────────────────────────

def check_bernstein(points: Sequence[float], n_max: int) -> CheckReport:
    """Signs (-1)^{n-1} of the derivatives of all three families on z > 0."""
    name = "bernstein-signs"
    params = {"points": list(points), "n_max": n_max, "families": list(BERNSTEIN_FAMILIES)}
    if any(p <= 0 for p in points):
        raise ValueError("sign checks need z > 0")
    checked = 0
    for family in BERNSTEIN_FAMILIES:
        for z in points:
            for n in range(1, n_max + 1):
                value = family_derivative(family, float(z), n)
                good = value > 0.0 if n % 2 == 1 else value < 0.0
                if not good:
                    return CheckReport.fail(
                        name,
                        f"{family}: d^{n} at z={z} is {value!r}, "
                        f"expected sign {'(+)' if n % 2 == 1 else '(-)'}",
                        **params)
                checked += 1
    return CheckReport.ok(name, evaluations=checked, **params)


# SplitMix64: counter-based, so sample i is reproducible in isolation
_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _mix64(x: int) -> int:
    x &= _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def _unit(seed: int, counter: int) -> float:
    """Strictly interior uniform on (0, 1)."""
    h = _mix64((seed + counter * _GAMMA) & _MASK64)
    return (h + 0.5) / 2.0**64


def halfplane_sample(seed: int, i: int) -> complex:
    """Sample i of the check grid: log-uniform modulus in [1e-3, 1e3],
    uniform argument in (0, pi)."""
    r = 10.0 ** (-3.0 + 6.0 * _unit(seed, 2 * i))
    theta = math.pi * _unit(seed, 2 * i + 1)
    return complex(r * math.cos(theta), r * math.sin(theta))


def check_halfplane(samples: int, seed: int) -> CheckReport:
    """W maps the open upper half-plane into itself: Im W(z) > 0 for
    Im z > 0 (checked as > 1e-12 on the sample grid)."""
    name = "halfplane"
    passed = 0
    for i in range(samples):
        z = halfplane_sample(seed, i)
        w = eval_W(z).w
        if w.imag <= 1e-12:
            return CheckReport.fail(name, f"sample {i}: z={z!r}, Im W = {w.imag!r}",
                                    samples=samples, seed=seed, passed_samples=passed)
        passed += 1
    return CheckReport.ok(name, samples=samples, seed=seed, passed_samples=passed)
