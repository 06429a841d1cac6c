"""Exact algebra on q(r) = r**gamma * exp(-beta*r) * sum_i a_i r**i.

Every radial amplitude, derivative, product and integrand of the 2-D
Coulomb problem stays inside this family, so integrals reduce to sums of
Gamma functions and the radial equations can be checked coefficient by
coefficient instead of on a grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DivergentIntegral, DomainError, IncompatibleBeta, NonIntegerGammaGap

# power exponents closer than this to an integer gap are treated as aligned
GAMMA_GAP_TOL = 1e-9
# decay rates are compared with this relative tolerance
BETA_RTOL = 1e-14
# coefficient comparisons: relative to the largest input coefficient
COEFF_RTOL = 1e-12


def _trim(coeffs: Iterable[float]) -> tuple[float, ...]:
    out = [float(a) for a in coeffs]
    while out and out[-1] == 0.0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class PolyExp:
    """r**gamma_exp * exp(-beta*r) * (coeffs[0] + coeffs[1]*r + ...).

    Trailing zero coefficients are dropped, so the zero function has
    ``coeffs == ()``.  ``beta`` must be positive.
    """

    gamma_exp: float
    beta: float
    coeffs: tuple[float, ...] = field(default=())

    def __post_init__(self) -> None:
        if not self.beta > 0:
            raise ValueError(f"beta must be positive, got {self.beta!r}")
        object.__setattr__(self, "gamma_exp", float(self.gamma_exp))
        object.__setattr__(self, "beta", float(self.beta))
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @property
    def degree(self) -> int:
        """Polynomial degree; -1 for the zero function."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def scale(self) -> float:
        """Largest absolute coefficient."""
        return max((abs(a) for a in self.coeffs), default=0.0)

    def __call__(self, r: float) -> float:
        return evaluate(self, r)

    def __add__(self, other: "PolyExp") -> "PolyExp":
        return linear_combine([(1.0, self), (1.0, other)])

    def __sub__(self, other: "PolyExp") -> "PolyExp":
        return linear_combine([(1.0, self), (-1.0, other)])

    def __neg__(self) -> "PolyExp":
        return PolyExp(self.gamma_exp, self.beta, [-a for a in self.coeffs])

    def __mul__(self, other: "float | PolyExp") -> "PolyExp":
        if isinstance(other, PolyExp):
            return product(self, other)
        return PolyExp(self.gamma_exp, self.beta, [other * a for a in self.coeffs])

    __rmul__ = __mul__


def derivative(p: PolyExp) -> PolyExp:
    """Exact d/dr.

    The result carries ``gamma_exp - 1`` and the same ``beta``, with
    coefficients c_i = (i + gamma) a_i - beta a_{i-1}.  Leading zeros are
    kept (d/dr e^{-r} comes back as r**-1 e^{-r} (0 - r)).
    """
    a = p.coeffs
    if not a:
        return PolyExp(p.gamma_exp - 1.0, p.beta)
    out = []
    for i in range(len(a) + 1):
        ci = 0.0
        if i < len(a):
            ci += (i + p.gamma_exp) * a[i]
        if i >= 1:
            ci -= p.beta * a[i - 1]
        out.append(ci)
    return PolyExp(p.gamma_exp - 1.0, p.beta, out)


def mul_power(p: PolyExp, k: float) -> PolyExp:
    """Multiply by r**k.  Only the power exponent moves; k may be negative or fractional."""
    return PolyExp(p.gamma_exp + k, p.beta, p.coeffs)


def _same_beta(b1: float, b2: float) -> bool:
    return b1 == b2 or math.isclose(b1, b2, rel_tol=BETA_RTOL, abs_tol=0.0)


def linear_combine(terms: Sequence[tuple[float, PolyExp]]) -> PolyExp:
    """Exact sum of ``scalar * PolyExp`` terms.

    Terms must share ``beta``; their power exponents may differ by
    integers and are aligned to the smallest one by shifting coefficients.
    """
    if not terms:
        raise ValueError("linear_combine needs at least one term")
    beta = terms[0][1].beta
    g0 = min(p.gamma_exp for _, p in terms)
    shifts = []
    for _, p in terms:
        if not _same_beta(p.beta, beta):
            raise IncompatibleBeta(f"beta {p.beta!r} != {beta!r}")
        gap = p.gamma_exp - g0
        k = round(gap)
        if abs(gap - k) > GAMMA_GAP_TOL:
            raise NonIntegerGammaGap(f"exponent gap {gap!r} is not an integer")
        shifts.append(k)
    size = max(k + len(p.coeffs) for k, (_, p) in zip(shifts, terms))
    columns: list[list[float]] = [[] for _ in range(size)]
    for k, (s, p) in zip(shifts, terms):
        for i, a in enumerate(p.coeffs):
            columns[i + k].append(s * a)
    return PolyExp(g0, beta, [math.fsum(col) for col in columns])


def product(p: PolyExp, q: PolyExp) -> PolyExp:
    """Pointwise product: exponents add, decay rates add, coefficients convolve."""
    a, b = p.coeffs, q.coeffs
    out = []
    for k in range(len(a) + len(b) - 1):
        lo, hi = max(0, k - len(b) + 1), min(k, len(a) - 1)
        out.append(math.fsum(a[i] * b[k - i] for i in range(lo, hi + 1)))
    return PolyExp(p.gamma_exp + q.gamma_exp, p.beta + q.beta, out)


def gamma_ladder(s: float, beta: float, count: int) -> list[float]:
    """Gamma(s + i) / beta**(s + i) for i = 0 .. count-1.

    One anchor evaluation, then Gamma(x + 1) = x Gamma(x).
    """
    vals = []
    term = math.exp(math.lgamma(s) - s * math.log(beta))
    for i in range(count):
        vals.append(term)
        term *= (s + i) / beta
    return vals


def moment(p: PolyExp) -> float:
    """Integral of p over (0, inf): sum_i a_i Gamma(gamma + i + 1) / beta**(gamma + i + 1)."""
    if p.gamma_exp <= -1.0:
        raise DivergentIntegral(f"r**{p.gamma_exp} is not integrable at the origin")
    if not p.beta > 0:
        raise DivergentIntegral(f"beta = {p.beta} gives no decay")
    if p.is_zero:
        return 0.0
    ladder = gamma_ladder(p.gamma_exp + 1.0, p.beta, len(p.coeffs))
    return math.fsum(a * g for a, g in zip(p.coeffs, ladder))


def evaluate(p: PolyExp, r: float) -> float:
    """Horner evaluation at r > 0 (r = 0 allowed when gamma_exp >= 0)."""
    if r < 0 or (r == 0 and p.gamma_exp < 0):
        raise DomainError(f"cannot evaluate r**{p.gamma_exp} at r = {r}")
    if p.is_zero:
        return 0.0
    acc = 0.0
    for a in reversed(p.coeffs):
        acc = acc * r + a
    if r == 0:
        return acc if p.gamma_exp == 0 else 0.0
    return acc * r**p.gamma_exp * math.exp(-p.beta * r)


def is_negligible(p: PolyExp, scale: float, rtol: float = COEFF_RTOL) -> bool:
    """True when every coefficient of p is below ``rtol * scale``."""
    return all(abs(a) <= rtol * scale for a in p.coeffs)


def coefficients_close(p: PolyExp, q: PolyExp, rtol: float = COEFF_RTOL) -> bool:
    """Coefficient-wise equality after alignment, relative to the largest coefficient."""
    diff = linear_combine([(1.0, p), (-1.0, q)])
    return is_negligible(diff, max(p.scale(), q.scale()), rtol)
