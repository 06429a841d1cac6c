"""Radial amplitudes, full spinor states and their consistency checks.

Conventions
-----------
``RadialSolution.F`` and ``.G`` are the functions entering the radial
system

    dG/dr + (kappa/r) G + (1/r + E) F = 0
    dF/dr - (kappa/r) F - [lambda (1/r + E) + 2] G = 0

i.e. r**gamma e^{-alpha r} times a degree-n' polynomial.  The spinor
amplitudes f = r**-1/2 F and g = r**-1/2 G are exposed as ``.f``/``.g``.
With ``normalize=True`` the pair satisfies int_0^inf (F**2 + lambda G**2) dr = 1
and a_0 > 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import polyexp as px
from .polyexp import PolyExp
from .quantum_numbers import PhysicalParams, QuantumNumbers
from .spectrum import EnergyResult, energy


@dataclass(frozen=True)
class RadialSolution:
    qn: QuantumNumbers
    energy: EnergyResult
    F: PolyExp
    G: PolyExp
    a_coeffs: tuple[float, ...]
    b_coeffs: tuple[float, ...]
    norm_applied: bool

    @property
    def lam(self) -> float:
        return self.energy.lam

    @property
    def f(self) -> PolyExp:
        return px.mul_power(self.F, -0.5)

    @property
    def g(self) -> PolyExp:
        return px.mul_power(self.G, -0.5)

    def norm_integral(self) -> float:
        """int (F**2 + lambda G**2) dr."""
        return px.moment(_density(self.F, self.G, self.lam))


def _density(F: PolyExp, G: PolyExp, lam: float) -> PolyExp:
    return px.linear_combine([(1.0, px.product(F, F)), (lam, px.product(G, G))])


def series_coefficients(
    qn: QuantumNumbers, en: EnergyResult, extra_terms: int = 0
) -> tuple[list[float], list[float]]:
    """Power-series coefficients a_i, b_i of F and G, with a_0 = 1.

    b_0 = -1/(gamma + kappa); for i >= 1, with w_i = -E a_{i-1} + alpha b_{i-1}:
    b_i = (i + gamma - kappa + alpha/E) w_i / (i (i + 2 gamma)) and
    a_i = w_i - (i + gamma + kappa) b_i.

    Returns n' + 1 + ``extra_terms`` coefficients each.  At the quantized
    energy every coefficient past index n' vanishes up to rounding.
    """
    E, alpha, g = en.E, en.alpha_val, en.gamma_val
    if E == 0.0:
        raise ValueError("E = 0 is not a bound-state energy")
    kappa = qn.kappa
    gpk = en.gamma_plus_kappa
    a = [1.0]
    b = [-1.0 / gpk]
    for i in range(1, qn.n_prime + 1 + extra_terms):
        w = -E * a[-1] + alpha * b[-1]
        bi = (i + g - kappa + alpha / E) * w / (i * (i + 2.0 * g))
        a.append(w - (i + gpk) * bi)
        b.append(bi)
    return a, b


def termination_residual(qn: QuantumNumbers, en: EnergyResult) -> float:
    """max(|a_{n'+1}|, |b_{n'+1}|) / max|coeffs|: zero for an exactly quantized E."""
    a, b = series_coefficients(qn, en, extra_terms=1)
    scale = max(abs(x) for x in a[:-1] + b[:-1])
    return max(abs(a[-1]), abs(b[-1])) / scale


def build_radial(qn: QuantumNumbers, params: PhysicalParams, normalize: bool = True) -> RadialSolution:
    """Series-form radial solution of state ``qn``.

    Raises SupercriticalCharge via :func:`~dirac2d.spectrum.energy`.
    """
    en = energy(qn, params)
    a, b = series_coefficients(qn, en)
    F = PolyExp(en.gamma_val, en.alpha_val, a)
    G = PolyExp(en.gamma_val, en.alpha_val, b)
    if normalize:
        s = 1.0 / math.sqrt(px.moment(_density(F, G, en.lam)))
        a = [s * x for x in a]
        b = [s * x for x in b]
        F, G = s * F, s * G
    return RadialSolution(qn, en, F, G, tuple(a), tuple(b), normalize)


def hyp1f1_coeffs(m: int, b: float, scale: float) -> list[float]:
    """Coefficients in r of 1F1(-m, b; scale*r) for integer m >= 0 (a degree-m polynomial)."""
    out = [1.0]
    term = 1.0
    for j in range(m):
        term *= (-m + j) / (b + j) * scale / (j + 1)
        out.append(term)
    return out


def hypergeometric_basis(qn: QuantumNumbers, en: EnergyResult) -> tuple[PolyExp, PolyExp]:
    """r**gamma e^{-alpha r} F_1 and r**gamma e^{-alpha r} F_2.

    F_1 = 1F1(-n', 2gamma+1; 2 alpha r), F_2 = 1F1(1-n', 2gamma+1; 2 alpha r).
    For n' = 0, F_2 does not terminate; it only ever appears multiplied
    by n', so the zero function is returned in its place.
    """
    g, alpha, npr = en.gamma_val, en.alpha_val, qn.n_prime
    P1 = PolyExp(g, alpha, hyp1f1_coeffs(npr, 2 * g + 1, 2 * alpha))
    if npr == 0:
        P2 = PolyExp(g, alpha)
    else:
        P2 = PolyExp(g, alpha, hyp1f1_coeffs(npr - 1, 2 * g + 1, 2 * alpha))
    return P1, P2


def build_hypergeometric(qn: QuantumNumbers, params: PhysicalParams) -> tuple[PolyExp, PolyExp]:
    """Unnormalized F, G in confluent-hypergeometric form.

    F = r^g e^{-ar} [(kappa + 1/alpha) F_1 - n' F_2]
    G = (E/alpha) r^g e^{-ar} [(kappa + 1/alpha) F_1 + n' F_2]
    """
    en = energy(qn, params)
    P1, P2 = hypergeometric_basis(qn, en)
    p = qn.kappa + 1.0 / en.alpha_val
    npr = qn.n_prime
    F = px.linear_combine([(p, P1), (-npr, P2)])
    G = px.linear_combine([(p, P1), (npr, P2)])
    return F, (en.E / en.alpha_val) * G


def radial_residual(sol: RadialSolution, E: float | None = None) -> tuple[PolyExp, PolyExp]:
    """Left-hand sides of the two radial equations applied to (F, G).

    ``E`` overrides the stored energy (used to probe sensitivity).
    """
    E = sol.energy.E if E is None else E
    F, G, kappa, lam = sol.F, sol.G, sol.qn.kappa, sol.lam
    F_r, G_r = px.mul_power(F, -1), px.mul_power(G, -1)
    r1 = px.linear_combine([(1.0, px.derivative(G)), (kappa, G_r), (1.0, F_r), (E, F)])
    r2 = px.linear_combine(
        [(1.0, px.derivative(F)), (-kappa, F_r), (-lam, G_r), (-(lam * E + 2.0), G)]
    )
    return r1, r2


def residual_scale(sol: RadialSolution) -> float:
    return max(sol.F.scale(), sol.G.scale())


# ---------------------------------------------------------------------------
# four-component states

# per-component signs of sigma'_z and beta, components 1..4
SIGMA_Z = (1, -1, 1, -1)
BETA = (1, 1, -1, -1)


@dataclass(frozen=True)
class Component:
    """weight * amplitude(r) * exp(i * phase * phi); amplitude is 'f' or 'g'."""

    weight: complex
    amplitude: str
    phase: int

    @property
    def nonzero(self) -> bool:
        return self.weight != 0


@dataclass(frozen=True)
class SpinorState:
    qn: QuantumNumbers
    f: PolyExp
    g: PolyExp
    upper_phase: int
    lower_phase: int
    components: tuple[Component, Component, Component, Component]
    omega_weights: tuple[Fraction, Fraction] = field(default=(Fraction(0), Fraction(0)))

    def nonzero_indices(self) -> tuple[int, ...]:
        """1-based indices of the nonzero components."""
        return tuple(i + 1 for i, c in enumerate(self.components) if c.nonzero)


def spinor_weights(two_kappa: int, two_mu: int) -> tuple[Fraction, Fraction]:
    """Entries (kappa + mu)/(2 mu) and (mu - kappa)/(2 mu) of the cylindrical spinor."""
    return Fraction(two_kappa + two_mu, 2 * two_mu), Fraction(two_mu - two_kappa, 2 * two_mu)


def assemble_state(sol: RadialSolution) -> SpinorState:
    """Four-component state [f Omega_{kappa,mu}, i g Omega_{-kappa,mu}]."""
    qn = sol.qn
    m_minus = (qn.two_mu - 1) // 2
    m_plus = (qn.two_mu + 1) // 2
    w1, w2 = spinor_weights(qn.two_kappa, qn.two_mu)
    v1, v2 = spinor_weights(-qn.two_kappa, qn.two_mu)
    components = (
        Component(complex(w1), "f", m_minus),
        Component(complex(w2), "f", m_plus),
        Component(1j * float(v1), "g", m_minus),
        Component(1j * float(v2), "g", m_plus),
    )
    return SpinorState(qn, sol.f, sol.g, m_minus, m_plus, components, (w1, w2))


@dataclass(frozen=True)
class ConstantsReport:
    qn: QuantumNumbers
    checks: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    @property
    def failures(self) -> list[str]:
        return [name for name, passed in self.checks.items() if not passed]


def check_constants_of_motion(state: SpinorState) -> ConstantsReport:
    """Apply P, j_z and K to every nonzero component and compare with (eta, mu, kappa).

    Eigenvalues are carried doubled so all comparisons are on integers:
    P -> beta s, 2 j_z -> 2m + s, 2K -> beta (2 s m + 1), with s the
    sigma'_z sign of the component.
    """
    qn = state.qn
    live = [(i, c) for i, c in enumerate(state.components) if c.nonzero]
    p_vals = [BETA[i] * SIGMA_Z[i] for i, _ in live]
    jz2 = [2 * c.phase + SIGMA_Z[i] for i, c in live]
    k2 = [BETA[i] * (2 * SIGMA_Z[i] * c.phase + 1) for i, c in live]
    checks = {
        "two_components": len(live) == 2,
        "P_eta": bool(live) and all(v == qn.eta for v in p_vals),
        "jz_mu": bool(live) and all(v == qn.two_mu for v in jz2),
        "K_kappa": bool(live) and all(v == qn.two_kappa for v in k2),
        # K = P j_z, component by component and for the eigenvalues
        "K_eq_P_jz": all(k == p * j for k, p, j in zip(k2, p_vals, jz2))
        and qn.two_kappa == qn.eta * qn.two_mu,
        "K2_eq_jz2": all(k * k == j * j for k, j in zip(k2, jz2))
        and qn.two_kappa**2 == qn.two_mu**2,
    }
    return ConstantsReport(qn, checks)
