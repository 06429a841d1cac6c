"""First-order (linear Paschen-Back) energy shifts in a perpendicular field.

Three independent routes give the slope E1 = dE/dB at B = 0 (B scaled by Z**2):

* ``quadrature``: E1 = -eta <F, rG> / (<F, F> + lambda <G, G>) on the series solution;
* ``closed_n0``: E1 = mu (2 gamma + 1) / (4 kappa), valid for n' = 0;
* ``closed_general``: E1 = -eta (a kappa + b) / (c kappa + d) from radial
  integrals of the confluent hypergeometric polynomials, split as
  E1 = mu A1 + (kappa/mu) A2.

Only first order is implemented.  The orthogonality condition
<Phi0, S Phi_i> = 0 that underlies the first-order formula needs no code here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Literal

import numpy as np

from . import polyexp as px
from .errors import DegenerateDenominator, NotApplicable
from .polyexp import PolyExp
from .quantum_numbers import PhysicalParams, QuantumNumbers
from .spectrum import energy, gamma_param
from .wavefunctions import RadialSolution, build_radial, hypergeometric_basis

Route = Literal["quadrature", "closed_n0", "closed_general"]

# tolerance of the internal E1 == mu A1 + (kappa/mu) A2 identity check
_IDENTITY_RTOL = 1e-10


@dataclass(frozen=True)
class RadialIntegrals:
    K1: float
    K2: float
    I1: float
    I2: float
    I12: float
    a: float
    b: float
    c: float
    d: float


@dataclass(frozen=True)
class FirstOrderShift:
    qn: QuantumNumbers
    E1: float
    route: Route
    A1: float | None = None
    A2: float | None = None
    integrals: RadialIntegrals | None = None


def shift_quadrature(sol: RadialSolution) -> FirstOrderShift:
    """E1 from the expectation value of the perturbation on the series solution."""
    F, G, lam = sol.F, sol.G, sol.lam
    num = px.moment(px.mul_power(px.product(F, G), 1))
    den = px.moment(px.linear_combine([(1.0, px.product(F, F)), (lam, px.product(G, G))]))
    return FirstOrderShift(sol.qn, -sol.qn.eta * num / den, "quadrature")


def shift_closed_n0(qn: QuantumNumbers, params: PhysicalParams) -> FirstOrderShift:
    """E1 = mu (2 gamma + 1) / (4 kappa) for nodeless states.

    Raises NotApplicable when n' > 0.
    """
    if qn.n_prime != 0:
        raise NotApplicable(f"closed n'=0 form needs n' = 0, state has n' = {qn.n_prime}")
    g = gamma_param(qn.kappa, params.lam)
    return FirstOrderShift(qn, qn.mu / (4.0 * qn.kappa) * (2.0 * g + 1.0), "closed_n0")


def radial_integrals(sol: RadialSolution) -> RadialIntegrals:
    """Radial integrals K_i, I_i, I_12 of the hypergeometric polynomials and a, b, c, d.

    K_i = int r^(2g+1) e^(-2ar) F_i^2,  I_i = int r^(2g) e^(-2ar) F_i^2,
    I_12 = int r^(2g) e^(-2ar) F_1 F_2.  All depend on kappa only via kappa**2.
    """
    qn, en = sol.qn, sol.energy
    E, alpha, lam = en.E, en.alpha_val, en.lam
    npr = qn.n_prime
    P1, P2 = hypergeometric_basis(qn, en)
    P11, P22, P12 = px.product(P1, P1), px.product(P2, P2), px.product(P1, P2)
    K1 = px.moment(px.mul_power(P11, 1))
    K2 = px.moment(px.mul_power(P22, 1))
    I1, I2, I12 = px.moment(P11), px.moment(P22), px.moment(P12)

    k2 = qn.kappa**2
    q = lam * E * E / (alpha * alpha)
    a = 2.0 * E / alpha**2 * K1
    b = E / alpha * ((k2 + 1.0 / alpha**2) * K1 - npr**2 * K2)
    c = 2.0 / alpha * (1.0 + q) * I1 + 2.0 * npr * (q - 1.0) * I12
    d = (1.0 + q) * ((k2 + 1.0 / alpha**2) * I1 + npr**2 * I2) + 2.0 * npr / alpha * (q - 1.0) * I12
    return RadialIntegrals(K1, K2, I1, I2, I12, a, b, c, d)


def shift_closed_general(qn: QuantumNumbers, params: PhysicalParams) -> FirstOrderShift:
    """E1 = -eta (a kappa + b)/(c kappa + d) with A1 = (ad - bc)/(kappa^2 c^2 - d^2),
    A2 = (bd - kappa^2 ac)/(kappa^2 c^2 - d^2).

    Raises
    ------
    DegenerateDenominator
        |c kappa + d| < 1e-14 |d|.
    """
    sol = build_radial(qn, params, normalize=False)
    ints = radial_integrals(sol)
    a, b, c, d = ints.a, ints.b, ints.c, ints.d
    kappa, mu = qn.kappa, qn.mu
    denom = c * kappa + d
    if abs(denom) < 1e-14 * abs(d):
        raise DegenerateDenominator(f"c*kappa + d = {denom!r} for {qn}")
    E1 = -qn.eta * (a * kappa + b) / denom
    D = kappa**2 * c**2 - d**2
    if abs(D) <= 1e-12 * d * d:
        # n' = 0: d = c |kappa|, only one sign of kappa exists and the split is undefined
        return FirstOrderShift(qn, E1, "closed_general", None, None, ints)
    A1 = (a * d - b * c) / D
    A2 = (b * d - kappa**2 * a * c) / D
    split = mu * A1 + kappa / mu * A2
    if abs(split - E1) > _IDENTITY_RTOL * max(1.0, abs(mu * A1), abs(A2)):
        raise ArithmeticError(f"E1 decomposition mismatch for {qn}: {E1!r} vs {split!r}")
    return FirstOrderShift(qn, E1, "closed_general", A1, A2, ints)


def shift_closed(qn: QuantumNumbers, params: PhysicalParams) -> FirstOrderShift:
    """The applicable closed route: n'=0 formula when possible, general otherwise."""
    if qn.n_prime == 0:
        return shift_closed_n0(qn, params)
    return shift_closed_general(qn, params)


def shift_nonrel(qn: QuantumNumbers) -> float:
    """Pauli-limit slope (m + 2 m_s)/2 with m = mu - eta/2 and m_s = eta/2."""
    m = qn.mu - qn.eta / 2
    ms = qn.eta / 2
    return (m + 2 * ms) / 2


# ---------------------------------------------------------------------------
# the B-dependent radial system


@dataclass(frozen=True)
class PerturbedRadialSystem:
    """Coefficients of the in-field radial equations

        dG/dr + (kappa/r + eta B r/2) G + (1/r + E) F = 0
        dF/dr - (kappa/r + eta B r/2) F - [lambda (1/r + E) + 2] G = 0

    and the operator blocks of (h0 + B h1 - E S) Phi = 0, Phi = (F, G).
    """

    kappa: float
    eta: int
    lam: float
    B: float

    def diagonal(self, r: float | np.ndarray) -> float | np.ndarray:
        """kappa/r + eta B r / 2."""
        return self.kappa / r + 0.5 * self.eta * self.B * r

    def f_coupling(self, r, E: float):
        """1/r + E, the coefficient of F in the G equation."""
        return 1.0 / r + E

    def g_coupling(self, r, E: float):
        """lambda (1/r + E) + 2, the coefficient of G in the F equation."""
        return self.lam * (1.0 / r + E) + 2.0

    @property
    def S(self) -> np.ndarray:
        return np.array([[1.0, 0.0], [0.0, self.lam]])

    def h1(self, r: float) -> np.ndarray:
        return np.array([[0.0, -self.eta * r / 2], [-self.eta * r / 2, 0.0]])

    def apply_h0(self, F: PolyExp, G: PolyExp) -> tuple[PolyExp, PolyExp]:
        """[-F/r - G' - kappa G/r,  F' - kappa F/r - (2 + lambda/r) G]."""
        k = self.kappa
        top = px.linear_combine(
            [(-1.0, px.mul_power(F, -1)), (-1.0, px.derivative(G)), (-k, px.mul_power(G, -1))]
        )
        bottom = px.linear_combine(
            [
                (1.0, px.derivative(F)),
                (-k, px.mul_power(F, -1)),
                (-2.0, G),
                (-self.lam, px.mul_power(G, -1)),
            ]
        )
        return top, bottom

    def apply_h1(self, F: PolyExp, G: PolyExp) -> tuple[PolyExp, PolyExp]:
        return -self.eta / 2 * px.mul_power(G, 1), -self.eta / 2 * px.mul_power(F, 1)

    def apply_S(self, F: PolyExp, G: PolyExp) -> tuple[PolyExp, PolyExp]:
        return F, self.lam * G

    def residual(self, F: PolyExp, G: PolyExp, E: float) -> tuple[PolyExp, PolyExp]:
        """(h0 + B h1 - E S) Phi as a PolyExp pair."""
        h0 = self.apply_h0(F, G)
        h1 = self.apply_h1(F, G)
        s = self.apply_S(F, G)
        return tuple(  # type: ignore[return-value]
            px.linear_combine([(1.0, x), (self.B, y), (-E, z)]) for x, y, z in zip(h0, h1, s)
        )


def perturbed_radial_system(qn: QuantumNumbers, params: PhysicalParams, B: float | None = None) -> PerturbedRadialSystem:
    """Radial system of state ``qn`` in scaled field ``B`` (default ``params.B``)."""
    return PerturbedRadialSystem(qn.kappa, qn.eta, params.lam, params.B if B is None else B)


def compute_shift(qn: QuantumNumbers, params: PhysicalParams, route: str) -> FirstOrderShift:
    """Dispatch on route name: ``closed``, ``closed_n0``, ``closed_general`` or ``quadrature``."""
    routes: dict[str, Callable[[], FirstOrderShift]] = {
        "closed": lambda: shift_closed(qn, params),
        "closed_n0": lambda: shift_closed_n0(qn, params),
        "closed_general": lambda: shift_closed_general(qn, params),
        "quadrature": lambda: shift_quadrature(build_radial(qn, params)),
    }
    try:
        return routes[route]()
    except KeyError:
        raise ValueError(f"unknown route {route!r}") from None


def route_mismatch(e1: float, e2: float) -> float:
    """|e1 - e2| / max(1, |e1|)."""
    return abs(e1 - e2) / max(1.0, abs(e1))


def energy_in_field(qn: QuantumNumbers, params: PhysicalParams, B: float) -> float:
    """Field-free level plus the linear shift, E + B E1."""
    return energy(qn, params).E + B * shift_closed(qn, params).E1
