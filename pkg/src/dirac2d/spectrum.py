"""Closed-form bound-state energies and the exponents gamma, alpha.

Energies are returned in the scaled form E = (W - c**2) / Z**2 that the
radial equations are written in.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import SupercriticalCharge
from .quantum_numbers import PhysicalParams, QuantumNumbers


@dataclass(frozen=True)
class EnergyResult:
    """Scaled energy E, total energy W and the derived exponents.

    ``gamma_plus_kappa`` is gamma + kappa evaluated without cancellation;
    for kappa < 0 it is of order lambda and drives the b_0 coefficient.
    """

    E: float
    W: float
    gamma_val: float
    alpha_val: float
    gamma_plus_kappa: float
    lam: float


def gamma_param(kappa: float, lam: float) -> float:
    """Positive root sqrt(kappa**2 - lambda) (the square-integrable branch).

    Raises SupercriticalCharge when lambda >= kappa**2.
    """
    disc = kappa * kappa - lam
    if not disc > 0:
        raise SupercriticalCharge(
            f"lambda = {lam:.6g} >= kappa^2 = {kappa * kappa:.6g}: no bound state (Z >= c|kappa|)"
        )
    return math.sqrt(disc)


def gamma_plus_kappa(kappa: float, lam: float) -> float:
    g = gamma_param(kappa, lam)
    if kappa > 0:
        return g + kappa
    # sqrt(k^2 - lam) - |k| = -lam / (sqrt(k^2 - lam) + |k|)
    return -lam / (g - kappa)


def scaled_energy(n_prime: int, gamma: float, lam: float) -> float:
    """E = ((1 + x)**-1/2 - 1) / lambda with x = lambda / (n' + gamma)**2, without cancellation."""
    nu = n_prime + gamma
    if lam == 0.0:
        return -1.0 / (2.0 * nu * nu)
    x = lam / (nu * nu)
    s = math.sqrt(1.0 + x)
    # (1+x)^(-1/2) - 1 = -x / (s (1 + s))
    return -(1.0 / (nu * nu)) / (s * (1.0 + s))


def energy(qn: QuantumNumbers, params: PhysicalParams) -> EnergyResult:
    """Exact field-free level of state ``qn``.

    Depends on kappa only through kappa**2, so E(n, kappa) and
    E(n, -kappa) are bit-identical.

    Raises
    ------
    SupercriticalCharge
        If (Z/c)**2 >= kappa**2.
    """
    lam = params.lam
    k = abs(qn.kappa)
    g = gamma_param(k, lam)
    E = scaled_energy(qn.n_prime, g, lam)
    alpha = math.sqrt(-E * (2.0 + lam * E))
    W = params.Z**2 * E + params.c**2
    return EnergyResult(
        E=E, W=W, gamma_val=g, alpha_val=alpha,
        gamma_plus_kappa=gamma_plus_kappa(qn.kappa, lam), lam=lam,
    )


def energy_nonrel(n: int) -> float:
    """Schroedinger limit -2 / (2n - 1)**2."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return -2.0 / (2 * n - 1) ** 2
