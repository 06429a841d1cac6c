"""Finite-difference eigensolver for the radial Dirac system.

This is an oracle: it never touches the closed-form energies, series
coefficients or hypergeometric forms.  It discretizes the first-order
system directly after the substitution (F, G) = r**gamma (u, v), which
leaves u, v smooth at the origin:

    v' + (gamma/r + D(r)) v + (1/r + E) u = 0
    u' + (gamma/r - D(r)) u - [lambda (1/r + E) + 2] v = 0,    D = kappa/r + eta B r/2

Both equations are imposed at cell midpoints with every non-derivative
term averaged over the two neighbouring nodes (a box scheme).  Unlike
collocated central differences this has no checkerboard null space, so
no spurious branch E = -1/r_j pollutes the bound spectrum.  Boundary
rows: u + (gamma + kappa) v = 0 at r_min (the regular solution) and
u = 0 at r_max.  The generalized problem A x = E M x is solved by
shift-invert around the guess.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Literal

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .errors import ConvergenceFailure, NoEigenvalueNear
from .magnetic import perturbed_radial_system
from .quantum_numbers import PhysicalParams, QuantumNumbers


@dataclass(frozen=True)
class GridSpec:
    """Radial grid.  ``r_max=None`` means 30/alpha with alpha estimated from the guess.

    ``N`` counts nodes.  ``richardson`` adds a second solve with the step
    halved and returns (4 E_h/2 - E_h)/3.
    """

    r_min: float = 1e-5
    r_max: float | None = None
    N: int = 4000
    scheme: Literal["uniform", "log"] = "log"
    richardson: bool = True

    def __post_init__(self) -> None:
        if self.N < 100:
            raise ValueError(f"N must be >= 100, got {self.N}")
        if not self.r_min > 0:
            raise ValueError("r_min must be positive")
        if self.r_max is not None and not self.r_max > self.r_min:
            raise ValueError("r_max must exceed r_min")
        if self.scheme not in ("uniform", "log"):
            raise ValueError(f"unknown scheme {self.scheme!r}")


@dataclass(frozen=True)
class GridSolution:
    E: float
    r: np.ndarray
    F: np.ndarray
    G: np.ndarray
    nodes: int


def _origin_exponent(kappa: float, lam: float) -> tuple[float, float]:
    g = math.sqrt(kappa * kappa - lam)
    gpk = g + kappa if kappa > 0 else -lam / (g - kappa)
    return g, gpk


def resolve_r_max(spec: GridSpec, E_guess: float, B: float) -> float:
    if spec.r_max is not None:
        r_max = spec.r_max
    else:
        r_max = 30.0 / math.sqrt(-2.0 * E_guess)
    return 1.5 * r_max if B != 0.0 else r_max


def _mesh(spec: GridSpec, r_max: float, N: int) -> tuple[np.ndarray, float, np.ndarray, np.ndarray]:
    """Nodes r_j, step h in the mapped variable, midpoints r_m and dr/dx there."""
    if spec.scheme == "log":
        x = np.linspace(math.log(spec.r_min), math.log(r_max), N)
        h = x[1] - x[0]
        r = np.exp(x)
        r_mid = np.exp(0.5 * (x[:-1] + x[1:]))
        jac = r_mid
    else:
        r = np.linspace(spec.r_min, r_max, N)
        h = r[1] - r[0]
        r_mid = 0.5 * (r[:-1] + r[1:])
        jac = np.ones_like(r_mid)
    return r, h, r_mid, jac


def _assemble(qn: QuantumNumbers, params: PhysicalParams, B: float, r_mid, jac, h, N):
    system = perturbed_radial_system(qn, params, B)
    lam = system.lam
    g, gpk = _origin_exponent(system.kappa, lam)
    D = system.diagonal(r_mid)
    m = N - 1
    rows = np.arange(m)
    # difference and average operators, (N-1) x N
    Dx = sp.csr_matrix(
        (np.r_[-np.ones(m), np.ones(m)] / h, (np.r_[rows, rows], np.r_[rows, rows + 1])), shape=(m, N)
    )
    Av = sp.csr_matrix(
        (np.full(2 * m, 0.5), (np.r_[rows, rows], np.r_[rows, rows + 1])), shape=(m, N)
    )
    diag = sp.diags
    # G equation: E (J u_bar) = -v' - J (g/r + D) v_bar - (J/r) u_bar
    A_gu = -diag(jac / r_mid) @ Av
    A_gv = -Dx - diag(jac * (g / r_mid + D)) @ Av
    M_gu = diag(jac) @ Av
    # F equation: E (lambda J v_bar) = u' + J (g/r - D) u_bar - J (lambda/r + 2) v_bar
    A_fu = Dx + diag(jac * (g / r_mid - D)) @ Av
    A_fv = -diag(jac * (lam / r_mid + 2.0)) @ Av
    M_fv = diag(lam * jac) @ Av

    zero = sp.csr_matrix((m, N))
    # boundary rows: regularity at r_min, decay at r_max
    bc_u = sp.csr_matrix(([1.0, 1.0], ([0, 1], [0, N - 1])), shape=(2, N))
    bc_v = sp.csr_matrix(([gpk], ([0], [0])), shape=(2, N))
    A = sp.bmat([[A_gu, A_gv], [A_fu, A_fv], [bc_u, bc_v]], format="csc")
    M = sp.bmat([[M_gu, zero], [zero, M_fv], [sp.csr_matrix((2, N)), sp.csr_matrix((2, N))]], format="csc")
    return A, M, g


def _count_nodes(u: np.ndarray, rel: float = 1e-6) -> int:
    big = u[np.abs(u) > rel * np.max(np.abs(u))]
    return int(np.count_nonzero(np.diff(np.sign(big)) != 0))


def _solve_once(qn, params, B, spec: GridSpec, E_guess: float, N: int) -> GridSolution:
    r_max = resolve_r_max(spec, E_guess, B)
    r, h, r_mid, jac = _mesh(spec, r_max, N)
    A, M, g = _assemble(qn, params, B, r_mid, jac, h, N)
    try:
        lu = spla.splu((A - E_guess * M).tocsc())
    except RuntimeError as exc:
        raise ConvergenceFailure(f"shifted matrix is singular at E = {E_guess}") from exc
    op = spla.LinearOperator(A.shape, matvec=lambda x: lu.solve(M @ x), dtype=float)
    try:
        theta, vecs = spla.eigs(op, k=4, which="LM", tol=1e-14, maxiter=5000)
    except spla.ArpackNoConvergence as exc:
        raise ConvergenceFailure(str(exc)) from exc
    E_all = E_guess + 1.0 / theta
    best = int(np.argmin(np.abs(E_all - E_guess)))
    E = float(E_all[best].real)
    if abs(E - E_guess) > 0.5 * abs(E_guess) or abs(E_all[best].imag) > 1e-8 * abs(E):
        raise NoEigenvalueNear(f"nearest eigenvalue {E_all[best]} is far from guess {E_guess}")
    vec = vecs[:, best]
    vec = (vec * np.exp(-1j * np.angle(vec[np.argmax(np.abs(vec))]))).real
    u, v = vec[:N], vec[N:]
    return GridSolution(E, r, r**g * u, r**g * v, _count_nodes(u))


def solve_radial_grid(
    qn: QuantumNumbers, params: PhysicalParams, B: float, spec: GridSpec, E_guess: float
) -> GridSolution:
    """Eigenpair of the discrete system nearest ``E_guess`` (no extrapolation)."""
    if not E_guess < 0:
        raise ValueError("E_guess must be negative (bound spectrum)")
    return _solve_once(qn, params, B, spec, E_guess, spec.N)


def solve_radial_numeric(
    qn: QuantumNumbers,
    params: PhysicalParams,
    B: float = 0.0,
    spec: GridSpec | None = None,
    E_guess: float | None = None,
) -> float:
    """Numerical eigenvalue nearest ``E_guess`` (default: Schroedinger level of ``qn.n``).

    Raises
    ------
    NoEigenvalueNear
        No discrete eigenvalue within |E_guess|/2 of the guess.
    ConvergenceFailure
        ARPACK did not converge or the shifted matrix is singular.
    """
    spec = spec or GridSpec()
    if E_guess is None:
        E_guess = -2.0 / (2 * qn.n - 1) ** 2
    if not E_guess < 0:
        raise ValueError("E_guess must be negative (bound spectrum)")
    coarse = _solve_once(qn, params, B, spec, E_guess, spec.N).E
    if not spec.richardson:
        return coarse
    fine = _solve_once(qn, params, B, spec, E_guess, 2 * spec.N - 1).E
    return (4.0 * fine - coarse) / 3.0


def finite_field_slope(
    qn: QuantumNumbers,
    params: PhysicalParams,
    B_small: float = 1e-4,
    spec: GridSpec | None = None,
    E_guess: float | None = None,
) -> float:
    """Central difference (E(+B) - E(-B)) / 2B on one shared grid."""
    spec = spec or GridSpec()
    if E_guess is None:
        E_guess = -2.0 / (2 * qn.n - 1) ** 2
    # both signs must see the same mesh, so pin r_max before the solves
    if spec.r_max is None:
        spec = replace(spec, r_max=30.0 / math.sqrt(-2.0 * E_guess))
    e_plus = solve_radial_numeric(qn, params, B_small, spec, E_guess)
    e_minus = solve_radial_numeric(qn, params, -B_small, spec, E_guess)
    return (e_plus - e_minus) / (2.0 * B_small)


def expected_nodes(qn: QuantumNumbers) -> int:
    """Sign changes of F on (0, inf): n - l - 1, i.e. n' for kappa > 0 and n' - 1 for kappa < 0."""
    return qn.n - qn.l - 1
