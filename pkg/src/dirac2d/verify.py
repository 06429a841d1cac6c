"""Invariant checks shared by ``dirac2d verify`` and the test-suite."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import polyexp as px
from .magnetic import route_mismatch, shift_closed, shift_closed_general, shift_nonrel, shift_quadrature
from .polyexp import PolyExp
from .quantum_numbers import PhysicalParams, QuantumNumbers, enumerate_states, spectroscopic_label, validate_state
from .spectrum import energy, energy_nonrel
from .wavefunctions import (
    RadialSolution,
    assemble_state,
    build_hypergeometric,
    build_radial,
    check_constants_of_motion,
    radial_residual,
    residual_scale,
    termination_residual,
)

# tolerances; every check compares err <= TOL * tolerance_scale
TOLERANCES = {
    "residual": 1e-12,
    "termination": 1e-12,
    "normalization": 1e-12,
    "route": 1e-12,
    "nonrel": 1e-9,
    "orthogonality": 1e-10,
    "proportionality": 1e-12,
    "grid_energy": 1e-6,
    "grid_slope": 1e-4,
}

NONREL_C = 1e6


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    worst: float
    tol: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  {self.detail}" if self.detail else ""
        return f"{status}  {self.name:<28} worst={self.worst:.3e}  tol={self.tol:.1e}{extra}"


def _check(name: str, errors: dict[str, float], tol: float, scale: float = 1.0) -> Check:
    worst_key = max(errors, key=errors.get)  # type: ignore[arg-type]
    worst = errors[worst_key]
    tol *= scale
    return Check(name, scale > 0 and worst <= tol, worst, tol, f"at {worst_key}")


def hypergeometric_mismatch(sol: RadialSolution, F_hyp: PolyExp, G_hyp: PolyExp, radii: Sequence[float]) -> float:
    """Worst pointwise |hyp - c0 * series| over ``radii`` for F and G.

    c0 comes from the highest-degree coefficients of F; errors are
    measured against the absolute-term sum of the hypergeometric
    polynomial, which stays finite at the nodes.
    """
    c0 = F_hyp.coeffs[-1] / sol.F.coeffs[-1]
    worst = 0.0
    for hyp, ser in ((F_hyp, sol.F), (G_hyp, sol.G)):
        magnitude = PolyExp(hyp.gamma_exp, hyp.beta, [abs(a) for a in hyp.coeffs])
        for r in radii:
            err = abs(hyp(r) - c0 * ser(r)) / magnitude(r)
            worst = max(worst, err)
    return worst


def overlap(s1: RadialSolution, s2: RadialSolution) -> float:
    """int (F1 F2 + lambda G1 G2) dr."""
    return px.moment(
        px.linear_combine([(1.0, px.product(s1.F, s2.F)), (s1.lam, px.product(s1.G, s2.G))])
    )


def analytic_checks(params: PhysicalParams, n_max: int = 3, tolerance_scale: float = 1.0) -> list[Check]:
    t, ts = TOLERANCES, tolerance_scale
    states = enumerate_states(n_max, params)
    sols = {q: build_radial(q, params) for q in states}
    name = lambda q: f"{spectroscopic_label(q)} mu={q.two_mu}/2"  # noqa: E731
    checks = []

    res = {}
    for q, sol in sols.items():
        r1, r2 = radial_residual(sol)
        res[name(q)] = max(r1.scale(), r2.scale()) / residual_scale(sol)
    checks.append(_check("radial residuals", res, t["residual"], ts))

    term = {name(q): termination_residual(q, sol.energy) for q, sol in sols.items()}
    checks.append(_check("series termination", term, t["termination"], ts))

    norm = {name(q): abs(sol.norm_integral() - 1.0) for q, sol in sols.items()}
    checks.append(_check("normalization", norm, t["normalization"], ts))

    degen = {}
    for q in states:
        if q.two_kappa > 0 and q.n_prime > 0:
            partner = validate_state(q.n, -q.kappa_frac, q.mu_frac)
            degen[name(q)] = abs(energy(q, params).E - energy(partner, params).E)
    if degen:
        checks.append(_check("kappa degeneracy (exact)", degen, 0.0, ts))

    route = {}
    for q, sol in sols.items():
        e_quad = shift_quadrature(sol).E1
        route[name(q)] = route_mismatch(e_quad, shift_closed(q, params).E1)
        if q.n_prime == 0:
            e_gen = shift_closed_general(q, params).E1
            route[name(q) + " (general form)"] = route_mismatch(e_gen, shift_closed(q, params).E1)
    checks.append(_check("shift route agreement", route, t["route"], ts))

    anti = {}
    for q in states:
        if q.two_mu > 0:
            flipped = q.with_mu(-q.two_mu)
            anti[name(q)] = abs(shift_closed(q, params).E1 + shift_closed(flipped, params).E1)
    checks.append(_check("mu antisymmetry", anti, t["route"], ts))

    com = {}
    for q, sol in sols.items():
        report = check_constants_of_motion(assemble_state(sol))
        com[name(q)] = float(len(report.failures))
    checks.append(_check("constants of motion", com, 0.0, ts))

    prop = {}
    radii = np.logspace(-2, math.log10(20.0), 20)
    for q, sol in sols.items():
        F_hyp, G_hyp = build_hypergeometric(q, params)
        prop[name(q)] = hypergeometric_mismatch(sol, F_hyp, G_hyp, radii)
    checks.append(_check("hypergeometric form", prop, t["proportionality"], ts))

    orth = {}
    # radial parts depend on (n, kappa) only; one representative per n
    by_kappa: dict[int, dict[int, QuantumNumbers]] = {}
    for q in states:
        by_kappa.setdefault(q.two_kappa, {}).setdefault(q.n, q)
    for reps in by_kappa.values():
        group = list(reps.values())
        for i, q1 in enumerate(group):
            for q2 in group[i + 1 :]:
                orth[f"{spectroscopic_label(q1)}|{spectroscopic_label(q2)}"] = abs(overlap(sols[q1], sols[q2]))
    if orth:
        checks.append(_check("orthogonality", orth, t["orthogonality"], ts))

    nr_params = PhysicalParams(Z=params.Z, c=NONREL_C)
    nr = {}
    for q in enumerate_states(n_max, nr_params):
        nr[name(q) + " E"] = abs(energy(q, nr_params).E - energy_nonrel(q.n))
        nr[name(q) + " E1"] = abs(shift_closed(q, nr_params).E1 - shift_nonrel(q))
    checks.append(_check("nonrelativistic limit", nr, t["nonrel"], ts))
    return checks


def grid_checks(params: PhysicalParams, tolerance_scale: float = 1.0) -> list[Check]:
    from .grid_oracle import finite_field_slope, solve_radial_numeric

    t, ts = TOLERANCES, tolerance_scale
    checks = []
    for n, kappa in ((1, "1/2"), (2, "1/2"), (2, "3/2")):
        q = validate_state(n, kappa, kappa)
        err = abs(solve_radial_numeric(q, params) - energy(q, params).E)
        checks.append(_check(f"grid energy {spectroscopic_label(q)}", {spectroscopic_label(q): err}, t["grid_energy"], ts))
    slope = {}
    for n, kappa in ((1, "1/2"), (2, "3/2")):
        q = validate_state(n, kappa, kappa)
        slope[spectroscopic_label(q)] = abs(finite_field_slope(q, params) - shift_closed(q, params).E1)
    checks.append(_check("grid finite-field slope", slope, t["grid_slope"], ts))
    return checks


def run_all(params: PhysicalParams, with_grid: bool = False, tolerance_scale: float = 1.0,
            emit: Callable[[str], None] = print) -> bool:
    checks = analytic_checks(params, tolerance_scale=tolerance_scale)
    if with_grid:
        checks += grid_checks(params, tolerance_scale=tolerance_scale)
    for c in checks:
        emit(c.line())
    ok = all(c.passed for c in checks)
    emit(f"{sum(c.passed for c in checks)}/{len(checks)} checks passed")
    return ok
