import math
from dataclasses import replace
from fractions import Fraction

import numpy as np
import pytest

from dirac2d import polyexp as px
from dirac2d.quantum_numbers import PhysicalParams, enumerate_states, validate_state
from dirac2d.spectrum import energy
from dirac2d.verify import hypergeometric_mismatch, overlap
from dirac2d.wavefunctions import (
    Component,
    assemble_state,
    build_hypergeometric,
    build_radial,
    check_constants_of_motion,
    radial_residual,
    residual_scale,
    series_coefficients,
    spinor_weights,
    termination_residual,
)

ALL18 = enumerate_states(3)


def ids(q):
    return f"n{q.n}k{q.two_kappa}m{q.two_mu}"


def test_n0_coefficients(params):
    for q in ALL18:
        if q.n_prime == 0:
            en = energy(q, params)
            a, b = series_coefficients(q, en)
            assert a == [1.0]
            assert b == [-1.0 / en.gamma_plus_kappa]


def test_b0_ground_state(params):
    q = validate_state(1, "1/2", "1/2")
    _, b = series_coefficients(q, energy(q, params))
    assert b[0] == pytest.approx(-1.0000532570261635972, rel=1e-15)


def test_termination_2s(params):
    q = validate_state(2, "1/2", "1/2")
    assert termination_residual(q, energy(q, params)) < 1e-12


@pytest.mark.parametrize("n, kappa, degree", [(1, "1/2", 0), (2, "1/2", 1), (3, "-1/2", 2), (3, "5/2", 0)])
def test_degrees(params, n, kappa, degree):
    sol = build_radial(validate_state(n, kappa, kappa), params)
    assert sol.F.degree == sol.G.degree == degree


def test_exponents_and_decay(params):
    sol = build_radial(validate_state(2, "3/2", "3/2"), params)
    assert sol.F.gamma_exp == sol.G.gamma_exp == sol.energy.gamma_val
    assert sol.F.beta == sol.energy.alpha_val
    assert sol.f.gamma_exp == pytest.approx(sol.energy.gamma_val - 0.5)


@pytest.mark.parametrize("q", ALL18, ids=ids)
def test_normalization(params, q):
    sol = build_radial(q, params)
    assert sol.norm_applied and abs(sol.norm_integral() - 1.0) < 1e-12
    assert sol.a_coeffs[0] > 0


@pytest.mark.parametrize("q", ALL18, ids=ids)
def test_residuals_vanish(params, q):
    sol = build_radial(q, params)
    scale = residual_scale(sol)
    for res in radial_residual(sol):
        assert px.is_negligible(res, scale, 1e-12)


@pytest.mark.parametrize("n, kappa", [(1, "1/2"), (2, "1/2"), (3, "-3/2")])
def test_residual_sensitive_to_energy(params, n, kappa):
    sol = build_radial(validate_state(n, kappa, kappa), params)
    scale = residual_scale(sol)
    for dE in (1e-6, -1e-6):
        r1, r2 = radial_residual(sol, sol.energy.E + dE)
        assert max(r1.scale(), r2.scale()) >= 1e-7 * scale


def test_hypergeometric_n0_form(params):
    F, G = build_hypergeometric(validate_state(2, "3/2", "3/2"), params)
    assert F.degree == G.degree == 0


def test_hypergeometric_2s_degree(params):
    F, G = build_hypergeometric(validate_state(2, "1/2", "1/2"), params)
    assert F.degree == G.degree == 1


@pytest.mark.parametrize("q", [q for q in ALL18 if q.two_mu > 0], ids=ids)
def test_hypergeometric_proportional(params, q):
    sol = build_radial(q, params)
    F_hyp, G_hyp = build_hypergeometric(q, params)
    radii = np.logspace(-2, math.log10(20.0), 20)
    assert hypergeometric_mismatch(sol, F_hyp, G_hyp, radii) < 1e-12


def test_hypergeometric_spot_radii_with_half_power(params):
    # r^{-1/2} F_hyp against the spinor amplitude f at four radii
    q = validate_state(2, "3/2", "3/2")
    sol = build_radial(q, params)
    F_hyp, _ = build_hypergeometric(q, params)
    f_hyp = px.mul_power(F_hyp, -0.5)
    c0 = F_hyp.coeffs[-1] / sol.F.coeffs[-1]
    for r in (0.1, 1.0, 5.0, 10.0):
        assert f_hyp(r) == pytest.approx(c0 * sol.f(r), rel=1e-12)


def test_orthogonality(params):
    by_kappa = {}
    for q in enumerate_states(3, params):
        by_kappa.setdefault(q.two_kappa, {}).setdefault(q.n, build_radial(q, params))
    pairs = 0
    for sols in by_kappa.values():
        group = list(sols.values())
        for i, s1 in enumerate(group):
            for s2 in group[i + 1 :]:
                assert abs(overlap(s1, s2)) < 1e-10
                pairs += 1
    assert pairs == 5


def test_spinor_weights():
    assert spinor_weights(3, 3) == (Fraction(1), Fraction(0))
    assert spinor_weights(-3, 3) == (Fraction(0), Fraction(1))


def test_layout_eta_plus(params):
    st = assemble_state(build_radial(validate_state(1, "1/2", "1/2"), params))
    assert st.nonzero_indices() == (1, 4)
    assert (st.upper_phase, st.lower_phase) == (0, 1)


def test_layout_eta_minus(params):
    st = assemble_state(build_radial(validate_state(2, "-1/2", "1/2"), params))
    assert st.nonzero_indices() == (2, 3)


@pytest.mark.parametrize("q", ALL18, ids=ids)
def test_constants_of_motion(params, q):
    report = check_constants_of_motion(assemble_state(build_radial(q, params)))
    assert report.ok, report.failures
    assert q.two_kappa == q.two_mu * q.eta


def test_negative_control_wrong_layout(params):
    st = assemble_state(build_radial(validate_state(2, "-1/2", "1/2"), params))
    # put f into the eta = +1 slot
    swapped = (Component(1.0, "f", st.upper_phase),) + st.components[1:3] + (
        Component(0.0, "g", st.lower_phase),
    )
    report = check_constants_of_motion(replace(st, components=swapped))
    assert "P_eta" in report.failures


def test_negative_control_phase(params):
    st = assemble_state(build_radial(validate_state(3, "5/2", "5/2"), params))
    c0 = st.components[0]
    broken = (replace(c0, phase=c0.phase + 1),) + st.components[1:]
    report = check_constants_of_motion(replace(st, components=broken))
    assert {"jz_mu", "K_kappa"} <= set(report.failures)


def test_negative_control_mu_sign(params):
    # spinor built for mu = +3/2 but labelled mu = -3/2
    st = assemble_state(build_radial(validate_state(2, "3/2", "3/2"), params))
    relabelled = replace(st, qn=st.qn.with_mu(-3))
    assert not check_constants_of_motion(relabelled).ok


def test_negative_control_three_components(params):
    st = assemble_state(build_radial(validate_state(1, "1/2", "1/2"), params))
    extra = st.components[:1] + (Component(1.0, "f", st.lower_phase),) + st.components[2:]
    assert "two_components" in check_constants_of_motion(replace(st, components=extra)).failures
