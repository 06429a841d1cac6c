import math

import pytest

from dirac2d.errors import SupercriticalCharge
from dirac2d.quantum_numbers import PhysicalParams, enumerate_states, validate_state
from dirac2d.spectrum import energy, energy_nonrel, gamma_param, gamma_plus_kappa

LAM = (1.0 / 137.03599976) ** 2

# 40-digit mpmath evaluation of the level formula, frozen
E_MPMATH = {
    (1, "1/2"): -2.0001065140523271945,
    (2, "1/2"): -0.22223405705467388322,
    (2, "3/2"): -0.22222353708602867705,
    (3, "1/2"): -0.080002897124136767442,
    (3, "3/2"): -0.08000062482381857318,
    (3, "5/2"): -0.080000170405058728954,
}


def test_gamma_values():
    assert gamma_param(0.5, 0.0) == 0.5
    assert gamma_param(0.5, LAM) == pytest.approx(0.49994674580999619311, rel=1e-15)
    with pytest.raises(SupercriticalCharge):
        gamma_param(0.5, 0.3)


def test_gamma_plus_kappa_negative_kappa_is_accurate():
    # direct sqrt(k^2 - lam) + k loses about five digits here
    exact = -LAM / (math.sqrt(0.25 - LAM) + 0.5)
    assert gamma_plus_kappa(-0.5, LAM) == pytest.approx(exact, rel=1e-15)
    assert gamma_plus_kappa(0.5, LAM) == pytest.approx(0.99994674580999619311, rel=1e-15)


@pytest.mark.parametrize("key", sorted(E_MPMATH))
def test_energy_against_high_precision(key):
    n, kappa = key
    E = energy(validate_state(n, kappa, kappa), PhysicalParams()).E
    assert abs(E - E_MPMATH[key]) <= 2e-15 * abs(E_MPMATH[key])


def test_table_values():
    p = PhysicalParams()
    assert abs(energy(validate_state(1, "1/2", "1/2"), p).E - -2.000106514052) < 5e-12
    assert abs(energy(validate_state(2, "1/2", "1/2"), p).E - -0.222234057055) < 5e-12
    e_plus = energy(validate_state(3, "3/2", "3/2"), p).E
    e_minus = energy(validate_state(3, "-3/2", "3/2"), p).E
    assert e_plus == e_minus
    assert abs(e_plus - -0.080000624824) < 5e-12


def test_degeneracy_bit_identical(params):
    for q in enumerate_states(4, params):
        if q.two_kappa > 0 and q.n_prime > 0:
            partner = validate_state(q.n, -q.kappa_frac, q.mu_frac)
            assert energy(q, params).E == energy(partner, params).E


def test_ordering_in_abs_kappa(params):
    for n in range(2, 5):
        levels = [energy(validate_state(n, f"{k}/2", f"{k}/2"), params).E for k in range(1, 2 * n, 2)]
        assert all(a < b for a, b in zip(levels, levels[1:]))


def test_result_invariants(params):
    for q in enumerate_states(3, params):
        r = energy(q, params)
        assert r.E < 0 and 2 + r.lam * r.E > 0
        assert 0 < r.gamma_val < abs(q.kappa)
        assert abs(r.alpha_val**2 + r.E * (2 + r.lam * r.E)) < 1e-14
        assert r.W == pytest.approx(params.c**2 + r.E, rel=1e-15)


def test_nonrel_values():
    assert energy_nonrel(1) == -2.0
    assert energy_nonrel(2) == -2.0 / 9.0
    with pytest.raises(ValueError):
        energy_nonrel(0)


def test_large_c_limit():
    p = PhysicalParams(c=1e6)
    for q in enumerate_states(3, p):
        assert abs(energy(q, p).E - energy_nonrel(q.n)) < 1e-9


def test_lambda_scaling_first_order():
    q = validate_state(2, "1/2", "1/2")
    gaps = []
    for c in (137.03599976, 137.03599976 * math.sqrt(2)):
        gaps.append(energy(q, PhysicalParams(c=c)).E - energy_nonrel(2))
    assert gaps[0] / gaps[1] == pytest.approx(2.0, rel=0.05)


def test_supercritical_energy():
    with pytest.raises(SupercriticalCharge):
        energy(validate_state(1, "1/2", "1/2"), PhysicalParams(Z=100.0))
