"""Smoke tests for the python bindings."""

import math

import numpy as np
import pytest

import dressedpair as dp


def test_geometry_factors():
    assert dp.geometry_factor_parallel(math.pi) == pytest.approx(
        -3.0 / (2.0 * math.pi**2), rel=1e-13
    )
    assert dp.geometry_factor_axial(math.pi) == pytest.approx(
        3.0 / math.pi**2, rel=1e-13
    )
    assert dp.coupling_g(2.0) == 0.75
    with pytest.raises(ValueError):
        dp.coupling_g(-1.0)


def test_thermal_occupation():
    assert dp.thermal_occupation(math.log(2.0)) == pytest.approx(1.0, rel=1e-13)
    assert dp.thermal_occupation(math.inf) == 0.0


def test_rates_and_window():
    params = dp.SystemParams.from_occupations(1e5, 0.05, 0.0, 0.0)
    rates = dp.dressed_rates(params)
    assert rates.g == pytest.approx(48000.0, rel=1e-14)
    assert rates.omega1 + rates.omega2 == 2e5
    assert rates.gamma1_plus == pytest.approx(0.28119699048682938, rel=1e-12)

    window = dp.validity_window(1e5)
    assert window.rwa_ok
    assert 1e-2 < window.chi_lo < window.chi_hi < 1.0


def test_generator_trace_preservation():
    params = dp.SystemParams.from_occupations(10.0, 1.3, 0.1, 0.2)
    rates = dp.dressed_rates(params)
    L = dp.build_dressed_generator(rates, 0.1, 0.2, 10.0)
    assert L.shape == (16, 16)
    identity_vec = np.eye(4, dtype=complex).flatten(order="F")
    assert np.max(np.abs(L.conj().T @ identity_vec)) < 1e-12


def test_transient_steady_state():
    st = dp.transient_steady_state(1.0, 1.0)
    diag = np.real(np.diag(st.rho))
    assert diag == pytest.approx([4 / 7, 0.0, 2 / 7, 1 / 7], abs=1e-14)


def test_concurrence_paths():
    bell = np.zeros((4, 4), dtype=complex)
    bell[1, 1] = bell[2, 2] = 0.5
    bell[1, 2] = bell[2, 1] = -0.5
    state = dp.DensityMatrix(bell, "computational")
    assert dp.concurrence_general(state) == pytest.approx(1.0, abs=1e-12)

    dressed_bell = dp.DensityMatrix(np.diag([0, 1, 0, 0]).astype(complex), "dressed")
    comp = dp.dressed_to_computational(dressed_bell)
    assert dp.concurrence_x_state(comp) == pytest.approx(1.0, abs=1e-12)

    assert dp.concurrence_transient_steady(0.0, 1.0, 1.0) == 0.0


def test_evolution_routes_agree():
    omega = 10.0
    params = dp.SystemParams.from_occupations(omega, 1.3, 0.0, 0.0)
    rates = dp.dressed_rates(params)
    L = dp.build_dressed_generator(rates, 0.0, 0.0, omega)
    rho0 = dp.parse_initial_state("ket-eg")
    grid = [0.0, 0.5, 2.0]
    rk4 = dp.integrate_linear_ode(L, rho0, grid, max_step=2e-4)
    for t, point in zip(grid, rk4):
        spect = dp.spectral_evolve(rates, omega, rho0, t)
        assert np.max(np.abs(spect.rho - point.rho)) < 1e-8

    closed = dp.evolve_closed_form_zero_temperature(rho0.rho, rates, omega, 0.7)
    spect = dp.spectral_evolve(rates, omega, rho0, 0.7)
    assert np.max(np.abs(closed.rho - spect.rho)) < 1e-12

    c30 = dp.concurrence_excited_atom_zero_T(rates, 0.7)
    pipeline = dp.concurrence_general(dp.dressed_to_computational(spect))
    assert c30 == pytest.approx(pipeline, abs=1e-8)


def test_analytic_eigenvalues_match_numpy():
    omega = 1e3
    params = dp.SystemParams.from_occupations(omega, 0.4, 0.0, 0.0)
    rates = dp.dressed_rates(params)
    L = dp.build_dressed_generator(rates, 0.0, 0.0, omega)
    numeric = np.linalg.eigvals(L)
    for lam in dp.analytic_eigenvalues(rates, omega):
        assert np.min(np.abs(numeric - lam)) / max(abs(lam), 1.0) < 1e-10
