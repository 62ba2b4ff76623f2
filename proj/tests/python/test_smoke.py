"""Smoke tests of the python bindings."""

import math

import pytest

try:
    import udw as m
except ImportError:
    import _udw as m


def test_spectral_identity():
    bath = m.BathParams(beta=1.0)
    for omega in (0.5, 1.0, 2.0):
        diff = m.spectral_f(-omega, bath) - m.spectral_f(omega, bath)
        assert diff == pytest.approx(omega / (2.0 * math.pi), rel=1e-12)


def test_window_diagnostics():
    diag = m.window_diagnostics(m.SwitchingProfile.gaussian(1.0))
    assert diag.ratio == pytest.approx(1.2533, abs=1e-3)
    assert diag.tau_eff == pytest.approx(1.0, rel=1e-6)


def test_thermalization():
    det = m.DetectorParams(omega=1.0, gbar=1.0, tau_s=0.1)
    bath = m.BathParams(beta=1.0)
    grid = m.coefficient_grid(
        m.SwitchingProfile.constant_on(), bath, det, 0.0, 30.0, 601
    )
    traj = m.evolve(grid, 0.0, det)
    assert traj.p[-1] == pytest.approx(1.0 / (1.0 + math.e), abs=1e-3)
    assert traj.memory[-1] < 1e-4


def test_transitions_detailed_balance():
    det = m.DetectorParams(omega=1.0, gbar=1.0, tau_s=0.1)
    bath = m.BathParams(beta=1.0)
    grid = m.coefficient_grid(
        m.SwitchingProfile.constant_on(), bath, det, 0.0, 60.0, 2401
    )
    rep = m.transitions(grid, det)
    assert rep.xi == pytest.approx(math.exp(-1.0), rel=1e-3)
    assert rep.p00 + rep.p01 == pytest.approx(1.0, abs=1e-12)


def test_grid_too_coarse_raises():
    det = m.DetectorParams(omega=1.0, gbar=1.0, tau_s=0.1)
    bath = m.BathParams(beta=1.0)
    grid = m.coefficient_grid(
        m.SwitchingProfile.constant_on(), bath, det, 0.0, 30.0, 11
    )
    with pytest.raises(m.GridTooCoarse):
        m.evolve(grid, 0.0, det)


def test_landauer():
    assert m.p_critical_closed(1.0, 10.0) == pytest.approx(
        1.0 / (1.0 + math.exp(9.0)), rel=1e-12
    )
    assert m.p_critical_exact(1.0, 10.0) == pytest.approx(1.23402e-4, rel=1e-4)
    assert m.critical_beta_star(1.0, 1.0) < 0.0
    assert m.work_bound(1.0, 1.0, 0.3, 0.3) == 0.0
    assert m.tau_eff_critical(1.0, 1e4) == pytest.approx(0.53940, abs=1e-4)


def test_gzk():
    sc = m.gzk.Scenario.with_default_level()
    horizon = m.gzk.horizon_length_mpc(sc, 0.5)
    assert 0.1 < horizon < 100.0
    e_crit = m.gzk.critical_energy(938.3e6, 145.0e6, 3.0)
    assert 1.0e20 < e_crit < 1.6e20


def test_vacuum_exceptions():
    with pytest.raises(m.DomainError):
        m.effective_temperature(m.BathParams.vacuum(), 1.0)
    with pytest.raises(m.InfiniteMeasurement):
        m.leading_order_p01(
            m.SwitchingProfile.constant_on(),
            m.BathParams(beta=1.0),
            m.DetectorParams(omega=1.0, gbar=1.0, tau_s=0.1),
        )
