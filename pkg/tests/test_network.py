"""Steady fields, the two coupling routes, and their agreement properties."""

import cmath
import dataclasses
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fiberspin import (
    NegativeLoss,
    NetworkParams,
    ResonantRecycling,
    apply_fiber_loss,
    coupling,
    coupling_largedelta_lossy,
    denominator,
    fluctuation_coefficients,
    fluctuation_coefficients_closed,
    steady_fields,
    symmetric_phase_sum,
    theta_variants,
    validate_regime,
)

SYM = dict(gamma=1.0, delta=1.0, chi=0.1, drive=10.0, phi12=math.pi / 4, phi21=math.pi / 4)
ASYM = dict(gamma=1.0, delta=0.5, chi=0.1, drive=1.0, phi12=0.3, phi21=0.9)


def sample(rng):
    while True:
        p = NetworkParams(
            gamma=rng.uniform(0.2, 5.0),
            delta=rng.uniform(-5.0, 5.0),
            chi=rng.uniform(0.01, 1.0),
            drive=rng.uniform(0.1, 20.0) * cmath.exp(1j * rng.uniform(0.0, 2.0 * math.pi)),
            phi12=rng.uniform(0.0, 2.0 * math.pi),
            phi21=rng.uniform(0.0, 2.0 * math.pi),
            gamma_f=rng.uniform(0.0, 0.3),
        )
        if abs(denominator(p)) > 1e-6 * (p.gamma**2 + p.delta**2):
            return p


def test_worked_point_fields():
    p = NetworkParams(**SYM)
    s = steady_fields(p)
    assert cmath.isclose(s.alpha, 10.0 - 10.0j, abs_tol=1e-9)
    assert cmath.isclose(s.beta, 10.0 * cmath.exp(-0.25j * math.pi), abs_tol=1e-9)
    assert cmath.isclose(denominator(p), 1j, abs_tol=1e-9)


def test_worked_point_coupling():
    r = coupling(NetworkParams(**SYM))
    assert math.isclose(r.theta1, -100.0, abs_tol=1e-9)
    assert math.isclose(r.theta2, -100.0, abs_tol=1e-9)
    assert math.isclose(r.j_oracle, -2.0, abs_tol=1e-9)
    assert math.isclose(r.j_closed, -2.0, abs_tol=1e-9)
    assert math.isclose(r.j_single, -1.0, abs_tol=1e-9)
    assert math.isclose(r.local1, 20.0, abs_tol=1e-9)
    assert math.isclose(r.local2, 10.0, abs_tol=1e-9)


def test_oracle_equals_closed_sum():
    rng = np.random.default_rng(3)
    for _ in range(300):
        p = sample(rng)
        r = coupling(p)
        target = p.gamma * p.chi**2 * (r.theta1 + r.theta2)
        scale = max(abs(r.j_oracle), abs(target), 1e-300)
        assert abs(r.j_oracle - target) <= 1e-10 * scale
        assert abs(r.j_oracle - r.j_closed) <= 1e-10 * scale


def test_fluctuation_routes_agree():
    rng = np.random.default_rng(5)
    for _ in range(300):
        p = sample(rng)
        s = steady_fields(p)
        solved = fluctuation_coefficients(p, s)
        closed = fluctuation_coefficients_closed(p, s)
        pairs = (
            (solved.c_a1, closed.c_a1),
            (solved.c_a2, closed.c_a2),
            (solved.c_b1, closed.c_b1),
            (solved.c_b2, closed.c_b2),
        )
        for u, v in pairs:
            assert cmath.isclose(u, v, rel_tol=1e-11, abs_tol=1e-14)


def test_symmetric_manifold_theta_equality():
    rng = np.random.default_rng(9)
    for _ in range(100):
        gamma = rng.uniform(0.2, 5.0)
        delta = rng.uniform(-5.0, 5.0)
        phi12 = rng.uniform(0.0, 2.0 * math.pi)
        phi21 = (symmetric_phase_sum(gamma, delta) - phi12) % (2.0 * math.pi)
        p = NetworkParams(
            gamma=gamma,
            delta=delta,
            chi=0.1,
            drive=rng.uniform(0.5, 5.0),
            phi12=phi12,
            phi21=phi21,
        )
        t1, t2 = theta_variants(p, steady_fields(p))
        assert abs(t1 - t2) <= 1e-10 * max(abs(t1), abs(t2), 1e-12)


def test_symmetric_phase_sum_matches_worked_point():
    assert math.isclose(symmetric_phase_sum(1.0, 1.0), math.pi / 2.0, rel_tol=1e-15)


def test_asymmetric_point_thetas_differ():
    r = coupling(NetworkParams(**ASYM))
    assert abs(r.theta1 - r.theta2) > 1e-6
    assert abs(r.j_closed - r.j_single) > 1e-6


@given(st.floats(min_value=0.1, max_value=30.0), st.integers(0, 2**31 - 1))
@settings(max_examples=30, deadline=None)
def test_coupling_scales_with_drive_power(scale, seed):
    rng = np.random.default_rng(seed)
    p = sample(rng)
    r1 = coupling(p)
    r2 = coupling(dataclasses.replace(p, drive=p.drive * scale))
    ref = max(abs(r2.j_oracle), abs(r1.j_oracle) * scale * scale, 1e-300)
    assert abs(r2.j_oracle - scale * scale * r1.j_oracle) <= 1e-9 * ref


def test_zero_drive_zeroes_everything():
    p = NetworkParams(gamma=1.0, delta=0.7, chi=0.2, drive=0.0, phi12=0.1, phi21=0.2)
    s = steady_fields(p)
    assert s.alpha == 0.0 and s.beta == 0.0
    r = coupling(p)
    assert r.j_oracle == 0.0 and r.theta1 == 0.0 and r.theta2 == 0.0


def test_zero_chi_keeps_fields_but_kills_coupling():
    p = NetworkParams(gamma=1.0, delta=0.7, chi=0.0, drive=3.0, phi12=0.1, phi21=0.2)
    s = steady_fields(p)
    assert abs(s.alpha) > 0.0
    r = coupling(p)
    assert r.j_oracle == 0.0 and r.j_closed == 0.0 and r.j_single == 0.0


def test_large_detuning_loss_tracks_squared_ratio():
    # far off resonance the lossy coupling follows |j| * exp(-2*gamma_f)
    base = NetworkParams(gamma=1.0, delta=25.0, chi=0.1, drive=40.0, phi12=0.6, phi21=1.1)
    j0 = abs(coupling(base).j_oracle)
    prev = j0
    for gf in np.linspace(0.0, 0.3, 13):
        cur = abs(coupling(apply_fiber_loss(base, float(gf))).j_oracle)
        assert cur <= prev + 1e-12 * j0
        expect = j0 * math.exp(-2.0 * float(gf))
        assert abs(cur - expect) <= 0.05 * expect
        prev = cur


def test_near_recycling_coupling_grows_without_bound():
    # shrinking delta and the phase sum at fixed drive inflates |j|
    ref = coupling(
        NetworkParams(gamma=1.0, delta=1.0, chi=0.1, drive=1.0, phi12=5e-4, phi21=5e-4)
    )
    near = coupling(
        NetworkParams(gamma=1.0, delta=1e-3, chi=0.1, drive=1.0, phi12=5e-4, phi21=5e-4)
    )
    assert abs(near.j_oracle) > 1e6 * abs(ref.j_oracle)


def test_recycling_guard_names_the_denominator():
    p = NetworkParams(gamma=1.0, delta=0.0, chi=0.1, drive=1.0, phi12=0.0, phi21=0.0)
    with pytest.raises(ResonantRecycling) as err:
        steady_fields(p)
    assert "denominator" in str(err.value)
    with pytest.raises(ResonantRecycling):
        coupling(p)


def test_largedelta_lossy_reference_values():
    assert math.isclose(
        coupling_largedelta_lossy(1.0, 0.0806), math.exp(-0.1612), rel_tol=1e-12
    )
    assert abs(coupling_largedelta_lossy(1.0, 0.0806) - 0.8513) <= 1e-3
    assert abs(coupling_largedelta_lossy(1.0, 0.08) - 0.8521) <= 1e-4
    assert coupling_largedelta_lossy(2.5, 0.0) == 2.5
    with pytest.raises(NegativeLoss):
        coupling_largedelta_lossy(1.0, -0.1)


def test_denominator_gamma_zero():
    p = NetworkParams(gamma=0.0, delta=2.0, chi=0.1, drive=1.0, phi12=0.0, phi21=0.0)
    assert cmath.isclose(denominator(p), -4.0 + 0.0j, abs_tol=1e-12)


def test_regime_diagnostics_fire_and_clear():
    bad = NetworkParams(gamma=0.4, delta=0.0, chi=0.5, drive=0.1, phi12=1.0, phi21=2.0)
    assert len(validate_regime(bad, steady_fields(bad))) == 3
    good = NetworkParams(gamma=50.0, delta=1.0, chi=0.1, drive=2e5, phi12=1.0, phi21=2.0)
    assert validate_regime(good, steady_fields(good)) == []
    off = dataclasses.replace(bad, chi=0.0)
    assert validate_regime(off, steady_fields(off)) == []


def test_apply_fiber_loss_returns_new_params():
    p = NetworkParams(**SYM)
    q = apply_fiber_loss(p, 0.2)
    assert q.gamma_f == 0.2 and p.gamma_f == 0.0
    assert q.gamma == p.gamma and q.drive == p.drive
    with pytest.raises(NegativeLoss):
        apply_fiber_loss(p, -0.2)


def test_params_validation():
    with pytest.raises(ValueError):
        NetworkParams(gamma=-1.0, delta=0.0, chi=0.1, drive=1.0, phi12=0.0, phi21=0.0)
    with pytest.raises(NegativeLoss):
        NetworkParams(
            gamma=1.0, delta=0.0, chi=0.1, drive=1.0, phi12=0.0, phi21=0.0, gamma_f=-0.1
        )
    with pytest.raises(ValueError):
        NetworkParams(gamma=math.nan, delta=0.0, chi=0.1, drive=1.0, phi12=0.0, phi21=0.0)


def test_phases_stored_mod_two_pi():
    p = NetworkParams(
        gamma=1.0, delta=0.0, chi=0.1, drive=1.0, phi12=2.0 * math.pi + 0.25, phi21=-0.25
    )
    assert math.isclose(p.phi12, 0.25, abs_tol=1e-12)
    assert math.isclose(p.phi21, 2.0 * math.pi - 0.25, abs_tol=1e-12)
