import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from infodisturb import channel, frontier, model, scenario
from infodisturb.model import ProbeParams

A36 = math.radians(36)


def test_resend_angle_examples():
    assert math.degrees(scenario.resend_angle(math.radians(22.5))) == pytest.approx(27.3678, abs=1e-3)
    assert math.degrees(scenario.resend_angle(A36)) == pytest.approx(42.1332, abs=1e-3)
    assert scenario.resend_angle(0.0) == 0.0
    assert scenario.resend_angle(math.pi / 4) == pytest.approx(math.pi / 4, abs=1e-15)


@given(st.floats(0.0, math.pi / 4))
def test_resend_angle_equals_theta_min_at_max_attack(alpha):
    assert abs(scenario.resend_angle(alpha) - frontier.theta_min(alpha, 0.0)) < 1e-12
    assert scenario.resend_angle(alpha) >= alpha - 1e-15


def test_resend_angle_monotone():
    a = np.linspace(0, math.pi / 4 - 1e-9, 500)
    t = [scenario.resend_angle(x) for x in a]
    assert np.all(np.diff(t) > 0)
    assert all(tt > x for tt, x in zip(t[1:], a[1:]))


def test_report_36_degrees():
    r = scenario.scenario_report(A36)
    assert r.I_AE == pytest.approx(0.048536, abs=1e-6)
    assert math.degrees(r.theta) == pytest.approx(42.1332, abs=1e-3)
    assert r.I_EB == pytest.approx(0.0049987, abs=1e-7)
    assert r.z_AB == pytest.approx(0.0308718, abs=1e-7)
    assert r.I_AB == pytest.approx(0.0004766, abs=1e-7)
    assert 0.098 <= r.I_EB / r.I_AE <= 0.108
    assert not r.degenerate


def test_report_orthogonal_signals():
    r = scenario.scenario_report(0.0)
    for v in (r.I_AE, r.I_EB, r.I_AB):
        assert v == pytest.approx(math.log(2), abs=1e-15)
    assert r.D == 0


def test_orthogonal_resend_variant():
    r = scenario.scenario_report(A36, theta=0.0)
    assert r.I_AB == pytest.approx(r.I_AE, abs=1e-15)
    assert r.D == pytest.approx(0.452254, abs=1e-6)


def test_degenerate_flag():
    assert scenario.scenario_report(math.pi / 4).degenerate


@given(st.floats(1e-3, math.pi / 4 - 1e-3))
def test_report_invariants(alpha):
    r = scenario.scenario_report(alpha)
    assert r.I_AB < r.I_EB < r.I_AE
    assert abs(r.z_AB - math.cos(2 * alpha) * math.cos(2 * r.theta)) < 1e-12
    assert abs(r.D - frontier.max_disturbance_d1(alpha)) < 1e-12


@given(st.floats(0.0, math.pi / 4), st.floats(-math.pi, math.pi))
def test_bob_pair_independent_of_phi(alpha, theta):
    zs = [scenario.bob_reduced_pair(alpha, theta, phi).z for phi in (0.0, math.pi / 8, math.pi / 4)]
    assert max(zs) - min(zs) < 1e-10
    assert abs(zs[0] - abs(math.cos(2 * alpha) * math.cos(2 * theta))) < 1e-10


def test_bob_pair_theta_zero():
    assert scenario.bob_reduced_pair(0.3, 0.0, 0.2).z == pytest.approx(math.cos(0.6), abs=1e-15)


@given(st.floats(0.0, math.pi / 4), st.floats(-math.pi, math.pi), st.floats(0, math.pi / 4))
def test_bob_pair_matches_propagation(alpha, theta, phi):
    sp = scenario.bob_reduced_pair(alpha, theta, phi)
    a = model.interaction(ProbeParams(0, 0, theta, phi))
    rb0 = channel.propagate(model.signal_vector(alpha, 0), a).rhoB
    rb1 = channel.propagate(model.signal_vector(alpha, 1), a).rhoB
    m0, m1 = sp.matrices
    np.testing.assert_allclose(rb0, m0, atol=1e-12)
    np.testing.assert_allclose(rb1, m1, atol=1e-12)
