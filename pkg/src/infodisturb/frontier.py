"""Closed-form information-disturbance tradeoff for two equiprobable pure states.

Along the frontier Eve's probe is two-dimensional (lambda = 0) and the free
angle ``phi`` in [0, pi/4] trades information for disturbance: phi = pi/4 is
the identity interaction, phi = 0 the maximal-information attack.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError
from .infotheory import information_from_z

QUARTER_PI = math.pi / 4


@dataclass(frozen=True)
class FrontierPoint:
    phi: float
    theta0: float
    D0: float
    z: float
    I: float
    saturated: bool = False


def _s(alpha: float) -> float:
    return math.sin(2 * alpha)


def _one_minus_sin2phi(phi: float) -> float:
    # 1 - sin 2phi = 2 sin^2(pi/4 - phi), exact near phi = pi/4
    return 2.0 * math.sin(QUARTER_PI - phi) ** 2


def theta_min(alpha: float, phi: float) -> float:
    """Probe angle theta minimizing the disturbance at fixed phi (2*theta in [0, pi))."""
    s = _s(alpha)
    num = s * math.sin(2 * (QUARTER_PI - phi))  # S cos 2phi
    den = 1.0 - s * s * _one_minus_sin2phi(phi)
    two_theta = math.atan2(num, den)
    if two_theta < 0:
        two_theta += math.pi
    return 0.5 * two_theta


def min_disturbance(alpha: float, phi: float) -> float:
    """Minimal discrepancy rate D0 at fixed phi.

    Uses 1 - (S^2 cos^2 2phi + [1 - S^2 (1 - sin 2phi)]^2) = S^2 (1 - S^2)(1 - sin 2phi)^2
    to avoid the cancellation in 1 - sqrt(...) when D0 is tiny.
    """
    s2 = _s(alpha) ** 2
    w = _one_minus_sin2phi(phi)
    u = math.sqrt(s2) * math.sin(2 * (QUARTER_PI - phi))
    v = 1.0 - s2 * w
    root = math.hypot(u, v)
    return s2 * (1.0 - s2) * w * w / (2.0 * (1.0 + root))


def max_disturbance_d1(alpha: float) -> float:
    """Minimal disturbance compatible with maximal information (phi = 0)."""
    return min_disturbance(alpha, 0.0)


def max_information(alpha: float) -> float:
    c2 = math.cos(alpha) ** 2
    s2 = math.sin(alpha) ** 2
    total = math.log(2.0)
    for p in (c2, s2):
        if p > 0:
            total += p * math.log(p)
    return total


def z_of_phi(alpha: float, phi: float) -> float:
    return math.cos(2 * alpha) * math.sin(2 * (QUARTER_PI - phi))


def z_of_disturbance(alpha: float, d0: float) -> float:
    """Invert the frontier: z as a function of the disturbance D0 in [0, D1]."""
    d1 = max_disturbance_d1(alpha)
    if d1 <= 0.0:
        return abs(math.cos(2 * alpha))
    d0 = min(max(d0, 0.0), d1)
    ratio = math.sqrt(d0 * (1.0 - d0) / (d1 * (1.0 - d1)))
    return math.cos(2 * alpha) * math.sqrt(max(0.0, 1.0 - (1.0 - ratio) ** 2))


def information_at_disturbance(alpha: float, d: float) -> float:
    """Largest I attainable at disturbance ``d``; constant I_max beyond D1."""
    if d < 0:
        raise InvalidArgumentError("disturbance must be nonnegative")
    if d >= max_disturbance_d1(alpha):
        return max_information(alpha)
    return information_from_z(z_of_disturbance(alpha, d))


def frontier_point(alpha: float, phi: float) -> FrontierPoint:
    z = z_of_phi(alpha, phi)
    return FrontierPoint(
        phi=phi,
        theta0=theta_min(alpha, phi),
        D0=min_disturbance(alpha, phi),
        z=z,
        I=information_from_z(z),
    )


def frontier_curve(alpha: float, n_points: int) -> list[FrontierPoint]:
    """Frontier sampled at ``n_points`` phi values from pi/4 down to 0 (D increasing)."""
    if n_points < 2:
        raise InvalidArgumentError("need at least two frontier points")
    phis = np.linspace(QUARTER_PI, 0.0, n_points)
    phis[0], phis[-1] = QUARTER_PI, 0.0
    return [frontier_point(alpha, float(p)) for p in phis]


def saturation_point(alpha: float) -> FrontierPoint | None:
    """Flat continuation of the curve beyond D1.

    Realized by the phi = 0, theta = 0 probe, which reaches D = S^2/2 while
    still yielding I_max.  None when that disturbance does not exceed D1.
    """
    s2 = _s(alpha) ** 2
    d = 0.5 * s2
    if d <= max_disturbance_d1(alpha):
        return None
    z = math.cos(2 * alpha)
    return FrontierPoint(phi=0.0, theta0=0.0, D0=d, z=z, I=information_from_z(z), saturated=True)


@dataclass(frozen=True)
class AsymptoticCheck:
    epsilon: float
    I_exact: float
    I_approx: float
    D0_exact: float
    D0_approx: float

    @property
    def I_rel_error(self) -> float:
        return abs(self.I_exact - self.I_approx) / self.I_exact

    @property
    def D0_rel_error(self) -> float:
        return abs(self.D0_exact - self.D0_approx) / self.D0_exact


def asymptotic_check(alpha: float, epsilon: float) -> AsymptoticCheck:
    """Exact frontier at phi = pi/4 - epsilon/2 next to its small-epsilon limits."""
    if not 0.0 < epsilon < 0.1:
        raise InvalidArgumentError("epsilon must lie in (0, 0.1)")
    pt = frontier_point(alpha, QUARTER_PI - 0.5 * epsilon)
    cos2a = math.cos(2 * alpha)
    if abs(cos2a) < 1e-15:
        # identical signals: tan 2alpha diverges, the exact values are both zero
        return AsymptoticCheck(epsilon, pt.I, pt.I, pt.D0, pt.D0)
    i_approx = (epsilon * cos2a) ** 2 / 2.0
    d_approx = (i_approx * math.tan(2 * alpha)) ** 2 / 4.0
    return AsymptoticCheck(epsilon, pt.I, i_approx, pt.D0, d_approx)
