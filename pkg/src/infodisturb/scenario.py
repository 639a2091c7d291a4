"""Alice -> Eve -> Bob bookkeeping for the maximal-information attack."""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import frontier
from .channel import disturbance_lambda_zero
from .infotheory import SymmetricPair, accessible_info_symmetric
from .model import ProbeParams, build_coefficients


@dataclass(frozen=True)
class ScenarioReport:
    alpha: float
    theta: float
    I_AE: float
    I_EB: float
    I_AB: float
    D: float
    z_AB: float
    degenerate: bool = False


def resend_angle(alpha: float) -> float:
    """Angle of the states Eve effectively forwards to Bob (tan 2theta = S / (1 - S^2))."""
    s = math.sin(2 * alpha)
    # 1 - S^2 = cos^2 2alpha, exact near alpha = pi/4
    return 0.5 * math.atan2(s, math.cos(2 * alpha) ** 2)


def bob_reduced_pair(alpha: float, theta: float, phi: float) -> SymmetricPair:
    """Bob's two received density matrices for a lambda = 0 probe."""
    x = build_coefficients(ProbeParams(0.0, 0.0, theta, phi))
    c0, c1 = math.cos(alpha), math.sin(alpha)
    y00, y01 = c0 * x[1] + c1 * x[6], c0 * x[2] + c1 * x[5]   # Y_{0,01}, Y_{0,10}
    y10, y11 = c0 * x[5] + c1 * x[2], c0 * x[6] + c1 * x[1]   # Y_{1,01}, Y_{1,10}
    a = y00 ** 2 + y01 ** 2
    b = y10 ** 2 + y11 ** 2
    c = y00 * y10 + y01 * y11
    return SymmetricPair(a, b, c)


def scenario_report(alpha: float, theta: float | None = None) -> ScenarioReport:
    """Mutual informations along the chain; ``theta`` defaults to the resend angle."""
    degenerate = abs(math.cos(2 * alpha)) < 1e-15
    if theta is None:
        theta = resend_angle(alpha)
    pair = bob_reduced_pair(alpha, theta, 0.0)
    return ScenarioReport(
        alpha=alpha,
        theta=theta,
        I_AE=frontier.max_information(alpha),
        I_EB=frontier.max_information(theta),
        I_AB=accessible_info_symmetric(pair),
        D=disturbance_lambda_zero(alpha, theta, 0.0),
        z_AB=pair.z,
        degenerate=degenerate,
    )
