"""Propagation of a signal state through Eve's probe interaction."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import matcore
from .errors import InvalidArgumentError
from .model import InteractionTensor, ProbeParams


@dataclass(frozen=True)
class PropagationResult:
    Y: np.ndarray        # 2x4, Y[n, beta]
    rhoB: np.ndarray     # 2x2
    rhoE: np.ndarray     # 4x4
    Z: np.ndarray        # 4
    D: float


def _check_signal(c) -> np.ndarray:
    c = np.asarray(c, dtype=float)
    if c.shape != (2,):
        raise InvalidArgumentError("signal must be a real 2-vector")
    if abs(float(c @ c) - 1.0) > 1e-12:
        raise InvalidArgumentError("signal vector is not normalized")
    return c


def output_amplitudes(c, a: InteractionTensor) -> np.ndarray:
    """Y[n, beta] = sum_m c_m A[m, n, beta]."""
    return np.einsum("m,mnb->nb", _check_signal(c), a.blocks)


def joint_state(c, a: InteractionTensor) -> np.ndarray:
    """|psi'> as an 8-vector in the Alice-major joint basis."""
    return output_amplitudes(c, a).reshape(-1)


def propagate(c, a: InteractionTensor) -> PropagationResult:
    c = _check_signal(c)
    y = output_amplitudes(c, a)
    z = c @ y
    return PropagationResult(
        Y=y,
        rhoB=y @ y.T,
        rhoE=y.T @ y,
        Z=z,
        D=1.0 - float(z @ z),
    )


def disturbance_from_trace(c, a: InteractionTensor) -> float:
    """1 - <psi| Tr_E |psi'><psi'| |psi>, going through the full joint matrix."""
    c = _check_signal(c)
    psi = joint_state(c, a)
    rho_b = matcore.partial_trace(matcore.projector(psi), "traceE")
    return 1.0 - float(np.real(c @ rho_b @ c))


def disturbance_closed_form(alpha: float, p: ProbeParams) -> float:
    s = math.sin(2 * alpha)
    lam, mu, th, ph = p.as_tuple()
    cl2 = math.cos(lam) ** 2
    sl2 = math.sin(lam) ** 2
    return (
        cl2 * math.sin(th) ** 2
        - 0.5 * s * cl2 * math.sin(2 * th) * math.cos(2 * ph)
        + 0.5 * s * s * (
            sl2 * (1.0 - math.sin(2 * mu))
            + cl2 * math.cos(2 * th) * (1.0 - math.sin(2 * ph))
        )
    )


def disturbance_lambda_zero(alpha: float, theta: float, phi: float) -> float:
    """Disturbance of the two-dimensional (lambda = 0) probe family."""
    s = math.sin(2 * alpha)
    return (
        math.sin(theta) ** 2
        - 0.5 * s * math.sin(2 * theta) * math.cos(2 * phi)
        + 0.5 * s * s * math.cos(2 * theta) * (1.0 - math.sin(2 * phi))
    )


def conditional_states(c, a: InteractionTensor) -> list[tuple[int, np.ndarray, float]]:
    """Bob's unnormalized state for each probe outcome beta, with its probability.

    Returned unnormalized so zero-probability outcomes need no special case.
    """
    y = output_amplitudes(c, a)
    return [(beta, y[:, beta].copy(), float(y[:, beta] @ y[:, beta])) for beta in range(4)]
