"""Alice's signal pair and Eve's 01-symmetric probe interaction.

Coefficients use the binary index K = 8m + 4n + 2r + s of A_{mnrs}, the
amplitude for |e_m> -> |e_n, v_rs>.  Under 01-symmetry only K = 0..7 are
independent and A_{15-K} = A_K.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError, InvalidCoefficientsError

UNITARITY_TOL = 1e-9


@dataclass(frozen=True)
class SignalPair:
    """Two equiprobable real qubit states at angle ``alpha`` from the basis axes."""

    alpha: float

    def __post_init__(self):
        if not -1e-15 <= self.alpha <= math.pi / 4 + 1e-15:
            raise InvalidArgumentError("alpha must lie in [0, pi/4]")

    @property
    def overlap(self) -> float:
        return math.sin(2 * self.alpha)

    def vector(self, label: int) -> np.ndarray:
        return signal_vector(self.alpha, label)

    @property
    def vectors(self) -> tuple[np.ndarray, np.ndarray]:
        return self.vector(0), self.vector(1)

    @property
    def priors(self) -> tuple[float, float]:
        return (0.5, 0.5)


def signal_vector(alpha: float, label: int) -> np.ndarray:
    c, s = math.cos(alpha), math.sin(alpha)
    if label == 0:
        return np.array([c, s])
    if label == 1:
        return np.array([s, c])
    raise InvalidArgumentError("signal label must be 0 or 1")


@dataclass(frozen=True)
class ProbeParams:
    """Eve's interaction angles (lambda, mu, theta, phi), in radians."""

    lam: float
    mu: float
    theta: float
    phi: float

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.lam, self.mu, self.theta, self.phi)


IDENTITY_PARAMS = ProbeParams(0.0, 0.0, 0.0, math.pi / 4)


@dataclass(frozen=True)
class InteractionTensor:
    flat: np.ndarray

    @property
    def blocks(self) -> np.ndarray:
        """View indexed as ``[m, n, beta]`` with beta = 2r + s."""
        return self.flat.reshape(2, 2, 4)

    def __getitem__(self, k: int) -> float:
        return float(self.flat[k])


def index_map(m: int, n: int, r: int, s: int) -> int:
    for i in (m, n, r, s):
        if i not in (0, 1):
            raise InvalidArgumentError(f"binary index expected, got {i}")
    return 8 * m + 4 * n + 2 * r + s


def build_coefficients(p: ProbeParams) -> np.ndarray:
    lam, mu, th, ph = p.as_tuple()
    sl, cl = math.sin(lam), math.cos(lam)
    ct, st = math.cos(th), math.sin(th)
    cp, sp = math.cos(ph), math.sin(ph)
    return np.array([
        sl * math.cos(mu),
        cl * ct * cp,
        cl * ct * sp,
        sl * math.sin(mu),
        0.0,
        cl * st * cp,
        -cl * st * sp,
        0.0,
    ])


def unitarity_residuals(x: np.ndarray) -> tuple[float, float]:
    """(|sum X_K^2 - 1|, |sum X_K X_{7-K}|) for an 8-vector of coefficients."""
    x = np.asarray(x, dtype=float)
    return abs(float(x @ x) - 1.0), abs(float(x @ x[::-1]))


def expand_tensor(x: np.ndarray) -> InteractionTensor:
    x = np.asarray(x, dtype=float)
    if x.shape != (8,):
        raise InvalidArgumentError("coefficient vector must have 8 entries")
    norm_res, orth_res = unitarity_residuals(x)
    if norm_res > UNITARITY_TOL or orth_res > UNITARITY_TOL:
        raise InvalidCoefficientsError(
            f"unitarity violated (norm {norm_res:.2e}, orthogonality {orth_res:.2e})"
        )
    return InteractionTensor(np.concatenate([x, x[::-1]]))


def interaction(p: ProbeParams) -> InteractionTensor:
    return expand_tensor(build_coefficients(p))


def row_gram(a: InteractionTensor) -> np.ndarray:
    """Gram matrix of the two m-rows; the identity for a valid isometry."""
    rows = a.flat.reshape(2, 8)
    return rows @ rows.T


def isometry(a: InteractionTensor) -> np.ndarray:
    """8x2 matrix mapping Alice's qubit into the joint space (index 4n + beta)."""
    return a.flat.reshape(2, 8).T.copy()
