"""Shannon entropy, Bayesian updating and POVM mutual information (in nats)."""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import matcore
from .errors import (
    InvalidArgumentError,
    InvalidDistributionError,
    InvalidPairError,
    InvalidPovmError,
)

COMPLETENESS_TOL = 1e-10
RENORMALIZE_TOL = 1e-8
MIN_OUTCOME_PROB = 1e-15


def _inv_sqrt_psd(m: np.ndarray) -> np.ndarray:
    w, v = np.linalg.eigh(m)
    return (v / np.sqrt(w)) @ v.conj().T


@dataclass(frozen=True)
class Povm:
    """Measurement elements stacked as an array of shape (outcomes, dim, dim).

    ``renormalized`` is set when small completeness drift was corrected by
    the congruence S^{-1/2} E S^{-1/2}, with S the element sum.
    """

    elements: np.ndarray
    renormalized: bool = field(default=False, compare=False)

    @classmethod
    def checked(cls, elements) -> "Povm":
        e = np.array(elements)
        if e.ndim != 3 or e.shape[1] != e.shape[2]:
            raise InvalidPovmError("POVM elements must be square matrices of equal size")
        dim = e.shape[1]
        for el in e:
            if matcore.hermitian_residual(el) > COMPLETENESS_TOL:
                raise InvalidPovmError("POVM element is not Hermitian")
            if matcore.min_eigenvalue(el) < -COMPLETENESS_TOL:
                raise InvalidPovmError("POVM element is not positive semidefinite")
        total = e.sum(axis=0)
        drift = float(np.max(np.abs(total - np.eye(dim))))
        if drift <= COMPLETENESS_TOL:
            return cls(e)
        if drift > RENORMALIZE_TOL:
            raise InvalidPovmError(f"POVM elements sum to identity only within {drift:.2e}")
        warnings.warn(f"renormalizing POVM with completeness drift {drift:.2e}")
        t = _inv_sqrt_psd(total)
        return cls(np.einsum("ij,mjk,kl->mil", t, e, t), renormalized=True)

    @classmethod
    def from_vectors(cls, vectors) -> "Povm":
        """Rank-one POVM E_mu = |w_mu><w_mu| from the rows of ``vectors``."""
        w = np.asarray(vectors)
        return cls.checked(np.einsum("mi,mj->mij", w, w.conj()))

    @property
    def dim(self) -> int:
        return self.elements.shape[1]

    def __len__(self) -> int:
        return self.elements.shape[0]


@dataclass(frozen=True)
class Ensemble:
    states: np.ndarray
    priors: np.ndarray

    @classmethod
    def of(cls, states, priors=None) -> "Ensemble":
        s = np.array(states)
        if s.ndim != 3 or s.shape[1] != s.shape[2]:
            raise InvalidArgumentError("states must be square matrices of equal size")
        if priors is None:
            p = np.full(len(s), 1.0 / len(s))
        else:
            p = np.asarray(priors, dtype=float)
        _check_distribution(p, 1e-12)
        if len(p) != len(s):
            raise InvalidArgumentError("one prior per state required")
        return cls(s, p)

    @property
    def dim(self) -> int:
        return self.states.shape[1]


@dataclass(frozen=True)
class SymmetricPair:
    """Density matrices ((a, c), (c, b)) and ((b, c), (c, a))."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        if abs(self.a + self.b - 1.0) > 1e-12:
            raise InvalidPairError("a + b must equal 1")
        if self.a * self.b - self.c ** 2 < -1e-12:
            raise InvalidPairError("determinant ab - c^2 is negative")

    @property
    def matrices(self) -> tuple[np.ndarray, np.ndarray]:
        return (np.array([[self.a, self.c], [self.c, self.b]]),
                np.array([[self.b, self.c], [self.c, self.a]]))

    @property
    def z(self) -> float:
        """(1 - 4ab)^(1/2), evaluated as |a - b| (equal when a + b = 1).

        The direct form loses half the significant digits when a ~ b.
        """
        return abs(self.a - self.b)


def _check_distribution(p: np.ndarray, tol: float) -> None:
    if p.ndim != 1 or len(p) == 0:
        raise InvalidDistributionError("probabilities must be a non-empty vector")
    if np.any(p < -tol):
        raise InvalidDistributionError("negative probability")
    if abs(float(p.sum()) - 1.0) > tol:
        raise InvalidDistributionError(f"probabilities sum to {p.sum()!r}")


def shannon_entropy(p) -> float:
    p = np.asarray(p, dtype=float)
    _check_distribution(p, 1e-9)
    nz = p[p > 0]
    return float(-np.sum(nz * np.log(nz)))


def povm_outcome_probabilities(e: Ensemble, m: Povm) -> np.ndarray:
    """P[mu, i] = Tr(E_mu rho_i)."""
    if e.dim != m.dim:
        raise InvalidArgumentError(f"state dimension {e.dim} != POVM dimension {m.dim}")
    return np.real(np.einsum("mjk,ikj->mi", m.elements, e.states))


def posteriors(e: Ensemble, m: Povm) -> tuple[np.ndarray, np.ndarray]:
    """Outcome probabilities q[mu] and Bayes posteriors Q[i, mu]."""
    joint = povm_outcome_probabilities(e, m) * e.priors  # [mu, i]
    q = joint.sum(axis=1)
    safe = np.where(q > MIN_OUTCOME_PROB, q, 1.0)
    return q, (joint / safe[:, None]).T


def mutual_information(e: Ensemble, m: Povm) -> float:
    q, post = posteriors(e, m)
    h_prior = shannon_entropy(e.priors)
    h_cond = 0.0
    for mu, qm in enumerate(q):
        if qm < MIN_OUTCOME_PROB:
            continue
        col = np.clip(post[:, mu], 0.0, None)
        nz = col[col > 0]
        h_cond += qm * float(-np.sum(nz * np.log(nz)))
    return h_prior - h_cond


def information_from_z(z: float) -> float:
    """[(1+z) ln(1+z) + (1-z) ln(1-z)] / 2."""
    z = abs(z)
    if z >= 1.0:
        return math.log(2.0)
    return 0.5 * ((1 + z) * math.log1p(z) + (1 - z) * math.log1p(-z))


def accessible_info_symmetric(sp: SymmetricPair) -> float:
    return information_from_z(sp.z)


def _binary_info(p0: np.ndarray, p1: np.ndarray) -> np.ndarray:
    """Vectorized I for two equiprobable states, P[mu, i] given per outcome."""
    out = np.zeros(np.broadcast(p0, p1).shape)
    q = 0.5 * (p0 + p1)
    for p in (p0, p1):
        with np.errstate(divide="ignore", invalid="ignore"):
            term = np.where(p > 0, 0.5 * p * np.log(p / q), 0.0)
        out = out + term
    return out


def projective_information_2d(rho0, rho1, angle) -> np.ndarray:
    """I for equiprobable real 2x2 states measured in a basis rotated by ``angle``.

    Vectorized over ``angle``.
    """
    rho0, rho1 = np.asarray(rho0), np.asarray(rho1)
    c, s = np.cos(angle), np.sin(angle)
    total = 0.0
    for u, v in ((c, s), (-s, c)):
        p0 = rho0[0, 0] * u * u + 2 * rho0[0, 1] * u * v + rho0[1, 1] * v * v
        p1 = rho1[0, 0] * u * u + 2 * rho1[0, 1] * u * v + rho1[1, 1] * v * v
        total = total + _binary_info(np.clip(p0, 0, None), np.clip(p1, 0, None))
    return total


def best_projective_information_2d(rho0, rho1, n_grid: int = 10_000) -> float:
    """Dense sweep over real projective bases followed by golden-section refinement."""
    angles = np.linspace(0.0, math.pi / 2, n_grid, endpoint=False)
    values = projective_information_2d(rho0, rho1, angles)
    k = int(np.argmax(values))
    step = angles[1] - angles[0]
    lo, hi = angles[k] - step, angles[k] + step

    def f(t):
        return float(projective_information_2d(rho0, rho1, t))

    g = (math.sqrt(5) - 1) / 2
    x1, x2 = hi - g * (hi - lo), lo + g * (hi - lo)
    f1, f2 = f(x1), f(x2)
    while hi - lo > 1e-10:
        if f1 < f2:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + g * (hi - lo)
            f2 = f(x2)
        else:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - g * (hi - lo)
            f1 = f(x1)
    return max(float(values[k]), f1, f2)
