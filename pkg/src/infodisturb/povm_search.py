"""Mutual-information maximization over rank-one POVMs.

A rank-one POVM with ``k`` outcomes in dimension ``n`` is stored as a k x n
frame matrix F whose rows are the conjugated vectors w_mu^dagger, so that
completeness reads F^dagger F = 1.  Ascent steps move F along the gradient of
I and are followed by the polar projection F (F^dagger F)^{-1/2} back onto the
set of valid frames.  With k = n the frame is an orthonormal basis.
"""
from __future__ import annotations

import numpy as np

from .errors import DegenerateFrameError, InvalidArgumentError
from .infotheory import Ensemble, Povm, mutual_information


def project_frame(f: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Nearest valid frame in Frobenius norm (polar factor of ``f``)."""
    u, s, vh = np.linalg.svd(f, full_matrices=False)
    if s[-1] <= tol * max(s[0], 1.0):
        raise DegenerateFrameError("frame does not span the state space")
    return u @ vh


def frame_probabilities(f: np.ndarray, states: np.ndarray) -> np.ndarray:
    """P[mu, i] = w_mu^dagger rho_i w_mu for frame rows w_mu^dagger."""
    return np.real(np.einsum("mj,ijk,mk->mi", f, states, f.conj()))


def frame_information(f: np.ndarray, states: np.ndarray, priors: np.ndarray) -> float:
    joint = np.clip(frame_probabilities(f, states), 0.0, None) * priors
    q = joint.sum(axis=1, keepdims=True)
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(joint > 0, joint * np.log(joint / (q * priors)), 0.0)
    return float(terms.sum())


def _gradient(f: np.ndarray, states: np.ndarray, priors: np.ndarray) -> np.ndarray:
    p = np.clip(frame_probabilities(f, states), 1e-300, None)
    q = p @ priors
    weights = priors * np.log(p / q[:, None])          # [mu, i]
    return np.einsum("mi,mj,ijk->mk", weights, f, states)


def ascend(f: np.ndarray, e: Ensemble, max_iter: int = 3000, tol: float = 1e-15,
           step: float = 1.0) -> tuple[np.ndarray, float]:
    """Projected gradient ascent with adaptive step; never decreases I."""
    states, priors = e.states, e.priors
    f = project_frame(f)
    info = frame_information(f, states, priors)
    stalls = 0
    for _ in range(max_iter):
        g = _gradient(f, states, priors)
        while True:
            try:
                trial = project_frame(f + step * g)
            except DegenerateFrameError:
                step *= 0.5
                continue
            trial_info = frame_information(trial, states, priors)
            if trial_info >= info or step < 1e-12:
                break
            step *= 0.5
        if trial_info < info:
            break
        gain = trial_info - info
        f, info = trial, trial_info
        step = min(step * 1.5, 1e3)
        stalls = stalls + 1 if gain <= tol else 0
        if stalls >= 3:
            break
    return f, info


def random_frame(rng: np.random.Generator, n_outcomes: int, dim: int,
                 real: bool = False) -> np.ndarray:
    g = rng.standard_normal((n_outcomes, dim))
    if not real:
        g = g + 1j * rng.standard_normal((n_outcomes, dim))
    return project_frame(g)


def optimize_povm(e: Ensemble, n_outcomes: int, rng: np.random.Generator,
                  restarts: int = 8, init=None) -> tuple[Povm, float]:
    """Best rank-one POVM with ``n_outcomes`` elements over several random starts.

    ``init`` optionally supplies extra starting frames (k x dim arrays).
    Returns the POVM and its mutual information in nats.
    """
    dim = e.dim
    if n_outcomes < dim:
        raise InvalidArgumentError("need at least as many outcomes as dimensions")
    if restarts < 1:
        raise InvalidArgumentError("restarts must be positive")
    real = bool(np.isrealobj(e.states))
    starts = [np.asarray(f) for f in (init or [])]
    starts += [random_frame(rng, n_outcomes, dim, real) for _ in range(restarts)]
    best_f, best_i = None, -np.inf
    for f0 in starts:
        f, info = ascend(f0, e)
        if info > best_i:
            best_f, best_i = f, info
    povm = Povm.from_vectors(best_f.conj())
    return povm, mutual_information(e, povm)
