"""Numerical search for Eve's best probe at a tolerated disturbance.

The search runs jointly over the four interaction angles (lambda, mu, theta,
phi) and six Givens angles that fix Eve's orthonormal 4-outcome measurement.

Stage one maximizes the penalty merit M = I - w (D - d_tol)^2 from uniformly
random starting angles and keeps the best restart.  The maximizer of M sits
slightly beyond d_tol (by roughly I'(D) / 2w), so stage two pulls the winner
onto the constraint surface D = d_tol with a method-of-multipliers loop on the
residual sqrt(D) - sqrt(d_tol).  The square root keeps the multiplier finite at
d_tol = 0, where I grows like sqrt(D).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels, frontier, matcore
from .channel import propagate
from .errors import InvalidArgumentError
from .infotheory import Ensemble, Povm, mutual_information
from .model import IDENTITY_PARAMS, ProbeParams, SignalPair, interaction
from .povm_search import optimize_povm
from .powell import powell_minimize

MERIT_MODES = ("quadratic", "linear")
N_ANGLES = 10
RESIDUAL_TOL = 1e-8          # on sqrt(D) - sqrt(d_tol)
MAX_OUTER = 40
MAX_WEIGHT = 1e8
TIE_TOL = 1e-9               # merits closer than this count as equal
POLISH_FTOL = 1e-14          # sweep tolerance while polishing onto D = d_tol
FINAL_FTOL = 1e-16
POLISH_STEPS = (0.5, 0.05, 0.005)
POLISH_CYCLES = 5


@dataclass(frozen=True)
class MeritConfig:
    alpha: float
    d_tol: float = 0.0
    penalty_weight: float = 1000.0
    mode: str = "quadratic"

    def __post_init__(self):
        SignalPair(self.alpha)
        if not 0.0 <= self.d_tol <= 0.5:
            raise InvalidArgumentError(f"d_tol must lie in [0, 1/2], got {self.d_tol}")
        if not self.penalty_weight > 0:
            raise InvalidArgumentError("penalty_weight must be positive")
        if self.mode not in MERIT_MODES:
            raise InvalidArgumentError(f"unknown merit mode {self.mode!r}")

    def merit(self, info: float, d: float) -> float:
        if self.mode == "linear":
            return info - self.penalty_weight * d
        return info - self.penalty_weight * (d - self.d_tol) ** 2


@dataclass(frozen=True)
class OptimizeReport:
    params: ProbeParams
    povm: Povm
    I: float
    D: float
    merit: float
    restarts: int
    converged: bool
    seed: int
    restart_seeds: tuple[int, ...]
    best_restart: int
    raw_angles: np.ndarray = field(repr=False)


def evaluate_library(alpha: float, params: ProbeParams, povm: Povm) -> tuple[float, float]:
    """(I, D) from the model/channel/infotheory path, D averaged over both signals."""
    a = interaction(params)
    sp = SignalPair(alpha)
    results = [propagate(c, a) for c in sp.vectors]
    e = Ensemble.of([r.rhoE for r in results], sp.priors)
    d = 0.5 * (results[0].D + results[1].D)
    return mutual_information(e, povm), d


def _objective(cfg: MeritConfig, nu: float = 0.0, weight: float | None = None):
    c0, c1 = math.cos(cfg.alpha), math.sin(cfg.alpha)
    evaluate = _kernels.evaluate
    if cfg.mode == "linear":
        k = cfg.penalty_weight

        def f(x):
            info, d = evaluate(x, c0, c1)
            return -(info - k * d)
        return f
    if weight is None:
        w, dt = cfg.penalty_weight, cfg.d_tol

        def f(x):
            info, d = evaluate(x, c0, c1)
            return -(info - w * (d - dt) ** 2)
        return f
    sd = math.sqrt(cfg.d_tol)

    def f(x):
        info, d = evaluate(x, c0, c1)
        r = math.sqrt(d) - sd
        return -(info - nu * r - weight * r * r)
    return f


def _polish(f, x: np.ndarray, max_sweeps: int) -> tuple[np.ndarray, bool]:
    """Repeated Powell runs with fresh directions at several scales.

    Finishes slow crawls along valleys that are flat to high order: at
    d_tol = D1 the merit depends on lambda only through ~lambda^4 terms.
    """
    fx = f(x)
    ok = True
    for _ in range(POLISH_CYCLES):
        start = fx
        for step in POLISH_STEPS:
            res = powell_minimize(f, x, step=step, ftol=FINAL_FTOL, max_sweeps=max_sweeps)
            x, fx, ok = res.x, res.fun, res.converged
        if start - fx <= 0.0:
            break
    return x, ok


def _refine(cfg: MeritConfig, x: np.ndarray, max_sweeps: int) -> tuple[np.ndarray, bool]:
    """Multiplier loop driving sqrt(D) onto sqrt(d_tol); returns (angles, converged)."""
    c0, c1 = math.cos(cfg.alpha), math.sin(cfg.alpha)
    sd = math.sqrt(cfg.d_tol)
    nu, weight = 0.0, cfg.penalty_weight
    r_prev = None
    for _ in range(MAX_OUTER):
        res = powell_minimize(_objective(cfg, nu, weight), x, ftol=POLISH_FTOL,
                              max_sweeps=max_sweeps)
        x = res.x
        _, d = _kernels.evaluate(x, c0, c1)
        r = math.sqrt(d) - sd
        if abs(r) <= RESIDUAL_TOL:
            # with the multiplier settled any weight keeps the same stationary
            # point; the base weight leaves the valley least stiff
            final, ok = _polish(_objective(cfg, nu, cfg.penalty_weight), x, max_sweeps)
            _, d = _kernels.evaluate(final, c0, c1)
            if abs(math.sqrt(d) - sd) <= RESIDUAL_TOL:
                return final, res.converged and ok
            return x, res.converged
        nu += 2.0 * weight * r
        if r_prev is not None and abs(r) > 0.25 * abs(r_prev):
            weight = min(10.0 * weight, MAX_WEIGHT)
        r_prev = r
    return x, False


def _reduce(x: np.ndarray) -> np.ndarray:
    """Angles wrapped into [-pi, pi)."""
    return (np.asarray(x) + math.pi) % (2 * math.pi) - math.pi


def _basis_povm(angles: np.ndarray) -> Povm:
    return Povm.from_vectors(_kernels.givens_basis(np.asarray(angles, dtype=float)).T)


def maximize_merit(cfg: MeritConfig, seed: int = 0, restarts: int = 20,
                   max_sweeps: int = 500) -> OptimizeReport:
    """Best probe and measurement for ``cfg`` over ``restarts`` random starts.

    Deterministic given ``seed``; each restart draws its starting angles from
    its own derived seed, and ties are broken by the lowest restart index.
    Whenever the identity interaction is as good as the optimum found (as at
    d_tol = 0, where every undisturbing probe yields nothing), the identity is
    reported as the canonical representative.
    """
    if restarts < 1:
        raise InvalidArgumentError("restarts must be at least 1")
    seeds = matcore.spawn_seeds(seed, restarts)
    f = _objective(cfg)
    best = None
    for idx, s in enumerate(seeds):
        x0 = matcore.make_rng(s).uniform(0.0, 2 * math.pi, N_ANGLES)
        res = powell_minimize(f, x0, max_sweeps=max_sweeps)
        if best is None or res.fun < best[1].fun - TIE_TOL:
            best = (idx, res)
    idx, res = best
    x, converged = res.x, res.converged
    if cfg.mode == "quadratic":
        x, refined = _refine(cfg, x, max_sweeps)
        converged = converged and refined
    x = _reduce(x)
    params = ProbeParams(*map(float, x[:4]))
    povm = _basis_povm(x[4:])
    info, d = evaluate_library(cfg.alpha, params, povm)

    ident = IDENTITY_PARAMS
    ident_povm = _basis_povm(np.zeros(6))
    i0, d0 = evaluate_library(cfg.alpha, ident, ident_povm)
    if cfg.merit(i0, d0) >= cfg.merit(info, d) - TIE_TOL:
        params, povm, info, d = ident, ident_povm, i0, d0
        x = np.array(ident.as_tuple() + (0.0,) * 6)

    return OptimizeReport(
        params=params, povm=povm, I=info, D=d, merit=cfg.merit(info, d),
        restarts=restarts, converged=converged, seed=int(seed),
        restart_seeds=tuple(seeds), best_restart=idx, raw_angles=x,
    )


def reduce_lambda(lam: float) -> float:
    """lambda modulo pi, in [-pi/2, pi/2)."""
    return (lam + 0.5 * math.pi) % math.pi - 0.5 * math.pi


@dataclass(frozen=True)
class LambdaRow:
    d_tol: float
    lam: float
    sin_lam: float
    I: float
    D: float
    I_frontier: float
    converged: bool


def lambda_zero_study(alpha: float, d_tol_grid, seed: int = 0,
                      restarts: int = 20) -> list[LambdaRow]:
    """Run the optimizer over a grid of tolerated disturbances and record lambda."""
    rows = []
    for i, dt in enumerate(d_tol_grid):
        rep = maximize_merit(MeritConfig(alpha, float(dt)), seed=seed + i, restarts=restarts)
        lam = reduce_lambda(rep.params.lam)
        rows.append(LambdaRow(
            d_tol=float(dt), lam=lam, sin_lam=abs(math.sin(lam)), I=rep.I, D=rep.D,
            I_frontier=frontier.information_at_disturbance(alpha, float(dt)),
            converged=rep.converged,
        ))
    return rows


@dataclass(frozen=True)
class DaviesTrial:
    dim: int
    states: np.ndarray
    best_info: tuple[float, ...]     # indexed by N_w - dim

    @property
    def info_at_n(self) -> float:
        return self.best_info[0]

    @property
    def improvement(self) -> float:
        return max(self.best_info) - self.best_info[0]


def _pad(f: np.ndarray, rng: np.random.Generator, scale: float = 1e-3) -> np.ndarray:
    extra = scale * rng.standard_normal((1, f.shape[1]))
    if np.iscomplexobj(f):
        extra = extra + 1j * scale * rng.standard_normal((1, f.shape[1]))
    return np.vstack([f, extra])


def davies_trial(states, rng: np.random.Generator, restarts: int = 6) -> DaviesTrial:
    """Best I for every outcome count N_w = N..N^2 on an equiprobable ensemble."""
    e = Ensemble.of(states)
    n = e.dim
    best: list[float] = []
    prev = None
    for k in range(n, n * n + 1):
        init = [] if prev is None else [_pad(prev, rng)]
        povm, info = optimize_povm(e, k, rng, restarts=restarts, init=init)
        # a k-outcome family contains every (k-1)-outcome POVM plus a null element
        if best and info < best[-1]:
            info = best[-1]
        else:
            prev = _frame_of(povm)
        best.append(info)
    return DaviesTrial(dim=n, states=np.asarray(states), best_info=tuple(best))


def _frame_of(povm: Povm) -> np.ndarray:
    """Frame rows w^dagger recovered from rank-one elements."""
    rows = []
    for el in povm.elements:
        w, v = np.linalg.eigh(el)
        rows.append(np.sqrt(max(w[-1], 0.0)) * v[:, -1].conj())
    return np.array(rows)


def davies_experiment(dims, trials: int, seed: int = 0,
                      restarts: int = 6) -> list[DaviesTrial]:
    """Random full-rank state pairs, ``trials`` per dimension, each with its own seed."""
    dims = list(dims)
    if not dims or any(d not in (2, 3, 4) for d in dims):
        raise InvalidArgumentError("dims must be drawn from {2, 3, 4}")
    if trials < 1:
        raise InvalidArgumentError("trials must be at least 1")
    out = []
    for j, dim in enumerate(dims):
        for s in matcore.spawn_seeds(seed + j, trials):
            rng = matcore.make_rng(s)
            states = [matcore.random_density_matrix(rng, dim, dim) for _ in range(2)]
            out.append(davies_trial(states, rng, restarts))
    return out
