"""Derivative-free minimization by Powell's direction-set method.

Line minimizations bracket downhill and then refine with Brent's parabolic
search (golden section is available as a fallback).  Directions are updated
with the usual discard-largest-decrease rule and, optionally, reset to the
coordinate axes every few sweeps, which keeps the set from degenerating in
long, curved valleys.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

GOLD = (math.sqrt(5.0) - 1.0) / 2.0  # 0.618...
GROW = 1.0 + GOLD                     # 1.618...


@dataclass
class PowellResult:
    x: np.ndarray
    fun: float
    sweeps: int
    nfev: int
    converged: bool


def bracket(f: Callable[[float], float], a: float = 0.0, b: float = 1.0,
            fa: float | None = None, max_steps: int = 60):
    """Walk downhill from (a, b) until f(a) > f(b) < f(c).  Returns a, b, c and values."""
    fa = f(a) if fa is None else fa
    fb = f(b)
    if fb > fa:
        a, b, fa, fb = b, a, fb, fa
    c = b + GROW * (b - a)
    fc = f(c)
    steps = 0
    while fc <= fb and steps < max_steps:
        a, b, fa, fb = b, c, fb, fc
        c = b + GROW * (b - a)
        fc = f(c)
        steps += 1
    return a, b, c, fa, fb, fc


def golden_section(f: Callable[[float], float], a: float, b: float, c: float, fb: float,
                   xtol: float = 1e-9):
    """Minimize a unimodal f on the bracket (a, c) containing b."""
    lo, hi = min(a, c), max(a, c)
    if hi - b > b - lo:
        x1, f1 = b, fb
        x2 = b + (1.0 - GOLD) * (hi - b)
        f2 = f(x2)
    else:
        x2, f2 = b, fb
        x1 = b - (1.0 - GOLD) * (b - lo)
        f1 = f(x1)
    while hi - lo > xtol * (1.0 + abs(x1) + abs(x2)):
        if f2 < f1:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + GOLD * (hi - lo)
            f2 = f(x2)
        else:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - GOLD * (hi - lo)
            f1 = f(x1)
    return (x1, f1) if f1 < f2 else (x2, f2)


def line_minimize(f: Callable[[np.ndarray], float], x: np.ndarray, fx: float,
                  d: np.ndarray, xtol: float = 1e-9, search=None):
    """Minimize f(x + t d) over t; never returns a point worse than x."""
    def g(t: float) -> float:
        return f(x + t * d)

    a, b, c, _, fb, _ = bracket(g, 0.0, 1.0, fa=fx)
    t, ft = (search or brent)(g, a, b, c, fb, xtol)
    if ft < fx:
        return x + t * d, ft
    return x, fx


def powell_minimize(f: Callable[[np.ndarray], float], x0, step=0.5, ftol: float = 1e-12,
                    max_sweeps: int = 500, xtol: float = 1e-9, reset_every: int = 10,
                    search=None) -> PowellResult:
    """Minimize f from x0.  Converged when a full sweep lowers f by less than ``ftol``.

    ``reset_every`` restores the coordinate directions every that many sweeps
    (0 disables); ``search`` is the 1-d minimizer (default :func:`brent`).
    """
    calls = [0]

    def fc(x):
        calls[0] += 1
        return f(x)

    x = np.array(x0, dtype=float)
    n = len(x)
    dirs = np.eye(n) * np.broadcast_to(np.asarray(step, dtype=float), (n,))[:, None]
    fx = fc(x)
    converged = False
    sweep = 0
    for sweep in range(1, max_sweeps + 1):
        if reset_every and sweep % reset_every == 0:
            dirs = np.eye(n) * np.broadcast_to(np.asarray(step, dtype=float), (n,))[:, None]
        x_start, f_start = x.copy(), fx
        big_i, big_drop = 0, 0.0
        for i in range(n):
            f_prev = fx
            x, fx = line_minimize(fc, x, fx, dirs[i], xtol, search)
            if f_prev - fx > big_drop:
                big_i, big_drop = i, f_prev - fx
        if f_start - fx < ftol:
            converged = True
            break
        d_new = x - x_start
        f_ext = fc(x + d_new)
        if f_ext < f_start:
            t = (2.0 * (f_start - 2.0 * fx + f_ext) * (f_start - fx - big_drop) ** 2
                 - big_drop * (f_start - f_ext) ** 2)
            if t < 0.0:
                x, fx = line_minimize(fc, x, fx, d_new, xtol, search)
                dirs[big_i] = dirs[-1]
                dirs[-1] = d_new
    return PowellResult(x=x, fun=fx, sweeps=sweep, nfev=calls[0], converged=converged)


def brent(f: Callable[[float], float], a: float, b: float, c: float, fb: float,
          xtol: float = 1e-9, max_iter: int = 200):
    """Golden-section search accelerated by parabolic steps (Brent's method)."""
    cgold = 1.0 - GOLD
    lo, hi = min(a, c), max(a, c)
    x = w = v = b
    fx = fw = fv = fb
    e = d = 0.0
    for _ in range(max_iter):
        xm = 0.5 * (lo + hi)
        tol1 = xtol * abs(x) + 1e-12
        tol2 = 2.0 * tol1
        if abs(x - xm) <= tol2 - 0.5 * (hi - lo):
            break
        use_golden = True
        if abs(e) > tol1:
            r = (x - w) * (fx - fv)
            q = (x - v) * (fx - fw)
            p = (x - v) * q - (x - w) * r
            q = 2.0 * (q - r)
            if q > 0.0:
                p = -p
            q = abs(q)
            e_prev = e
            e = d
            if abs(p) < abs(0.5 * q * e_prev) and q * (lo - x) < p < q * (hi - x):
                d = p / q
                u = x + d
                if u - lo < tol2 or hi - u < tol2:
                    d = tol1 if xm >= x else -tol1
                use_golden = False
        if use_golden:
            e = (lo - x) if x >= xm else (hi - x)
            d = cgold * e
        u = x + d if abs(d) >= tol1 else x + (tol1 if d >= 0 else -tol1)
        fu = f(u)
        if fu <= fx:
            if u >= x:
                lo = x
            else:
                hi = x
            v, w, x = w, x, u
            fv, fw, fx = fw, fx, fu
        else:
            if u < x:
                lo = u
            else:
                hi = u
            if fu <= fw or w == x:
                v, w = w, u
                fv, fw = fw, fu
            elif fu <= fv or v == x or v == w:
                v, fv = u, fu
    return x, fx
