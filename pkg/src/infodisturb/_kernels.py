"""Compiled inner loop of the interaction/measurement search.

``evaluate`` fuses coefficient construction, propagation of both signals and
the mutual information of a 4-outcome orthonormal measurement into one
allocation-free routine.  It must agree with the model/channel/infotheory
path to rounding error; the test suite checks that.
"""
from __future__ import annotations

import math

import numpy as np
from numba import njit

# (i, j) planes of the six Givens rotations parameterizing SO(4)
GIVENS_PLANES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
_PLANES = np.array(GIVENS_PLANES, dtype=np.int64)


@njit(cache=True)
def givens_basis(angles):
    """Orthogonal 4x4 matrix whose columns are the measurement vectors."""
    w = np.eye(4)
    for k in range(6):
        i, j = _PLANES[k, 0], _PLANES[k, 1]
        c, s = math.cos(angles[k]), math.sin(angles[k])
        for r in range(4):
            wi, wj = w[r, i], w[r, j]
            w[r, i] = c * wi - s * wj
            w[r, j] = s * wi + c * wj
    return w


@njit(cache=True)
def _coefficients(lam, mu, theta, phi):
    x = np.zeros(16)
    sl, cl = math.sin(lam), math.cos(lam)
    ct, st = math.cos(theta), math.sin(theta)
    cp, sp = math.cos(phi), math.sin(phi)
    x[0] = sl * math.cos(mu)
    x[1] = cl * ct * cp
    x[2] = cl * ct * sp
    x[3] = sl * math.sin(mu)
    x[5] = cl * st * cp
    x[6] = -cl * st * sp
    for k in range(8):
        x[15 - k] = x[k]
    return x


@njit(cache=True)
def evaluate(params, c0, c1):
    """Return (I, D) for params = (lam, mu, theta, phi, six Givens angles).

    D is averaged over the two signals and computed as the squared norm of
    the part of Bob's conditional amplitudes orthogonal to the sent state,
    which equals 1 - sum Z^2 but keeps full relative precision near D = 0.
    """
    a = _coefficients(params[0], params[1], params[2], params[3])
    w = givens_basis(params[4:10])
    probs = np.zeros((4, 2))
    d_total = 0.0
    for i in range(2):
        cm0 = c0 if i == 0 else c1
        cm1 = c1 if i == 0 else c0
        # y[n, beta] = sum_m c_m A[8m + 4n + beta]
        y = np.empty((2, 4))
        for n in range(2):
            for b in range(4):
                y[n, b] = cm0 * a[4 * n + b] + cm1 * a[8 + 4 * n + b]
        for b in range(4):
            zb = cm0 * y[0, b] + cm1 * y[1, b]
            r0 = y[0, b] - zb * cm0
            r1 = y[1, b] - zb * cm1
            d_total += r0 * r0 + r1 * r1
        # P[mu, i] = sum_n (y[n, :] . w[:, mu])^2
        for m in range(4):
            acc = 0.0
            for n in range(2):
                t = 0.0
                for b in range(4):
                    t += y[n, b] * w[b, m]
                acc += t * t
            probs[m, i] = acc
    info = 0.0
    for m in range(4):
        q = 0.5 * (probs[m, 0] + probs[m, 1])
        if q < 1e-300:
            continue
        for i in range(2):
            p = probs[m, i]
            if p > 0.0:
                info += 0.5 * p * math.log(p / q)
    return info, 0.5 * d_total
