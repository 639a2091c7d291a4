"""Small dense linear algebra helpers for the qubit-probe system.

The joint system is a qubit (Alice/Bob) tensored with a 4-dimensional probe.
Joint basis vector |e_m, v_beta> sits at flat index ``4*m + beta``, and the
probe index is itself the binary pair ``beta = 2*r + s``.
"""
from __future__ import annotations

import numpy as np

from .errors import DegenerateInputError, InvalidArgumentError

DIM_A = 2
DIM_E = 4

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12


def flatten_index(m: int, beta: int) -> int:
    if not (0 <= m < DIM_A and 0 <= beta < DIM_E):
        raise InvalidArgumentError(f"index pair ({m}, {beta}) out of range")
    return DIM_E * m + beta


def unflatten_index(k: int) -> tuple[int, int]:
    if not 0 <= k < DIM_A * DIM_E:
        raise InvalidArgumentError(f"joint index {k} out of range")
    return divmod(k, DIM_E)


def hermitian_residual(m: np.ndarray) -> float:
    return float(np.max(np.abs(m - m.conj().T)))


def is_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
    m = np.asarray(m)
    return m.ndim == 2 and m.shape[0] == m.shape[1] and hermitian_residual(m) < tol


def eigenvalues(m: np.ndarray) -> np.ndarray:
    """Ascending eigenvalues of a Hermitian matrix."""
    return np.linalg.eigvalsh(np.asarray(m))


def min_eigenvalue(m: np.ndarray) -> float:
    return float(eigenvalues(m)[0])


def is_density_matrix(rho: np.ndarray, tol: float = 1e-12) -> bool:
    rho = np.asarray(rho)
    if not is_hermitian(rho, tol):
        return False
    if abs(np.trace(rho).real - 1.0) > tol:
        return False
    return min_eigenvalue(rho) >= -tol


def projector(psi: np.ndarray) -> np.ndarray:
    psi = np.asarray(psi)
    return np.outer(psi, psi.conj())


def partial_trace(rho: np.ndarray, side: str) -> np.ndarray:
    """Reduce an 8x8 joint density matrix.

    ``side="traceE"`` traces out the probe and returns Bob's 2x2 matrix;
    ``side="traceB"`` traces out the qubit and returns the probe's 4x4 matrix.
    """
    rho = np.asarray(rho)
    n = DIM_A * DIM_E
    if rho.shape != (n, n):
        raise InvalidArgumentError(f"expected an {n}x{n} matrix, got {rho.shape}")
    if hermitian_residual(rho) >= HERMITIAN_TOL:
        raise InvalidArgumentError("joint matrix is not Hermitian")
    if abs(np.trace(rho) - 1.0) >= TRACE_TOL:
        raise InvalidArgumentError("joint matrix does not have unit trace")
    t = rho.reshape(DIM_A, DIM_E, DIM_A, DIM_E)
    if side == "traceE":
        return np.einsum("aebe->ab", t)
    if side == "traceB":
        return np.einsum("aeaf->ef", t)
    raise InvalidArgumentError(f"unknown side {side!r}; use 'traceE' or 'traceB'")


def make_rng(seed: int) -> np.random.Generator:
    """PCG64 generator seeded from an unsigned 64-bit integer."""
    if not 0 <= int(seed) < 2**64:
        raise InvalidArgumentError("seed must be an unsigned 64-bit integer")
    return np.random.Generator(np.random.PCG64(int(seed)))


def spawn_seeds(seed: int, n: int) -> list[int]:
    """Derive ``n`` independent child seeds from ``seed`` deterministically."""
    children = np.random.SeedSequence(int(seed)).spawn(n)
    return [int(c.generate_state(1, dtype=np.uint64)[0]) for c in children]


def random_density_matrix(
    rng: np.random.Generator, dim: int, rank: int, real: bool = False
) -> np.ndarray:
    """Random state rho = G G^dagger / Tr with G a dim x rank Gaussian matrix."""
    if dim < 1 or not 1 <= rank <= dim:
        raise InvalidArgumentError(f"need 1 <= rank <= dim, got rank={rank}, dim={dim}")
    g = rng.standard_normal((dim, rank))
    if not real:
        g = g + 1j * rng.standard_normal((dim, rank))
    rho = g @ g.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return rho / np.trace(rho).real


def gram_orthonormalize(vectors, tol: float = 1e-10) -> list[np.ndarray]:
    """Modified Gram-Schmidt; raises on (numerically) dependent input."""
    out: list[np.ndarray] = []
    for v in vectors:
        w = np.array(v, dtype=complex)
        scale = np.linalg.norm(w)
        # two passes keep the result orthonormal to ~1e-15
        for _ in range(2):
            for u in out:
                w = w - np.vdot(u, w) * u
        norm = np.linalg.norm(w)
        if scale == 0.0 or norm <= tol * max(scale, 1.0):
            raise DegenerateInputError("input vectors are linearly dependent")
        out.append(w / norm)
    return out
