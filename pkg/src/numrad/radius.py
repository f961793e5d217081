"""Numerical radius: angle-sweep computation and a sampling oracle.

The sweep evaluates g(theta) = lambda_max(Re(e^{i theta} A)) on a uniform
grid over [0, 2pi) and golden-section refines around the best grid point.
The oracle maximizes |<Ax,x>| over sampled unit vectors with a monotone
phase-aligned ascent, providing an independent lower estimate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matrix import as_matrix
from .optimize import golden_max

DEFAULT_GRID = 720
DEFAULT_THETA_TOL = 1e-10
DEFAULT_ASCENT_STEPS = 50

_MASK = 0xFFFFFFFFFFFFFFFF


def splitmix64(seed: int, index: int) -> int:
    """Deterministic per-index stream seed derived from a base seed."""
    z = (seed + (index + 1) * 0x9E3779B97F4A7C15) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return (z ^ (z >> 31)) & _MASK


@dataclass(frozen=True)
class RadiusEstimate:
    value: float
    theta_star: float
    grid_points: int
    refine_width: float


@dataclass(frozen=True)
class OracleEstimate:
    value: float
    trials: int
    seed: int


def _lambda_max_rotated(a, theta: float) -> float:
    h = (np.exp(1j * theta) * a + np.exp(-1j * theta) * a.conj().T) / 2
    return float(np.linalg.eigvalsh(h)[-1])


def radius_sweep(a, grid_points: int = DEFAULT_GRID,
                 theta_tol: float = DEFAULT_THETA_TOL,
                 refine: bool = True) -> RadiusEstimate:
    """Numerical radius via sup over theta of ||Re(e^{i theta} A)||.

    lambda_max over the full circle is equivalent to using the norm,
    since ||Re(e^{i theta}A)|| = max(g(theta), g(theta + pi)).  With
    refine=False the grid maximum is returned as-is, trading a slight
    (one-sided, low) bias for speed.
    """
    if grid_points < 8:
        raise ValueError("grid_points must be at least 8")
    a = as_matrix(a)
    thetas = 2 * np.pi * np.arange(grid_points) / grid_points
    phases = np.exp(1j * thetas)
    batch = (phases[:, None, None] * a
             + np.conj(phases)[:, None, None] * a.conj().T) / 2
    grid_vals = np.linalg.eigvalsh(batch)[:, -1]
    best = int(np.argmax(grid_vals))
    half = np.pi / grid_points
    if not refine:
        return RadiusEstimate(value=float(grid_vals[best]),
                              theta_star=float(thetas[best]),
                              grid_points=grid_points,
                              refine_width=float(4 * half))
    theta, value, width = golden_max(
        lambda th: _lambda_max_rotated(a, th),
        thetas[best] - 2 * half, thetas[best] + 2 * half, theta_tol)
    if grid_vals[best] > value:
        theta, value = thetas[best], float(grid_vals[best])
    return RadiusEstimate(value=float(value), theta_star=float(theta % (2 * np.pi)),
                          grid_points=grid_points, refine_width=float(width))


def radius_oracle(a, trials: int, seed: int,
                  ascent_steps: int = DEFAULT_ASCENT_STEPS) -> OracleEstimate:
    """Lower estimate of the numerical radius from sampled unit vectors.

    Each trial starts from a complex-Gaussian unit vector drawn from its
    own splitmix-derived stream and runs a monotone renormalized ascent:
    align the phase of <Ax,x>, then take a shifted power step for the
    Hermitian matrix Re(e^{-i phi}A).  The result is the deterministic
    maximum over all trials, independent of execution order.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    a = as_matrix(a)
    n = a.shape[0]
    starts = np.empty((trials, n), dtype=np.complex128)
    for i in range(trials):
        rng = np.random.default_rng(splitmix64(seed, i))
        z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        nz = np.linalg.norm(z)
        if nz == 0.0:
            z = np.zeros(n, dtype=np.complex128)
            z[0] = 1.0
            nz = 1.0
        starts[i] = z / nz
    x = starts
    shift = max(1.0, float(np.linalg.norm(a, 2)))
    best = np.zeros(trials)
    for _ in range(ascent_steps + 1):
        ax = x @ a.T
        q = np.einsum("ti,ti->t", x.conj(), ax)
        best = np.maximum(best, np.abs(q))
        phase = np.where(np.abs(q) > 0, q / np.where(np.abs(q) > 0, np.abs(q), 1.0), 1.0)
        ahx = x @ a.conj()
        hx = (np.conj(phase)[:, None] * ax + phase[:, None] * ahx) / 2
        y = hx + shift * x
        norms = np.linalg.norm(y, axis=1)
        norms = np.where(norms > 0, norms, 1.0)
        x = y / norms[:, None]
    return OracleEstimate(value=float(best.max()), trials=trials, seed=seed)


def power_check(a, k: int):
    """Return (omega(A^k), omega(A)^k), both via the sweep."""
    if k < 1:
        raise ValueError("k must be at least 1")
    a = as_matrix(a)
    lhs = radius_sweep(np.linalg.matrix_power(a, k)).value
    rhs = radius_sweep(a).value ** k
    return lhs, rhs
