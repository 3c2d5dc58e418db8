"""Gaussian random projection matrices, their application to point sets, and
an empirical tail-frequency check of the dimension-free sup-norm bound
sup_{x in T} ||Rx|| <= b a(k) + omega(T) + eps for unit-variance R.

Seed-to-matrix mapping (stable across versions): the k*d entries are one
row-major block from numpy's default_rng(seed).standard_normal((k, d)); the
inv_k_variance mode multiplies that same block by 1/sqrt(k) entrywise.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import WidthEstimate, _as_points, expected_norm_a, gaussian_width_mc

SCALE_MODES = ("unit_variance", "inv_k_variance")


@dataclass(frozen=True)
class Projection:
    """A k x d matrix of i.i.d. Gaussian entries, reproducible from its seed."""

    matrix: np.ndarray
    k: int
    d: int
    scale_mode: str
    seed: int

    def __post_init__(self):
        if self.scale_mode not in SCALE_MODES:
            raise ValueError(f"unknown scale_mode {self.scale_mode!r}")
        if not (1 <= self.k <= self.d):
            raise ValueError("projection requires 1 <= k <= d")
        if self.matrix.shape != (self.k, self.d):
            raise ValueError("matrix shape does not match (k, d)")


def sample_projection(
    k: int, d: int, scale_mode: str = "inv_k_variance", seed: int = 0
) -> Projection:
    """Draw a k x d Gaussian projection with N(0,1) or N(0,1/k) entries."""
    if k < 1 or d < 1:
        raise ValueError("k and d must be positive")
    if k > d:
        raise ValueError("projection dimension exceeds ambient dimension")
    if scale_mode not in SCALE_MODES:
        raise ValueError(f"unknown scale_mode {scale_mode!r}")
    rng = np.random.default_rng(seed)
    matrix = rng.standard_normal((k, d))
    if scale_mode == "inv_k_variance":
        matrix = matrix / math.sqrt(k)
    matrix.setflags(write=False)
    return Projection(matrix=matrix, k=k, d=d, scale_mode=scale_mode, seed=seed)


def apply_projection(r: Projection, x) -> np.ndarray:
    """Apply the projection to a single vector (d,) or a point set (n, d)."""
    arr = np.asarray(x, dtype=float)
    if arr.ndim == 1:
        if arr.shape[0] != r.d:
            raise ValueError(f"vector has dimension {arr.shape[0]}, expected {r.d}")
        return arr @ r.matrix.T
    if arr.ndim == 2:
        if arr.shape[1] != r.d:
            raise ValueError(f"points have dimension {arr.shape[1]}, expected {r.d}")
        return arr @ r.matrix.T
    raise ValueError("input must be a vector or a 2-d point set")


@dataclass(frozen=True)
class GordonTailResult:
    """Outcome of the empirical tail check.

    violation_fraction: fraction of draws with max_x ||Rx|| > rhs_used.
    theoretical_bound: exp(-eps^2 / (2 b^2)) with b = max_x ||x||.
    rhs_used: b a(k) + estimated width + eps.
    width_estimate: the Monte Carlo width whose std_error feeds test slack.
    """

    violation_fraction: float
    theoretical_bound: float
    rhs_used: float
    width_estimate: WidthEstimate
    num_draws: int


def gordon_tail_check(
    t,
    k: int,
    epsilon: float,
    num_draws: int = 2000,
    width_samples: int = 5000,
    seed: int = 0,
) -> GordonTailResult:
    """Empirically check the sup-norm tail bound for unit-variance R.

    The width on the right-hand side is estimated once (the bound's rhs is
    deterministic); independent R draws come from a stream spawned from the
    same seed so the whole check is reproducible.
    """
    pts = _as_points(t)
    if k < 1:
        raise ValueError("k must be positive")
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if num_draws < 1:
        raise ValueError("num_draws must be positive")
    b = float(np.sqrt(np.max(np.sum(pts * pts, axis=1))))
    width = gaussian_width_mc(pts, num_samples=width_samples, seed=seed)
    rhs = b * expected_norm_a(k) + width.value + epsilon
    if b > 0:
        bound = math.exp(-epsilon * epsilon / (2.0 * b * b))
    else:
        bound = 0.0
    draw_rng = np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(1,)))
    violations = 0
    for _ in range(num_draws):
        r = draw_rng.standard_normal((k, pts.shape[1]))
        norms_sq = np.sum((pts @ r.T) ** 2, axis=1)
        if math.sqrt(float(norms_sq.max())) > rhs:
            violations += 1
    return GordonTailResult(
        violation_fraction=violations / num_draws,
        theoretical_bound=bound,
        rhs_used=rhs,
        width_estimate=width,
        num_draws=num_draws,
    )
