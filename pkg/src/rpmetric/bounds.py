"""Closed-form evaluation of the generalisation and excess-empirical-error
bounds, the ambient-space comparison bound, and a conditional Monte Carlo
estimator of the empirical Rademacher complexity of the compressed metric
class.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .metric import PairSet
from .projection import Projection, apply_projection

# relative eigenvalue threshold below which the sign of an eigenvalue of the
# sign-weighted scatter is treated as numerical noise
_EIG_RTOL = 1e-12


@dataclass(frozen=True)
class BoundInputs:
    """Scalar inputs shared by the bound evaluators.

    k: projection dimension; n: number of training pairs; s_x: stable
    dimension of the data support; rho: loss Lipschitz slope; eps: failure
    probability in (0, 1); d: ambient dimension (only the ambient bound
    needs it).
    """

    k: int
    n: int
    s_x: float
    rho: float
    eps: float
    d: int | None = None

    def __post_init__(self):
        if self.k < 1 or self.n < 1:
            raise ValueError("k and n must be positive integers")
        if self.s_x <= 0:
            raise ValueError("s_x must be positive")
        if self.rho < 0:
            raise ValueError("rho must be non-negative")
        if not 0.0 < self.eps < 1.0:
            raise ValueError("eps must lie strictly inside (0, 1)")
        if self.d is not None and self.s_x > self.d + 1e-12:
            raise ValueError("s_x cannot exceed the ambient dimension")


def generalisation_bound(b: BoundInputs) -> float:
    """High-probability uniform bound on the compressed generalisation gap:
    2 rho sqrt(k/n) (1 + sqrt(s/k) + sqrt(2 ln(2/eps)/k))^2
    + sqrt(ln(2/eps) / (2n)).
    """
    log_term = math.log(2.0 / b.eps)
    inner = 1.0 + math.sqrt(b.s_x / b.k) + math.sqrt(2.0 * log_term / b.k)
    return 2.0 * b.rho * math.sqrt(b.k / b.n) * inner * inner + math.sqrt(
        log_term / (2.0 * b.n)
    )


def excess_empirical_bound(b: BoundInputs) -> float:
    """High-probability bound on the compressed-vs-ambient empirical gap:
    rho (1 + sqrt(s/k) + sqrt(2 ln(1/eps)/k))^2. Never below rho.
    """
    inner = 1.0 + math.sqrt(b.s_x / b.k) + math.sqrt(
        2.0 * math.log(1.0 / b.eps) / b.k
    )
    return b.rho * inner * inner


def ambient_bound(b: BoundInputs) -> float:
    """Uniform generalisation bound for the ambient-space class:
    2 rho sqrt(d/n) + sqrt(ln(1/eps) / (2n)).
    """
    if b.d is None:
        raise ValueError("ambient bound requires the ambient dimension d")
    return 2.0 * b.rho * math.sqrt(b.d / b.n) + math.sqrt(
        math.log(1.0 / b.eps) / (2.0 * b.n)
    )


@dataclass(frozen=True)
class RademacherEstimate:
    """Monte Carlo estimate of the conditional empirical Rademacher
    complexity; num_clamped counts sign draws whose weighted scatter had no
    positive eigenvalue (the supremum is then clamped to zero)."""

    value: float
    std_error: float
    num_samples: int
    num_clamped: int


def rademacher_sup(sign_scatter: np.ndarray, diam_ref: float) -> tuple[float, bool]:
    """Supremum of tr(M^T M S) over metrics with sigma_max(M) = 1/diam_ref.

    Attained by placing the scaled projector onto the positive eigenspace of
    S; if S has no positive eigenvalue the constrained supremum is
    non-positive and the contribution is clamped to zero (flagged).
    """
    eigs = np.linalg.eigvalsh(sign_scatter)
    scale = float(np.max(np.abs(eigs))) if eigs.size else 0.0
    pos = eigs[eigs > _EIG_RTOL * scale] if scale > 0 else np.empty(0)
    if pos.size == 0:
        return 0.0, True
    return float(pos.sum()) / (diam_ref * diam_ref), False


def rademacher_estimate_mc(
    pairs: PairSet,
    r: Projection,
    diam_ref: float,
    num_sigma_draws: int = 1000,
    seed: int = 0,
) -> RademacherEstimate:
    """Estimate (1/n) E_sigma sup_M sum_i sigma_i ||M R (x_i - x_i')||^2 for
    the spectrally constrained class, conditionally on the given pairs and
    projection. The inner supremum is evaluated in closed form per draw.
    """
    if pairs.n == 0:
        raise ValueError("empty pair set")
    if num_sigma_draws < 2:
        raise ValueError("num_sigma_draws must be at least 2")
    v = apply_projection(r, pairs.left) - apply_projection(r, pairs.right)
    rng = np.random.default_rng(seed)
    vals = np.empty(num_sigma_draws)
    clamped = 0
    for t in range(num_sigma_draws):
        sigma = rng.integers(0, 2, size=pairs.n) * 2.0 - 1.0
        s = v.T @ (sigma[:, None] * v)
        sup, was_clamped = rademacher_sup(s, diam_ref)
        vals[t] = sup / pairs.n
        clamped += was_clamped
    return RademacherEstimate(
        value=float(vals.mean()),
        std_error=float(vals.std(ddof=1) / math.sqrt(num_sigma_draws)),
        num_samples=num_sigma_draws,
        num_clamped=clamped,
    )


@dataclass(frozen=True)
class TradeoffRow:
    k: int
    generalisation: float
    excess_empirical: float
    ambient: float


def tradeoff_table(
    k_grid, n: int, s_x: float, rho: float, eps: float, d: int
) -> list[TradeoffRow]:
    """Evaluate all three bounds across a grid of projection dimensions."""
    ks = [int(k) for k in k_grid]
    if not ks:
        raise ValueError("k grid must be non-empty")
    rows = []
    for k in ks:
        b = BoundInputs(k=k, n=n, s_x=s_x, rho=rho, eps=eps, d=d)
        rows.append(
            TradeoffRow(
                k=k,
                generalisation=generalisation_bound(b),
                excess_empirical=excess_empirical_bound(b),
                ambient=ambient_bound(b),
            )
        )
    return rows
