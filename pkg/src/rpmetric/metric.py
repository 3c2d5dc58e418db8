"""Spectral-norm-constrained Mahalanobis metrics, the bounded distance-based
loss, empirical pair errors, and two trainers (pairwise hinge-loss descent
and a large-margin nearest-neighbour objective).

Every metric in the hypothesis class has its largest singular value pinned to
1 / diam_ref, which removes arbitrary rescaling; the constraint set is a
sphere in spectral norm, so feasibility after a gradient step is restored by
radial rescaling, which is exact for this constraint.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .data import LabeledDataset
from .projection import Projection, apply_projection

_SPECTRAL_RTOL = 1e-8


@dataclass(frozen=True)
class LossParams:
    """Parameters of the bounded distance-based loss: Lipschitz slope rho and
    the squared-distance thresholds l < u."""

    rho: float
    l: float
    u: float

    def __post_init__(self):
        if self.rho <= 0:
            raise ValueError("rho must be positive")
        if not 0 < self.l < self.u:
            raise ValueError("need 0 < l < u")


@dataclass(frozen=True)
class Metric:
    """A square matrix whose largest singular value equals 1/diam_ref."""

    matrix: np.ndarray
    m: int
    diam_ref: float

    def __post_init__(self):
        if self.matrix.shape != (self.m, self.m):
            raise ValueError("metric matrix must be m x m")
        if self.diam_ref <= 0:
            raise ValueError("diam_ref must be positive")
        top = float(np.linalg.norm(self.matrix, ord=2))
        target = 1.0 / self.diam_ref
        if abs(top - target) > _SPECTRAL_RTOL * target:
            raise ValueError(
                f"metric violates spectral constraint: sigma_max={top:.3e}, "
                f"expected {target:.3e}"
            )


@dataclass(frozen=True)
class PairSet:
    """n instance pairs with a same-label indicator per pair."""

    left: np.ndarray
    right: np.ndarray
    same_label: np.ndarray

    def __post_init__(self):
        if self.left.shape != self.right.shape or self.left.ndim != 2:
            raise ValueError("left and right must be matching (n, d) matrices")
        if self.same_label.shape != (self.left.shape[0],):
            raise ValueError("same_label length must match pair count")

    @property
    def n(self) -> int:
        return self.left.shape[0]

    @property
    def dim(self) -> int:
        return self.left.shape[1]

    def differences(self) -> np.ndarray:
        return self.left - self.right


@dataclass
class TrainConfig:
    max_epochs: int = 100
    step_size: float = 0.1
    batch_size: int = 64
    tolerance: float = 1e-5
    seed: int = 0
    algorithm: str = "pairwise_erm"
    lmnn_neighbors: int = 3
    lmnn_margin: float = 1.0
    lmnn_pull_weight: float = 0.5

    def __post_init__(self):
        if self.step_size <= 0 or self.tolerance <= 0:
            raise ValueError("step_size and tolerance must be positive")
        if self.algorithm not in ("pairwise_erm", "lmnn"):
            raise ValueError(f"unknown algorithm {self.algorithm!r}")
        if not 0.0 <= self.lmnn_pull_weight <= 1.0:
            raise ValueError("lmnn_pull_weight must be in [0, 1]")


def make_pairs(dataset: LabeledDataset, seed: int = 0) -> PairSet:
    """Shuffle indices with the seed and group consecutive disjoint indices
    into floor(n/2) pairs; an odd trailing point is dropped."""
    if dataset.n < 2:
        raise ValueError("need at least 2 points to form pairs")
    rng = np.random.default_rng(seed)
    order = rng.permutation(dataset.n)
    n_pairs = dataset.n // 2
    a = order[0 : 2 * n_pairs : 2]
    b = order[1 : 2 * n_pairs : 2]
    return PairSet(
        left=dataset.features[a],
        right=dataset.features[b],
        same_label=(dataset.labels[a] == dataset.labels[b]).astype(np.uint8),
    )


def project_pairs(r: Projection, pairs: PairSet) -> PairSet:
    """Project both endpoints of every pair (labels untouched)."""
    return PairSet(
        left=apply_projection(r, pairs.left),
        right=apply_projection(r, pairs.right),
        same_label=pairs.same_label,
    )


def loss(sq_dist, same_label, p: LossParams):
    """Bounded distance-based loss on a squared distance.

    Same-label pairs pay min(1, rho * (sq_dist - u)_+); different-label pairs
    pay min(1, rho * (l - sq_dist)_+). Values lie in [0, 1] and the map is
    rho-Lipschitz in sq_dist. Accepts scalars or arrays.
    """
    sq = np.asarray(sq_dist, dtype=float)
    same = np.asarray(same_label)
    vals = np.where(
        same == 1,
        np.minimum(1.0, p.rho * np.maximum(sq - p.u, 0.0)),
        np.minimum(1.0, p.rho * np.maximum(p.l - sq, 0.0)),
    )
    return float(vals) if np.isscalar(sq_dist) else vals


def _pair_sq_dists(matrix: np.ndarray, pairs: PairSet, r: Projection | None) -> np.ndarray:
    if r is not None:
        if pairs.dim != r.d:
            raise ValueError(f"pairs have dimension {pairs.dim}, projection expects {r.d}")
        if matrix.shape[0] != r.k:
            raise ValueError(f"metric is {matrix.shape[0]}-dim, projection outputs {r.k}")
        # project endpoints separately so this path matches a pre-projected
        # dataset bit for bit
        delta = apply_projection(r, pairs.left) - apply_projection(r, pairs.right)
    else:
        if pairs.dim != matrix.shape[0]:
            raise ValueError(
                f"pairs have dimension {pairs.dim}, metric expects {matrix.shape[0]}"
            )
        delta = pairs.differences()
    z = delta @ matrix.T
    return np.sum(z * z, axis=1)


def empirical_error(
    m: Metric, pairs: PairSet, p: LossParams, r: Projection | None = None
) -> float:
    """Mean loss over the pairs, with the optional projection applied before
    the metric."""
    if pairs.n == 0:
        raise ValueError("empty pair set")
    sq = _pair_sq_dists(m.matrix, pairs, r)
    return float(np.mean(loss(sq, pairs.same_label, p)))


def spectral_normalize(m_raw: np.ndarray, diam_ref: float) -> Metric:
    """Rescale a square matrix so its largest singular value is 1/diam_ref."""
    mat = np.asarray(m_raw, dtype=float)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError("metric matrix must be square")
    if diam_ref <= 0:
        raise ValueError("diam_ref must be positive")
    top = float(np.linalg.norm(mat, ord=2))
    if top == 0.0:
        raise ValueError("degenerate metric: zero matrix")
    return Metric(matrix=mat / (diam_ref * top), m=mat.shape[0], diam_ref=diam_ref)


def identity_metric(m: int, diam_ref: float) -> Metric:
    """The Euclidean baseline scaled to feasibility."""
    return spectral_normalize(np.eye(m), diam_ref)


def default_loss_params(sq_dists) -> LossParams:
    """Scale-adaptive defaults: l and u are the 40th and 60th percentiles of
    the squared distances under the initial metric, rho = 2 / (u - l) so the
    loss saturates two bandwidths outside the margin."""
    sq = np.asarray(sq_dists, dtype=float)
    if sq.size == 0:
        raise ValueError("no distances to calibrate on")
    lo = float(np.percentile(sq, 40))
    hi = float(np.percentile(sq, 60))
    if not 0 < lo < hi:
        raise ValueError("degenerate distance distribution; cannot calibrate loss")
    return LossParams(rho=2.0 / (hi - lo), l=lo, u=hi)


def _loss_subgradient_coeffs(sq: np.ndarray, same: np.ndarray, p: LossParams) -> np.ndarray:
    """d loss / d sq_dist per pair, choosing 0 at hinge kinks."""
    active_same = (sq > p.u) & (p.rho * (sq - p.u) < 1.0)
    active_diff = (sq < p.l) & (p.rho * (p.l - sq) < 1.0)
    return np.where(
        same == 1,
        np.where(active_same, p.rho, 0.0),
        np.where(active_diff, -p.rho, 0.0),
    )


def train_pairwise(
    pairs: PairSet, p: LossParams, cfg: TrainConfig, diam_ref: float
) -> Metric:
    """Mini-batch subgradient descent on the empirical pair error.

    Each step moves along the normalised subgradient by a relative length of
    step_size / sqrt(1 + epoch) and is followed by radial rescaling, so every
    iterate is feasible; the iterate with the lowest full-training error is
    returned. Deterministic given cfg.seed.
    """
    if cfg.algorithm != "pairwise_erm":
        raise ValueError("cfg.algorithm must be 'pairwise_erm'")
    if pairs.n == 0:
        raise ValueError("empty pair set")
    deltas = pairs.differences()
    if not np.any(np.abs(deltas) > 0):
        warnings.warn(
            "all pairs are identical points; returning the initial metric",
            RuntimeWarning,
        )
        return identity_metric(pairs.dim, diam_ref)

    current = identity_metric(pairs.dim, diam_ref)
    best = current
    best_err = empirical_error(best, pairs, p)
    rng = np.random.default_rng(cfg.seed)
    stall = 0
    for epoch in range(cfg.max_epochs):
        if best_err == 0.0:
            break
        step = cfg.step_size / math.sqrt(1.0 + epoch)
        order = rng.permutation(pairs.n)
        mat = current.matrix.copy()
        for start in range(0, pairs.n, cfg.batch_size):
            batch = deltas[order[start:start + cfg.batch_size]]
            same = pairs.same_label[order[start:start + cfg.batch_size]]
            z = batch @ mat.T
            sq = np.sum(z * z, axis=1)
            coeff = _loss_subgradient_coeffs(sq, same, p)
            if not np.any(coeff):
                continue
            grad = (2.0 / len(batch)) * (z.T @ (coeff[:, None] * batch))
            gnorm = float(np.linalg.norm(grad, ord=2))
            if gnorm == 0.0:
                continue
            mat = mat - step * (1.0 / (diam_ref * gnorm)) * grad
            top = float(np.linalg.norm(mat, ord=2))
            if top == 0.0:
                mat = np.eye(pairs.dim)
                top = 1.0
            mat = mat / (diam_ref * top)
        current = spectral_normalize(mat, diam_ref)
        err = empirical_error(current, pairs, p)
        if err < best_err - cfg.tolerance:
            stall = 0
        else:
            stall += 1
        if err < best_err:
            best, best_err = current, err
        if stall >= 10:
            break
    return best


def _target_neighbors(features: np.ndarray, labels: np.ndarray, k: int) -> np.ndarray:
    """(n, k) matrix of each point's k nearest same-class neighbours under the
    Euclidean metric."""
    n = features.shape[0]
    targets = np.empty((n, k), dtype=int)
    sq = np.sum(features * features, axis=1)
    for lab in np.unique(labels):
        idx = np.flatnonzero(labels == lab)
        sub = features[idx]
        d2 = sq[idx][:, None] + sq[idx][None, :] - 2.0 * (sub @ sub.T)
        np.fill_diagonal(d2, np.inf)
        nearest = np.argsort(d2, axis=1)[:, :k]
        targets[idx] = idx[nearest]
    return targets


def _pairwise_sq_dists(z: np.ndarray) -> np.ndarray:
    sq = np.sum(z * z, axis=1)
    d2 = sq[:, None] + sq[None, :] - 2.0 * (z @ z.T)
    np.maximum(d2, 0.0, out=d2)
    return d2


def _active_triples(
    d2: np.ndarray, targets: np.ndarray, labels: np.ndarray, margin: float
):
    """Triples (i, j, l) with y_l != y_i whose hinge is currently positive."""
    n, k = targets.shape
    ii, jj, ll = [], [], []
    diff_mask = labels[:, None] != labels[None, :]
    for c in range(k):
        thr = margin + d2[np.arange(n), targets[:, c]]
        act = diff_mask & (d2 < thr[:, None])
        i_idx, l_idx = np.nonzero(act)
        ii.append(i_idx)
        jj.append(targets[i_idx, c])
        ll.append(l_idx)
    return np.concatenate(ii), np.concatenate(jj), np.concatenate(ll)


def _scatter_from_weights(features: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Sum_{i,j} w[i,j] (x_i - x_j)(x_i - x_j)^T via the graph-Laplacian
    identity, O(n^2 d) instead of materialising differences."""
    row = w.sum(axis=1)
    col = w.sum(axis=0)
    lap = np.diag(row + col) - w - w.T
    return features.T @ lap @ features


def train_lmnn(dataset: LabeledDataset, cfg: TrainConfig, diam_ref: float) -> Metric:
    """Large-margin nearest-neighbour training of the linear map.

    Minimises (1 - mu) * sum of target-neighbour squared distances plus
    mu * sum of hinge(margin + d^2(i, target) - d^2(i, impostor)) by gradient
    descent with backtracking; target neighbours are fixed from the initial
    Euclidean metric and the impostor working set is refreshed every 10
    epochs. The best iterate is spectrally normalised on return.
    """
    if cfg.algorithm != "lmnn":
        raise ValueError("cfg.algorithm must be 'lmnn'")
    x = dataset.features
    y = dataset.labels
    labs, counts = np.unique(y, return_counts=True)
    for lab, cnt in zip(labs, counts):
        if cnt < cfg.lmnn_neighbors + 1:
            raise ValueError(
                f"class {lab} has {cnt} points; need at least {cfg.lmnn_neighbors + 1}"
            )
    mu = cfg.lmnn_pull_weight
    margin = cfg.lmnn_margin
    targets = _target_neighbors(x, y, cfg.lmnn_neighbors)
    n = x.shape[0]

    w_pull = np.zeros((n, n))
    for c in range(targets.shape[1]):
        np.add.at(w_pull, (np.arange(n), targets[:, c]), 1.0)
    s_pull = _scatter_from_weights(x, w_pull)

    def objective(mat, triples):
        z = x @ mat.T
        d2 = _pairwise_sq_dists(z)
        pull = float(np.sum(w_pull * d2))
        if triples is None or mu == 0.0:
            return (1.0 - mu) * pull, d2
        ii, jj, ll = triples
        hinge = np.maximum(margin + d2[ii, jj] - d2[ii, ll], 0.0)
        return (1.0 - mu) * pull + mu * float(hinge.sum()), d2

    mat = identity_metric(x.shape[1], diam_ref).matrix
    triples = None
    if mu > 0.0:
        d2 = _pairwise_sq_dists(x @ mat.T)
        triples = _active_triples(d2, targets, y, margin)
    obj, d2 = objective(mat, triples)
    best_mat, best_obj = mat.copy(), obj
    step = cfg.step_size

    for epoch in range(cfg.max_epochs):
        if mu > 0.0 and epoch > 0 and epoch % 10 == 0:
            triples = _active_triples(d2, targets, y, margin)
            obj, d2 = objective(mat, triples)
        scatter = (1.0 - mu) * s_pull
        if mu > 0.0:
            ii, jj, ll = triples
            pos = margin + d2[ii, jj] - d2[ii, ll] > 0.0
            w_push = np.zeros((n, n))
            np.add.at(w_push, (ii[pos], jj[pos]), 1.0)
            np.add.at(w_push, (ii[pos], ll[pos]), -1.0)
            scatter = scatter + mu * _scatter_from_weights(x, w_push)
        grad = 2.0 * mat @ scatter
        gnorm = float(np.linalg.norm(grad))
        if gnorm == 0.0:
            break
        accepted = False
        for _ in range(25):
            cand = mat - step * grad
            cand_obj, cand_d2 = objective(cand, triples)
            if cand_obj < obj:
                mat, obj, d2 = cand, cand_obj, cand_d2
                step *= 1.2
                accepted = True
                break
            step *= 0.5
        if not accepted:
            break
        if obj < best_obj:
            best_mat, best_obj = mat.copy(), obj
        if gnorm * step < cfg.tolerance * max(1.0, abs(obj)):
            break
    return spectral_normalize(best_mat, diam_ref)
