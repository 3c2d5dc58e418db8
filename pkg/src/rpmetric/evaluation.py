"""1-nearest-neighbour classification under an optional learned metric.

Queries are answered by a brute-force scan over the training set on squared
distances; ties go to the smallest training index, which argmin over a fixed
row order guarantees.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .data import LabeledDataset
from .metric import Metric

_CHUNK_CELLS = 4_000_000


@dataclass(frozen=True)
class EvalResult:
    error_rate: float
    num_correct: int
    num_total: int
    wall_time_ms: float


def _transform(features: np.ndarray, m: Metric | None) -> np.ndarray:
    if m is None:
        return features
    if features.shape[1] != m.m:
        raise ValueError(f"features have dimension {features.shape[1]}, metric expects {m.m}")
    return features @ m.matrix.T


def knn_predict(train: LabeledDataset, query, m: Metric | None = None) -> int:
    """Label of the training point nearest to the query under x -> Mx."""
    if train.n == 0:
        raise ValueError("empty training set")
    q = np.asarray(query, dtype=float)
    if q.shape != (train.d,):
        raise ValueError(f"query has shape {q.shape}, expected ({train.d},)")
    tx = _transform(train.features, m)
    tq = _transform(q[None, :], m)[0]
    diff = tx - tq
    d2 = np.sum(diff * diff, axis=1)
    return int(train.labels[int(np.argmin(d2))])


def evaluate(
    train: LabeledDataset, test: LabeledDataset, m: Metric | None = None
) -> EvalResult:
    """1-NN error rate of every test query against the training set."""
    if train.n == 0 or test.n == 0:
        raise ValueError("datasets must be non-empty")
    if train.d != test.d:
        raise ValueError("train and test dimensions differ")
    t0 = time.perf_counter()
    tx = _transform(train.features, m)
    qx = _transform(test.features, m)
    correct = 0
    chunk = max(1, _CHUNK_CELLS // (train.n * max(train.d, 1)))
    for start in range(0, test.n, chunk):
        block = qx[start:start + chunk]
        diff = block[:, None, :] - tx[None, :, :]
        d2 = np.sum(diff * diff, axis=2)
        nearest = np.argmin(d2, axis=1)
        correct += int(np.sum(train.labels[nearest] == test.labels[start:start + chunk]))
    wall = (time.perf_counter() - t0) * 1000.0
    return EvalResult(
        error_rate=1.0 - correct / test.n,
        num_correct=correct,
        num_total=test.n,
        wall_time_ms=wall,
    )
