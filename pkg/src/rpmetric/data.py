"""Dataset construction and ingestion.

Covers synthetic ellipsoid clouds with controlled stable dimension, canonical
CSV ingestion for benchmark sets, min-max normalisation, zero-padded embedding
into a higher-dimensional space with additive Gaussian noise, and seeded
train/test splitting. Everything is a pure function of (parameters, seeds).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._label_weights import LABEL_WEIGHTS

PROFILE_KINDS = ("constant", "power_decay", "exponential_decay", "explicit")


@dataclass
class LabeledDataset:
    """An (n, d) feature matrix with integer class labels.

    provenance records the generation parameters (seeds, profile, source
    file, gamma, ...) as a flat string-keyed mapping.
    """

    features: np.ndarray
    labels: np.ndarray
    name: str = ""
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        self.features = np.asarray(self.features, dtype=float)
        self.labels = np.asarray(self.labels, dtype=int)
        if self.features.ndim != 2 or self.features.shape[0] == 0:
            raise ValueError("features must be a non-empty (n, d) matrix")
        if self.labels.shape != (self.features.shape[0],):
            raise ValueError("labels length must match number of rows")

    @property
    def n(self) -> int:
        return self.features.shape[0]

    @property
    def d(self) -> int:
        return self.features.shape[1]


def provenance_text(ds: LabeledDataset) -> str:
    """Flat key=value block describing how a dataset was produced."""
    lines = [f"name={ds.name}", f"n={ds.n}", f"d={ds.d}"]
    lines += [f"{k}={v}" for k, v in sorted(ds.provenance.items())]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class EigenProfile:
    """Singular-value profile of the diagonal ellipsoid map.

    kind "constant" gives all ones; "power_decay" gives i^(-parameter);
    "exponential_decay" gives exp(-parameter * (i - 1)); "explicit" takes
    the values verbatim. Values must be positive, non-increasing, max 1.
    """

    kind: str
    d: int
    parameter: float = 1.0
    values: tuple = None

    def __post_init__(self):
        if self.kind not in PROFILE_KINDS:
            raise ValueError(f"unknown profile kind {self.kind!r}")
        if self.d < 1:
            raise ValueError("profile dimension must be positive")
        sv = self.singular_values()
        if sv.shape != (self.d,):
            raise ValueError("profile must yield exactly d singular values")
        if np.any(sv <= 0):
            raise ValueError("singular values must be positive")
        if np.any(np.diff(sv) > 0):
            raise ValueError("singular values must be non-increasing")
        if not np.isclose(sv[0], 1.0):
            raise ValueError("largest singular value must be 1")

    def singular_values(self) -> np.ndarray:
        i = np.arange(1, self.d + 1, dtype=float)
        if self.kind == "constant":
            return np.ones(self.d)
        if self.kind == "power_decay":
            return i ** (-self.parameter)
        if self.kind == "exponential_decay":
            return np.exp(-self.parameter * (i - 1.0))
        return np.asarray(self.values, dtype=float)

    def label(self) -> str:
        if self.kind in ("constant", "explicit"):
            return self.kind
        return f"{self.kind}_{self.parameter:g}"


def gen_ellipsoid_dataset(profile: EigenProfile, n: int, sample_seed: int = 0) -> LabeledDataset:
    """Sample n points from the ellipsoid A S^{d-1} as the pushforward of the
    uniform sphere measure (Gaussian rows normalised, then scaled by the
    profile), labelled by the sign of a fixed linear functional.

    The functional's coordinates are the first d entries of the frozen
    1000-value master sequence, so labels are shared across runs and across
    choices of d.
    """
    if n < 2:
        raise ValueError("need at least 2 points")
    if profile.d > len(LABEL_WEIGHTS):
        raise ValueError("label vector sequence exhausted: d must be <= 1000")
    sv = profile.singular_values()
    rng = np.random.default_rng(sample_seed)
    u = rng.standard_normal((n, profile.d))
    u /= np.linalg.norm(u, axis=1, keepdims=True)
    x = u * sv
    w = np.asarray(LABEL_WEIGHTS[: profile.d])
    y = (x @ w > 0).astype(int)
    return LabeledDataset(
        features=x,
        labels=y,
        name=f"ellipsoid-{profile.label()}-d{profile.d}",
        provenance={
            "generator": "ellipsoid",
            "profile": profile.label(),
            "d": profile.d,
            "sample_seed": sample_seed,
            "sphere_measure": "pushforward",
        },
    )


def load_csv_dataset(path: str) -> LabeledDataset:
    """Read the canonical dataset CSV: a header row, one integer column named
    `label`, all other columns numeric features. Parse errors carry the
    offending 1-based row number."""
    with open(path, "r", encoding="utf-8", newline="") as f:
        header_line = f.readline()
        if not header_line:
            raise ValueError(f"{path}: empty file")
        header = [h.strip() for h in header_line.rstrip("\r\n").split(",")]
        if "label" not in header:
            raise ValueError(f"{path}: missing required `label` column")
        label_idx = header.index("label")
        width = len(header)
        feats, labels = [], []
        for row_no, line in enumerate(f, start=2):
            line = line.rstrip("\r\n")
            if not line:
                continue
            cells = line.split(",")
            if len(cells) != width:
                raise ValueError(
                    f"{path}: row {row_no} has {len(cells)} cells, expected {width}"
                )
            try:
                raw_label = float(cells[label_idx])
            except ValueError:
                raise ValueError(
                    f"{path}: row {row_no}: non-integer label {cells[label_idx]!r}"
                ) from None
            if raw_label != int(raw_label):
                raise ValueError(
                    f"{path}: row {row_no}: non-integer label {cells[label_idx]!r}"
                )
            labels.append(int(raw_label))
            try:
                feats.append(
                    [float(c) for i, c in enumerate(cells) if i != label_idx]
                )
            except ValueError:
                raise ValueError(f"{path}: row {row_no}: non-numeric cell") from None
    if not feats:
        raise ValueError(f"{path}: no data rows")
    return LabeledDataset(
        features=np.asarray(feats),
        labels=np.asarray(labels),
        name=path.rsplit("/", 1)[-1].removesuffix(".csv"),
        provenance={"source_file": path, "rows": len(feats), "cols": width - 1},
    )


def normalize_features(ds: LabeledDataset) -> LabeledDataset:
    """Min-max scale each feature to [0, 1]; constant features map to 0."""
    lo = ds.features.min(axis=0)
    hi = ds.features.max(axis=0)
    span = hi - lo
    safe = np.where(span > 0, span, 1.0)
    scaled = np.where(span > 0, (ds.features - lo) / safe, 0.0)
    return LabeledDataset(
        features=scaled,
        labels=ds.labels.copy(),
        name=ds.name,
        provenance={**ds.provenance, "normalized": "minmax01"},
    )


def embed_and_noise(
    ds: LabeledDataset, ambient_dim: int, gamma: float, noise_seed: int = 0
) -> LabeledDataset:
    """Place the features in the first d coordinates of an ambient_dim space,
    zero elsewhere, then add i.i.d. N(0, gamma) noise (variance gamma) to
    every coordinate of every instance. Labels are unchanged."""
    if ambient_dim < ds.d:
        raise ValueError("ambient_dim must be at least the data dimension")
    if gamma < 0:
        raise ValueError("gamma must be non-negative")
    padded = np.zeros((ds.n, ambient_dim))
    padded[:, : ds.d] = ds.features
    if gamma > 0:
        rng = np.random.default_rng(noise_seed)
        padded = padded + np.sqrt(gamma) * rng.standard_normal(padded.shape)
    return LabeledDataset(
        features=padded,
        labels=ds.labels.copy(),
        name=ds.name,
        provenance={
            **ds.provenance,
            "ambient_dim": ambient_dim,
            "gamma": gamma,
            "noise_seed": noise_seed,
        },
    )


def train_test_split(
    ds: LabeledDataset, train_fraction: float, split_seed: int = 0
) -> tuple[LabeledDataset, LabeledDataset]:
    """Seeded shuffle, first floor(train_fraction * n) rows to train, rest to
    test. The two sides partition the input."""
    if ds.n < 5:
        raise ValueError("need at least 5 points to split")
    if not 0.0 < train_fraction < 1.0:
        raise ValueError("train_fraction must be in (0, 1)")
    rng = np.random.default_rng(split_seed)
    order = rng.permutation(ds.n)
    cut = int(train_fraction * ds.n)
    if cut == 0 or cut == ds.n:
        raise ValueError("split leaves one side empty")
    parts = []
    for tag, idx in (("train", order[:cut]), ("test", order[cut:])):
        parts.append(
            LabeledDataset(
                features=ds.features[idx],
                labels=ds.labels[idx],
                name=ds.name,
                provenance={**ds.provenance, "split": tag, "split_seed": split_seed},
            )
        )
    return parts[0], parts[1]
