"""Experiment orchestration: seeded sweeps over projection dimensions,
eigenvalue profiles and noise levels, with CSV results, provenance blocks
and SVG plots.

Config files are flat key=value text; grid-valued keys (d, k, gamma,
profile, epsilon, geometry) repeat one line per value. Every key has a
mirroring CLI flag.
"""
from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import bounds as bounds_mod
from .data import (
    EigenProfile,
    LabeledDataset,
    embed_and_noise,
    gen_ellipsoid_dataset,
    load_csv_dataset,
    normalize_features,
    provenance_text,
    train_test_split,
)
from .evaluation import evaluate
from .geometry import diameter, ellipsoid_stable_dimension, stable_dimension_mc
from .metric import (
    LossParams,
    TrainConfig,
    default_loss_params,
    empirical_error,
    identity_metric,
    make_pairs,
    train_lmnn,
    train_pairwise,
)
from .projection import apply_projection, gordon_tail_check, sample_projection

RESULTS_HEADER = (
    "mode,dataset,d,k,gamma,rep,seed,trainer,train_error,test_error,"
    "test_error_euclidean,stable_dim_estimate,gen_bound,excess_bound,wall_ms"
)

MODES = ("synthetic", "benchmark", "bounds", "gordon")
TRAINERS = ("pairwise_erm", "lmnn", "none")
GRID_KEYS = ("d", "k", "gamma", "profile", "epsilon", "geometry")

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_DATA = 2
EXIT_RUNTIME = 3


class ConfigError(ValueError):
    pass


@dataclass
class Seeds:
    data: int = 0
    projection_base: int = 1000
    split: int = 2000
    train: int = 3000


@dataclass
class ExperimentConfig:
    mode: str = "synthetic"
    dataset_path: str | None = None
    d_grid: list = field(default_factory=lambda: [200])
    k_grid: list = field(default_factory=lambda: [5, 10, 20, 40, 80])
    gamma_grid: list = field(default_factory=lambda: [0.05, 0.25, 0.5])
    profiles: list = field(
        default_factory=lambda: ["constant", "power_decay:1", "exponential_decay:0.5"]
    )
    reps: int = 10
    trainer: str = "lmnn"
    n_points: int = 2000
    train_fraction: float = 0.8
    embed_dim: int = 100
    bound_eps: float = 0.1
    epsilon_grid: list = field(default_factory=lambda: [1.0])
    geometries: list = field(default_factory=lambda: ["sphere"])
    gordon_points: int = 500
    gordon_draws: int = 2000
    width_samples: int = 4000
    stable_dim_samples: int = 2000
    bounds_n: int = 800
    bounds_s: float = 5.0
    bounds_rho: float = 1.0
    bounds_eps: float = 0.1
    loss_rho: float | None = None
    loss_l: float | None = None
    loss_u: float | None = None
    epochs: int = 60
    step_size: float = 0.1
    batch_size: int = 64
    lmnn_neighbors: int = 3
    lmnn_margin: float = 1.0
    lmnn_pull_weight: float = 0.5
    seeds: Seeds = field(default_factory=Seeds)
    output_dir: str = "results"
    timing: bool = True

    def validate(self):
        if self.mode not in MODES:
            raise ConfigError(f"unknown mode {self.mode!r}")
        if self.trainer not in TRAINERS:
            raise ConfigError(f"unknown trainer {self.trainer!r}")
        if self.reps < 1:
            raise ConfigError("reps must be positive")
        if not self.k_grid:
            raise ConfigError("k grid must be non-empty")
        if self.mode == "synthetic":
            if not self.d_grid or not self.profiles:
                raise ConfigError("synthetic mode needs d and profile grids")
            if max(self.k_grid) > min(self.d_grid):
                raise ConfigError("every k must be <= the corresponding d")
        if self.mode == "benchmark":
            if not self.dataset_path:
                raise ConfigError("benchmark mode needs a dataset path")
            if not self.gamma_grid:
                raise ConfigError("benchmark mode needs a gamma grid")
            if max(self.k_grid) > self.embed_dim:
                raise ConfigError("every k must be <= the embedding dimension")
        if self.mode == "gordon":
            if not self.d_grid or not self.epsilon_grid or not self.geometries:
                raise ConfigError("gordon mode needs d, epsilon and geometry grids")
            if max(self.k_grid) > min(self.d_grid):
                raise ConfigError("every k must be <= the corresponding d")
        if not 0.0 < self.bound_eps < 1.0 or not 0.0 < self.bounds_eps < 1.0:
            raise ConfigError("bound failure probabilities must lie in (0, 1)")


@dataclass
class ResultRow:
    mode: str
    dataset: str
    d: int
    k: int
    gamma: float | None
    rep: int
    seed: int
    trainer: str
    train_error: float | None = None
    test_error: float | None = None
    test_error_euclidean: float | None = None
    stable_dim_estimate: float | None = None
    gen_bound: float | None = None
    excess_bound: float | None = None
    wall_ms: float | None = None

    def sort_key(self):
        return (
            self.mode,
            self.dataset,
            self.d,
            self.k,
            -1.0 if self.gamma is None else self.gamma,
            self.rep,
        )


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def write_results_csv(rows: list[ResultRow], path) -> None:
    rows = sorted(rows, key=ResultRow.sort_key)
    lines = [RESULTS_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                _fmt(v)
                for v in (
                    r.mode, r.dataset, r.d, r.k, r.gamma, r.rep, r.seed, r.trainer,
                    r.train_error, r.test_error, r.test_error_euclidean,
                    r.stable_dim_estimate, r.gen_bound, r.excess_bound, r.wall_ms,
                )
            )
        )
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def parse_profile(spec: str) -> tuple[str, float]:
    kind, _, param = spec.partition(":")
    kind = kind.strip()
    return kind, float(param) if param else 1.0


def _loss_params_for(cfg: ExperimentConfig, sq_dists) -> LossParams:
    if cfg.loss_rho is not None and cfg.loss_l is not None and cfg.loss_u is not None:
        return LossParams(rho=cfg.loss_rho, l=cfg.loss_l, u=cfg.loss_u)
    return default_loss_params(sq_dists)


def _train_config(cfg: ExperimentConfig, algorithm: str) -> TrainConfig:
    return TrainConfig(
        max_epochs=cfg.epochs,
        step_size=cfg.step_size,
        batch_size=cfg.batch_size,
        seed=cfg.seeds.train,
        algorithm=algorithm,
        lmnn_neighbors=cfg.lmnn_neighbors,
        lmnn_margin=cfg.lmnn_margin,
        lmnn_pull_weight=cfg.lmnn_pull_weight,
    )


def _run_cell(
    cfg: ExperimentConfig,
    train: LabeledDataset,
    test: LabeledDataset,
    k: int,
    rep: int,
    stable_dim: float,
    row: ResultRow,
) -> ResultRow:
    """Project, train, evaluate and fill one result row in place."""
    t0 = time.perf_counter()
    proj_seed = cfg.seeds.projection_base + rep
    r = sample_projection(k, train.d, "inv_k_variance", seed=proj_seed)
    ctrain = LabeledDataset(apply_projection(r, train.features), train.labels, train.name)
    ctest = LabeledDataset(apply_projection(r, test.features), test.labels, test.name)
    diam_ref = diameter(ctrain.features)
    pairs = make_pairs(ctrain, seed=cfg.seeds.train)
    init = identity_metric(k, diam_ref)
    init_sq = np.sum((pairs.differences() @ init.matrix.T) ** 2, axis=1)
    params = _loss_params_for(cfg, init_sq)

    if cfg.trainer == "pairwise_erm":
        m = train_pairwise(pairs, params, _train_config(cfg, "pairwise_erm"), diam_ref)
    elif cfg.trainer == "lmnn":
        m = train_lmnn(ctrain, _train_config(cfg, "lmnn"), diam_ref)
    else:
        m = init

    row.seed = proj_seed
    row.train_error = empirical_error(m, pairs, params)
    row.test_error = evaluate(ctrain, ctest, m).error_rate
    row.test_error_euclidean = evaluate(ctrain, ctest, None).error_rate
    row.stable_dim_estimate = stable_dim
    b = bounds_mod.BoundInputs(
        k=k, n=pairs.n, s_x=stable_dim, rho=params.rho, eps=cfg.bound_eps, d=train.d
    )
    row.gen_bound = bounds_mod.generalisation_bound(b)
    row.excess_bound = bounds_mod.excess_empirical_bound(b)
    if cfg.timing:
        row.wall_ms = (time.perf_counter() - t0) * 1000.0
    return row


def _sweep(cfg: ExperimentConfig, cells) -> list[ResultRow]:
    """Run prepared cells, recording failures as partially filled rows."""
    rows, failures = [], 0
    for make_row in cells:
        try:
            rows.append(make_row())
        except Exception as exc:  # noqa: BLE001 - error rows keep sweeps resumable
            row, err = make_row.row, exc
            print(f"cell failed ({row.dataset}, d={row.d}, k={row.k}, "
                  f"rep={row.rep}): {err}", file=sys.stderr)
            rows.append(row)
            failures += 1
    if cells and failures == len(cells):
        raise RuntimeError("every grid cell failed")
    return rows


class _Cell:
    def __init__(self, row: ResultRow, fn):
        self.row = row
        self.fn = fn

    def __call__(self) -> ResultRow:
        return self.fn()


def run_synthetic(cfg: ExperimentConfig) -> list[ResultRow]:
    """Ellipsoid sweep: one dataset per (profile, d), shared split, a fresh
    projection per repetition."""
    cfg.validate()
    out = Path(cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    cells = []
    for spec in cfg.profiles:
        kind, param = parse_profile(spec)
        for d in cfg.d_grid:
            profile = EigenProfile(kind=kind, d=d, parameter=param)
            ds = gen_ellipsoid_dataset(profile, cfg.n_points, cfg.seeds.data)
            (out / f"{ds.name}.provenance.txt").write_text(provenance_text(ds))
            train, test = train_test_split(ds, cfg.train_fraction, cfg.seeds.split)
            s_closed = ellipsoid_stable_dimension(profile.singular_values())
            for k in cfg.k_grid:
                for rep in range(1, cfg.reps + 1):
                    row = ResultRow(
                        mode="synthetic", dataset=ds.name, d=d, k=k, gamma=None,
                        rep=rep, seed=cfg.seeds.projection_base + rep,
                        trainer=cfg.trainer,
                    )
                    cells.append(
                        _Cell(row, lambda tr=train, te=test, k=k, rep=rep,
                              s=s_closed, row=row:
                              _run_cell(cfg, tr, te, k, rep, s, row))
                    )
    rows = _sweep(cfg, cells)
    write_results_csv(rows, out / "results.csv")
    return rows


def run_benchmark(cfg: ExperimentConfig) -> list[ResultRow]:
    """Benchmark sweep: normalise, embed with noise per gamma, then project
    and train per (k, rep)."""
    cfg.validate()
    out = Path(cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    base = normalize_features(load_csv_dataset(cfg.dataset_path))
    cells = []
    for gamma in cfg.gamma_grid:
        emb = embed_and_noise(base, cfg.embed_dim, gamma, cfg.seeds.data)
        (out / f"{emb.name}_gamma{gamma:g}.provenance.txt").write_text(
            provenance_text(emb)
        )
        train, test = train_test_split(emb, cfg.train_fraction, cfg.seeds.split)
        s_hat = stable_dimension_mc(
            train.features, num_samples=cfg.stable_dim_samples, seed=cfg.seeds.data
        ).value
        for k in cfg.k_grid:
            for rep in range(1, cfg.reps + 1):
                row = ResultRow(
                    mode="benchmark", dataset=emb.name, d=cfg.embed_dim, k=k,
                    gamma=gamma, rep=rep, seed=cfg.seeds.projection_base + rep,
                    trainer=cfg.trainer,
                )
                cells.append(
                    _Cell(row, lambda tr=train, te=test, k=k, rep=rep,
                          s=s_hat, row=row:
                          _run_cell(cfg, tr, te, k, rep, s, row))
                )
    rows = _sweep(cfg, cells)
    write_results_csv(rows, out / "results.csv")
    return rows


def run_bounds(cfg: ExperimentConfig) -> Path:
    """Write the bound trade-off table across the k grid."""
    cfg.validate()
    out = Path(cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    d = min(cfg.d_grid) if cfg.d_grid else max(cfg.k_grid)
    table = bounds_mod.tradeoff_table(
        cfg.k_grid, n=cfg.bounds_n, s_x=cfg.bounds_s, rho=cfg.bounds_rho,
        eps=cfg.bounds_eps, d=d,
    )
    lines = ["k,gen_bound,excess_bound,ambient_bound"]
    for row in table:
        lines.append(
            f"{row.k},{row.generalisation:.6g},{row.excess_empirical:.6g},"
            f"{row.ambient:.6g}"
        )
    path = out / "tradeoff.csv"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def _gordon_point_set(name: str, d: int, n: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    if name == "singleton":
        x = rng.standard_normal(d)
        return (x / np.linalg.norm(x))[None, :]
    u = rng.standard_normal((n, d))
    u /= np.linalg.norm(u, axis=1, keepdims=True)
    if name == "sphere":
        return u
    if name == "ellipsoid":
        sv = EigenProfile(kind="exponential_decay", d=d, parameter=0.5).singular_values()
        return u * sv
    raise ConfigError(f"unknown gordon geometry {name!r}")


def run_gordon(cfg: ExperimentConfig) -> Path:
    """Tail-frequency check of the sup-norm bound across geometries."""
    cfg.validate()
    out = Path(cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    lines = [
        "geometry,d,k,epsilon,violation_fraction,theoretical_bound,"
        "rhs_used,width_std_error"
    ]
    for name in cfg.geometries:
        for d in cfg.d_grid:
            pts = _gordon_point_set(name, d, cfg.gordon_points, cfg.seeds.data)
            for k in cfg.k_grid:
                for eps in cfg.epsilon_grid:
                    res = gordon_tail_check(
                        pts, k, eps, num_draws=cfg.gordon_draws,
                        width_samples=cfg.width_samples,
                        seed=cfg.seeds.projection_base,
                    )
                    lines.append(
                        f"{name},{d},{k},{eps:.6g},{res.violation_fraction:.6g},"
                        f"{res.theoretical_bound:.6g},{res.rhs_used:.6g},"
                        f"{res.width_estimate.std_error:.6g}"
                    )
    path = out / "gordon.csv"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


@dataclass(frozen=True)
class SeriesPoint:
    k: int
    mean: float
    std_error: float
    euclidean_mean: float | None


def series_statistics(rows: list[ResultRow]) -> dict:
    """Aggregate rows into plottable series.

    Returns {(mode, dataset): {series_label: [SeriesPoint, ...]}} where the
    series label is the gamma value when present and the ambient dimension
    otherwise; the standard error is the sample std over repetitions divided
    by sqrt(reps).
    """
    groups: dict[tuple, list[ResultRow]] = {}
    for r in rows:
        if r.test_error is None:
            continue
        groups.setdefault((r.mode, r.dataset), []).append(r)
    out: dict = {}
    for (mode, dataset), group in groups.items():
        by_gamma = any(r.gamma is not None for r in group)
        series: dict[str, list[ResultRow]] = {}
        for r in group:
            key = f"gamma={r.gamma:g}" if by_gamma else f"d={r.d}"
            series.setdefault(key, []).append(r)
        out[(mode, dataset)] = {}
        for key, pts in series.items():
            stats = []
            for k in sorted({r.k for r in pts}):
                vals = np.array([r.test_error for r in pts if r.k == k])
                se = float(vals.std(ddof=1) / np.sqrt(len(vals))) if len(vals) > 1 else 0.0
                evals = [
                    r.test_error_euclidean for r in pts
                    if r.k == k and r.test_error_euclidean is not None
                ]
                stats.append(
                    SeriesPoint(
                        k=k,
                        mean=float(vals.mean()),
                        std_error=se,
                        euclidean_mean=float(np.mean(evals)) if evals else None,
                    )
                )
            out[(mode, dataset)][key] = stats
    return out


def emit_plots(rows: list[ResultRow], output_dir) -> list[Path]:
    """One SVG per (mode, dataset): mean test error vs k, one solid line per
    d or gamma with +-1 standard-error bars, dashed Euclidean baseline."""
    if not rows:
        raise ValueError("no rows to plot")
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for (mode, dataset), series in sorted(series_statistics(rows).items()):
        fig, ax = plt.subplots(figsize=(6, 4))
        for key in sorted(series):
            pts = series[key]
            ks = [p.k for p in pts]
            line = ax.errorbar(
                ks, [p.mean for p in pts], yerr=[p.std_error for p in pts],
                marker="o", capsize=3, label=key,
            )
            euc = [p.euclidean_mean for p in pts]
            if all(e is not None for e in euc):
                ax.plot(ks, euc, linestyle="--", marker="x",
                        color=line.lines[0].get_color(),
                        label=f"{key} (Euclidean)")
        ax.set_xlabel("projection dimension k")
        ax.set_ylabel("mean test error")
        ax.set_title(f"{mode}: {dataset}")
        ax.legend()
        fig.tight_layout()
        path = out / f"{mode}_{dataset}.svg"
        fig.savefig(path, format="svg")
        plt.close(fig)
        written.append(path)
    return written
