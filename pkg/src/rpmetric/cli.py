"""Command-line entry point for the experiment harness.

Flags mirror config-file keys one for one; a config file provides defaults
and repeated flags build grids. Exit codes: 0 success, 1 config error,
2 data error, 3 runtime failure in all cells.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .harness import (
    EXIT_CONFIG,
    EXIT_DATA,
    EXIT_OK,
    EXIT_RUNTIME,
    ConfigError,
    ExperimentConfig,
    emit_plots,
    run_benchmark,
    run_bounds,
    run_gordon,
    run_synthetic,
)

_GRID_KEYS = {"d", "k", "gamma", "profile", "epsilon", "geometry"}


def parse_config_file(path: str) -> dict:
    """Flat key=value lines; '#' starts a comment; grid keys may repeat."""
    values: dict = {}
    for line_no, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{line_no}: expected key=value, got {raw!r}")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key in _GRID_KEYS:
            values.setdefault(key, []).append(value)
        else:
            values[key] = value
    return values


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="rpmetric",
        description="Metric learning on randomly compressed data: sweeps, "
        "bound tables, and sup-norm tail checks.",
    )
    p.add_argument("--config", help="flat key=value config file")
    p.add_argument("--mode", choices=("synthetic", "benchmark", "bounds", "gordon"))
    p.add_argument("--dataset", help="canonical CSV for benchmark mode")
    p.add_argument("--d", type=int, action="append", help="ambient dimension (repeatable)")
    p.add_argument("--k", type=int, action="append", help="projection dimension (repeatable)")
    p.add_argument("--gamma", type=float, action="append", help="noise variance (repeatable)")
    p.add_argument("--profile", action="append",
                   help="eigenvalue profile kind[:param] (repeatable)")
    p.add_argument("--epsilon", type=float, action="append",
                   help="tail-check epsilon (repeatable)")
    p.add_argument("--geometry", action="append",
                   choices=("singleton", "sphere", "ellipsoid"),
                   help="tail-check point set (repeatable)")
    p.add_argument("--reps", type=int)
    p.add_argument("--trainer", choices=("pairwise_erm", "lmnn", "none"))
    p.add_argument("--n-points", type=int, dest="n_points")
    p.add_argument("--train-fraction", type=float, dest="train_fraction")
    p.add_argument("--embed-dim", type=int, dest="embed_dim")
    p.add_argument("--epochs", type=int)
    p.add_argument("--seed-data", type=int)
    p.add_argument("--seed-projection-base", type=int)
    p.add_argument("--seed-split", type=int)
    p.add_argument("--seed-train", type=int)
    p.add_argument("--n", type=int, help="pair count for bounds mode")
    p.add_argument("--s", type=float, help="stable dimension for bounds mode")
    p.add_argument("--rho", type=float, help="loss slope for bounds mode")
    p.add_argument("--eps", type=float, help="failure probability for bounds mode")
    p.add_argument("--timing", choices=("on", "off"),
                   help="record per-row wall time (off gives byte-identical reruns)")
    p.add_argument("--no-plots", action="store_true")
    p.add_argument("--out", help="output directory")
    return p


_KEY_MAP = {
    "mode": "mode",
    "dataset": "dataset_path",
    "reps": "reps",
    "trainer": "trainer",
    "n_points": "n_points",
    "train_fraction": "train_fraction",
    "embed_dim": "embed_dim",
    "epochs": "epochs",
    "step_size": "step_size",
    "batch_size": "batch_size",
    "lmnn_neighbors": "lmnn_neighbors",
    "lmnn_margin": "lmnn_margin",
    "lmnn_pull_weight": "lmnn_pull_weight",
    "n": "bounds_n",
    "s": "bounds_s",
    "rho": "bounds_rho",
    "eps": "bounds_eps",
    "bound_eps": "bound_eps",
    "loss_rho": "loss_rho",
    "loss_l": "loss_l",
    "loss_u": "loss_u",
    "gordon_points": "gordon_points",
    "gordon_draws": "gordon_draws",
    "width_samples": "width_samples",
    "stable_dim_samples": "stable_dim_samples",
    "out": "output_dir",
}
_INT_FIELDS = {
    "reps", "n_points", "embed_dim", "epochs", "batch_size", "lmnn_neighbors",
    "bounds_n", "gordon_points", "gordon_draws", "width_samples",
    "stable_dim_samples",
}
_FLOAT_FIELDS = {
    "train_fraction", "step_size", "lmnn_margin", "lmnn_pull_weight",
    "bounds_s", "bounds_rho", "bounds_eps", "bound_eps", "loss_rho",
    "loss_l", "loss_u",
}


def config_from_sources(file_values: dict, args: argparse.Namespace) -> ExperimentConfig:
    cfg = ExperimentConfig()
    for key, value in file_values.items():
        if key == "d":
            cfg.d_grid = [int(v) for v in value]
        elif key == "k":
            cfg.k_grid = [int(v) for v in value]
        elif key == "gamma":
            cfg.gamma_grid = [float(v) for v in value]
        elif key == "profile":
            cfg.profiles = list(value)
        elif key == "epsilon":
            cfg.epsilon_grid = [float(v) for v in value]
        elif key == "geometry":
            cfg.geometries = list(value)
        elif key == "timing":
            cfg.timing = value == "on"
        elif key.startswith("seed_"):
            setattr(cfg.seeds, key.removeprefix("seed_"), int(value))
        elif key in _KEY_MAP:
            attr = _KEY_MAP[key]
            if attr in _INT_FIELDS or key in _INT_FIELDS:
                setattr(cfg, attr, int(value))
            elif attr in _FLOAT_FIELDS or key in _FLOAT_FIELDS:
                setattr(cfg, attr, float(value))
            else:
                setattr(cfg, attr, value)
        else:
            raise ConfigError(f"unknown config key {key!r}")

    if args.mode:
        cfg.mode = args.mode
    if args.dataset:
        cfg.dataset_path = args.dataset
    if args.d:
        cfg.d_grid = args.d
    if args.k:
        cfg.k_grid = args.k
    if args.gamma:
        cfg.gamma_grid = args.gamma
    if args.profile:
        cfg.profiles = args.profile
    if args.epsilon:
        cfg.epsilon_grid = args.epsilon
    if args.geometry:
        cfg.geometries = args.geometry
    if args.reps is not None:
        cfg.reps = args.reps
    if args.trainer:
        cfg.trainer = args.trainer
    if args.n_points is not None:
        cfg.n_points = args.n_points
    if args.train_fraction is not None:
        cfg.train_fraction = args.train_fraction
    if args.embed_dim is not None:
        cfg.embed_dim = args.embed_dim
    if args.epochs is not None:
        cfg.epochs = args.epochs
    if args.seed_data is not None:
        cfg.seeds.data = args.seed_data
    if args.seed_projection_base is not None:
        cfg.seeds.projection_base = args.seed_projection_base
    if args.seed_split is not None:
        cfg.seeds.split = args.seed_split
    if args.seed_train is not None:
        cfg.seeds.train = args.seed_train
    if args.n is not None:
        cfg.bounds_n = args.n
    if args.s is not None:
        cfg.bounds_s = args.s
    if args.rho is not None:
        cfg.bounds_rho = args.rho
    if args.eps is not None:
        cfg.bounds_eps = args.eps
    if args.timing:
        cfg.timing = args.timing == "on"
    if args.out:
        cfg.output_dir = args.out
    return cfg


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        file_values = parse_config_file(args.config) if args.config else {}
        cfg = config_from_sources(file_values, args)
        cfg.validate()
    except (ConfigError, ValueError, OSError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    try:
        if cfg.mode == "bounds":
            path = run_bounds(cfg)
            print(f"wrote {path}")
            return EXIT_OK
        if cfg.mode == "gordon":
            path = run_gordon(cfg)
            print(f"wrote {path}")
            return EXIT_OK
        if cfg.mode == "synthetic":
            rows = run_synthetic(cfg)
        else:
            try:
                rows = run_benchmark(cfg)
            except (OSError, ValueError) as exc:
                print(f"data error: {exc}", file=sys.stderr)
                return EXIT_DATA
        print(f"wrote {Path(cfg.output_dir) / 'results.csv'} ({len(rows)} rows)")
        if not args.no_plots:
            for path in emit_plots(rows, cfg.output_dir):
                print(f"wrote {path}")
        return EXIT_OK
    except RuntimeError as exc:
        print(f"runtime failure: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    raise SystemExit(main())
