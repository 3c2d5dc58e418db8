"""Mahalanobis metric learning on randomly compressed data.

Gaussian random projections, spectrally constrained metric training, 1-NN
evaluation, Monte Carlo estimators of Gaussian widths and stable dimension,
and closed-form generalisation-bound calculators.
"""
from .bounds import (
    BoundInputs,
    RademacherEstimate,
    TradeoffRow,
    ambient_bound,
    excess_empirical_bound,
    generalisation_bound,
    rademacher_estimate_mc,
    tradeoff_table,
)
from .data import (
    EigenProfile,
    LabeledDataset,
    embed_and_noise,
    gen_ellipsoid_dataset,
    load_csv_dataset,
    normalize_features,
    train_test_split,
)
from .evaluation import EvalResult, evaluate, knn_predict
from .geometry import (
    WidthEstimate,
    diameter,
    difference_set,
    ellipsoid_stable_dimension,
    expected_norm_a,
    gaussian_width_mc,
    squared_width_mc,
    stable_dimension_mc,
)
from .metric import (
    LossParams,
    Metric,
    PairSet,
    TrainConfig,
    default_loss_params,
    empirical_error,
    identity_metric,
    loss,
    make_pairs,
    project_pairs,
    spectral_normalize,
    train_lmnn,
    train_pairwise,
)
from .projection import (
    GordonTailResult,
    Projection,
    apply_projection,
    gordon_tail_check,
    sample_projection,
)

__version__ = "0.1.0"
