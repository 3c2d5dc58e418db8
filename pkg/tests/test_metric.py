import numpy as np
import pytest

from rpmetric.data import LabeledDataset
from rpmetric.metric import (
    LossParams,
    Metric,
    PairSet,
    TrainConfig,
    _target_neighbors,
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
from rpmetric.projection import sample_projection


def random_pairs(n, d, seed, same_fraction=0.5):
    rng = np.random.default_rng(seed)
    return PairSet(
        left=rng.standard_normal((n, d)),
        right=rng.standard_normal((n, d)),
        same_label=(rng.random(n) < same_fraction).astype(np.uint8),
    )


class TestLoss:
    def test_hinge_zero_at_upper_threshold(self):
        p = LossParams(rho=3.0, l=0.2, u=0.4)
        assert loss(0.4, 1, p) == 0.0

    def test_same_label_linear_region(self):
        p = LossParams(rho=2.0, l=0.2, u=0.4)
        assert loss(0.6, 1, p) == pytest.approx(0.4)

    def test_diff_label_linear_region(self):
        p = LossParams(rho=2.0, l=0.1, u=0.4)
        assert loss(0.05, 0, p) == pytest.approx(0.1)

    def test_range_is_unit_interval(self):
        rng = np.random.default_rng(0)
        p = LossParams(rho=50.0, l=0.05, u=0.3)
        vals = loss(rng.exponential(1.0, 5000), rng.integers(0, 2, 5000), p)
        assert np.all((vals >= 0.0) & (vals <= 1.0))

    def test_lipschitz_in_first_argument(self):
        rng = np.random.default_rng(1)
        n = 100_000
        a = rng.exponential(1.0, n)
        b = rng.exponential(1.0, n)
        y = rng.integers(0, 2, n)
        p = LossParams(rho=4.0, l=0.15, u=0.55)
        gap = np.abs(loss(a, y, p) - loss(b, y, p))
        assert np.all(gap <= p.rho * np.abs(a - b) + 1e-12)

    def test_invalid_thresholds_rejected(self):
        with pytest.raises(ValueError):
            LossParams(rho=1.0, l=0.5, u=0.4)
        with pytest.raises(ValueError):
            LossParams(rho=1.0, l=0.0, u=0.4)


class TestMakePairs:
    def test_grouping_follows_seeded_permutation(self):
        n = 8
        feats = np.arange(n, dtype=float)[:, None]
        labels = np.array([0, 0, 1, 1, 0, 1, 0, 1])
        ds = LabeledDataset(feats, labels)
        pairs = make_pairs(ds, seed=42)
        perm = np.random.default_rng(42).permutation(n)
        for i in range(n // 2):
            a, b = perm[2 * i], perm[2 * i + 1]
            assert pairs.left[i, 0] == a and pairs.right[i, 0] == b
            assert pairs.same_label[i] == (labels[a] == labels[b])

    def test_odd_point_dropped(self):
        ds = LabeledDataset(np.arange(5, dtype=float)[:, None], np.zeros(5, dtype=int))
        assert make_pairs(ds, seed=0).n == 2

    def test_paired_indices_disjoint(self):
        n = 21
        ds = LabeledDataset(np.arange(n, dtype=float)[:, None], np.zeros(n, dtype=int))
        pairs = make_pairs(ds, seed=3)
        used = np.concatenate([pairs.left[:, 0], pairs.right[:, 0]]).astype(int)
        assert len(set(used.tolist())) == 2 * (n // 2)
        assert set(used.tolist()) <= set(range(n))

    def test_too_few_points_rejected(self):
        ds = LabeledDataset(np.ones((1, 2)), np.zeros(1, dtype=int))
        with pytest.raises(ValueError):
            make_pairs(ds, seed=0)


class TestEmpiricalError:
    def test_identical_points(self):
        x = np.ones((6, 3))
        same = np.array([1, 1, 1, 0, 0, 0], dtype=np.uint8)
        pairs = PairSet(left=x, right=x.copy(), same_label=same)
        p = LossParams(rho=2.0, l=0.3, u=0.5)
        m = identity_metric(3, diam_ref=1.0)
        # same-label pairs at distance zero cost nothing, different-label
        # pairs cost min(1, rho*l) each
        expected = 0.5 * min(1.0, 2.0 * 0.3)
        assert empirical_error(m, pairs, p) == pytest.approx(expected)

    def test_single_pair_hand_computed(self):
        pairs = PairSet(
            left=np.array([[1.0, 0.0]]),
            right=np.array([[0.0, 1.0]]),
            same_label=np.array([1], dtype=np.uint8),
        )
        # diam_ref 2: sq dist under I/2 is ||(1,-1)||^2/4 = 0.5
        m = identity_metric(2, diam_ref=2.0)
        p = LossParams(rho=2.0, l=0.2, u=0.4)
        assert empirical_error(m, pairs, p) == pytest.approx(min(1.0, 2.0 * (0.5 - 0.4)))

    def test_result_in_unit_interval(self):
        pairs = random_pairs(64, 5, seed=2)
        m = identity_metric(5, diam_ref=3.0)
        p = LossParams(rho=30.0, l=0.01, u=0.02)
        assert 0.0 <= empirical_error(m, pairs, p) <= 1.0

    def test_invariant_under_pair_permutation(self):
        pairs = random_pairs(50, 4, seed=3)
        order = np.random.default_rng(4).permutation(50)
        shuffled = PairSet(pairs.left[order], pairs.right[order], pairs.same_label[order])
        m = identity_metric(4, diam_ref=2.0)
        p = LossParams(rho=1.5, l=0.2, u=0.6)
        assert empirical_error(m, pairs, p) == pytest.approx(
            empirical_error(m, shuffled, p), rel=1e-12
        )

    def test_projection_path_matches_preprojected_pairs_bitwise(self):
        pairs = random_pairs(40, 12, seed=5)
        r = sample_projection(4, 12, "inv_k_variance", seed=6)
        m = identity_metric(4, diam_ref=1.5)
        p = LossParams(rho=2.0, l=0.1, u=0.5)
        assert empirical_error(m, pairs, p, r=r) == empirical_error(
            m, project_pairs(r, pairs), p
        )

    def test_dimension_mismatch_rejected(self):
        pairs = random_pairs(10, 5, seed=7)
        m = identity_metric(4, diam_ref=1.0)
        with pytest.raises(ValueError, match="dimension"):
            empirical_error(m, pairs, LossParams(rho=1.0, l=0.1, u=0.2))


class TestSpectralNormalize:
    def test_identity_with_diameter_two(self):
        m = spectral_normalize(np.eye(3), diam_ref=2.0)
        np.testing.assert_allclose(m.matrix, 0.5 * np.eye(3))

    def test_scale_invariance(self):
        raw = np.random.default_rng(8).standard_normal((4, 4))
        a = spectral_normalize(raw, diam_ref=1.7)
        b = spectral_normalize(37.0 * raw, diam_ref=1.7)
        np.testing.assert_allclose(a.matrix, b.matrix, rtol=1e-12)

    def test_zero_matrix_rejected(self):
        with pytest.raises(ValueError, match="degenerate"):
            spectral_normalize(np.zeros((3, 3)), diam_ref=1.0)

    def test_metric_invariant_enforced(self):
        with pytest.raises(ValueError, match="spectral"):
            Metric(matrix=np.eye(3), m=3, diam_ref=2.0)


class TestDefaultLossParams:
    def test_quantile_calibration(self):
        sq = np.arange(101, dtype=float)
        p = default_loss_params(sq)
        assert p.l == pytest.approx(40.0)
        assert p.u == pytest.approx(60.0)
        assert p.rho == pytest.approx(2.0 / 20.0)

    def test_degenerate_distances_rejected(self):
        with pytest.raises(ValueError):
            default_loss_params(np.zeros(10))


class TestTrainPairwise:
    def test_separated_pairs_returned_unchanged(self):
        left = np.array([[0.0, 0.0], [0.1, 0.0], [1.0, 0.0], [0.0, 1.0]])
        right = np.array([[0.0, 0.0], [0.1, 0.0], [-1.0, 0.0], [0.0, -1.0]])
        same = np.array([1, 1, 0, 0], dtype=np.uint8)
        pairs = PairSet(left, right, same)
        p = LossParams(rho=1.0, l=0.5, u=0.6)
        cfg = TrainConfig(max_epochs=20, seed=0)
        m = train_pairwise(pairs, p, cfg, diam_ref=2.0)
        np.testing.assert_array_equal(m.matrix, identity_metric(2, 2.0).matrix)

    def test_toy_metric_weights_separating_axis(self):
        # classes offset along axis 1, heavy noise along axis 2
        rng = np.random.default_rng(9)
        n = 120
        labels = rng.integers(0, 2, n)
        x = np.column_stack([
            (2.0 * labels - 1.0) + 0.1 * rng.standard_normal(n),
            3.0 * rng.standard_normal(n),
        ])
        ds = LabeledDataset(x, labels)
        pairs = make_pairs(ds, seed=10)
        diam = float(np.max(np.linalg.norm(x[:, None] - x[None, :], axis=2)))
        init = identity_metric(2, diam)
        sq0 = np.sum((pairs.differences() @ init.matrix.T) ** 2, axis=1)
        p = default_loss_params(sq0)
        cfg = TrainConfig(max_epochs=60, step_size=0.2, seed=11)
        m = train_pairwise(pairs, p, cfg, diam_ref=diam)

        _, _, vt = np.linalg.svd(m.matrix)
        assert abs(vt[0, 0]) > abs(vt[0, 1])
        # coarse grid oracle over normalised 2x2 matrices agrees that the
        # minimiser weights axis 1
        best_err, best_mat = np.inf, None
        grid = np.linspace(-1.0, 1.0, 7)
        for a in grid:
            for b in grid:
                for c in grid:
                    for dd in grid:
                        raw = np.array([[a, b], [c, dd]])
                        if np.linalg.norm(raw, ord=2) < 1e-9:
                            continue
                        cand = spectral_normalize(raw, diam)
                        err = empirical_error(cand, pairs, p)
                        if err < best_err:
                            best_err, best_mat = err, cand.matrix
        _, _, vt_grid = np.linalg.svd(best_mat)
        assert abs(vt_grid[0, 0]) > abs(vt_grid[0, 1])
        assert empirical_error(m, pairs, p) <= empirical_error(init, pairs, p)

    def test_degenerate_pairs_warn_and_return_initial(self):
        x = np.ones((8, 3))
        pairs = PairSet(x, x.copy(), np.ones(8, dtype=np.uint8))
        p = LossParams(rho=1.0, l=0.1, u=0.2)
        with pytest.warns(RuntimeWarning, match="identical"):
            m = train_pairwise(pairs, p, TrainConfig(seed=0), diam_ref=1.0)
        np.testing.assert_array_equal(m.matrix, identity_metric(3, 1.0).matrix)

    def test_never_worse_than_initial(self):
        pairs = random_pairs(80, 6, seed=12)
        diam = 4.0
        init = identity_metric(6, diam)
        sq0 = np.sum((pairs.differences() @ init.matrix.T) ** 2, axis=1)
        p = default_loss_params(sq0)
        cfg = TrainConfig(max_epochs=25, seed=13)
        m = train_pairwise(pairs, p, cfg, diam_ref=diam)
        assert empirical_error(m, pairs, p) <= empirical_error(init, pairs, p) + 1e-12

    def test_deterministic(self):
        pairs = random_pairs(60, 4, seed=14)
        p = LossParams(rho=3.0, l=0.05, u=0.3)
        cfg = TrainConfig(max_epochs=15, seed=15)
        a = train_pairwise(pairs, p, cfg, diam_ref=2.0)
        b = train_pairwise(pairs, p, cfg, diam_ref=2.0)
        np.testing.assert_array_equal(a.matrix, b.matrix)


def two_blob_dataset(n_per_class, d, gap, noise, seed):
    rng = np.random.default_rng(seed)
    centers = np.zeros((2, d))
    centers[0, 0] = -gap / 2
    centers[1, 0] = gap / 2
    feats, labels = [], []
    for c in (0, 1):
        feats.append(centers[c] + noise * rng.standard_normal((n_per_class, d)))
        labels += [c] * n_per_class
    return LabeledDataset(np.vstack(feats), np.array(labels))


class TestTrainLmnn:
    def test_blobs_not_worse_than_euclidean_on_train(self):
        from rpmetric.evaluation import evaluate

        ds = two_blob_dataset(40, 5, gap=3.0, noise=1.0, seed=16)
        diam = float(np.max(np.linalg.norm(
            ds.features[:, None] - ds.features[None, :], axis=2)))
        cfg = TrainConfig(algorithm="lmnn", max_epochs=40, seed=17)
        m = train_lmnn(ds, cfg, diam_ref=diam)
        learned = evaluate(ds, ds, m).error_rate
        euclid = evaluate(ds, ds, identity_metric(5, diam)).error_rate
        assert learned <= euclid

    def test_energy_concentrates_on_informative_feature(self):
        rng = np.random.default_rng(18)
        n = 120
        labels = rng.integers(0, 2, n)
        x = rng.standard_normal((n, 10))
        x[:, 0] = 2.0 * labels - 1.0 + 0.15 * rng.standard_normal(n)
        ds = LabeledDataset(x, labels)
        diam = float(np.max(np.linalg.norm(x[:, None] - x[None, :], axis=2)))
        cfg = TrainConfig(algorithm="lmnn", max_epochs=60, seed=19)
        m = train_lmnn(ds, cfg, diam_ref=diam)
        col_energy = np.sum(m.matrix ** 2, axis=0)
        assert col_energy[0] / col_energy.sum() >= 0.5

    def test_pull_only_descends(self):
        ds = two_blob_dataset(30, 4, gap=2.0, noise=1.5, seed=20)
        diam = float(np.max(np.linalg.norm(
            ds.features[:, None] - ds.features[None, :], axis=2)))
        cfg = TrainConfig(algorithm="lmnn", max_epochs=30, seed=21,
                          lmnn_pull_weight=0.0)
        m = train_lmnn(ds, cfg, diam_ref=diam)
        targets = _target_neighbors(ds.features, ds.labels, cfg.lmnn_neighbors)

        def pull(mat):
            total = 0.0
            for i in range(ds.n):
                for j in targets[i]:
                    total += float(np.sum((mat @ (ds.features[i] - ds.features[j])) ** 2))
            return total

        assert pull(m.matrix) <= pull(identity_metric(4, diam).matrix) + 1e-9

    def test_small_class_rejected_by_name(self):
        feats = np.random.default_rng(22).standard_normal((10, 3))
        labels = np.array([0] * 8 + [7] * 2)
        ds = LabeledDataset(feats, labels)
        cfg = TrainConfig(algorithm="lmnn", lmnn_neighbors=3)
        with pytest.raises(ValueError, match="class 7"):
            train_lmnn(ds, cfg, diam_ref=1.0)

    def test_output_satisfies_spectral_constraint(self):
        ds = two_blob_dataset(25, 6, gap=2.5, noise=1.0, seed=23)
        cfg = TrainConfig(algorithm="lmnn", max_epochs=20, seed=24)
        m = train_lmnn(ds, cfg, diam_ref=3.3)
        assert np.linalg.norm(m.matrix, ord=2) == pytest.approx(1 / 3.3, rel=1e-8)
