import math

import numpy as np
import pytest

from rpmetric.bounds import (
    BoundInputs,
    ambient_bound,
    excess_empirical_bound,
    generalisation_bound,
    rademacher_estimate_mc,
    rademacher_sup,
    tradeoff_table,
)
from rpmetric.metric import PairSet, spectral_normalize
from rpmetric.projection import sample_projection


def mp_oracle():
    """High-precision reference implementations, independent of the library
    float path."""
    from mpmath import mp, mpf, sqrt, log

    mp.dps = 40

    def gen(b):
        inner = 1 + sqrt(mpf(b.s_x) / b.k) + sqrt(2 * log(2 / mpf(str(b.eps))) / b.k)
        return 2 * mpf(b.rho) * sqrt(mpf(b.k) / b.n) * inner ** 2 + sqrt(
            log(2 / mpf(str(b.eps))) / (2 * b.n)
        )

    def exc(b):
        inner = 1 + sqrt(mpf(b.s_x) / b.k) + sqrt(2 * log(1 / mpf(str(b.eps))) / b.k)
        return mpf(b.rho) * inner ** 2

    def amb(b):
        return 2 * mpf(b.rho) * sqrt(mpf(b.d) / b.n) + sqrt(
            log(1 / mpf(str(b.eps))) / (2 * b.n)
        )

    return gen, exc, amb


class TestClosedForms:
    def test_generalisation_rho_zero(self):
        b = BoundInputs(k=5, n=800, s_x=1.0, rho=0.0, eps=0.1)
        assert generalisation_bound(b) == pytest.approx(0.043270459565057133, rel=1e-12)

    def test_generalisation_spot_value(self):
        b = BoundInputs(k=10, n=1600, s_x=5.0, rho=1.0, eps=0.1)
        # frozen from a 40-digit evaluation of the closed form
        assert generalisation_bound(b) == pytest.approx(1.003964351419479954, rel=1e-12)

    def test_excess_spot_value(self):
        b = BoundInputs(k=20, n=10, s_x=5.0, rho=1.0, eps=0.1)
        assert excess_empirical_bound(b) == pytest.approx(3.9198162829558289, rel=1e-12)

    def test_excess_rho_zero(self):
        b = BoundInputs(k=20, n=10, s_x=5.0, rho=0.0, eps=0.1)
        assert excess_empirical_bound(b) == 0.0

    def test_excess_limit_is_rho(self):
        b = BoundInputs(k=10 ** 9, n=10, s_x=5.0, rho=1.3, eps=0.1)
        assert excess_empirical_bound(b) == pytest.approx(1.3, rel=1e-3)

    def test_ambient_rho_zero(self):
        b = BoundInputs(k=1, n=800, s_x=1.0, rho=0.0, eps=0.1, d=10)
        assert ambient_bound(b) == pytest.approx(0.037935678234628659, rel=1e-12)

    def test_ambient_spot_value(self):
        b = BoundInputs(k=1, n=1600, s_x=1.0, rho=1.0, eps=0.1, d=100)
        assert ambient_bound(b) == pytest.approx(0.5268245753286168, rel=1e-12)

    def test_ambient_first_term_sqrt_homogeneous_in_d(self):
        b1 = BoundInputs(k=1, n=400, s_x=1.0, rho=1.0, eps=0.2, d=25)
        b4 = BoundInputs(k=1, n=400, s_x=1.0, rho=1.0, eps=0.2, d=100)
        tail = math.sqrt(math.log(1 / 0.2) / 800)
        assert ambient_bound(b4) - tail == pytest.approx(2 * (ambient_bound(b1) - tail))

    def test_ambient_requires_d(self):
        with pytest.raises(ValueError, match="ambient"):
            ambient_bound(BoundInputs(k=1, n=10, s_x=1.0, rho=1.0, eps=0.1))

    def test_matches_high_precision_oracle_on_grid(self):
        gen_o, exc_o, amb_o = mp_oracle()
        rng = np.random.default_rng(0)
        for _ in range(20):
            b = BoundInputs(
                k=int(rng.integers(1, 200)),
                n=int(rng.integers(10, 5000)),
                s_x=float(rng.uniform(0.2, 80.0)),
                rho=float(rng.uniform(0.0, 10.0)),
                eps=float(rng.uniform(0.01, 0.99)),
                d=int(rng.integers(100, 500)),
            )
            assert generalisation_bound(b) == pytest.approx(float(gen_o(b)), rel=1e-12)
            assert excess_empirical_bound(b) == pytest.approx(float(exc_o(b)), rel=1e-12)
            assert ambient_bound(b) == pytest.approx(float(amb_o(b)), rel=1e-12)

    def test_eps_outside_unit_interval_rejected(self):
        with pytest.raises(ValueError, match="eps"):
            BoundInputs(k=1, n=10, s_x=1.0, rho=1.0, eps=1.0)
        with pytest.raises(ValueError, match="eps"):
            BoundInputs(k=1, n=10, s_x=1.0, rho=1.0, eps=0.0)


class TestMonotonicity:
    # the generalisation bound increases in k only once k exceeds
    # (sqrt(s) + sqrt(2 ln(2/eps)))^2, so the k-grid lives in that regime
    K_GRID = (5, 10, 20, 40, 80)
    PARAMS = dict(n=1600, s_x=0.5, rho=1.0, eps=0.75)

    def test_generalisation_increasing_in_k(self):
        vals = [
            generalisation_bound(BoundInputs(k=k, **self.PARAMS))
            for k in self.K_GRID
        ]
        assert all(a < b for a, b in zip(vals, vals[1:]))

    def test_excess_decreasing_in_k_and_at_least_rho(self):
        for s_x in (0.5, 5.0, 20.0):
            vals = [
                excess_empirical_bound(
                    BoundInputs(k=k, n=10, s_x=s_x, rho=1.7, eps=0.1)
                )
                for k in self.K_GRID
            ]
            assert all(a > b for a, b in zip(vals, vals[1:]))
            assert all(v >= 1.7 for v in vals)

    def test_both_increasing_in_s(self):
        gen_vals, exc_vals = [], []
        for s in (0.5, 1.0, 2.0, 5.0, 10.0):
            gen_vals.append(
                generalisation_bound(BoundInputs(k=10, n=100, s_x=s, rho=1.0, eps=0.1))
            )
            exc_vals.append(
                excess_empirical_bound(BoundInputs(k=10, n=100, s_x=s, rho=1.0, eps=0.1))
            )
        assert all(a < b for a, b in zip(gen_vals, gen_vals[1:]))
        assert all(a < b for a, b in zip(exc_vals, exc_vals[1:]))

    def test_decreasing_in_n(self):
        for n_small, n_big in ((100, 200), (200, 400), (400, 800)):
            small = generalisation_bound(BoundInputs(k=10, n=n_small, s_x=2.0, rho=1.0, eps=0.1))
            big = generalisation_bound(BoundInputs(k=10, n=n_big, s_x=2.0, rho=1.0, eps=0.1))
            assert big < small
            amb_small = ambient_bound(BoundInputs(k=1, n=n_small, s_x=1.0, rho=1.0, eps=0.1, d=50))
            amb_big = ambient_bound(BoundInputs(k=1, n=n_big, s_x=1.0, rho=1.0, eps=0.1, d=50))
            assert amb_big < amb_small


class TestTradeoffTable:
    def test_single_row_consistent_with_scalars(self):
        rows = tradeoff_table([7], n=500, s_x=2.0, rho=1.5, eps=0.2, d=60)
        assert len(rows) == 1
        b = BoundInputs(k=7, n=500, s_x=2.0, rho=1.5, eps=0.2, d=60)
        assert rows[0].generalisation == generalisation_bound(b)
        assert rows[0].excess_empirical == excess_empirical_bound(b)
        assert rows[0].ambient == ambient_bound(b)

    def test_grid_monotonicity(self):
        rows = tradeoff_table([5, 10, 20, 40], n=1600, s_x=0.5, rho=1.0,
                              eps=0.75, d=100)
        gen = [r.generalisation for r in rows]
        exc = [r.excess_empirical for r in rows]
        assert all(a < b for a, b in zip(gen, gen[1:]))
        assert all(a > b for a, b in zip(exc, exc[1:]))

    def test_rho_zero_generalisation_constant_in_k(self):
        rows = tradeoff_table([5, 10, 20], n=800, s_x=2.0, rho=0.0, eps=0.1, d=50)
        gen = {r.generalisation for r in rows}
        assert len(gen) == 1

    def test_empty_grid_rejected(self):
        with pytest.raises(ValueError):
            tradeoff_table([], n=10, s_x=1.0, rho=1.0, eps=0.1, d=5)


def small_pairs(n, d, seed):
    rng = np.random.default_rng(seed)
    return PairSet(
        left=rng.standard_normal((n, d)),
        right=rng.standard_normal((n, d)),
        same_label=rng.integers(0, 2, n).astype(np.uint8),
    )


class TestRademacher:
    def test_zero_differences_give_zero(self):
        x = np.ones((6, 8))
        pairs = PairSet(x, x.copy(), np.ones(6, dtype=np.uint8))
        r = sample_projection(3, 8, "inv_k_variance", seed=0)
        est = rademacher_estimate_mc(pairs, r, diam_ref=1.0, num_sigma_draws=50, seed=1)
        assert est.value == 0.0
        assert est.num_clamped == 50

    def test_single_pair_two_outcome_enumeration(self):
        pairs = small_pairs(1, 6, seed=2)
        r = sample_projection(3, 6, "unit_variance", seed=3)
        v = (pairs.left - pairs.right) @ r.matrix.T
        sup_plus = float(np.sum(v ** 2))  # sigma = +1: top eigenvalue ||v||^2
        est = rademacher_estimate_mc(pairs, r, diam_ref=1.0,
                                     num_sigma_draws=4000, seed=4)
        # sigma = -1 clamps to zero, so the mean is about half of sup_plus
        assert est.value == pytest.approx(sup_plus / 2, abs=4 * est.std_error)
        assert 0 < est.num_clamped < 4000

    def test_closed_form_dominates_random_feasible_metrics(self):
        rng = np.random.default_rng(5)
        for trial in range(6):
            n, k, d = int(rng.integers(2, 10)), int(rng.integers(2, 6)), 12
            pairs = small_pairs(n, d, seed=100 + trial)
            r = sample_projection(k, d, "inv_k_variance", seed=200 + trial)
            v = (pairs.left - pairs.right) @ r.matrix.T
            sigma = rng.integers(0, 2, n) * 2.0 - 1.0
            s = v.T @ (sigma[:, None] * v)
            sup, _ = rademacher_sup(s, diam_ref=2.0)
            raw = rng.standard_normal((2000, k, k))
            best = -np.inf
            for m_raw in raw:
                m = spectral_normalize(m_raw, 2.0).matrix
                val = float(np.sum(sigma * np.sum((v @ m.T) ** 2, axis=1)))
                best = max(best, val)
            assert best <= sup + 1e-9

    def test_per_draw_trace_bound(self):
        pairs = small_pairs(8, 10, seed=6)
        r = sample_projection(4, 10, "inv_k_variance", seed=7)
        v = (pairs.left - pairs.right) @ r.matrix.T
        rng = np.random.default_rng(8)
        for _ in range(200):
            sigma = rng.integers(0, 2, 8) * 2.0 - 1.0
            s = v.T @ (sigma[:, None] * v)
            sup, _ = rademacher_sup(s, diam_ref=1.3)
            trace_cap = float(np.sum(v ** 2)) / 1.3 ** 2
            assert sup <= trace_cap + 1e-9

    def test_deterministic(self):
        pairs = small_pairs(5, 7, seed=9)
        r = sample_projection(3, 7, "inv_k_variance", seed=10)
        a = rademacher_estimate_mc(pairs, r, 1.0, num_sigma_draws=100, seed=11)
        b = rademacher_estimate_mc(pairs, r, 1.0, num_sigma_draws=100, seed=11)
        assert a.value == b.value
        assert a.num_clamped == b.num_clamped

    def test_mc_mean_matches_exact_sign_enumeration(self):
        # n=4 pairs: average the closed-form supremum over all 16 sign
        # vectors exactly and compare with the Monte Carlo mean
        n, d, k = 4, 9, 3
        pairs = small_pairs(n, d, seed=12)
        r = sample_projection(k, d, "inv_k_variance", seed=13)
        v = (pairs.left - pairs.right) @ r.matrix.T
        diam_ref = 1.8
        exact = 0.0
        for bits in range(2 ** n):
            sigma = np.array([1.0 if bits & (1 << i) else -1.0 for i in range(n)])
            s = v.T @ (sigma[:, None] * v)
            sup, _ = rademacher_sup(s, diam_ref)
            exact += sup / n
        exact /= 2 ** n
        est = rademacher_estimate_mc(pairs, r, diam_ref, num_sigma_draws=6000, seed=14)
        assert est.value == pytest.approx(exact, abs=4 * est.std_error)
