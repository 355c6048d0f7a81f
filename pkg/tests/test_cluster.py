import math

import numpy as np
import pytest

from flexirank.cluster import ClusterModel, classification_entropy, fcm_fit


def random_data(seed, n=30, d=7):
    rng = np.random.default_rng(seed)
    return rng.uniform(0, 100, size=(n, d))


def two_blobs(seed=7, per_blob=20, d=7, separation=10.0, sigma=0.1):
    rng = np.random.default_rng(seed)
    mean_a = np.zeros(d)
    mean_b = np.full(d, separation)
    a = rng.normal(mean_a, sigma, size=(per_blob, d))
    b = rng.normal(mean_b, sigma, size=(per_blob, d))
    return np.vstack([a, b]), mean_a, mean_b


class TestFcmFit:
    def test_single_cluster_is_column_mean(self):
        X = random_data(1, n=12)
        model = fcm_fit(X, c=1, seed=3)
        assert np.allclose(model.membership, 1.0)
        np.testing.assert_allclose(model.centers[0], X.mean(axis=0), atol=1e-9)

    def test_blob_recovery(self):
        X, mean_a, mean_b = two_blobs()
        model = fcm_fit(X, c=2, seed=11)
        order = np.argsort(model.centers[:, 0])
        np.testing.assert_allclose(model.centers[order[0]], mean_a, atol=0.5)
        np.testing.assert_allclose(model.centers[order[1]], mean_b, atol=0.5)

    @pytest.mark.parametrize("seed", range(6))
    def test_row_sums_after_every_iteration(self, seed):
        X = random_data(seed, n=15)
        for k in range(1, 9):
            model = fcm_fit(X, c=3, tol=0.0, max_iter=k, seed=seed)
            assert model.iterations == k
            np.testing.assert_allclose(model.membership.sum(axis=1), 1.0, atol=1e-9)
            assert np.all(model.membership >= 0) and np.all(model.membership <= 1)

    @pytest.mark.parametrize("seed", range(8))
    def test_objective_trace_non_increasing(self, seed):
        X = random_data(seed * 101 + 7)
        model = fcm_fit(X, c=4, seed=seed)
        trace = model.objective_trace
        assert len(trace) == model.iterations
        assert np.all(np.diff(trace) <= 1e-10 * max(1.0, trace[0]))

    def test_deterministic_given_seed(self):
        X = random_data(5)
        a = fcm_fit(X, c=3, seed=42)
        b = fcm_fit(X, c=3, seed=42)
        np.testing.assert_array_equal(a.membership, b.membership)
        np.testing.assert_array_equal(a.centers, b.centers)

    def test_permutation_equivariance_with_fixed_initial_membership(self):
        X = random_data(9, n=10)
        rng = np.random.default_rng(0)
        U0 = rng.uniform(size=(10, 3))
        U0 /= U0.sum(axis=1, keepdims=True)
        perm = rng.permutation(10)
        base = fcm_fit(X, c=3, initial_membership=U0, max_iter=20, tol=0.0)
        permuted = fcm_fit(X[perm], c=3, initial_membership=U0[perm], max_iter=20, tol=0.0)
        np.testing.assert_allclose(permuted.membership, base.membership[perm], atol=1e-9)

    def test_point_on_center_gets_full_membership(self):
        X = np.array([[0.0, 0.0], [0.0, 0.0], [5.0, 5.0]])
        U0 = np.array([[1.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
        model = fcm_fit(X, c=2, initial_membership=U0, max_iter=1, tol=0.0, scale=False)
        np.testing.assert_array_equal(model.membership[0], [1.0, 0.0])
        np.testing.assert_array_equal(model.membership[2], [0.0, 1.0])

    def test_too_few_rows_raises(self):
        with pytest.raises(ValueError):
            fcm_fit(random_data(0, n=3), c=4)

    def test_bad_fuzzifier_raises(self):
        with pytest.raises(ValueError):
            fcm_fit(random_data(0), c=2, m=1.0)


def model_with_membership(U):
    U = np.asarray(U, dtype=float)
    return ClusterModel(
        c=U.shape[1], m=2.0, centers=np.zeros((U.shape[1], 1)),
        membership=U, objective_trace=np.array([0.0]), iterations=1,
    )


class TestClassificationEntropy:
    def test_crisp_membership_is_zero(self):
        U = np.eye(4)[[0, 1, 2, 3, 0, 1]]
        assert classification_entropy(model_with_membership(U)) == pytest.approx(0.0, abs=1e-12)

    def test_uniform_membership_is_ln_c(self):
        U = np.full((10, 4), 0.25)
        assert classification_entropy(model_with_membership(U)) == pytest.approx(
            math.log(4), abs=1e-12
        )

    def test_bounds(self):
        X = random_data(21)
        for c in (2, 3, 5):
            model = fcm_fit(X, c=c, seed=1)
            entropy = classification_entropy(model)
            assert 0.0 <= entropy <= math.log(c) + 1e-12

    def test_blobs_crisper_at_true_cluster_count(self):
        X, _, _ = two_blobs()
        e2 = classification_entropy(fcm_fit(X, c=2, seed=2))
        e4 = classification_entropy(fcm_fit(X, c=4, seed=2))
        assert e2 < e4
