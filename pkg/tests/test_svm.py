import json
import random

import numpy as np
import pytest

from webcred import _kernels
from webcred.errors import DataError
from webcred.svm import SvmModel, train_linear_svm
from webcred.textprep import SparseVector, to_csr


def sv(pairs: dict[int, float], dim: int) -> SparseVector:
    idx = sorted(pairs)
    return SparseVector(
        indices=np.asarray(idx, dtype=np.int32),
        values=np.asarray([pairs[i] for i in idx], dtype=np.float64),
        dim=dim,
    )


def random_separable_problem(rng: random.Random, n_docs: int, dim: int):
    """Sparse points whose first coordinate carries the class signal."""
    X, y = [], []
    for _ in range(n_docs):
        label = rng.randint(0, 1)
        idx = sorted(rng.sample(range(dim), rng.randint(1, min(4, dim))))
        vals = [rng.uniform(0.1, 1.0) for _ in idx]
        if 0 not in idx:
            idx = [0] + idx
            vals = [0.0] + vals
        vals[0] = rng.uniform(1.0, 2.0) if label else rng.uniform(-2.0, -1.0)
        X.append(sv(dict(zip(idx, vals)), dim))
        y.append(label)
    if len(set(y)) < 2:
        y[0] = 1 - y[0]
        vals = X[0].values.copy()
        vals[0] = -vals[0]
        X[0] = SparseVector(indices=X[0].indices, values=vals, dim=dim)
    return X, y


class TestTwoPointProblem:
    def test_recovers_the_analytic_solution(self):
        X = [sv({0: 1.0}, 2), sv({1: 1.0}, 2)]
        y = [1, 0]
        model = train_linear_svm(X, y, C=100.0, seed=0)
        # Minimizing w1^2 + w2^2 subject to w1 + b >= 1 and w2 + b <= -1
        # gives w = (1, -1), b = 0.
        assert model.weights[0] == pytest.approx(1.0, abs=1e-3)
        assert model.weights[1] == pytest.approx(-1.0, abs=1e-3)
        assert model.bias == pytest.approx(0.0, abs=1e-3)
        assert model.converged

    def test_two_point_predictions(self):
        X = [sv({0: 1.0}, 2), sv({1: 1.0}, 2)]
        model = train_linear_svm(X, [1, 0], C=100.0, seed=0)
        assert model.predict(X[0]) == 1
        assert model.predict(X[1]) == 0


class TestSeparableProblems:
    def test_full_training_accuracy_on_separable_data(self):
        for trial in range(10):
            rng = random.Random(200 + trial)
            X, y = random_separable_problem(rng, rng.randint(10, 40), 6)
            model = train_linear_svm(X, y, C=100.0, seed=trial)
            predictions = [model.predict(x) for x in X]
            assert predictions == y

    def test_deterministic_for_fixed_seed(self):
        rng = random.Random(77)
        X, y = random_separable_problem(rng, 30, 5)
        a = train_linear_svm(X, y, C=10.0, seed=9)
        b = train_linear_svm(X, y, C=10.0, seed=9)
        assert np.array_equal(a.weights, b.weights)
        assert a.bias == b.bias
        assert a.epochs_run == b.epochs_run


class TestValidation:
    def test_single_class_rejected(self):
        X = [sv({0: 1.0}, 2), sv({0: 2.0}, 2)]
        with pytest.raises(DataError):
            train_linear_svm(X, [1, 1], C=1.0, seed=0)

    def test_length_mismatch_rejected(self):
        X = [sv({0: 1.0}, 2)]
        with pytest.raises(DataError):
            train_linear_svm(X, [1, 0], C=1.0, seed=0)

    def test_non_binary_labels_rejected(self):
        X = [sv({0: 1.0}, 2), sv({1: 1.0}, 2)]
        with pytest.raises(DataError):
            train_linear_svm(X, [1, 2], C=1.0, seed=0)

    def test_nonpositive_c_rejected(self):
        X = [sv({0: 1.0}, 2), sv({1: 1.0}, 2)]
        with pytest.raises(DataError):
            train_linear_svm(X, [1, 0], C=0.0, seed=0)

    def test_too_few_samples_rejected(self):
        with pytest.raises(DataError):
            train_linear_svm([sv({0: 1.0}, 2)], [1], C=1.0, seed=0)

    def test_decision_function_checks_dimension(self):
        X = [sv({0: 1.0}, 2), sv({1: 1.0}, 2)]
        model = train_linear_svm(X, [1, 0], C=1.0, seed=0)
        with pytest.raises(DataError):
            model.decision_function(sv({0: 1.0}, 3))


class TestSolverProperties:
    def test_dual_variables_stay_in_the_box(self):
        for trial in range(10):
            rng = random.Random(300 + trial)
            X, y = random_separable_problem(rng, rng.randint(8, 25), 5)
            C = rng.choice([0.1, 1.0, 10.0])
            indptr, indices, data, dim = to_csr(X)
            signs = np.where(np.asarray(y) > 0, 1.0, -1.0)
            out = _kernels.svm_fit(indptr, indices, data, signs, dim,
                                   C, 1e-4, 1000, trial, False)
            alpha = out[2]
            assert np.all(alpha >= 0.0)
            assert np.all(alpha <= C)

    def test_dual_objective_never_decreases(self):
        for trial in range(10):
            rng = random.Random(400 + trial)
            X, y = random_separable_problem(rng, rng.randint(8, 25), 5)
            model = train_linear_svm(X, y, C=1.0, seed=trial,
                                     record_objective=True)
            history = model.dual_history
            assert history is not None
            for earlier, later in zip(history, history[1:]):
                assert later >= earlier - 1e-9

    def test_duality_gap_small_at_convergence(self):
        for trial in range(10):
            rng = random.Random(500 + trial)
            X, y = random_separable_problem(rng, rng.randint(8, 25), 5)
            model = train_linear_svm(X, y, C=1.0, seed=trial,
                                     record_objective=True)
            assert model.converged
            primal = model.primal_history[-1]
            dual = model.dual_history[-1]
            assert primal >= dual - 1e-9
            assert (primal - dual) / max(1.0, abs(primal)) < 1e-3

    def test_primal_objective_net_decrease(self):
        for trial in range(10):
            rng = random.Random(600 + trial)
            X, y = random_separable_problem(rng, rng.randint(8, 25), 5)
            model = train_linear_svm(X, y, C=1.0, seed=trial,
                                     record_objective=True)
            assert model.primal_history[-1] <= model.primal_history[0] + 1e-9

    def test_epoch_cap_reported_as_not_converged(self):
        rng = random.Random(8)
        X, y = random_separable_problem(rng, 30, 5)
        indptr, indices, data, dim = to_csr(X)
        signs = np.where(np.asarray(y) > 0, 1.0, -1.0)
        out = _kernels.svm_fit(indptr, indices, data, signs, dim,
                               100.0, 1e-12, 1, 0, False)
        assert out[3] == 1
        assert not out[4]


class TestSerialization:
    def test_round_trip_is_exact(self):
        rng = random.Random(12)
        X, y = random_separable_problem(rng, 20, 5)
        model = train_linear_svm(X, y, C=100.0, seed=3)
        payload = json.dumps(model.to_dict())
        restored = SvmModel.from_dict(json.loads(payload))
        assert np.array_equal(restored.weights, model.weights)
        assert restored.bias == model.bias
        assert restored.C == model.C
        for x in X:
            assert restored.predict(x) == model.predict(x)

    def test_dict_shape(self):
        X = [sv({0: 1.0}, 2), sv({1: 1.0}, 2)]
        model = train_linear_svm(X, [1, 0], C=100.0, seed=0)
        data = model.to_dict()
        assert data["family"] == "svm"
        assert data["params"] == {"C": 100.0}
        assert len(data["weights"]) == 2
