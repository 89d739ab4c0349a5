"""Model family dispatch, hyperparameter grid search, and serialization."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Sequence

from .errors import DataError
from .forest import ForestModel, train_random_forest
from .svm import SvmModel, train_linear_svm
from .textprep import SparseVector

logger = logging.getLogger(__name__)

FAMILIES = ("svm", "rf")

DEFAULT_GRIDS: dict[str, dict[str, list]] = {
    "svm": {"C": [0.01, 0.1, 1.0, 10.0, 100.0]},
    "rf": {"n_estimators": [10, 50, 100]},
}

DEFAULT_PARAMS: dict[str, dict] = {
    "svm": {"C": 100.0},
    "rf": {"n_estimators": 10},
}


def train_model(
    family: str,
    X: Sequence[SparseVector],
    y: Sequence[int],
    params: dict | None = None,
    seed: int = 0,
    threads: int = 1,
) -> SvmModel | ForestModel:
    merged = dict(DEFAULT_PARAMS.get(family, {}))
    merged.update(params or {})
    if family == "svm":
        if "gamma" in merged:
            # A gamma setting is meaningful only for nonlinear kernels.
            logger.warning("gamma has no effect with a linear kernel; ignored")
            merged.pop("gamma")
        return train_linear_svm(X, y, C=merged["C"], seed=seed)
    if family == "rf":
        return train_random_forest(
            X, y, n_estimators=merged["n_estimators"], seed=seed, threads=threads
        )
    raise DataError(f"unknown model family {family!r} (expected one of {FAMILIES})")


def predict(model: SvmModel | ForestModel, x: SparseVector) -> int:
    return model.predict(x)


def model_to_dict(model: SvmModel | ForestModel) -> dict:
    return model.to_dict()


def model_from_dict(data: dict) -> SvmModel | ForestModel:
    family = data.get("family")
    if family == "svm":
        return SvmModel.from_dict(data)
    if family == "rf":
        return ForestModel.from_dict(data)
    raise DataError(f"unknown model family {family!r} in serialized model")


@dataclass
class GridPoint:
    params: dict
    f1_mean: float
    f1_std: float
    acc_mean: float
    acc_std: float


@dataclass
class GridResult:
    family: str
    best_params: dict
    table: list[GridPoint]


def grid_search(
    token_docs: Sequence[Sequence[str]],
    labels: Sequence[int],
    family: str,
    grid: dict[str, list] | None = None,
    k: int = 10,
    seed: int = 0,
    threads: int = 1,
) -> GridResult:
    """Cross-validate every grid point and keep the best one.

    Points are enumerated as the Cartesian product of the grid values in
    declaration order.  Best = highest mean F1, ties broken by higher mean
    accuracy, then by enumeration order.
    """
    from .eval import crossvalidate_criterion
    import numpy as np

    if grid is None:
        grid = DEFAULT_GRIDS[family]
    if not grid or any(not values for values in grid.values()):
        raise DataError("hyperparameter grid must be non-empty")
    names = list(grid)
    table: list[GridPoint] = []
    best: GridPoint | None = None
    for combo in itertools.product(*(grid[name] for name in names)):
        params = dict(zip(names, combo))
        f1s, accs = crossvalidate_criterion(
            token_docs, labels, family, params, k=k, seed=seed, threads=threads
        )
        point = GridPoint(
            params=params,
            f1_mean=float(np.mean(f1s)),
            f1_std=float(np.std(f1s)),
            acc_mean=float(np.mean(accs)),
            acc_std=float(np.std(accs)),
        )
        table.append(point)
        if (
            best is None
            or point.f1_mean > best.f1_mean
            or (point.f1_mean == best.f1_mean and point.acc_mean > best.acc_mean)
        ):
            best = point
    assert best is not None
    return GridResult(family=family, best_params=dict(best.params), table=table)
