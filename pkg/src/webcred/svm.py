"""Linear support vector machine trained by dual coordinate descent.

The solver minimizes 1/2 ||w||^2 + C sum_i max(0, 1 - y_i (w.x_i + b))
with the bias handled as an augmented constant feature, which keeps every
dual update a one-dimensional clip.  The inner loop lives in
:mod:`webcred._kernels` so a compiled version can be swapped in.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import _kernels
from .errors import DataError
from .textprep import SparseVector, to_csr

DEFAULT_C = 100.0
TOLERANCE = 1e-4
MAX_EPOCHS = 1000


@dataclass
class SvmModel:
    """Trained linear SVM: prediction is sign(w.x + b), 0 mapped to 1."""

    weights: np.ndarray
    bias: float
    C: float
    epochs_run: int = 0
    converged: bool = True
    primal_history: list[float] = field(default_factory=list)
    dual_history: list[float] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.weights)

    def decision_function(self, x: SparseVector) -> float:
        if x.dim != self.dim:
            raise DataError(
                f"vector dimension {x.dim} does not match model dimension {self.dim}"
            )
        return float(x.values @ self.weights[x.indices] + self.bias)

    def predict(self, x: SparseVector) -> int:
        return 1 if self.decision_function(x) >= 0.0 else 0

    def to_dict(self) -> dict:
        return {
            "family": "svm",
            "params": {"C": self.C},
            "weights": [float(v) for v in self.weights],
            "bias": float(self.bias),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SvmModel":
        return cls(
            weights=np.asarray(data["weights"], dtype=np.float64),
            bias=float(data["bias"]),
            C=float(data["params"]["C"]),
        )


def _validate_training_set(X: Sequence[SparseVector], y: Sequence[int]) -> None:
    if len(X) != len(y):
        raise DataError(f"got {len(X)} vectors but {len(y)} labels")
    if len(X) < 2:
        raise DataError("training needs at least 2 samples")
    classes = set(int(v) for v in y)
    if not classes <= {0, 1}:
        raise DataError(f"labels must be 0 or 1, got {sorted(classes)}")
    if len(classes) != 2:
        raise DataError("training needs both classes present")


def train_linear_svm(
    X: Sequence[SparseVector],
    y: Sequence[int],
    C: float = DEFAULT_C,
    seed: int = 0,
    record_objective: bool = False,
) -> SvmModel:
    """Train on 0/1 labels; class 0 is mapped to the -1 side.

    Deterministic for a fixed seed.  Stops when the largest projected
    gradient over an epoch drops below 1e-4, or after 1000 epochs.
    """
    if C <= 0.0:
        raise DataError(f"C must be positive, got {C}")
    _validate_training_set(X, y)
    indptr, indices, data, dim = to_csr(X)
    signs = np.where(np.asarray(y, dtype=np.float64) > 0.0, 1.0, -1.0)
    w, bias, _alpha, epochs_run, converged, primal, dual = _kernels.svm_fit(
        indptr,
        indices,
        data,
        signs,
        dim,
        float(C),
        TOLERANCE,
        MAX_EPOCHS,
        seed,
        record_objective,
    )
    return SvmModel(
        weights=w,
        bias=float(bias),
        C=float(C),
        epochs_run=epochs_run,
        converged=converged,
        primal_history=list(primal) if primal is not None else [],
        dual_history=list(dual) if dual is not None else [],
    )
