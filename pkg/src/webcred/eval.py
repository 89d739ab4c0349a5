"""Cross-validation harness and classification metrics.

The harness refits the vocabulary and TF-IDF weights inside every fold so
no document frequency from a held-out fold leaks into training, and
stratifies folds because several criteria are heavily imbalanced.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import DataError, StratificationError
from .rng import SplitMix64, stream_seed
from .textprep import build_vocabulary, fit_tfidf, transform

DEFAULT_FOLDS = 10


def f1_and_accuracy(
    y_true: Sequence[int], y_pred: Sequence[int]
) -> tuple[float, float]:
    """Positive-class F1 and accuracy; F1 is 0 when precision+recall is 0."""
    if len(y_true) != len(y_pred):
        raise DataError(
            f"length mismatch: {len(y_true)} true vs {len(y_pred)} predicted"
        )
    if not y_true:
        raise DataError("cannot score an empty label sequence")
    tp = fp = fn = correct = 0
    for t, p in zip(y_true, y_pred):
        if t == p:
            correct += 1
        if p == 1 and t == 1:
            tp += 1
        elif p == 1 and t == 0:
            fp += 1
        elif p == 0 and t == 1:
            fn += 1
    accuracy = correct / len(y_true)
    denom = 2 * tp + fp + fn
    f1 = 2 * tp / denom if denom else 0.0
    return f1, accuracy


def stratified_kfold(
    labels: Sequence[int], k: int = DEFAULT_FOLDS, seed: int = 0
) -> list[list[int]]:
    """Split indices 0..n-1 into k folds with near-equal class balance.

    Each class is shuffled and dealt round-robin, the second class picking
    up where the first left off so fold sizes differ by at most 1.
    """
    n = len(labels)
    if k < 2:
        raise DataError(f"need at least 2 folds, got {k}")
    if n < k:
        raise DataError(f"cannot make {k} folds from {n} samples")
    positives = [i for i, v in enumerate(labels) if v == 1]
    negatives = [i for i, v in enumerate(labels) if v != 1]
    for name, members in (("positive", positives), ("negative", negatives)):
        if len(members) < k:
            raise StratificationError(
                f"{name} class has {len(members)} members, fewer than {k} "
                f"folds; relabel more documents or lower the fold count"
            )
    rng = SplitMix64(seed)
    rng.shuffle(positives)
    rng.shuffle(negatives)
    folds: list[list[int]] = [[] for _ in range(k)]
    cursor = 0
    for members in (positives, negatives):
        for idx in members:
            folds[cursor % k].append(idx)
            cursor += 1
    return [sorted(fold) for fold in folds]


@dataclass
class CvRow:
    """Mean and spread of fold metrics for one (criterion, family) pair."""

    criterion: int
    family: str
    f1_mean: float
    f1_std: float
    acc_mean: float
    acc_std: float


@dataclass
class CvReport:
    rows: list[CvRow]
    folds: int

    def write_csv(self, path: str | Path) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(
                ["criterion", "family", "f1_mean", "f1_std", "acc_mean", "acc_std"]
            )
            for row in self.rows:
                writer.writerow(
                    [
                        row.criterion,
                        row.family,
                        repr(row.f1_mean),
                        repr(row.f1_std),
                        repr(row.acc_mean),
                        repr(row.acc_std),
                    ]
                )


def read_cv_report_csv(path: str | Path, folds: int = DEFAULT_FOLDS) -> CvReport:
    """Load a cv_report.csv written by CvReport.write_csv.

    The fold count is not persisted in the file; callers that care can
    pass it, but family selection only needs the per-row means.
    """
    expected = ["criterion", "family", "f1_mean", "f1_std", "acc_mean", "acc_std"]
    rows: list[CvRow] = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != expected:
            raise DataError(f"{path}: expected header {','.join(expected)}")
        for row in reader:
            if not row:
                continue
            rows.append(
                CvRow(
                    criterion=int(row[0]),
                    family=row[1],
                    f1_mean=float(row[2]),
                    f1_std=float(row[3]),
                    acc_mean=float(row[4]),
                    acc_std=float(row[5]),
                )
            )
    if not rows:
        raise DataError(f"{path}: no report rows")
    return CvReport(rows=rows, folds=folds)


def crossvalidate_criterion(
    token_docs: Sequence[Sequence[str]],
    labels: Sequence[int],
    family: str,
    params: dict | None = None,
    k: int = DEFAULT_FOLDS,
    seed: int = 0,
    threads: int = 1,
) -> tuple[list[float], list[float]]:
    """Per-fold (F1, accuracy) lists for one criterion's labels.

    Fold f trains with substream seed stream_seed(seed, f), so folds can
    be evaluated in any order with identical results.
    """
    from .models import train_model

    if len(token_docs) != len(labels):
        raise DataError(
            f"got {len(token_docs)} documents but {len(labels)} labels"
        )
    folds = stratified_kfold(labels, k=k, seed=seed)
    f1s: list[float] = []
    accs: list[float] = []
    for f, held_out in enumerate(folds):
        held = set(held_out)
        train_idx = [i for i in range(len(labels)) if i not in held]
        train_tokens = [token_docs[i] for i in train_idx]
        vocab = build_vocabulary(train_tokens)
        if not len(vocab):
            raise DataError(
                "fold training split yields an empty vocabulary; "
                "corpus is too small or too sparse"
            )
        tfidf = fit_tfidf(train_tokens, vocab)
        X_train = [transform(t, tfidf) for t in train_tokens]
        y_train = [labels[i] for i in train_idx]
        model = train_model(
            family, X_train, y_train, params, seed=stream_seed(seed, f),
            threads=threads,
        )
        X_test = [transform(token_docs[i], tfidf) for i in held_out]
        y_test = [labels[i] for i in held_out]
        y_pred = [model.predict(x) for x in X_test]
        f1, acc = f1_and_accuracy(y_test, y_pred)
        f1s.append(f1)
        accs.append(acc)
    return f1s, accs


def cross_validate(
    token_docs: Sequence[Sequence[str]],
    labels_by_criterion: dict[int, Sequence[int]],
    families: Sequence[str] = ("svm", "rf"),
    params_by_family: dict[str, dict] | None = None,
    k: int = DEFAULT_FOLDS,
    seed: int = 0,
    threads: int = 1,
) -> CvReport:
    """Fold-averaged F1/accuracy for every criterion and model family.

    Standard deviations are population (divide-by-N) over the k folds.
    """
    rows: list[CvRow] = []
    for criterion in sorted(labels_by_criterion):
        labels = labels_by_criterion[criterion]
        for family in families:
            params = (params_by_family or {}).get(family)
            f1s, accs = crossvalidate_criterion(
                token_docs, labels, family, params, k=k, seed=seed,
                threads=threads,
            )
            rows.append(
                CvRow(
                    criterion=criterion,
                    family=family,
                    f1_mean=float(np.mean(f1s)),
                    f1_std=float(np.std(f1s)),
                    acc_mean=float(np.mean(accs)),
                    acc_std=float(np.std(accs)),
                )
            )
    return CvReport(rows=rows, folds=k)
