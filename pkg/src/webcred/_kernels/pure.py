"""Pure numpy implementations of the hot training kernels.

These are the import-time fallback for :mod:`webcred._kernels._fast` and
the reference the compiled kernels are tested against.  The tree-split
kernel computes all split statistics from integer class counts with the
same floating-point expressions as the compiled version, so both produce
bit-identical trees.  The SVM kernel follows the same update sequence but
accumulates dot products through BLAS, so its weights can differ from the
compiled path in the last few ulps.
"""

from __future__ import annotations

import numpy as np

from ..rng import SplitMix64


def svm_fit(
    indptr: np.ndarray,
    indices: np.ndarray,
    data: np.ndarray,
    y: np.ndarray,
    dim: int,
    C: float,
    tol: float,
    max_epochs: int,
    seed: int,
    record_objective: bool = False,
):
    """Dual coordinate descent for the L1-loss linear SVM.

    Solves min 1/2 ||w||^2 + C sum max(0, 1 - y_i f(x_i)) with the bias
    realised as a constant augmented feature (so it is regularized too).
    y must be +-1.  Returns (w, bias, alpha, epochs_run, converged,
    primal_history, dual_history); histories are None unless requested.
    """
    n = len(y)
    w = np.zeros(dim)
    wb = 0.0
    alpha = np.zeros(n)
    # Q_ii = x_i . x_i + 1 for the augmented bias feature.
    qii = np.empty(n)
    for i in range(n):
        row = data[indptr[i] : indptr[i + 1]]
        qii[i] = row @ row + 1.0
    order = list(range(n))
    rng = SplitMix64(seed)
    primal_hist: list[float] = []
    dual_hist: list[float] = []
    epochs_run = 0
    converged = False
    for _ in range(max_epochs):
        rng.shuffle(order)
        max_violation = 0.0
        for i in order:
            lo, hi = indptr[i], indptr[i + 1]
            cols = indices[lo:hi]
            vals = data[lo:hi]
            g = y[i] * (vals @ w[cols] + wb) - 1.0
            a = alpha[i]
            if a <= 0.0:
                pg = min(g, 0.0)
            elif a >= C:
                pg = max(g, 0.0)
            else:
                pg = g
            if abs(pg) > max_violation:
                max_violation = abs(pg)
            if pg != 0.0:
                a_new = min(max(a - g / qii[i], 0.0), C)
                d = (a_new - a) * y[i]
                if d != 0.0:
                    w[cols] += d * vals
                    wb += d
                    alpha[i] = a_new
        epochs_run += 1
        if record_objective:
            primal_hist.append(_primal(indptr, indices, data, y, w, wb, C))
            dual_hist.append(float(alpha.sum() - 0.5 * (w @ w + wb * wb)))
        if max_violation < tol:
            converged = True
            break
    return (
        w,
        wb,
        alpha,
        epochs_run,
        converged,
        primal_hist if record_objective else None,
        dual_hist if record_objective else None,
    )


def _primal(indptr, indices, data, y, w, wb, C):
    hinge = 0.0
    for i in range(len(y)):
        lo, hi = indptr[i], indptr[i + 1]
        margin = y[i] * (data[lo:hi] @ w[indices[lo:hi]] + wb)
        if margin < 1.0:
            hinge += 1.0 - margin
    return float(0.5 * (w @ w + wb * wb) + C * hinge)


def node_best_split(
    X: np.ndarray, rows: np.ndarray, feats: np.ndarray, y: np.ndarray
) -> tuple[int, float, float]:
    """Best Gini split of a tree node over the candidate features.

    Scans ``feats`` in order; for each feature sorts the node's values and
    evaluates every boundary between distinct consecutive values, choosing
    the split with the smallest (n_left*gini_left + n_right*gini_right)/n.
    Ties keep the earlier candidate (first feature, then smallest
    threshold).  Returns (feature, threshold, weighted_gini), or
    (-1, 0.0, inf) when no feature admits a valid split.
    """
    m = len(rows)
    labels = y[rows].astype(np.int64)
    total1 = int(labels.sum())
    best_feat, best_thr, best_score = -1, 0.0, np.inf
    for f in feats:
        col = X[rows, f]
        order = np.argsort(col, kind="stable")
        v = col[order]
        cum1 = np.cumsum(labels[order])
        boundaries = np.nonzero(v[:-1] != v[1:])[0]
        if boundaries.size == 0:
            continue
        n_left = boundaries + 1
        c1_left = cum1[boundaries]
        c0_left = n_left - c1_left
        n_right = m - n_left
        c1_right = total1 - c1_left
        c0_right = n_right - c1_right
        # Explicit p*p (not **2) so the compiled kernel can reproduce the
        # exact same float64 operations.
        p0l, p1l = c0_left / n_left, c1_left / n_left
        p0r, p1r = c0_right / n_right, c1_right / n_right
        gini_left = 1.0 - p0l * p0l - p1l * p1l
        gini_right = 1.0 - p0r * p0r - p1r * p1r
        weighted = (n_left * gini_left + n_right * gini_right) / m
        j = int(np.argmin(weighted))
        if weighted[j] < best_score:
            i = boundaries[j]
            thr = (v[i] + v[i + 1]) / 2.0
            if thr == v[i + 1]:
                thr = v[i]
            best_feat, best_thr, best_score = int(f), float(thr), float(weighted[j])
    return best_feat, best_thr, best_score
