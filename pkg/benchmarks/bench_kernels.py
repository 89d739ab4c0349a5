#!/usr/bin/env python3
"""Compare the compiled kernels against the pure-Python fallback.

Times the two hot kernels (dual coordinate descent and best-split
search) on synthetic data of adjustable size and checks that both
implementations agree on the result, so the benchmark doubles as a
smoke test for the fallback path.

Usage:
    python3 benchmarks/bench_kernels.py [--docs N] [--features D]
                                        [--node-rows N] [--repeats R]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from webcred._kernels import pure
from webcred.rng import SplitMix64

try:
    from webcred._kernels import _fast
except ImportError:
    _fast = None


def make_sparse_problem(n_docs: int, n_features: int, nnz_per_doc: int, seed: int):
    rng = SplitMix64(seed)
    indptr = np.zeros(n_docs + 1, dtype=np.int64)
    indices = []
    data = []
    y = np.empty(n_docs, dtype=np.float64)
    for i in range(n_docs):
        label = 1.0 if rng.randbelow(2) else -1.0
        y[i] = label
        cols = sorted(rng.sample_without_replacement(n_features - 2, nnz_per_doc))
        # Two class-correlated features make the problem separable enough
        # that the solver does real work instead of thrashing at random.
        cols.append(n_features - 2 if label > 0 else n_features - 1)
        vals = [0.05 + 0.95 * rng.uniform() for _ in cols]
        indices.extend(cols)
        data.extend(vals)
        indptr[i + 1] = len(indices)
    return (
        indptr,
        np.asarray(indices, dtype=np.int32),
        np.asarray(data, dtype=np.float64),
        y,
        n_features,
    )


def make_node_problem(n_rows: int, n_features: int, seed: int):
    rng = SplitMix64(seed)
    X = np.empty((n_rows, n_features), dtype=np.float64)
    for i in range(n_rows):
        for j in range(n_features):
            X[i, j] = rng.uniform()
    y = np.array([rng.randbelow(2) for _ in range(n_rows)], dtype=np.int8)
    rows = np.arange(n_rows, dtype=np.int32)
    feats = np.arange(n_features, dtype=np.int32)
    return X, rows, feats, y


def time_call(fn, *args, repeats: int) -> tuple[float, object]:
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--docs", type=int, default=1500)
    parser.add_argument("--features", type=int, default=3000)
    parser.add_argument("--nnz", type=int, default=40)
    parser.add_argument("--node-rows", type=int, default=4000)
    parser.add_argument("--node-features", type=int, default=40)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()

    if _fast is None:
        print("compiled kernels unavailable; timing the pure fallback only")

    print(f"svm_fit: {args.docs} docs, {args.features} features, "
          f"{args.nnz}+1 nnz/doc, C=1.0")
    problem = make_sparse_problem(args.docs, args.features, args.nnz, args.seed)

    def run_svm(impl):
        indptr, indices, data, y, dim = problem
        return impl.svm_fit(indptr, indices, data, y, dim, 1.0, 1e-4, 200,
                            args.seed, False)

    t_pure, out_pure = time_call(run_svm, pure, repeats=args.repeats)
    print(f"  pure      {t_pure:8.3f} s  ({out_pure[3]} epochs)")
    if _fast is not None:
        t_fast, out_fast = time_call(run_svm, _fast, repeats=args.repeats)
        print(f"  compiled  {t_fast:8.3f} s  ({out_fast[3]} epochs)")
        print(f"  speedup   {t_pure / t_fast:8.1f}x")
        if out_pure[3] != out_fast[3] or not np.allclose(
            out_pure[0], out_fast[0], rtol=1e-6, atol=1e-9
        ):
            print("  WARNING: implementations disagree")
            return 1

    print(f"node_best_split: {args.node_rows} rows, {args.node_features} features")
    X, rows, feats, y = make_node_problem(args.node_rows, args.node_features,
                                          args.seed + 1)
    t_pure, split_pure = time_call(pure.node_best_split, X, rows, feats, y,
                                   repeats=args.repeats)
    print(f"  pure      {t_pure:8.3f} s  -> {split_pure}")
    if _fast is not None:
        t_fast, split_fast = time_call(_fast.node_best_split, X, rows, feats, y,
                                       repeats=args.repeats)
        print(f"  compiled  {t_fast:8.3f} s  -> {split_fast}")
        print(f"  speedup   {t_pure / t_fast:8.1f}x")
        if split_pure != split_fast:
            print("  WARNING: implementations disagree")
            return 1

    # Deep trees spend most of their time on small nodes, where per-call
    # overhead dominates; benchmark that regime separately.
    n_small = 64
    calls = 2000
    print(f"node_best_split, small-node regime: {calls} calls on "
          f"{n_small}-row nodes")

    def run_small(impl):
        best = None
        for k in range(calls):
            r = rows[(k * 17) % (args.node_rows - n_small):][:n_small]
            best = impl.node_best_split(X, np.ascontiguousarray(r), feats, y)
        return best

    t_pure, small_pure = time_call(run_small, pure, repeats=args.repeats)
    print(f"  pure      {t_pure:8.3f} s")
    if _fast is not None:
        t_fast, small_fast = time_call(run_small, _fast, repeats=args.repeats)
        print(f"  compiled  {t_fast:8.3f} s")
        print(f"  speedup   {t_pure / t_fast:8.1f}x")
        if small_pure != small_fast:
            print("  WARNING: implementations disagree")
            return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
