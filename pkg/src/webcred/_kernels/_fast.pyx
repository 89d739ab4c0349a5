# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled twins of the pure kernels in webcred._kernels.pure.

The SplitMix64 generator and every floating-point expression mirror the
pure implementations so both paths walk identical random streams; see
pure.py for the contract of each function.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport INFINITY
from libc.stdint cimport int8_t, int32_t, int64_t, uint64_t

cnp.import_array()

cdef uint64_t GOLDEN = 0x9E3779B97F4A7C15u


cdef inline uint64_t mix64(uint64_t x) nogil:
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9u
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBu
    return x ^ (x >> 31)


cdef inline uint64_t next_u64(uint64_t *state) nogil:
    state[0] = state[0] + GOLDEN
    return mix64(state[0])


def svm_fit(
    cnp.ndarray[int64_t, ndim=1] indptr,
    cnp.ndarray[int32_t, ndim=1] indices,
    cnp.ndarray[double, ndim=1] data,
    cnp.ndarray[double, ndim=1] y,
    int dim,
    double C,
    double tol,
    int max_epochs,
    unsigned long long seed,
    bint record_objective=False,
):
    cdef int n = y.shape[0]
    cdef cnp.ndarray[double, ndim=1] w = np.zeros(dim)
    cdef cnp.ndarray[double, ndim=1] alpha = np.zeros(n)
    cdef cnp.ndarray[double, ndim=1] qii = np.empty(n)
    cdef cnp.ndarray[int64_t, ndim=1] order = np.arange(n, dtype=np.int64)
    cdef double wb = 0.0
    cdef uint64_t state = <uint64_t> seed
    cdef int epoch, epochs_run = 0
    cdef bint converged = False
    cdef int64_t i, j, k, pos, itmp
    cdef int64_t lo, hi
    cdef double g, a, pg, a_new, d, max_violation, s
    primal_hist = [] if record_objective else None
    dual_hist = [] if record_objective else None

    for i in range(n):
        s = 0.0
        for k in range(indptr[i], indptr[i + 1]):
            s += data[k] * data[k]
        qii[i] = s + 1.0

    for epoch in range(max_epochs):
        # Fisher-Yates, identical draw order to SplitMix64.shuffle.
        for i in range(n - 1, 0, -1):
            j = <int64_t> (next_u64(&state) % (<uint64_t> (i + 1)))
            itmp = order[i]
            order[i] = order[j]
            order[j] = itmp
        max_violation = 0.0
        for pos in range(n):
            i = order[pos]
            lo = indptr[i]
            hi = indptr[i + 1]
            g = 0.0
            for k in range(lo, hi):
                g += data[k] * w[indices[k]]
            g = y[i] * (g + wb) - 1.0
            a = alpha[i]
            if a <= 0.0:
                pg = g if g < 0.0 else 0.0
            elif a >= C:
                pg = g if g > 0.0 else 0.0
            else:
                pg = g
            if pg < 0.0:
                if -pg > max_violation:
                    max_violation = -pg
            elif pg > max_violation:
                max_violation = pg
            if pg != 0.0:
                a_new = a - g / qii[i]
                if a_new < 0.0:
                    a_new = 0.0
                elif a_new > C:
                    a_new = C
                d = (a_new - a) * y[i]
                if d != 0.0:
                    for k in range(lo, hi):
                        w[indices[k]] += d * data[k]
                    wb += d
                    alpha[i] = a_new
        epochs_run += 1
        if record_objective:
            primal_hist.append(_primal(indptr, indices, data, y, w, wb, C))
            dual_hist.append(_dual(alpha, w, wb))
        if max_violation < tol:
            converged = True
            break
    return w, wb, alpha, epochs_run, converged, primal_hist, dual_hist


cdef double _primal(
    cnp.ndarray[int64_t, ndim=1] indptr,
    cnp.ndarray[int32_t, ndim=1] indices,
    cnp.ndarray[double, ndim=1] data,
    cnp.ndarray[double, ndim=1] y,
    cnp.ndarray[double, ndim=1] w,
    double wb,
    double C,
):
    cdef double hinge = 0.0, margin, reg = 0.0
    cdef int64_t i, k
    for i in range(y.shape[0]):
        margin = 0.0
        for k in range(indptr[i], indptr[i + 1]):
            margin += data[k] * w[indices[k]]
        margin = y[i] * (margin + wb)
        if margin < 1.0:
            hinge += 1.0 - margin
    for k in range(w.shape[0]):
        reg += w[k] * w[k]
    return 0.5 * (reg + wb * wb) + C * hinge


cdef double _dual(
    cnp.ndarray[double, ndim=1] alpha, cnp.ndarray[double, ndim=1] w, double wb
):
    cdef double asum = 0.0, reg = 0.0
    cdef int64_t k
    for k in range(alpha.shape[0]):
        asum += alpha[k]
    for k in range(w.shape[0]):
        reg += w[k] * w[k]
    return asum - 0.5 * (reg + wb * wb)


cdef void _sort_pairs(double* v, int8_t* lab, int64_t lo, int64_t hi) nogil:
    # Quicksort on value with insertion sort below 16 elements; recurses
    # into the smaller partition and loops on the larger one.
    cdef double pivot, tv
    cdef int8_t tl
    cdef int64_t i, j
    while lo < hi:
        if hi - lo < 16:
            for i in range(lo + 1, hi + 1):
                tv = v[i]
                tl = lab[i]
                j = i - 1
                while j >= lo and v[j] > tv:
                    v[j + 1] = v[j]
                    lab[j + 1] = lab[j]
                    j -= 1
                v[j + 1] = tv
                lab[j + 1] = tl
            return
        pivot = v[lo + ((hi - lo) >> 1)]
        i = lo
        j = hi
        while i <= j:
            while v[i] < pivot:
                i += 1
            while v[j] > pivot:
                j -= 1
            if i <= j:
                tv = v[i]; v[i] = v[j]; v[j] = tv
                tl = lab[i]; lab[i] = lab[j]; lab[j] = tl
                i += 1
                j -= 1
        # Recurse into the smaller side, loop on the larger.
        if j - lo < hi - i:
            _sort_pairs(v, lab, lo, j)
            lo = i
        else:
            _sort_pairs(v, lab, i, hi)
            hi = j


def node_best_split(
    cnp.ndarray[double, ndim=2, mode="c"] X,
    cnp.ndarray[int32_t, ndim=1] rows,
    cnp.ndarray[int32_t, ndim=1] feats,
    cnp.ndarray[int8_t, ndim=1] y,
):
    cdef int64_t m = rows.shape[0]
    cdef int64_t n_feats = feats.shape[0]
    if m < 2:
        return -1, 0.0, INFINITY
    cdef cnp.ndarray[double, ndim=1] vbuf = np.empty(m)
    cdef cnp.ndarray[int8_t, ndim=1] lbuf = np.empty(m, dtype=np.int8)
    cdef double* v = &vbuf[0]
    cdef int8_t* lab = &lbuf[0]
    cdef int64_t total1 = 0, i, fi, f
    cdef int64_t nl, c1l, c0l, nr, c1r, c0r, cum1
    cdef int best_feat = -1
    cdef double best_thr = 0.0, best_score = INFINITY
    cdef double p0l, p1l, p0r, p1r, gini_l, gini_r, weighted, thr
    cdef double feat_score, feat_thr
    cdef bint found

    for i in range(m):
        total1 += y[rows[i]]

    for fi in range(n_feats):
        f = feats[fi]
        for i in range(m):
            v[i] = X[rows[i], f]
            lab[i] = y[rows[i]]
        _sort_pairs(v, lab, 0, m - 1)
        found = False
        feat_score = INFINITY
        feat_thr = 0.0
        cum1 = 0
        for i in range(m - 1):
            cum1 += lab[i]
            if v[i] == v[i + 1]:
                continue
            nl = i + 1
            c1l = cum1
            c0l = nl - c1l
            nr = m - nl
            c1r = total1 - c1l
            c0r = nr - c1r
            p0l = (<double> c0l) / (<double> nl)
            p1l = (<double> c1l) / (<double> nl)
            p0r = (<double> c0r) / (<double> nr)
            p1r = (<double> c1r) / (<double> nr)
            gini_l = 1.0 - p0l * p0l - p1l * p1l
            gini_r = 1.0 - p0r * p0r - p1r * p1r
            weighted = ((<double> nl) * gini_l + (<double> nr) * gini_r) / (<double> m)
            if weighted < feat_score:
                thr = (v[i] + v[i + 1]) / 2.0
                if thr == v[i + 1]:
                    thr = v[i]
                feat_score = weighted
                feat_thr = thr
                found = True
        if found and feat_score < best_score:
            best_feat = <int> f
            best_thr = feat_thr
            best_score = feat_score
    return best_feat, best_thr, best_score
