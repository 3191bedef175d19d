# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: cycle-signature enumeration for G(m,b,n)."""
import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free

cnp.import_array()


cdef int _next_perm(int *p, int n):
    cdef int i = n - 2, j, t
    while i >= 0 and p[i] >= p[i + 1]:
        i -= 1
    if i < 0:
        return 0
    j = n - 1
    while p[j] <= p[i]:
        j -= 1
    t = p[i]; p[i] = p[j]; p[j] = t
    i += 1
    j = n - 1
    while i < j:
        t = p[i]; p[i] = p[j]; p[j] = t
        i += 1
        j -= 1
    return 1


def signature_codes(int m, int b, int n):
    """Same contract as reflex._fallback.signature_codes."""
    cdef long long B = (n + 1) * m
    cdef long long total = 1, nperm = 1, code, pw
    cdef int i, j, k, ncyc, ln, s, cnt, t
    for i in range(n):
        total *= m
        nperm *= (i + 1)
    total = total * nperm // b
    out = np.empty(total, dtype=np.int64)
    cdef long long[:] ov = out
    cdef int *perm = <int *> malloc(n * sizeof(int))
    cdef int *seen = <int *> malloc(n * sizeof(int))
    cdef int *cid = <int *> malloc(n * sizeof(int))
    cdef int *clen = <int *> malloc(n * sizeof(int))
    cdef int *dec = <int *> malloc(n * sizeof(int))
    cdef long long *cs = <long long *> malloc(n * sizeof(long long))
    cdef int *csum = <int *> malloc(n * sizeof(int))
    cdef long long pos = 0, tmp
    try:
        for i in range(n):
            perm[i] = i
        while True:
            for i in range(n):
                seen[i] = 0
            ncyc = 0
            for i in range(n):
                if seen[i]:
                    continue
                j = i
                ln = 0
                while not seen[j]:
                    seen[j] = 1
                    cid[j] = ncyc
                    ln += 1
                    j = perm[j]
                clen[ncyc] = ln
                ncyc += 1
            for i in range(n):
                dec[i] = 0
            while True:
                s = 0
                for i in range(n):
                    s += dec[i]
                if s % b == 0:
                    for k in range(ncyc):
                        csum[k] = 0
                    for i in range(n):
                        csum[cid[i]] += dec[i]
                    for k in range(ncyc):
                        cs[k] = clen[k] * m + csum[k] % m
                    # insertion sort, decreasing
                    for k in range(1, ncyc):
                        tmp = cs[k]
                        t = k - 1
                        while t >= 0 and cs[t] < tmp:
                            cs[t + 1] = cs[t]
                            t -= 1
                        cs[t + 1] = tmp
                    code = 0
                    for k in range(ncyc):
                        code = code * B + cs[k]
                    for k in range(n - ncyc):
                        code *= B
                    ov[pos] = code
                    pos += 1
                # odometer over decorations
                i = n - 1
                while i >= 0:
                    dec[i] += 1
                    if dec[i] < m:
                        break
                    dec[i] = 0
                    i -= 1
                if i < 0:
                    break
            if not _next_perm(perm, n):
                break
    finally:
        free(perm); free(seen); free(cid); free(clen); free(dec); free(cs); free(csum)
    return out


def alcove_counts(pair, refl, weights, heights, walls, long L, int cutoff):
    """Same contract as reflex._fallback.alcove_counts."""
    cdef int P = len(heights), W = len(walls)
    cdef cnp.ndarray[cnp.int64_t, ndim=2] pr = np.asarray(pair, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=2] rf = np.asarray(refl, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] wt = np.asarray(weights, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] counts = np.zeros(cutoff + 1, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] v, nv
    cdef cnp.ndarray[cnp.int64_t, ndim=2] ws, nw
    cdef long t, x, s, ns, sep, l2
    cdef int wi, d, g, j, k
    buckets = [[] for _ in range(cutoff + 1)]
    v = np.asarray(heights, dtype=np.int64)
    buckets[0].append((v, np.asarray(walls, dtype=np.int64).reshape(W, 2)))
    seen = {v.tobytes()}
    for s in range(cutoff + 1):
        for v, ws in buckets[s]:
            counts[s] += 1
            for wi in range(W):
                g = ws[wi, 0]
                k = ws[wi, 1]
                t = v[g] - k * L
                nv = np.empty(P, dtype=np.int64)
                ns = 0
                for d in range(P):
                    x = v[d] - t * pr[d, g]
                    nv[d] = x
                    if x > 0:
                        sep = x // L
                    else:
                        sep = (-x) // L + 1
                    ns += wt[d] * sep
                if ns <= s or ns > cutoff:
                    continue
                key = nv.tobytes()
                if key in seen:
                    continue
                seen.add(key)
                nw = np.empty((W, 2), dtype=np.int64)
                for d in range(W):
                    j = rf[g, ws[d, 0]]
                    l2 = ws[d, 1] - k * pr[ws[d, 0], g]
                    if j > 0:
                        nw[d, 0] = j - 1
                        nw[d, 1] = l2
                    else:
                        nw[d, 0] = -j - 1
                        nw[d, 1] = -l2
                buckets[ns].append((nv, nw))
        buckets[s] = None
    return counts
