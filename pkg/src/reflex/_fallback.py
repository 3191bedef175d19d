"""Pure-Python versions of the hot kernels (used when the extension is absent)."""
from __future__ import annotations

import itertools

import numpy as np


def signature_codes(m: int, b: int, n: int) -> np.ndarray:
    """One integer code per element of G(m,b,n) encoding its cycle signature.

    Each cycle (length l, decoration sum s mod m) maps to l*m + s; codes of the
    cycles are sorted in decreasing order and packed in base (n+1)*m.
    """
    B = (n + 1) * m
    out = []
    for perm in itertools.permutations(range(n)):
        cyc = []
        seen = [False] * n
        for i in range(n):
            if seen[i]:
                continue
            c, j = [], i
            while not seen[j]:
                seen[j] = True
                c.append(j)
                j = perm[j]
            cyc.append(c)
        for dec in itertools.product(range(m), repeat=n):
            if sum(dec) % b:
                continue
            cs = sorted((len(c) * m + sum(dec[k] for k in c) % m for c in cyc), reverse=True)
            code = 0
            for x in cs:
                code = code * B + x
            code *= B ** (n - len(cs))
            out.append(code)
    return np.asarray(out, dtype=np.int64)


def alcove_counts(pair, refl, weights, heights, walls, L: int, cutoff: int) -> np.ndarray:
    """Count alcoves by weighted separation statistic, up to ``cutoff``.

    Alcoves are points v (v[b] = L * <beta_b, x>, integers) with walls
    (root index, level).  Crossing wall (g, k) reflects: v[d] -= (v[g] - kL) pair[d][g],
    and the walls map (d, l) -> (s_g d, l - k pair[d][g]).  Only crossings that
    raise the statistic are followed; each alcove is reached once via buckets.
    ``refl[g][d]`` is the signed 1-based index of s_g(beta_d).
    """
    P = len(heights)

    def stat(v):
        s = 0
        for b in range(P):
            x = v[b]
            sep = x // L if x > 0 else (-x) // L + 1
            s += weights[b] * sep
        return s

    counts = np.zeros(cutoff + 1, dtype=np.int64)
    buckets = [[] for _ in range(cutoff + 1)]
    v0 = tuple(heights)
    buckets[0].append((v0, tuple(walls)))
    seen = {v0}
    for s in range(cutoff + 1):
        for v, ws in buckets[s]:
            counts[s] += 1
            for g, k in ws:
                t = v[g] - k * L
                nv = tuple(v[d] - t * pair[d][g] for d in range(P))
                ns = stat(nv)
                if ns <= s or ns > cutoff or nv in seen:
                    continue
                seen.add(nv)
                nw = []
                for d, l in ws:
                    j = refl[g][d]
                    l2 = l - k * pair[d][g]
                    nw.append((j - 1, l2) if j > 0 else (-j - 1, -l2))
                buckets[ns].append((nv, tuple(nw)))
        buckets[s] = None
    return counts
