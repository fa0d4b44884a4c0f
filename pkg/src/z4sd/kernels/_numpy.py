"""Pure-numpy twins of the numba kernels (same signatures, same results).

Enumerations are blocked: a table of all words from the low rows is built
once, then shifted by every combination of the high rows with a vectorised
plane addition.
"""

from __future__ import annotations

import itertools
from math import comb

import numpy as np

_BLOCK_BITS = 16


def popcount(x):
    return int(np.bitwise_count(np.uint64(x)))


def _add(lo_a, hi_a, lo_b, hi_b):
    return lo_a ^ lo_b, hi_a ^ hi_b ^ (lo_a & lo_b)


def _multiples(lo_row, hi_row):
    out = [(np.uint64(0), np.uint64(0))]
    for _ in range(3):
        out.append(_add(out[-1][0], out[-1][1], np.uint64(lo_row), np.uint64(hi_row)))
    return out


def _table(lo_rows, hi_rows, radix, m):
    t_lo = np.zeros(1, dtype=np.uint64)
    t_hi = np.zeros(1, dtype=np.uint64)
    for j in range(m):
        mult = _multiples(lo_rows[j], hi_rows[j])
        parts = [_add(t_lo, t_hi, mult[v][0], mult[v][1]) for v in range(int(radix[j]))]
        t_lo = np.concatenate([p[0] for p in parts])
        t_hi = np.concatenate([p[1] for p in parts])
    return t_lo, t_hi


def _split(radix, n_free):
    """Number of low rows to tabulate so the table stays near 2**_BLOCK_BITS."""
    m, size = 0, 1
    while m < n_free and size * int(radix[m]) <= (1 << _BLOCK_BITS):
        size *= int(radix[m])
        m += 1
    return m


def _blocks(lo_rows, hi_rows, radix, start_lo, start_hi, n_free):
    m = _split(radix, n_free)
    t_lo, t_hi = _table(lo_rows, hi_rows, radix, m)
    base_lo, base_hi = np.uint64(start_lo), np.uint64(start_hi)
    high = [range(int(radix[j])) for j in range(m, n_free)]
    for digits in itertools.product(*high):
        lo, hi = base_lo, base_hi
        for off, d in enumerate(digits):
            j = m + off
            for _ in range(d):
                lo, hi = _add(lo, hi, np.uint64(lo_rows[j]), np.uint64(hi_rows[j]))
        yield _add(t_lo, t_hi, lo, hi)


def z4_swe(lo_rows, hi_rows, radix, start_lo, start_hi, n_free, n):
    hist = np.zeros((n + 1) * (n + 1), dtype=np.int64)
    for lo, hi in _blocks(lo_rows, hi_rows, radix, start_lo, start_hi, n_free):
        a = np.bitwise_count(lo).astype(np.int64)
        b = np.bitwise_count(hi & ~lo).astype(np.int64)
        hist += np.bincount(a * (n + 1) + b, minlength=hist.size)
    return hist.reshape(n + 1, n + 1)


def z4_supports(lo_rows, hi_rows, radix, start_lo, start_hi, n_free, t):
    found = []
    for lo, hi in _blocks(lo_rows, hi_rows, radix, start_lo, start_hi, n_free):
        s = lo | hi
        found.append(s[np.bitwise_count(s) == t])
    return np.concatenate(found) if found else np.zeros(0, dtype=np.uint64)


def subset_counts(masks, n, k):
    bits = ((masks[:, None] >> np.arange(n, dtype=np.uint64)) & np.uint64(1)).astype(np.int64)
    counts = np.zeros(comb(n, k), dtype=np.int64)
    for cols in itertools.combinations(range(n), k):
        rank = sum(comb(c, i + 1) for i, c in enumerate(cols))
        counts[rank] = int(np.prod(bits[:, list(cols)], axis=1).sum())
    return counts


def gf2_weight_hist(rows, start, n_free, n):
    radix = np.full(n_free, 2, dtype=np.int64)
    zeros = np.zeros(len(rows), dtype=np.uint64)
    hist = np.zeros(n + 1, dtype=np.int64)
    # a binary word is a Z4 word with empty hi plane; only lo matters here
    for lo, _ in _blocks(rows, zeros, radix, start, 0, n_free):
        hist += np.bincount(np.bitwise_count(lo).astype(np.int64), minlength=n + 1)
    return hist


def gf2_combo_min(rows, w):
    k = len(rows)
    best, witness = 1 << 30, np.uint64(0)
    if w < 1 or w > k:
        return best, witness
    rows = np.asarray(rows, dtype=np.uint64)
    it = itertools.combinations(range(k), w)
    while True:
        chunk = list(itertools.islice(it, 1 << 16))
        if not chunk:
            break
        idx = np.array(chunk, dtype=np.int64)
        words = np.bitwise_xor.reduce(rows[idx], axis=1)
        wts = np.bitwise_count(words)
        i = int(np.argmin(wts))
        if int(wts[i]) < best:
            best, witness = int(wts[i]), words[i]
    return best, witness


def coset_leader_hist(columns, r):
    size = 1 << r
    dist = np.full(size, 255, dtype=np.uint8)
    dist[0] = 0
    hist = np.zeros(len(columns) + 1, dtype=np.int64)
    hist[0] = 1
    frontier = np.array([0], dtype=np.int64)
    level = 0
    while frontier.size:
        nxt = np.unique((frontier[:, None] ^ np.asarray(columns, dtype=np.int64)[None, :]).ravel())
        nxt = nxt[dist[nxt] == 255]
        dist[nxt] = level + 1
        if nxt.size:
            hist[level + 1] = nxt.size
        frontier = nxt
        level += 1
    return hist


def z4_low_support(mult_lo, mult_hi, radix, max_support, n):
    k = mult_lo.shape[0]
    hist = np.zeros((n + 1) * (n + 1), dtype=np.int64)
    best = np.zeros((2, 3), dtype=np.uint64)
    best[:, 0] = 1 << 30
    for s in range(1, min(max_support, k) + 1):
        for cols in itertools.combinations(range(k), s):
            vals = np.array(list(itertools.product(*[range(1, int(radix[c])) for c in cols])), dtype=np.int64)
            lo = np.zeros(len(vals), dtype=np.uint64)
            hi = np.zeros(len(vals), dtype=np.uint64)
            for i, c in enumerate(cols):
                lo, hi = _add(lo, hi, mult_lo[c, vals[:, i]], mult_hi[c, vals[:, i]])
            a = np.bitwise_count(lo).astype(np.int64)
            b = np.bitwise_count(hi & ~lo).astype(np.int64)
            hist += np.bincount(a * (n + 1) + b, minlength=hist.size)
            for row, wt in ((0, a + 2 * b), (1, a + 4 * b)):
                i = int(np.argmin(wt))
                if wt[i] < best[row, 0]:
                    best[row] = (wt[i], lo[i], hi[i])
    return hist.reshape(n + 1, n + 1), best


def lift_descend(state, params, deltas, bad, offsets, max_steps):
    cost = int(bad[offsets + state].sum())
    for _ in range(max_steps):
        if cost == 0:
            break
        trial = bad[offsets[None, :] + (state[None, :] ^ deltas)].sum(axis=1)
        p = int(np.argmin(trial))
        if trial[p] >= cost:
            break
        state ^= deltas[p]
        params[p] ^= 1
        cost = int(trial[p])
    return cost
