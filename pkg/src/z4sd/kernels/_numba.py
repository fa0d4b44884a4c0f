"""numba implementations of the hot loops.

Every function here has a twin with the same signature in ``_numpy``.
Words are packed one coordinate per bit of a uint64; a Z4 word is a pair
of such planes (lo, hi) with coordinate value ``2*hi + lo``.
"""

from __future__ import annotations

import numpy as np
from numba import njit, types
from numba.extending import intrinsic


@intrinsic
def _ctpop(typingctx, x):
    if not isinstance(x, types.Integer):
        return None
    sig = x(x)

    def codegen(context, builder, signature, args):
        return builder.ctpop(args[0])

    return sig, codegen


@intrinsic
def _cttz(typingctx, x):
    if not isinstance(x, types.Integer):
        return None
    sig = x(x)

    def codegen(context, builder, signature, args):
        (val,) = args
        fn = builder.module.declare_intrinsic("llvm.cttz", [val.type, context.get_value_type(types.boolean)])
        return builder.call(fn, [val, context.get_constant(types.boolean, False)])

    return sig, codegen


@njit(cache=True, nogil=True)
def popcount(x):
    return np.int64(_ctpop(np.uint64(x)))


@njit(cache=True, nogil=True, boundscheck=False)
def z4_swe(lo_rows, hi_rows, radix, start_lo, start_hi, n_free, n):
    """Histogram of (#odd coords, #coords equal to 2) over one enumeration chunk.

    Visits ``start + sum(d_i * row_i)`` for every digit vector of the first
    ``n_free`` rows, one row addition per step (modular Gray order).  The
    innermost digit is unrolled: each block is radix[0] - 1 additions of
    row 0 followed by one addition of a higher row.
    """
    w = n + 1
    flat = np.zeros(w * w, dtype=np.int64)
    lo = np.uint64(start_lo)
    hi = np.uint64(start_hi)
    flat[_ctpop(lo) * w + _ctpop(hi & ~lo)] += 1
    if n_free == 0:
        return flat.reshape(w, w)
    total = 1
    for i in range(n_free):
        total *= radix[i]
    r0 = radix[0]
    r0l = lo_rows[0]
    r0h = hi_rows[0]
    cnt = np.zeros(n_free + 1, dtype=np.int64)
    for blk in range(total // r0):
        if blk > 0:
            j = 1
            while cnt[j] == radix[j] - 1:
                cnt[j] = 0
                j += 1
            cnt[j] += 1
            rl = lo_rows[j]
            carry = lo & rl
            lo ^= rl
            hi ^= hi_rows[j] ^ carry
            flat[_ctpop(lo) * w + _ctpop(hi & ~lo)] += 1
        for _ in range(r0 - 1):
            carry = lo & r0l
            lo ^= r0l
            hi ^= r0h ^ carry
            flat[_ctpop(lo) * w + _ctpop(hi & ~lo)] += 1
    return flat.reshape(w, w)


@njit(cache=True, nogil=True, boundscheck=False)
def _z4_support_pass(lo_rows, hi_rows, radix, start_lo, start_hi, n_free, t, out, fill):
    lo = np.uint64(start_lo)
    hi = np.uint64(start_hi)
    found = 0
    s = lo | hi
    if _ctpop(s) == t:
        if fill:
            out[found] = s
        found += 1
    if n_free == 0:
        return found
    total = 1
    for i in range(n_free):
        total *= radix[i]
    r0 = radix[0]
    r0l = lo_rows[0]
    r0h = hi_rows[0]
    cnt = np.zeros(n_free + 1, dtype=np.int64)
    for blk in range(total // r0):
        if blk > 0:
            j = 1
            while cnt[j] == radix[j] - 1:
                cnt[j] = 0
                j += 1
            cnt[j] += 1
            rl = lo_rows[j]
            carry = lo & rl
            lo ^= rl
            hi ^= hi_rows[j] ^ carry
            s = lo | hi
            if _ctpop(s) == t:
                if fill:
                    out[found] = s
                found += 1
        for _ in range(r0 - 1):
            carry = lo & r0l
            lo ^= r0l
            hi ^= r0h ^ carry
            s = lo | hi
            if _ctpop(s) == t:
                if fill:
                    out[found] = s
                found += 1
    return found


@njit(cache=True, nogil=True)
def z4_supports(lo_rows, hi_rows, radix, start_lo, start_hi, n_free, t):
    """Support masks of all chunk words of Hamming weight ``t``."""
    dummy = np.zeros(1, dtype=np.uint64)
    count = _z4_support_pass(lo_rows, hi_rows, radix, start_lo, start_hi, n_free, t, dummy, False)
    out = np.zeros(count, dtype=np.uint64)
    _z4_support_pass(lo_rows, hi_rows, radix, start_lo, start_hi, n_free, t, out, True)
    return out


@njit(cache=True)
def _binom_table(n):
    table = np.zeros((n + 1, n + 1), dtype=np.int64)
    for a in range(n + 1):
        table[a, 0] = 1
        for b in range(1, a + 1):
            table[a, b] = table[a - 1, b - 1] + table[a - 1, b]
    return table


@njit(cache=True, nogil=True)
def subset_counts(masks, n, k):
    """For every k-subset of columns (colex order), count masks covering it."""
    binom = _binom_table(n)
    counts = np.zeros(binom[n, k], dtype=np.int64)
    pos = np.zeros(n, dtype=np.int64)
    comb = np.zeros(k + 1, dtype=np.int64)
    for m in range(masks.shape[0]):
        x = masks[m]
        t = 0
        for b in range(n):
            if (x >> np.uint64(b)) & np.uint64(1):
                pos[t] = b
                t += 1
        if t < k:
            continue
        for i in range(k):
            comb[i] = i
        while True:
            rank = 0
            for i in range(k):
                rank += binom[pos[comb[i]], i + 1]
            counts[rank] += 1
            i = k - 1
            while i >= 0 and comb[i] == t - k + i:
                i -= 1
            if i < 0:
                break
            comb[i] += 1
            for j in range(i + 1, k):
                comb[j] = comb[j - 1] + 1
    return counts


@njit(cache=True, nogil=True)
def gf2_weight_hist(rows, start, n_free, n):
    """Weight histogram of ``start + span(rows[:n_free])`` in binary Gray order."""
    hist = np.zeros(n + 1, dtype=np.int64)
    w = np.uint64(start)
    hist[_ctpop(w)] += 1
    total = np.int64(1) << n_free
    for s in range(1, total):
        j = _cttz(np.uint64(s))
        w ^= rows[j]
        hist[_ctpop(w)] += 1
    return hist


@njit(cache=True, nogil=True)
def gf2_combo_min(rows, w):
    """Minimum weight (and a witness) over sums of exactly ``w`` distinct rows."""
    k = rows.shape[0]
    best = np.int64(1 << 30)
    witness = np.uint64(0)
    if w < 1 or w > k:
        return best, witness
    comb = np.zeros(w, dtype=np.int64)
    acc = np.zeros(w, dtype=np.uint64)
    for i in range(w):
        comb[i] = i
        acc[i] = rows[i] if i == 0 else acc[i - 1] ^ rows[i]
    while True:
        c = np.int64(_ctpop(acc[w - 1]))
        if c < best:
            best = c
            witness = acc[w - 1]
        i = w - 1
        while i >= 0 and comb[i] == k - w + i:
            i -= 1
        if i < 0:
            break
        comb[i] += 1
        acc[i] = rows[comb[i]] if i == 0 else acc[i - 1] ^ rows[comb[i]]
        for j in range(i + 1, w):
            comb[j] = comb[j - 1] + 1
            acc[j] = acc[j - 1] ^ rows[comb[j]]
    return best, witness


@njit(cache=True, nogil=True)
def coset_leader_hist(columns, r):
    """Coset-leader weight histogram by breadth-first search over syndromes."""
    size = np.int64(1) << r
    dist = np.full(size, 255, dtype=np.uint8)
    dist[0] = 0
    hist = np.zeros(columns.shape[0] + 1, dtype=np.int64)
    hist[0] = 1
    seen = np.int64(1)
    level = 0
    while seen < size:
        grew = False
        for s in range(size):
            if dist[s] != level:
                continue
            for c in range(columns.shape[0]):
                t = s ^ np.int64(columns[c])
                if dist[t] == 255:
                    dist[t] = level + 1
                    hist[level + 1] += 1
                    seen += 1
                    grew = True
        if not grew:
            break
        level += 1
    return hist


@njit(cache=True, nogil=True)
def z4_low_support(mult_lo, mult_hi, radix, max_support, n):
    """Visit every message whose support has size 1..max_support.

    ``mult_lo/mult_hi[j, v]`` hold the planes of ``v * row_j``.  Returns the
    split histogram of visited words plus the minimum Lee and Euclidean
    witnesses as ``(weight, lo, hi)`` rows.
    """
    k = mult_lo.shape[0]
    hist = np.zeros((n + 1, n + 1), dtype=np.int64)
    best = np.full((2, 3), 0, dtype=np.uint64)
    best[0, 0] = np.uint64(1 << 30)
    best[1, 0] = np.uint64(1 << 30)
    comb = np.zeros(max_support + 1, dtype=np.int64)
    val = np.zeros(max_support + 1, dtype=np.int64)
    for s in range(1, min(max_support, k) + 1):
        for i in range(s):
            comb[i] = i
        while True:
            for i in range(s):
                val[i] = 1
            while True:
                lo = np.uint64(0)
                hi = np.uint64(0)
                for i in range(s):
                    rl = mult_lo[comb[i], val[i]]
                    carry = lo & rl
                    lo ^= rl
                    hi ^= mult_hi[comb[i], val[i]] ^ carry
                a = _ctpop(lo)
                b = _ctpop(hi & ~lo)
                hist[a, b] += 1
                lee = np.uint64(a + 2 * b)
                euc = np.uint64(a + 4 * b)
                if lee < best[0, 0]:
                    best[0, 0] = lee
                    best[0, 1] = lo
                    best[0, 2] = hi
                if euc < best[1, 0]:
                    best[1, 0] = euc
                    best[1, 1] = lo
                    best[1, 2] = hi
                i = 0
                while i < s and val[i] == radix[comb[i]] - 1:
                    val[i] = 1
                    i += 1
                if i == s:
                    break
                val[i] += 1
            i = s - 1
            while i >= 0 and comb[i] == k - s + i:
                i -= 1
            if i < 0:
                break
            comb[i] += 1
            for j in range(i + 1, s):
                comb[j] = comb[j - 1] + 1
    return hist, best


@njit(cache=True, nogil=True)
def _cost(state, bad, offsets):
    c = 0
    for r in range(state.shape[0]):
        c += bad[offsets[r] + state[r]]
    return c


@njit(cache=True, nogil=True)
def lift_descend(state, params, deltas, bad, offsets, max_steps):
    """Steepest descent on the count of bad syndromes.

    ``state`` (syndromes) and ``params`` (bit vector) are updated in place;
    flipping parameter p XORs ``deltas[p]`` into every syndrome.  Ties go to
    the lowest parameter index.  Returns the final cost.
    """
    n_par, n_syn = deltas.shape
    cost = _cost(state, bad, offsets)
    for _ in range(max_steps):
        if cost == 0:
            break
        best_p = -1
        best_c = cost
        for p in range(n_par):
            c = 0
            for r in range(n_syn):
                c += bad[offsets[r] + (state[r] ^ deltas[p, r])]
                if c >= best_c:
                    break
            if c < best_c:
                best_c = c
                best_p = p
        if best_p < 0:
            break
        for r in range(n_syn):
            state[r] ^= deltas[best_p, r]
        params[best_p] ^= 1
        cost = best_c
    return cost
