"""Codeword enumeration engines for Z4 codes.

Exact engines walk the whole message space Z4^k1 x Z2^k2 in modular Gray
order (one row addition per codeword) and reduce every word to its split
``(n1 + n3, n2)``; the split histogram determines all three weights.
Work is cut on the top message digits so chunks can run on several
threads; results do not depend on the chunking.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb

import numpy as np

from z4sd import kernels
from z4sd._accel import MAX_KERNEL_LENGTH
from z4sd.z4 import Z4Code, Z4Word, add, permute_word, scale, weights

ENUM_MAX_LOG2 = 32
MAX_SUBSETS = 50_000

_DEFAULT_THREADS = 1
_SWE_CACHE: dict[tuple, np.ndarray] = {}
_SWE_CACHE_SIZE = 256


class CodeTooLargeError(ValueError):
    pass


def set_threads(n: int) -> None:
    global _DEFAULT_THREADS
    _DEFAULT_THREADS = max(1, int(n))


@dataclass(frozen=True)
class WeightProfile:
    """Minimum weights, with the number of codewords attaining each.

    ``exact`` is False for bounded searches, whose minima are upper bounds
    (``math.inf`` when nothing was visited).
    """

    d_hamming: float
    d_lee: float
    d_euclidean: float
    counts_at_min: tuple[int, int, int]
    exact: bool
    witnesses: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class SInvariant:
    t: int
    k: int
    max: int
    min: int
    cardinality: int

    def triple(self) -> tuple[int, int, int]:
        return (self.max, self.min, self.cardinality)


def _check_enumerable(code: Z4Code) -> None:
    if code.log2_size > ENUM_MAX_LOG2:
        raise CodeTooLargeError(
            f"code has 2^{code.log2_size} words (> 2^{ENUM_MAX_LOG2}); use bounded_search for upper bounds"
        )
    if code.length > MAX_KERNEL_LENGTH:
        raise CodeTooLargeError(f"length {code.length} > {MAX_KERNEL_LENGTH}")


def _chunks(code: Z4Code, threads: int):
    """Split off top rows: yields (start_lo, start_hi) per chunk and the free-row count."""
    lo, hi, radix = code.planes()
    k = len(radix)
    n_top = 0
    n_chunks = 1
    while threads > 1 and n_top < k - 1 and n_chunks < 4 * threads:
        n_chunks *= int(radix[k - 1 - n_top])
        n_top += 1
    n_free = k - n_top
    starts = []
    for digits in itertools.product(*[range(int(radix[j])) for j in range(n_free, k)]):
        w = Z4Word.zero(code.length)
        for off, d in enumerate(digits):
            w = add(w, scale(code.rows[n_free + off], d))
        starts.append((np.uint64(w.lo), np.uint64(w.hi)))
    return lo, hi, radix, n_free, starts


def _map_chunks(code: Z4Code, fn, threads: int | None):
    threads = threads or _DEFAULT_THREADS
    lo, hi, radix, n_free, starts = _chunks(code, threads)
    if lo.size == 0:
        lo = hi = np.zeros(1, dtype=np.uint64)
        radix = np.ones(1, dtype=np.int64)
    jobs = [lambda s=s: fn(lo, hi, radix, s[0], s[1], n_free) for s in starts]
    if threads > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(lambda j: j(), jobs))
    return [j() for j in jobs]


def split_histogram(code: Z4Code, threads: int | None = None) -> np.ndarray:
    """``h[a, b]`` = number of codewords (zero included) with n1+n3 = a and n2 = b."""
    _check_enumerable(code)
    key = (code.length, code.key())
    cached = _SWE_CACHE.get(key)
    if cached is not None:
        return cached.copy()
    n = code.length
    parts = _map_chunks(code, lambda lo, hi, rad, sl, sh, nf: kernels.z4_swe(lo, hi, rad, sl, sh, nf, n), threads)
    hist = np.sum(parts, axis=0)
    if int(hist.sum()) != code.size:
        raise AssertionError(f"enumeration visited {int(hist.sum())} words, expected {code.size}")
    if len(_SWE_CACHE) >= _SWE_CACHE_SIZE:
        _SWE_CACHE.pop(next(iter(_SWE_CACHE)))
    _SWE_CACHE[key] = hist
    return hist.copy()


def _profile_from_hist(hist: np.ndarray, exact: bool) -> WeightProfile:
    hist = hist.copy()
    if exact:
        hist[0, 0] -= 1
    else:
        hist[0, 0] = 0
    odd, twos = np.nonzero(hist)
    if odd.size == 0:
        return WeightProfile(math.inf, math.inf, math.inf, (0, 0, 0), exact)
    mins = []
    counts = []
    for w in (odd + twos, odd + 2 * twos, odd + 4 * twos):
        m = int(w.min())
        mins.append(m)
        counts.append(int(hist[odd[w == m], twos[w == m]].sum()))
    return WeightProfile(mins[0], mins[1], mins[2], tuple(counts), exact)


def enumerate_weights(code: Z4Code, threads: int | None = None) -> WeightProfile:
    """Exact minimum Hamming, Lee and Euclidean weights over all nonzero words."""
    hist = split_histogram(code, threads)
    prof = _profile_from_hist(hist, exact=True)
    from z4sd.z4 import is_self_dual, type_of

    if is_self_dual(code) and type_of(code, method="generators") == "II":
        odd, twos = np.nonzero(hist)
        assert np.all((odd + 4 * twos) % 8 == 0), "Type II code with a Euclidean weight not divisible by 8"
    return prof


def lee_split_census(code: Z4Code, lee_target: int, threads: int | None = None) -> Counter:
    """Multiset of splits (n1 + n3, n2) over nonzero words of Lee weight ``lee_target``."""
    hist = split_histogram(code, threads)
    out: Counter = Counter()
    for a in range(hist.shape[0]):
        b2 = lee_target - a
        if b2 < 0 or b2 % 2:
            continue
        b = b2 // 2
        if b < hist.shape[1] and hist[a, b] and (a, b) != (0, 0):
            out[(a, b)] = int(hist[a, b])
    return out


def euclidean_weights(code: Z4Code, threads: int | None = None) -> Counter:
    hist = split_histogram(code, threads)
    out: Counter = Counter()
    for a, b in zip(*np.nonzero(hist)):
        out[int(a + 4 * b)] += int(hist[a, b])
    return out


def support_masks(code: Z4Code, t: int, threads: int | None = None) -> np.ndarray:
    """Supports of all codewords of Hamming weight ``t`` (one uint64 mask each)."""
    _check_enumerable(code)
    parts = _map_chunks(code, lambda lo, hi, rad, sl, sh, nf: kernels.z4_supports(lo, hi, rad, sl, sh, nf, t), threads)
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.uint64)


def s_invariant_from_masks(masks: np.ndarray, n: int, t: int, k: int) -> SInvariant:
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in 1..{n}")
    if comb(n, k) > MAX_SUBSETS:
        raise CodeTooLargeError(f"C({n},{k}) column subsets exceed the limit {MAX_SUBSETS}")
    counts = kernels.subset_counts(np.ascontiguousarray(masks, dtype=np.uint64), n, k)
    values = np.unique(counts)
    # no weight-t words: every count is 0, giving the documented {0} convention
    return SInvariant(t, k, int(values.max()), int(values.min()), int(values.size))


def s_invariant(code: Z4Code, t: int, k: int, threads: int | None = None) -> SInvariant:
    if comb(code.length, k) > MAX_SUBSETS:
        raise CodeTooLargeError(f"C({code.length},{k}) column subsets exceed the limit {MAX_SUBSETS}")
    return s_invariant_from_masks(support_masks(code, t, threads), code.length, t, k)


def s_fingerprint(code: Z4Code, t: int, k_max: int, threads: int | None = None) -> tuple:
    masks = support_masks(code, t, threads)
    return tuple(s_invariant_from_masks(masks, code.length, t, k).triple() for k in range(1, k_max + 1))


def distinguish(codes, t: int, k_max: int, threads: int | None = None) -> list[list[int]]:
    """Group code indices by their (S_{t,1}, ..., S_{t,k_max}) fingerprint.

    Codes in different groups are inequivalent; groups are ordered by first
    member.
    """
    groups: dict[tuple, list[int]] = {}
    for i, code in enumerate(codes):
        groups.setdefault((code.length, s_fingerprint(code, t, k_max, threads)), []).append(i)
    return list(groups.values())


# ---------------------------------------------------------------------------
# bounded search


def _messages_up_to(k: int, radix, w: int) -> int:
    """Number of messages of support size 1..w."""
    total = 0
    choices = [int(r) - 1 for r in radix]
    # elementary symmetric sums of the per-row nonzero choice counts
    e = [1] + [0] * w
    for c in choices:
        for s in range(w, 0, -1):
            e[s] += e[s - 1] * c
    total = sum(e[1:])
    return total


def _low_support_pass(code: Z4Code, max_support: int):
    n = code.length
    lo, hi, radix = code.planes()
    k = len(radix)
    mult_lo = np.zeros((k, 4), dtype=np.uint64)
    mult_hi = np.zeros((k, 4), dtype=np.uint64)
    for j, row in enumerate(code.rows):
        for v in range(4):
            w = scale(row, v)
            mult_lo[j, v] = w.lo
            mult_hi[j, v] = w.hi
    h, b = kernels.z4_low_support(mult_lo, mult_hi, radix, max_support, n)
    best = {name: (int(b[i, 0]), Z4Word(n, int(b[i, 1]), int(b[i, 2]))) for i, name in enumerate(("lee", "euclidean"))}
    return h, best


def _depth_for(k: int, radix, budget: int) -> int:
    depth = 0
    while depth < k and _messages_up_to(k, radix, depth + 1) <= budget:
        depth += 1
    return depth


def bounded_search(
    code: Z4Code,
    budget: int,
    rng_seed: int = 0,
    max_support: int | None = None,
    info_sets: int = 0,
) -> WeightProfile:
    """Upper bounds on the minimum weights from a partial walk of the code.

    All messages of support size up to ``w_max`` are visited first (the
    largest ``w_max`` whose count fits in the budget), then the rest of the
    budget goes to uniformly random messages.  With ``info_sets > 0`` the
    budget is instead shared by that many low-support walks, each over the
    code re-reduced on a random column order (the first walk keeps the given
    generators).  Words seen twice are counted twice, so ``counts_at_min``
    is only indicative.  Witnesses are returned as Z4Words under
    ``witnesses['lee']`` and ``witnesses['euclidean']``.
    """
    n = code.length
    if code.length > MAX_KERNEL_LENGTH:
        raise CodeTooLargeError(f"length {code.length} > {MAX_KERNEL_LENGTH}")
    lo, hi, radix = code.planes()
    k = len(radix)
    if budget <= 0 or k == 0:
        return WeightProfile(math.inf, math.inf, math.inf, (0, 0, 0), False)
    hist = np.zeros((n + 1, n + 1), dtype=np.int64)
    best = {"lee": (math.inf, None), "euclidean": (math.inf, None)}

    def merge(h, b, inverse=None):
        nonlocal hist
        hist += h
        for name, (wt, word) in b.items():
            if wt < best[name][0]:
                if inverse is not None:
                    word = permute_word(word, inverse)
                best[name] = (wt, word)

    rng = np.random.Generator(np.random.Philox(rng_seed))
    if info_sets > 0:
        share = budget // info_sets
        for round_ in range(info_sets):
            if round_ == 0:
                view, inverse = code, None
            else:
                perm = rng.permutation(n)
                view = Z4Code.from_generators([permute_word(r, perm) for r in code.rows], n)
                inverse = np.argsort(perm)
            _, _, vradix = view.planes()
            depth = max_support if max_support is not None else _depth_for(len(vradix), vradix, share)
            if depth > 0:
                merge(*_low_support_pass(view, depth), inverse)
        return _bounded_profile(code, hist, best)
    if max_support is None:
        max_support = _depth_for(k, radix, budget)
    used = 0
    if max_support > 0:
        h, b = _low_support_pass(code, max_support)
        merge(h, b)
        used = int(h.sum())
    remaining = budget - used
    if remaining > 0:
        gen = code.matrix()
        batch = 1 << 14
        while remaining > 0:
            m = min(batch, remaining)
            msg = rng.integers(0, radix, size=(m, k))
            words = (msg @ gen) % 4
            odd = (words % 2).sum(axis=1)
            twos = (words == 2).sum(axis=1)
            nz = (odd + twos) > 0
            np.add.at(hist, (odd[nz], twos[nz]), 1)
            for name, wt in (("lee", odd + 2 * twos), ("euclidean", odd + 4 * twos)):
                wt = np.where(nz, wt, np.iinfo(np.int64).max)
                i = int(np.argmin(wt))
                if nz[i] and wt[i] < best[name][0]:
                    best[name] = (int(wt[i]), Z4Word.from_digits(words[i]))
            remaining -= m
    return _bounded_profile(code, hist, best)


def _bounded_profile(code: Z4Code, hist: np.ndarray, best: dict) -> WeightProfile:
    prof = _profile_from_hist(hist, exact=False)
    witnesses = {name: w for name, (_, w) in best.items() if w is not None}
    for name, attr in (("lee", "d_lee"), ("euclidean", "d_euclidean")):
        if name in witnesses:
            w = witnesses[name]
            assert getattr(weights(w), name) == getattr(prof, attr) and w in code
    return WeightProfile(prof.d_hamming, prof.d_lee, prof.d_euclidean, prof.counts_at_min, False, witnesses)
