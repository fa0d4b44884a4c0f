"""Naive reference implementations on plain coordinate tuples.

Nothing here touches bit planes or the package's kernels; these are the
independent oracles the packed engines are compared against.
"""

from __future__ import annotations

import itertools

LEE = (0, 1, 2, 1)
EUCLID = (0, 1, 4, 1)
GRAY = {0: (0, 0), 1: (0, 1), 2: (1, 1), 3: (1, 0)}


def weights(v):
    return (
        sum(1 for x in v if x % 4),
        sum(LEE[x % 4] for x in v),
        sum(EUCLID[x % 4] for x in v),
    )


def split(v):
    return (sum(1 for x in v if x % 2), sum(1 for x in v if x % 4 == 2))


def add(x, y):
    return tuple((a + b) % 4 for a, b in zip(x, y))


def inner(x, y):
    return sum(a * b for a, b in zip(x, y)) % 4


def gray(v):
    return tuple(b for x in v for b in GRAY[x % 4])


def span_z4(rows, n):
    """All Z4 combinations of the rows (every row taken with coefficients 0..3)."""
    words = {tuple([0] * n)}
    for r in rows:
        r = tuple(x % 4 for x in r)
        words = {tuple((w[i] + c * r[i]) % 4 for i in range(n)) for w in words for c in range(4)}
    return words


def dual_z4(words, n):
    return {v for v in itertools.product(range(4), repeat=n) if all(inner(v, w) == 0 for w in words)}


def min_weights(words):
    nz = [w for w in words if any(w)]
    if not nz:
        return None
    return tuple(min(weights(w)[i] for w in nz) for i in range(3))


def residue_words(words):
    return {tuple(x % 2 for x in w) for w in words}


def torsion_words(words, n):
    return {tuple(x // 2 for x in w) for w in words if all(x % 2 == 0 for x in w)}


def s_invariant(words, n, t, k):
    rows = [w for w in words if sum(1 for x in w if x) == t]
    values = set()
    for cols in itertools.combinations(range(n), k):
        values.add(sum(1 for r in rows if all(r[c] for c in cols)))
    return (max(values), min(values), len(values))


# binary


def span_gf2(rows, n):
    words = {tuple([0] * n)}
    for r in rows:
        words |= {tuple((a + b) % 2 for a, b in zip(w, r)) for w in words}
    return words


def dual_gf2(words, n):
    return {v for v in itertools.product(range(2), repeat=n) if all(sum(a * b for a, b in zip(v, w)) % 2 == 0 for w in words)}


def min_weight_gf2(words):
    return min(sum(w) for w in words if any(w))


def weight_distribution_gf2(words):
    out = {}
    for w in words:
        out[sum(w)] = out.get(sum(w), 0) + 1
    return sorted(out.items())


def covering_radius_gf2(words, n):
    return max(min(sum(a != b for a, b in zip(v, w)) for w in words) for v in itertools.product(range(2), repeat=n))


def bits(x: int, n: int):
    return tuple((x >> i) & 1 for i in range(n))
