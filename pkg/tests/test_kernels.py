"""The numba kernels and their numpy twins must agree bit for bit."""

import os
import subprocess
import sys

import numpy as np
import pytest

from z4sd import kernels
from z4sd.kernels import _numpy as knp

numba_mod = pytest.importorskip("z4sd.kernels._numba")


def rand_planes(rng, k, n):
    lo = rng.integers(0, 1 << n, size=k, dtype=np.uint64)
    hi = rng.integers(0, 1 << n, size=k, dtype=np.uint64)
    radix = rng.choice([2, 4], size=k).astype(np.int64)
    # order-2 rows have no odd coordinates
    lo = np.where(radix == 2, np.uint64(0), lo)
    return lo, hi, radix


@pytest.mark.parametrize("seed", range(6))
def test_z4_swe_twins(seed):
    rng = np.random.default_rng(seed)
    n, k = int(rng.integers(3, 20)), int(rng.integers(1, 9))
    lo, hi, radix = rand_planes(rng, k, n)
    nf = int(rng.integers(1, k + 1))
    sl, sh = np.uint64(rng.integers(0, 1 << n)), np.uint64(0)
    a = numba_mod.z4_swe(lo, hi, radix, sl, sh, nf, n)
    b = knp.z4_swe(lo, hi, radix, sl, sh, nf, n)
    assert np.array_equal(a, b) and a.sum() == np.prod(radix[:nf])


@pytest.mark.parametrize("seed", range(4))
def test_z4_supports_twins(seed):
    rng = np.random.default_rng(seed)
    n, k = 14, 6
    lo, hi, radix = rand_planes(rng, k, n)
    for t in (3, 7, 10):
        a = numba_mod.z4_supports(lo, hi, radix, np.uint64(0), np.uint64(0), k, t)
        b = knp.z4_supports(lo, hi, radix, np.uint64(0), np.uint64(0), k, t)
        assert np.array_equal(np.sort(a), np.sort(b))


def test_subset_counts_twins():
    rng = np.random.default_rng(1)
    masks = rng.integers(0, 1 << 12, size=200, dtype=np.uint64)
    for k in (1, 2, 3, 4):
        assert np.array_equal(numba_mod.subset_counts(masks, 12, k), knp.subset_counts(masks, 12, k))
    empty = np.zeros(0, dtype=np.uint64)
    assert np.array_equal(numba_mod.subset_counts(empty, 6, 2), knp.subset_counts(empty, 6, 2))


def test_gf2_twins():
    rng = np.random.default_rng(2)
    rows = rng.integers(0, 1 << 20, size=10, dtype=np.uint64)
    for nf in (0, 3, 10):
        a = numba_mod.gf2_weight_hist(rows, np.uint64(5), nf, 20)
        b = knp.gf2_weight_hist(rows, np.uint64(5), nf, 20)
        assert np.array_equal(a, b)
    for w in range(0, 12):
        assert numba_mod.gf2_combo_min(rows, w)[0] == knp.gf2_combo_min(rows, w)[0]
    cols = rng.integers(1, 1 << 8, size=15, dtype=np.int64)
    assert np.array_equal(numba_mod.coset_leader_hist(cols, 8), knp.coset_leader_hist(cols, 8))


def test_low_support_twins():
    rng = np.random.default_rng(3)
    n, k = 16, 7
    lo, hi, radix = rand_planes(rng, k, n)
    mult_lo = np.zeros((k, 4), dtype=np.uint64)
    mult_hi = np.zeros((k, 4), dtype=np.uint64)
    for j in range(k):
        l, h = np.uint64(0), np.uint64(0)
        for v in range(1, 4):
            l, h = l ^ lo[j], h ^ hi[j] ^ (l & lo[j])
            mult_lo[j, v], mult_hi[j, v] = l, h
    for s in (1, 2, 3):
        ha, ba = numba_mod.z4_low_support(mult_lo, mult_hi, radix, s, n)
        hb, bb = knp.z4_low_support(mult_lo, mult_hi, radix, s, n)
        assert np.array_equal(ha, hb)
        assert np.array_equal(ba[:, 0], bb[:, 0])


def test_lift_descend_twins():
    rng = np.random.default_rng(4)
    n_par, n_syn, rho = 12, 9, 5
    deltas = rng.integers(0, 1 << rho, size=(n_par, n_syn), dtype=np.int64)
    bad = (rng.random(n_syn << rho) < 0.3).astype(np.int64)
    offsets = np.arange(n_syn, dtype=np.int64) << rho
    for _ in range(5):
        state = rng.integers(0, 1 << rho, size=n_syn, dtype=np.int64)
        params = rng.integers(0, 2, size=n_par, dtype=np.int64)
        s1, p1, s2, p2 = state.copy(), params.copy(), state.copy(), params.copy()
        c1 = numba_mod.lift_descend(s1, p1, deltas, bad, offsets, 50)
        c2 = knp.lift_descend(s2, p2, deltas, bad, offsets, 50)
        assert c1 == c2 and np.array_equal(s1, s2) and np.array_equal(p1, p2)


def test_popcount_twins():
    for x in (0, 1, 0xFFFF_FFFF_FFFF_FFFF, 0x8000_0000_0000_0001):
        assert int(numba_mod.popcount(np.uint64(x))) == knp.popcount(x) == bin(x).count("1")


def test_numpy_backend_end_to_end():
    script = (
        "from z4sd import BACKEND, catalog\n"
        "from z4sd.search import enumerate_weights, s_invariant\n"
        "from z4sd.constructions import lift_search\n"
        "from z4sd.z4 import residue\n"
        "c = catalog.get('D_24_1')\n"
        "p = enumerate_weights(c)\n"
        "codes = lift_search(residue(c), 3, 2024, 10, limit=1)\n"
        "print(BACKEND, p.d_lee, p.d_euclidean, *s_invariant(c, 9, 2).triple(), len(codes))\n"
    )
    env = dict(os.environ, Z4SD_NUMBA="0")
    proc = subprocess.run([sys.executable, "-c", script], capture_output=True, text=True, env=env, timeout=600)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.split() == ["numpy", "10", "12", "128", "0", "5", "1"]


def test_active_backend_is_reported():
    assert kernels.BACKEND in ("numba", "numpy")
