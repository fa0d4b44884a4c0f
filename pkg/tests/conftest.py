import functools

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from z4sd import catalog
from z4sd.gf2 import BinaryCode
from z4sd.z4 import Z4Code, Z4Word

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@functools.lru_cache(maxsize=None)
def cat(code_id: str) -> Z4Code:
    return catalog.get(code_id)


@pytest.fixture
def d24_1():
    return cat("D_24_1")


@st.composite
def z4_matrices(draw, max_n=8, max_rows=4, min_n=1):
    n = draw(st.integers(min_n, max_n))
    k = draw(st.integers(1, max_rows))
    rows = draw(st.lists(st.lists(st.integers(0, 3), min_size=n, max_size=n), min_size=k, max_size=k))
    return n, rows


@st.composite
def z4_codes(draw, max_n=8, max_rows=4, min_n=1):
    n, rows = draw(z4_matrices(max_n, max_rows, min_n))
    return Z4Code.from_generators([Z4Word.from_digits(r) for r in rows], n)


@st.composite
def z4_words(draw, max_n=64):
    n = draw(st.integers(1, max_n))
    digits = draw(st.lists(st.integers(0, 3), min_size=n, max_size=n))
    return Z4Word.from_digits(digits)


@st.composite
def binary_codes(draw, max_n=12, max_rows=6, min_n=1):
    n = draw(st.integers(min_n, max_n))
    k = draw(st.integers(0, max_rows))
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=k, max_size=k))
    return BinaryCode(n, rows)


def random_self_orthogonal(rng: np.random.Generator, n: int, k: int) -> BinaryCode:
    """Grow a random self-orthogonal binary code by adjoining orthogonal even words."""
    code = BinaryCode(n, [])
    for _ in range(200):
        if code.dimension >= k:
            break
        v = int(rng.integers(0, 1 << n))
        if v.bit_count() % 2 or v in code:
            continue
        if all(((v & g).bit_count() & 1) == 0 for g in code.generators):
            code = BinaryCode(n, code.generators + (v,))
    return code
