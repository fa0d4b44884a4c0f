import pytest

from conftest import cat
from z4sd import gf2
from z4sd.bounds import (
    LEE_G,
    HypothesisError,
    binary_sd_upper_bound,
    check_prop5,
    check_prop5_auto,
    check_theorem_residue_extremal,
    euclidean_upper_bound,
    lee_upper_bound,
)
from z4sd.constructions import lift_search
from z4sd.gf2 import BinaryCode
from z4sd.search import enumerate_weights
from z4sd.z4 import Z4Code, Z4Word, is_self_dual, residue


def W(s):
    return Z4Word.from_string(s)


# frozen g(l) table for the Lee bound
G_TABLE = {0: 4, 2: 2, 4: 4, 6: 4, 8: 8, 10: 4, 12: 4, 14: 6, 16: 8, 18: 8, 20: 8, 22: 8}


def test_lee_bound_table():
    assert LEE_G == G_TABLE
    for l, g in G_TABLE.items():
        for k in range(4):
            n = 24 * k + l
            if n >= 2:
                assert lee_upper_bound(n) == 8 * k + g
    assert (lee_upper_bound(24), lee_upper_bound(32), lee_upper_bound(2)) == (12, 16, 2)


def test_lee_bound_periodic():
    for n in range(2, 200, 2):
        assert lee_upper_bound(n + 24) == lee_upper_bound(n) + 8


def test_euclidean_bound_grid():
    for n in range(8, 81):
        assert euclidean_upper_bound(n, "I") == 8 * (n // 24) + (12 if n % 24 == 23 else 8)
        if n % 8 == 0:
            assert euclidean_upper_bound(n, "II") == 8 * (n // 24) + 8
        else:
            with pytest.raises(ValueError):
                euclidean_upper_bound(n, "TypeII")
    assert euclidean_upper_bound(24, "TypeII") == 16
    assert euclidean_upper_bound(23, "TypeI") == 12
    assert euclidean_upper_bound(56, "II") == 24
    with pytest.raises(ValueError):
        euclidean_upper_bound(24, "III")


def test_binary_bound_grid():
    for n in range(8, 81, 2):
        assert binary_sd_upper_bound(n) == 4 * (n // 24) + (6 if n % 24 == 22 else 4)
    assert (binary_sd_upper_bound(24), binary_sd_upper_bound(22), binary_sd_upper_bound(2)) == (8, 6, 4)


@pytest.mark.parametrize("fn", [lee_upper_bound, binary_sd_upper_bound])
@pytest.mark.parametrize("n", [0, 3, 25, -2])
def test_bounds_reject_bad_lengths(fn, n):
    with pytest.raises(ValueError):
        fn(n)


def test_catalog_codes_respect_lee_bound():
    for cid in ("D_24_1", "C_24_12", "D_24_2"):
        assert enumerate_weights(cat(cid)).d_lee <= lee_upper_bound(24)


# --- residue extremality certificate -------------------------------------------


def test_thm3_passes_on_table_codes():
    rep = check_theorem_residue_extremal(cat("D_24_1"), code_id="D_24_1")
    assert rep.satisfied and rep.claimed == rep.bound == 8
    assert rep.facts["residue_dimension"] == 12 and rep.facts["residue_parity"] == "doubly_even"
    assert rep.lines()[0].endswith("PASS")
    rep = check_theorem_residue_extremal(cat("C_32"), d_lee=14)
    assert rep.satisfied and rep.bound == 8
    # the n = 48 code with its witnessed d_L passed in as an established value
    rep = check_theorem_residue_extremal(cat("D_48"), d_lee=18)
    assert rep.satisfied and rep.claimed == 12


def test_thm3_refuses_unmet_hypotheses():
    # a d_L = 8 lift of the Golay code: 8 < 8k + 2 = 10
    g24 = residue(cat("D_24_1"))
    low = lift_search(g24, 20, 0, 8, limit=1)[0]
    assert enumerate_weights(low).d_lee == 8
    with pytest.raises(HypothesisError):
        check_theorem_residue_extremal(low)
    with pytest.raises(HypothesisError):
        check_theorem_residue_extremal(Z4Code(2, 0, 2, [W("20"), W("02")]))
    with pytest.raises(HypothesisError):
        check_theorem_residue_extremal(cat("D_48"))  # d_L not established


# --- container certificates ---------------------------------------------------------


def _simplex_pair():
    sim = BinaryCode.from_strings(["1110100", "0111010", "0011101"])
    return gf2.direct_sum(sim, sim)


def test_prop5_n2_and_n4():
    c2 = Z4Code(2, 0, 2, [W("20"), W("02")])
    assert is_self_dual(c2)
    rep = check_prop5_auto(c2)
    assert rep.satisfied and rep.facts["alpha"] == 2 and rep.facts["beta"] == 2 and rep.claimed == 2
    c4 = Z4Code.from_generators([W("1111"), W("2200"), W("2020")])
    assert is_self_dual(c4) and enumerate_weights(c4).d_lee == 4
    rep = check_prop5_auto(c4)
    assert rep.satisfied and rep.claimed == 2 and rep.facts["s_extremal"]


def test_prop5_n14_lift():
    code = lift_search(_simplex_pair(), 5, 1, 6, limit=1)[0]
    for target in ("any", "singly_even"):
        rep = check_prop5_auto(code, target)
        assert rep.satisfied and rep.claimed == 4 and rep.facts["shadow_min_weight"] == 3


def test_prop5_n16_branches():
    rm14 = BinaryCode.from_strings(["1" * 16, "0101010101010101", "0011001100110011", "0000111100001111", "0000000011111111"])
    code = lift_search(rm14, 20, 0, 8, limit=1)[0]
    assert enumerate_weights(code).d_lee == 8
    doubly = check_prop5_auto(code, "doubly_even")
    assert doubly.satisfied and doubly.source == "binary_sd" and doubly.claimed == 4
    singly = check_prop5_auto(code, "singly_even")
    assert singly.satisfied and singly.source == "s_extremal" and singly.claimed == 4


def test_prop5_errors():
    c2 = Z4Code(2, 0, 2, [W("20"), W("02")])
    with pytest.raises(HypothesisError):
        check_prop5(c2, BinaryCode.from_strings(["11"]), d_lee=4)  # (2, 4) is not covered
    code = lift_search(_simplex_pair(), 5, 1, 6, limit=1)[0]
    # i_2^7 is self-dual but misses the residue
    pairs = BinaryCode(14, [3 << (2 * i) for i in range(7)])
    assert pairs.is_self_dual() and not residue(code) <= pairs
    with pytest.raises(HypothesisError):
        check_prop5(code, pairs)
    with pytest.raises(HypothesisError):
        check_prop5(code, residue(code))  # contains the residue but is not self-dual
