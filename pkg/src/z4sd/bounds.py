"""Weight bounds for self-dual codes and instance-level certificate checkers.

The bounds cover even lengths only.  The checkers never try to prove the
underlying statements.  They take one code, establish the hypotheses
(or refuse), and then verify the conclusion on that instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from z4sd import gf2
from z4sd.z4 import Z4Code, is_self_dual, residue

# g(l) for the minimum Lee weight bound 8*floor(n/24) + g(n mod 24), n even
LEE_G = {0: 4, 2: 2, 4: 4, 6: 4, 8: 8, 10: 4, 12: 4, 14: 6, 16: 8, 18: 8, 20: 8, 22: 8}

# (alpha, beta) pairs for the residue-container statements
PROP51_PAIRS = {(2, 2), (4, 4), (6, 4), (10, 4)}
PROP52_PAIRS = {(14, 6), (18, 8), (20, 8), (16, 8), (22, 8)}


class HypothesisError(ValueError):
    """The hypotheses of a checker are not established for this code."""


def _require_even(n: int) -> None:
    if n < 2 or n % 2:
        raise ValueError(f"bound defined for even n >= 2, got {n}")


def lee_upper_bound(n: int) -> int:
    """Upper bound on the minimum Lee weight of a self-dual Z4 code of even length n."""
    _require_even(n)
    return 8 * (n // 24) + LEE_G[n % 24]


def euclidean_upper_bound(n: int, type_: str) -> int:
    """Upper bound on the minimum Euclidean weight; ``type_`` is 'I' or 'II'."""
    t = _normalize_type(type_)
    if n < 1:
        raise ValueError("n must be positive")
    if t == "II":
        if n % 8:
            raise ValueError("Type II codes exist only for n divisible by 8")
        return 8 * (n // 24) + 8
    return 8 * (n // 24) + (12 if n % 24 == 23 else 8)


def binary_sd_upper_bound(n: int) -> int:
    """Upper bound on the minimum weight of a binary self-dual code of length n."""
    _require_even(n)
    return 4 * (n // 24) + (6 if n % 24 == 22 else 4)


def _normalize_type(t: str) -> str:
    s = str(t).upper().replace("TYPE", "").replace("_", "").strip()
    if s not in ("I", "II"):
        raise ValueError(f"unknown type {t!r}")
    return s


@dataclass
class BoundReport:
    code_id: str
    quantity: str
    claimed: int
    bound: int
    satisfied: bool
    source: str
    facts: dict = field(default_factory=dict)

    def lines(self) -> list[str]:
        head = f"{self.code_id}: {self.quantity} = {self.claimed}, bound {self.bound} [{self.source}] -> {'PASS' if self.satisfied else 'FAIL'}"
        return [head] + [f"  {k}: {v}" for k, v in self.facts.items()]


def _exact_d_lee(code: Z4Code) -> int:
    from z4sd.search import ENUM_MAX_LOG2, enumerate_weights

    if code.log2_size > ENUM_MAX_LOG2:
        raise HypothesisError("minimum Lee weight not established: code too large to enumerate, pass d_lee")
    return enumerate_weights(code).d_lee


def check_theorem_residue_extremal(code: Z4Code, d_lee: int | None = None, code_id: str = "code") -> BoundReport:
    """Check that a high-Lee-weight self-dual code of length 24k or 24k+8 has an extremal residue.

    ``d_lee`` is the caller's established minimum Lee weight (exact or a
    proven lower bound).  When omitted it is computed by full enumeration,
    which is only possible for small codes.
    """
    n = code.length
    if n % 24 not in (0, 8):
        raise HypothesisError(f"length {n} is not 0 or 8 mod 24")
    if not is_self_dual(code):
        raise HypothesisError("code is not self-dual")
    k = n // 24
    need = 8 * k + (2 if n % 24 == 0 else 6)
    if d_lee is None:
        d_lee = _exact_d_lee(code)
    if d_lee < need:
        raise HypothesisError(f"minimum Lee weight {d_lee} < {need}")
    res = residue(code)
    d = gf2.min_weight(res)
    bound = binary_sd_upper_bound(n)
    facts = {
        "d_lee": d_lee,
        "residue_dimension": res.dimension,
        "residue_self_dual": res.is_self_dual(),
        "residue_parity": gf2.parity_class(res),
        "residue_min_weight": d,
    }
    ok = facts["residue_self_dual"] and facts["residue_parity"] == "doubly_even" and d == bound
    return BoundReport(code_id, "residue minimum weight", d, bound, ok, "binary_sd", facts)


def check_prop5(code: Z4Code, container: gf2.BinaryCode, d_lee: int | None = None, code_id: str = "code") -> BoundReport:
    """Check the conclusion about a self-dual binary container of the residue.

    Lengths 24k + alpha with minimum Lee weight 8k + beta force every
    self-dual binary code containing the residue to be s-extremal (and, in
    one doubly even case, extremal).  This verifies the conclusion for the
    given container.
    """
    n = code.length
    k, alpha = divmod(n, 24)
    if d_lee is None:
        d_lee = _exact_d_lee(code)
    beta = d_lee - 8 * k
    pair = (alpha, beta)
    if pair not in PROP51_PAIRS | PROP52_PAIRS:
        raise HypothesisError(f"(alpha, beta) = {pair} is not covered")
    if not is_self_dual(code):
        raise HypothesisError("code is not self-dual")
    if container.length != n or not container.is_self_dual():
        raise HypothesisError("container is not a self-dual binary code of the same length")
    res = residue(code)
    if not res <= container:
        raise HypothesisError("container does not contain the residue")
    d = gf2.min_weight(container)
    parity = gf2.parity_class(container)
    facts = {"alpha": alpha, "beta": beta, "container_min_weight": d, "container_parity": parity}
    if parity == "doubly_even":
        facts["shadow_min_weight"] = None
        s_ext = False
    else:
        facts["shadow_min_weight"] = gf2.shadow(container).min_weight
        s_ext = gf2.is_s_extremal(container)
    facts["s_extremal"] = s_ext
    if pair in PROP51_PAIRS:
        expected, ok, source = {4 * k + 2}, s_ext, "s_extremal"
    elif pair == (16, 8) and parity == "doubly_even":
        expected, ok, source = {binary_sd_upper_bound(n)}, True, "binary_sd"
    elif pair == (22, 8):
        expected, ok, source = {4 * k + 4, 4 * k + 6}, s_ext, "s_extremal"
    else:
        expected, ok, source = {4 * k + 4}, s_ext, "s_extremal"
    ok = ok and d in expected
    return BoundReport(code_id, "container minimum weight", d, max(expected), ok, source, facts)


def check_prop5_auto(code: Z4Code, target: str = "any", d_lee: int | None = None, code_id: str = "code") -> BoundReport:
    """``check_prop5`` with the container built by completing the residue."""
    container = gf2.complete_to_self_dual(residue(code), target)
    return check_prop5(code, container, d_lee=d_lee, code_id=code_id)
