"""Generator-matrix constructions for self-dual Z4 codes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from z4sd.z4 import Z4Code, Z4Word


@dataclass(frozen=True)
class CirculantSpec:
    first_row: tuple[int, ...]
    kind: str = "circulant"  # or "negacirculant"

    def __post_init__(self):
        if len(self.first_row) < 1:
            raise ValueError("first row must be nonempty")
        if self.kind not in ("circulant", "negacirculant"):
            raise ValueError(f"unknown kind {self.kind!r}")


@dataclass(frozen=True)
class BorderSpec:
    alpha: int
    beta: int
    gamma: int


def parse_digits(s) -> list[int]:
    """'(13103)' / '13103' / [1, 3, ...] -> list of Z4 digits."""
    if isinstance(s, str):
        s = s.strip().strip("()").replace(" ", "").replace(",", "")
        if any(ch not in "0123" for ch in s):
            raise ValueError(f"not a Z4 digit string: {s!r}")
        return [int(ch) for ch in s]
    return [int(d) % 4 for d in s]


def circulant_matrix(spec: CirculantSpec) -> np.ndarray:
    """Row i is the first row rotated right i times; wrapped entries times c (c = -1 = 3 if nega)."""
    r = np.array(spec.first_row, dtype=np.int64) % 4
    n = r.size
    c = 1 if spec.kind == "circulant" else 3
    m = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            m[i, j] = r[j - i] if j >= i else (c * r[n + j - i]) % 4
    return m


def _identity_code(right: np.ndarray) -> Z4Code:
    k = right.shape[0]
    gen = np.hstack([np.eye(k, dtype=np.int64), right % 4])
    return Z4Code(gen.shape[1], k, 0, [Z4Word.from_digits(row) for row in gen])


def bordered_double_circulant(first_row_R: Sequence[int] | str, border: BorderSpec | Sequence[int]) -> Z4Code:
    """(I_n | bordered circulant) of length 2n from the (n-1)-entry first row of R."""
    row = parse_digits(first_row_R)
    if not isinstance(border, BorderSpec):
        border = BorderSpec(*[int(x) % 4 for x in border])
    m = len(row)
    right = np.zeros((m + 1, m + 1), dtype=np.int64)
    right[0, 0] = border.alpha
    right[0, 1:] = border.beta
    right[1:, 0] = border.gamma
    right[1:, 1:] = circulant_matrix(CirculantSpec(tuple(row), "circulant"))
    return _identity_code(right)


def four_negacirculant(first_row_A: Sequence[int] | str, first_row_B: Sequence[int] | str) -> Z4Code:
    """(I_2n | [[A, B], [-B^T, A^T]]) with A, B negacirculant; length 4n."""
    a = parse_digits(first_row_A)
    b = parse_digits(first_row_B)
    if len(a) != len(b):
        raise ValueError(f"first rows differ in length: {len(a)} != {len(b)}")
    A = circulant_matrix(CirculantSpec(tuple(a), "negacirculant"))
    B = circulant_matrix(CirculantSpec(tuple(b), "negacirculant"))
    right = np.block([[A, B], [(-B.T) % 4, A.T]])
    return _identity_code(right)


def from_standard_form(M) -> Z4Code:
    """The code generated by (I | M) for a square Z4 matrix M."""
    M = np.asarray(M, dtype=np.int64)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("M must be square")
    return _identity_code(M)


# ---------------------------------------------------------------------------
# lifts of a binary doubly even code


@dataclass
class LiftSearchResult:
    codes: list
    trials: int = 0
    descended_to_zero: int = 0
    rejected_not_self_dual: int = 0
    rejected_weight: int = 0
    duplicates: int = 0
    params: list = None


class LiftSpace:
    """All self-dual Z4 codes whose residue is a given doubly even code C1.

    With C1 in reduced echelon form (rows u_i, pivots p_i), the lifted rows
    are ``x_i = u_i + 2 b_i`` with ``b_i = sum_l N[i, l] e_{p_l}``, so that
    ``u_j . b_i = N[i, j]``.  Self-duality of the rows reduces to
    ``N[i, j] + N[j, i] = |u_i & u_j| / 2 (mod 2)`` for i < j, leaving the
    k(k+1)/2 free bits ``N[i, j]`` (i <= j).  The torsion part is
    ``2 * C1^perp``.
    """

    def __init__(self, residue_code):
        from z4sd import gf2

        c1 = residue_code
        if gf2.parity_class(c1) != "doubly_even":
            raise ValueError("residue code must be doubly even")
        self.residue = c1
        self.n = c1.length
        self.k = c1.dimension
        self.u = list(c1.generators)
        self.pivots = list(c1.pivots)
        self.torsion = gf2.dual(c1)
        k = self.k
        self.pairs = [(i, j) for i in range(k) for j in range(i, k)]
        self.c = {(i, j): (gf2.weight(self.u[i] & self.u[j]) // 2) & 1 for i in range(k) for j in range(i + 1, k)}
        extra = []
        span = c1
        for t in self.torsion.generators:
            if t not in span:
                extra.append(t)
                span = gf2.BinaryCode(self.n, span.generators + (t,))
        self.two_rows = [Z4Word(self.n, 0, t) for t in extra]

    @property
    def n_params(self) -> int:
        return len(self.pairs)

    def matrix_N(self, params) -> np.ndarray:
        k = self.k
        N = np.zeros((k, k), dtype=np.int64)
        for (i, j), f in zip(self.pairs, params):
            N[i, j] = int(f) & 1
            if i < j:
                N[j, i] = (int(f) + self.c[(i, j)]) & 1
        return N

    def b_vectors(self, params) -> list[int]:
        N = self.matrix_N(params)
        out = []
        for i in range(self.k):
            b = 0
            for l in range(self.k):
                if N[i, l]:
                    b |= 1 << self.pivots[l]
            out.append(b)
        return out

    def code(self, params) -> Z4Code:
        rows = [Z4Word(self.n, u, b) for u, b in zip(self.u, self.b_vectors(params))]
        return Z4Code(self.n, self.k, len(self.two_rows), rows + self.two_rows)


def _hi_of_sum(words: list[int], n: int) -> int:
    """hi plane of the Z4 sum of 0/1 vectors."""
    hi = 0
    for c in range(n):
        if (sum((w >> c) & 1 for w in words) >> 1) & 1:
            hi |= 1 << c
    return hi


class _LeeObjective:
    """Count of low-Lee-weight codeword classes as an affine function of the lift bits.

    A codeword with residue r is ``x_r + 2t`` (t in the torsion code) and has
    Lee weight ``wt(r) + 2 wt((hi(x_r) + t) outside supp r)``.  For each
    nonzero r with wt(r) < target, ``hi(x_r)`` restricted outside supp r is
    reduced to a syndrome of the punctured torsion code; the class is bad
    when that syndrome belongs to an error of weight <= (target - wt(r) - 1)//2.
    Every syndrome is affine in the lift bits, so a bit flip XORs a fixed
    delta into all of them.
    """

    def __init__(self, space: LiftSpace, target: int):
        from z4sd import gf2

        n, k = space.n, space.k
        self.feasible = True
        tor_min = gf2.min_weight(space.torsion) if space.torsion.dimension else None
        if tor_min is not None and 2 * tor_min < target:
            self.feasible = False
        base_b = space.b_vectors([0] * space.n_params)
        checks_all, base, deltas, tables = [], [], [], []
        full = (1 << n) - 1
        for s in range(1, 1 << k):
            m = [i for i in range(k) if (s >> i) & 1]
            r = 0
            for i in m:
                r ^= space.u[i]
            wr = gf2.weight(r)
            if wr >= target:
                continue
            out = full & ~r
            out_cols = [c for c in range(n) if (out >> c) & 1]
            punct = gf2.BinaryCode(len(out_cols), [_compress(t, out_cols) for t in space.torsion.generators]) if out_cols else None
            if punct is None:
                continue
            checks_c = gf2.dual(punct).generators
            checks = [_expand(h, out_cols) for h in checks_c]
            rho = len(checks)
            e_max = (target - wr - 1) // 2
            table = np.zeros(1 << rho, dtype=np.uint8)
            cols = [sum(((h >> j) & 1) << a for a, h in enumerate(checks_c)) for j in range(len(out_cols))]
            for w in range(e_max + 1):
                for combo in _combinations(len(out_cols), w):
                    syn = 0
                    for j in combo:
                        syn ^= cols[j]
                    table[syn] = 1
            hi0 = _hi_of_sum([space.u[i] for i in m], n)
            for i in m:
                hi0 ^= base_b[i]
            base.append(_syndrome(checks, hi0))
            row = []
            for (i, j) in space.pairs:
                flip = 0
                if i in m:
                    flip ^= 1 << space.pivots[j]
                if i < j and j in m:
                    flip ^= 1 << space.pivots[i]
                row.append(_syndrome(checks, flip))
            deltas.append(row)
            tables.append(table)
            checks_all.append(checks)
        self.n_classes = len(base)
        self.base = np.array(base, dtype=np.int64)
        self.deltas = np.array(deltas, dtype=np.int64).T.copy() if deltas else np.zeros((space.n_params, 0), dtype=np.int64)
        offsets = np.zeros(len(tables), dtype=np.int64)
        acc = 0
        for idx, t in enumerate(tables):
            offsets[idx] = acc
            acc += t.size
        self.offsets = offsets
        self.bad = np.concatenate(tables) if tables else np.zeros(1, dtype=np.uint8)
        self.bad = self.bad.astype(np.int64)

    def state(self, params: np.ndarray) -> np.ndarray:
        s = self.base.copy()
        for p in np.nonzero(params)[0]:
            s ^= self.deltas[p]
        return s

    def cost(self, params: np.ndarray) -> int:
        s = self.state(params)
        return int(self.bad[self.offsets + s].sum()) if s.size else 0


def _compress(x: int, cols: list[int]) -> int:
    return sum(((x >> c) & 1) << a for a, c in enumerate(cols))


def _expand(x: int, cols: list[int]) -> int:
    return sum(((x >> a) & 1) << c for a, c in enumerate(cols))


def _syndrome(checks: list[int], v: int) -> int:
    return sum((((h & v).bit_count()) & 1) << a for a, h in enumerate(checks))


def _combinations(n: int, w: int):
    import itertools

    return itertools.combinations(range(n), w)


def run_lift_search(
    residue_code,
    trials: int,
    rng_seed: int,
    target_d_lee: int,
    *,
    limit: int | None = None,
    max_steps: int | None = None,
    kicks: int = 32,
    kick_size: int = 3,
) -> LiftSearchResult:
    """Seeded search over lifts of ``residue_code`` with exact minimum Lee weight >= target.

    Trial t draws the k(k+1)/2 lift bits from a Philox stream keyed by
    (rng_seed, t), runs a steepest descent on the count of low-Lee-weight
    codeword classes, and, when that count reaches zero, builds the code and
    checks self-duality, the residue and the exact minimum Lee weight by
    full enumeration.  A descent stuck above zero is restarted up to
    ``kicks`` times from ``kick_size`` random flips, keeping the restart when
    it is no worse.  ``limit`` stops after that many accepted codes.
    """
    from z4sd import kernels
    from z4sd.search import ENUM_MAX_LOG2, enumerate_weights
    from z4sd.z4 import is_self_dual, residue

    space = LiftSpace(residue_code)
    if space.n > ENUM_MAX_LOG2:
        raise ValueError(f"exact minimum Lee weight needs n <= {ENUM_MAX_LOG2}, got n = {space.n}")
    result = LiftSearchResult(codes=[], params=[])
    if trials <= 0:
        return result
    obj = _LeeObjective(space, target_d_lee)
    if not obj.feasible:
        result.trials = trials
        return result
    steps = space.n_params if max_steps is None else max_steps
    seen = set()
    for t in range(trials):
        result.trials = t + 1
        rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([rng_seed, t])))
        params = rng.integers(0, 2, size=space.n_params).astype(np.int64)
        state = obj.state(params)
        cost = 0
        if obj.n_classes:
            cost = kernels.lift_descend(state, params, obj.deltas, obj.bad, obj.offsets, steps)
            for _ in range(kicks):
                if cost == 0:
                    break
                p2, s2 = params.copy(), state.copy()
                for q in rng.choice(space.n_params, min(kick_size, space.n_params), replace=False):
                    p2[q] ^= 1
                    s2 ^= obj.deltas[q]
                c2 = kernels.lift_descend(s2, p2, obj.deltas, obj.bad, obj.offsets, steps)
                if c2 <= cost:
                    params, state, cost = p2, s2, c2
        if cost:
            continue
        result.descended_to_zero += 1
        key = params.tobytes()
        if key in seen:
            result.duplicates += 1
            continue
        seen.add(key)
        code = space.code(params)
        if not is_self_dual(code) or residue(code) != residue_code:
            result.rejected_not_self_dual += 1
            continue
        if enumerate_weights(code).d_lee < target_d_lee:
            result.rejected_weight += 1
            continue
        result.codes.append(code)
        result.params.append(params.copy())
        if limit is not None and len(result.codes) >= limit:
            break
    return result


def lift_search(residue_code, trials: int, rng_seed: int, target_d_lee: int, limit: int | None = None) -> list[Z4Code]:
    """Codes found by ``run_lift_search``, in trial order."""
    return run_lift_search(residue_code, trials, rng_seed, target_d_lee, limit=limit).codes
