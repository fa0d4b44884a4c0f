"""Binary linear codes with rows packed into Python ints (bit i = coordinate i)."""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

from z4sd import kernels
from z4sd._accel import MAX_KERNEL_LENGTH

EXHAUSTIVE_MAX_DIM = 28
SYNDROME_MAX_REDUNDANCY = 28


class CodeTooLargeError(ValueError):
    """The requested exhaustive computation is outside the supported size."""


def weight(x: int) -> int:
    return int(x).bit_count()


def dot(x: int, y: int) -> int:
    return (x & y).bit_count() & 1


def bits_to_str(x: int, n: int) -> str:
    return "".join("1" if (x >> i) & 1 else "0" for i in range(n))


def str_to_bits(s: str) -> int:
    x = 0
    for i, ch in enumerate(s):
        if ch == "1":
            x |= 1 << i
        elif ch != "0":
            raise ValueError(f"not a binary digit: {ch!r}")
    return x


@dataclass(frozen=True)
class BinaryWord:
    length: int
    bits: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("length must be positive")
        if self.bits >> self.length:
            raise ValueError("bits beyond the word length")

    @classmethod
    def from_string(cls, s: str) -> "BinaryWord":
        return cls(len(s), str_to_bits(s))

    @property
    def weight(self) -> int:
        return weight(self.bits)

    def __str__(self) -> str:
        return bits_to_str(self.bits, self.length)


def echelon(rows: Iterable[int], order: Sequence[int]) -> tuple[list[int], list[int]]:
    """Fully reduced echelon form choosing pivots in the column order given.

    Returns the independent rows and their pivot columns.  Every pivot column
    is zero in all other returned rows.
    """
    work = [r for r in rows if r]
    out: list[int] = []
    pivots: list[int] = []
    for col in order:
        bit = 1 << col
        idx = next((i for i, r in enumerate(work) if r & bit), None)
        if idx is None:
            continue
        p = work.pop(idx)
        work = [r ^ p if r & bit else r for r in work]
        out = [r ^ p if r & bit else r for r in out]
        out.append(p)
        pivots.append(col)
        work = [r for r in work if r]
        if not work:
            break
    return out, pivots


class BinaryCode:
    """A binary linear code stored as its reduced row echelon basis.

    Two codes compare equal iff they have the same row space.
    """

    __slots__ = ("length", "generators", "pivots")

    def __init__(self, length: int, generators: Iterable[int] = ()):
        if length < 1:
            raise ValueError("length must be positive")
        gens = [int(g) for g in generators]
        if any(g < 0 or g >> length for g in gens):
            raise ValueError("generator has bits beyond the code length")
        rows, pivots = echelon(gens, range(length))
        order = sorted(range(len(rows)), key=lambda i: pivots[i])
        self.length = length
        self.generators = tuple(rows[i] for i in order)
        self.pivots = tuple(pivots[i] for i in order)

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "BinaryCode":
        if not rows:
            raise ValueError("need at least one row to infer the length")
        return cls(len(rows[0]), [str_to_bits(r) for r in rows])

    @classmethod
    def from_matrix(cls, matrix) -> "BinaryCode":
        m = np.asarray(matrix, dtype=np.int64) % 2
        return cls(m.shape[1], [sum(int(b) << i for i, b in enumerate(row)) for row in m])

    @classmethod
    def zero(cls, n: int) -> "BinaryCode":
        return cls(n)

    @classmethod
    def full(cls, n: int) -> "BinaryCode":
        return cls(n, [1 << i for i in range(n)])

    @classmethod
    def repetition(cls, n: int) -> "BinaryCode":
        return cls(n, [(1 << n) - 1])

    @property
    def dimension(self) -> int:
        return len(self.generators)

    def __len__(self) -> int:
        return 1 << self.dimension

    def __contains__(self, word) -> bool:
        x = word.bits if isinstance(word, BinaryWord) else int(word)
        for g, p in zip(self.generators, self.pivots):
            if (x >> p) & 1:
                x ^= g
        return x == 0

    def __le__(self, other: "BinaryCode") -> bool:
        return self.length == other.length and all(g in other for g in self.generators)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryCode):
            return NotImplemented
        return self.length == other.length and self.generators == other.generators

    def __hash__(self) -> int:
        return hash((self.length, self.generators))

    def __repr__(self) -> str:
        return f"BinaryCode([{self.length},{self.dimension}])"

    def words(self) -> Iterator[int]:
        """All codewords in binary Gray order (intended for small codes)."""
        w = 0
        yield w
        for s in range(1, len(self)):
            w ^= self.generators[(s & -s).bit_length() - 1]
            yield w

    def rows_as_strings(self) -> list[str]:
        return [bits_to_str(g, self.length) for g in self.generators]

    def is_self_orthogonal(self) -> bool:
        g = self.generators
        return all(dot(g[i], g[j]) == 0 for i in range(len(g)) for j in range(i, len(g)))

    def is_self_dual(self) -> bool:
        return 2 * self.dimension == self.length and self.is_self_orthogonal()

    def _planes(self) -> np.ndarray:
        if self.length > MAX_KERNEL_LENGTH:
            raise CodeTooLargeError(f"kernels support length <= {MAX_KERNEL_LENGTH}")
        return np.array(self.generators, dtype=np.uint64)


def dual(code: BinaryCode) -> BinaryCode:
    n = code.length
    pivot_set = set(code.pivots)
    rows = []
    for q in range(n):
        if q in pivot_set:
            continue
        h = 1 << q
        for g, p in zip(code.generators, code.pivots):
            if (g >> q) & 1:
                h |= 1 << p
        rows.append(h)
    return BinaryCode(n, rows)


def direct_sum(a: BinaryCode, b: BinaryCode) -> BinaryCode:
    return BinaryCode(a.length + b.length, list(a.generators) + [g << a.length for g in b.generators])


def weight_distribution(code: BinaryCode) -> list[tuple[int, int]]:
    """Nonzero entries of the weight distribution by full 2**k enumeration."""
    if code.dimension > EXHAUSTIVE_MAX_DIM:
        raise CodeTooLargeError(f"dimension {code.dimension} > {EXHAUSTIVE_MAX_DIM}; use brouwer_zimmermann for the minimum weight")
    return _coset_distribution(code, 0)


def _coset_distribution(code: BinaryCode, start: int) -> list[tuple[int, int]]:
    if code.length > MAX_KERNEL_LENGTH:
        hist = np.zeros(code.length + 1, dtype=np.int64)
        for w in code.words():
            hist[weight(w ^ start)] += 1
    else:
        rows = code._planes() if code.dimension else np.zeros(1, dtype=np.uint64)
        hist = kernels.gf2_weight_hist(rows, np.uint64(start), code.dimension, code.length)
    return [(w, int(c)) for w, c in enumerate(hist) if c]


def min_weight(code: BinaryCode, method: str = "auto") -> int:
    """Minimum nonzero weight.

    ``method`` is ``exhaustive``, ``brouwer_zimmermann`` or ``auto`` (exhaustive
    up to dimension 20).
    """
    if code.dimension == 0:
        raise ValueError("the zero code has no nonzero codeword")
    if method == "auto":
        method = "exhaustive" if code.dimension <= 20 else "brouwer_zimmermann"
    if method == "exhaustive":
        return weight_distribution(code)[1][0]
    if method == "brouwer_zimmermann":
        return brouwer_zimmermann(code)[0]
    raise ValueError(f"unknown method {method!r}")


def information_sets(code: BinaryCode) -> list[tuple[np.ndarray, int]]:
    """Systematic generator matrices over successive (partly) disjoint information sets.

    Each entry is ``(rows, own_rank)``: the rows are in echelon form with
    ``own_rank`` of their pivots inside columns not used by earlier matrices.
    """
    n, k = code.length, code.dimension
    remaining = list(range(n))
    mats = []
    while remaining:
        used = set(range(n)) - set(remaining)
        rows, pivots = echelon(code.generators, remaining + sorted(used))
        own = [p for p in pivots if p not in used]
        if not own:
            break
        mats.append((np.array(rows, dtype=np.uint64), len(own)))
        remaining = [c for c in remaining if c not in set(own)]
    if not mats:
        mats.append((np.array(code.generators, dtype=np.uint64), k))
    return mats


def brouwer_zimmermann(code: BinaryCode) -> tuple[int, int]:
    """Minimum weight and a witness codeword via the Brouwer-Zimmermann scheme.

    All messages of weight w are enumerated for every systematic matrix in
    turn; the lower bound sum(max(0, w + 1 - (k - own_rank))) closes the gap.
    For doubly even codes the bound is rounded up to a multiple of four.
    """
    if code.dimension == 0:
        raise ValueError("the zero code has no nonzero codeword")
    code._planes()
    k = code.dimension
    mats = information_sets(code)
    step = 4 if all(weight(g) % 4 == 0 for g in code.generators) and code.is_self_orthogonal() else 1
    upper, witness = code.length + 1, 0
    for w in range(1, k + 1):
        for rows, _ in mats:
            best, word = kernels.gf2_combo_min(rows, w)
            if best < upper:
                upper, witness = int(best), int(word)
        lower = sum(max(0, w + 1 - (k - own)) for _, own in mats)
        lower = -(-lower // step) * step
        if lower >= upper:
            break
    return upper, witness


def parity_class(code: BinaryCode) -> str:
    """``doubly_even``, ``singly_even`` (all weights even, some = 2 mod 4) or ``neither``."""
    g = code.generators
    if any(weight(x) % 2 for x in g):
        return "neither"
    doubly = all(weight(x) % 4 == 0 for x in g) and all(
        dot(g[i], g[j]) == 0 for i in range(len(g)) for j in range(i + 1, len(g))
    )
    return "doubly_even" if doubly else "singly_even"


def _half_weight_parity(x: int) -> int:
    return (weight(x) // 2) & 1


def doubly_even_subcode(code: BinaryCode) -> BinaryCode:
    """The codimension-one subcode of weights divisible by four."""
    if not code.is_self_dual() or parity_class(code) != "singly_even":
        raise ValueError("doubly_even_subcode needs a singly even self-dual code")
    gens = list(code.generators)
    odd = [x for x in gens if _half_weight_parity(x)]
    pivot = odd[0]
    rows = [x ^ pivot if _half_weight_parity(x) else x for x in gens if x != pivot]
    return BinaryCode(code.length, rows)


@dataclass(frozen=True)
class Shadow:
    """Shadow ``C0^perp minus C`` stored as the coset ``representative + code``."""

    code: BinaryCode
    subcode_dual: BinaryCode
    representative: int
    min_weight: int

    def __contains__(self, x: int) -> bool:
        return x in self.subcode_dual and x not in self.code

    def __len__(self) -> int:
        return len(self.code)

    def words(self) -> Iterator[int]:
        for w in self.code.words():
            yield w ^ self.representative


def shadow(code: BinaryCode) -> Shadow:
    c0 = doubly_even_subcode(code)
    c0_dual = dual(c0)
    rep = next(g for g in c0_dual.generators if g not in code)
    dist = _coset_distribution(code, rep)
    return Shadow(code, c0_dual, rep, dist[0][0])


def covering_radius(code: BinaryCode, method: str = "exact") -> int:
    """Covering radius by syndrome BFS (``exact``) or the Delsarte bound."""
    n, k = code.length, code.dimension
    if method == "delsarte_bound":
        if k == n:
            return 0
        return sum(1 for w, _ in weight_distribution(dual(code)) if w > 0)
    if method != "exact":
        raise ValueError(f"unknown method {method!r}")
    r = n - k
    if r > SYNDROME_MAX_REDUNDANCY:
        raise CodeTooLargeError(f"redundancy {r} > {SYNDROME_MAX_REDUNDANCY}; use method='delsarte_bound'")
    if r == 0:
        return 0
    checks = dual(code).generators
    cols = np.array([sum(((h >> j) & 1) << i for i, h in enumerate(checks)) for j in range(n)], dtype=np.int64)
    hist = kernels.coset_leader_hist(cols, r)
    return int(np.nonzero(hist)[0].max())


def _even_part(code: BinaryCode) -> BinaryCode:
    gens = list(code.generators)
    odd = [x for x in gens if weight(x) % 2]
    if not odd:
        return code
    return BinaryCode(code.length, [x ^ odd[0] if weight(x) % 2 else x for x in gens if x != odd[0]])


def complete_to_self_dual(code: BinaryCode, target: str = "any") -> BinaryCode:
    """Greedily extend a self-orthogonal code to a self-dual one.

    Candidates are scanned in counter order over a basis of ``C^perp / C``;
    ``target`` is ``any``, ``doubly_even`` or ``singly_even``.
    """
    n = code.length
    if target not in ("any", "doubly_even", "singly_even"):
        raise ValueError(f"unknown target {target!r}")
    if n % 2 or not code.is_self_orthogonal():
        raise ValueError("completion needs a self-orthogonal code of even length")
    cls = parity_class(code)
    if target == "doubly_even" and (n % 8 or cls != "doubly_even"):
        raise ValueError("doubly even completion needs n = 0 mod 8 and a doubly even code")
    if target == "singly_even" and cls == "doubly_even" and n % 8 == 0 and code.is_self_dual():
        raise ValueError("a doubly even self-dual code has no singly even completion")
    if code.is_self_dual():
        if target == "singly_even" and cls != "singly_even":
            raise ValueError("code is self-dual but not singly even")
        return code
    if target == "doubly_even":
        accept = lambda v: weight(v) % 4 == 0  # noqa: E731
    else:
        accept = lambda v: weight(v) % 2 == 0  # noqa: E731
    current = code
    if target == "singly_even" and cls == "doubly_even":
        # every singly even container sits in the even part of C^perp, so
        # one exists iff that part has a word of weight 2 mod 4.  This fails
        # e.g. for a doubly even [8,3] code missing the all-ones word.
        if parity_class(_even_part(dual(code))) == "doubly_even":
            raise ValueError("no singly even self-dual code contains this code: the even part of its dual is doubly even")
        current = _adjoin(current, lambda v: weight(v) % 4 == 2)
    while current.dimension < n // 2:
        current = _adjoin(current, accept)
    return current


def _adjoin(code: BinaryCode, accept) -> BinaryCode:
    d = dual(code)
    # basis of C^perp modulo C: dual rows that extend the echelon basis of C
    basis: list[int] = []
    span = code
    for g in d.generators:
        if g not in span:
            basis.append(g)
            span = BinaryCode(code.length, span.generators + (g,))
    for s in range(1, 1 << len(basis)):
        v = 0
        for i, b in enumerate(basis):
            if (s >> i) & 1:
                v ^= b
        if accept(v):
            return BinaryCode(code.length, code.generators + (v,))
    raise RuntimeError("no admissible extension vector; completion hypotheses are inconsistent")


def is_extremal(code: BinaryCode) -> bool:
    from z4sd.bounds import binary_sd_upper_bound

    if not code.is_self_dual():
        raise ValueError("extremality is defined for self-dual codes")
    return min_weight(code) == binary_sd_upper_bound(code.length)


def is_s_extremal(code: BinaryCode) -> bool:
    """Shadow minimum weight meets the Bachoc-Gaborit bound with equality.

    Doubly even codes have no shadow in this sense and are reported False.
    """
    if not code.is_self_dual():
        raise ValueError("s-extremality is defined for self-dual codes")
    if parity_class(code) != "singly_even":
        return False
    n = code.length
    d = min_weight(code)
    ds = shadow(code).min_weight
    if n % 24 == 22 and d == 4 * (n // 24) + 6:
        return ds == n // 2 + 8 - 2 * d
    return ds == n // 2 + 4 - 2 * d


# ---------------------------------------------------------------------------
# .g2c files: "G2CODE n=<n> k=<k>" then k rows of 0/1 digits, '#' comments

_G2C_HEADER = re.compile(r"^G2CODE\s+n=(\d+)\s+k=(\d+)\s*$")


def parse_g2c(text: str) -> BinaryCode:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty .g2c input")
    m = _G2C_HEADER.match(lines[0])
    if not m:
        raise ValueError(f"bad .g2c header: {lines[0]!r}")
    n, k = map(int, m.groups())
    rows = lines[1:]
    if len(rows) != k or any(len(r) != n or set(r) - {"0", "1"} for r in rows):
        raise ValueError(f"expected {k} rows of {n} binary digits")
    code = BinaryCode(n, [str_to_bits(r) for r in rows])
    if code.dimension != k:
        raise ValueError(f"rows have rank {code.dimension}, header says {k}")
    return code


def format_g2c(code: BinaryCode, comments: Sequence[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"G2CODE n={code.length} k={code.dimension}")
    out.extend(code.rows_as_strings())
    return "\n".join(out) + "\n"


def read_g2c(path) -> BinaryCode:
    path = Path(path)
    try:
        return parse_g2c(path.read_text(encoding="utf-8"))
    except (OSError, ValueError) as exc:
        raise ValueError(f"{path}: {exc}") from exc


def write_g2c(path, code: BinaryCode, comments: Sequence[str] = ()) -> None:
    Path(path).write_text(format_g2c(code, comments), encoding="utf-8")
