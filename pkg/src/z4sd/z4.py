"""Words and linear codes over Z4.

A word is stored as two bit-planes, ``lo`` and ``hi``, with coordinate i
equal to ``2*hi_i + lo_i``.  All three weights are then popcounts:

    n1 + n3 = |lo|,   n2 = |hi & ~lo|.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from z4sd.gf2 import BinaryCode, BinaryWord


@dataclass(frozen=True)
class Z4Word:
    length: int
    lo: int
    hi: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("length must be positive")
        if (self.lo | self.hi) >> self.length or self.lo < 0 or self.hi < 0:
            raise ValueError("plane bits beyond the word length")

    @classmethod
    def from_digits(cls, digits: Iterable[int]) -> "Z4Word":
        lo = hi = 0
        n = 0
        for i, d in enumerate(digits):
            d = int(d) % 4
            lo |= (d & 1) << i
            hi |= (d >> 1) << i
            n = i + 1
        return cls(n, lo, hi)

    @classmethod
    def from_string(cls, s: str) -> "Z4Word":
        if not s or any(ch not in "0123" for ch in s):
            raise ValueError(f"not a Z4 digit string: {s!r}")
        return cls.from_digits(int(ch) for ch in s)

    @classmethod
    def zero(cls, n: int) -> "Z4Word":
        return cls(n, 0, 0)

    def digits(self) -> tuple[int, ...]:
        return tuple(((self.lo >> i) & 1) | (((self.hi >> i) & 1) << 1) for i in range(self.length))

    def __getitem__(self, i: int) -> int:
        return ((self.lo >> i) & 1) | (((self.hi >> i) & 1) << 1)

    def __str__(self) -> str:
        return "".join(map(str, self.digits()))

    def __add__(self, other: "Z4Word") -> "Z4Word":
        return add(self, other)

    def __neg__(self) -> "Z4Word":
        return scale(self, 3)

    def __sub__(self, other: "Z4Word") -> "Z4Word":
        return add(self, -other)

    def __rmul__(self, c: int) -> "Z4Word":
        return scale(self, c)

    @property
    def is_zero(self) -> bool:
        return not (self.lo | self.hi)


@dataclass(frozen=True)
class WeightTriple:
    hamming: int
    lee: int
    euclidean: int
    split: tuple[int, int]  # (n1 + n3, n2)


def _check_lengths(x: Z4Word, y: Z4Word) -> None:
    if x.length != y.length:
        raise ValueError(f"length mismatch: {x.length} != {y.length}")


def weights(x: Z4Word) -> WeightTriple:
    odd = x.lo.bit_count()
    twos = (x.hi & ~x.lo).bit_count()
    return WeightTriple(odd + twos, odd + 2 * twos, odd + 4 * twos, (odd, twos))


def add(x: Z4Word, y: Z4Word) -> Z4Word:
    _check_lengths(x, y)
    return Z4Word(x.length, x.lo ^ y.lo, x.hi ^ y.hi ^ (x.lo & y.lo))


def scale(x: Z4Word, c: int) -> Z4Word:
    c %= 4
    if c == 0:
        return Z4Word.zero(x.length)
    if c == 1:
        return x
    if c == 2:
        return Z4Word(x.length, 0, x.lo)
    # -x: odd coordinates 1 <-> 3, twos unchanged
    return Z4Word(x.length, x.lo, x.hi ^ x.lo)


def inner_product(x: Z4Word, y: Z4Word) -> int:
    _check_lengths(x, y)
    s = (x.lo & y.lo).bit_count() + 2 * ((x.lo & y.hi).bit_count() + (x.hi & y.lo).bit_count())
    return s % 4


def gray_map(x: Z4Word) -> BinaryWord:
    """0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10, coordinate i to bits (2i, 2i+1)."""
    bits = 0
    for i in range(x.length):
        lo = (x.lo >> i) & 1
        hi = (x.hi >> i) & 1
        bits |= (hi << (2 * i)) | ((hi ^ lo) << (2 * i + 1))
    return BinaryWord(2 * x.length, bits)


def negate_coordinates(x: Z4Word, mask: int) -> Z4Word:
    """Multiply the coordinates selected by ``mask`` by -1."""
    return Z4Word(x.length, x.lo, x.hi ^ (x.lo & mask))


def permute_word(x: Z4Word, perm: Sequence[int]) -> Z4Word:
    """Coordinate i of the result is coordinate ``perm[i]`` of ``x``."""
    d = x.digits()
    return Z4Word.from_digits(d[p] for p in perm)


# ---------------------------------------------------------------------------
# standard form


@dataclass(frozen=True)
class StandardForm:
    """Reduced generators: unit rows with a 1 at their pivot, then 2-rows.

    Unit rows vanish on the other unit pivots and are 0/1 on 2-pivots; 2-rows
    vanish on every unit pivot and on the other 2-pivots.
    """

    unit_rows: np.ndarray
    unit_pivots: tuple[int, ...]
    two_rows: np.ndarray
    two_pivots: tuple[int, ...]

    @property
    def k1(self) -> int:
        return len(self.unit_pivots)

    @property
    def k2(self) -> int:
        return len(self.two_pivots)


def standard_form(matrix, n: int | None = None) -> StandardForm:
    m = np.array(matrix, dtype=np.int64).reshape(-1, n if n is not None else np.shape(matrix)[-1]) % 4
    rows, n = m.shape
    r = 0
    unit_pivots: list[int] = []
    for col in range(n):
        if r == rows:
            break
        cand = np.nonzero(m[r:, col] % 2)[0]
        if cand.size == 0:
            continue
        p = r + int(cand[0])
        m[[r, p]] = m[[p, r]]
        if m[r, col] == 3:
            m[r] = (3 * m[r]) % 4
        for i in range(rows):
            if i != r and m[i, col]:
                m[i] = (m[i] - m[i, col] * m[r]) % 4
        unit_pivots.append(col)
        r += 1
    k1 = r
    two_pivots: list[int] = []
    pivot_set = set(unit_pivots)
    for col in range(n):
        if r == rows:
            break
        if col in pivot_set:
            continue
        cand = np.nonzero(m[r:, col])[0]
        if cand.size == 0:
            continue
        p = r + int(cand[0])
        m[[r, p]] = m[[p, r]]
        for i in range(rows):
            if i != r and m[i, col] >= 2:
                m[i] = (m[i] - m[r]) % 4
        two_pivots.append(col)
        r += 1
    return StandardForm(m[:k1].copy(), tuple(unit_pivots), m[k1:r].copy(), tuple(two_pivots))


def _reduce(sf: StandardForm, v: np.ndarray) -> np.ndarray:
    v = v.copy() % 4
    for row, p in zip(sf.unit_rows, sf.unit_pivots):
        if v[p]:
            v = (v - v[p] * row) % 4
    for row, p in zip(sf.two_rows, sf.two_pivots):
        if v[p] == 2:
            v = (v - row) % 4
    return v


# ---------------------------------------------------------------------------
# codes


class Z4Code:
    """A Z4-linear code given by k1 order-4 rows followed by k2 order-2 rows.

    The rows are kept exactly as given (so files round-trip); the
    constructor checks that they generate a code of size 4**k1 * 2**k2.
    Instances are immutable.
    """

    __slots__ = ("length", "k1", "k2", "rows", "_sf")

    def __init__(self, length: int, k1: int, k2: int, rows: Sequence[Z4Word]):
        rows = tuple(rows)
        if len(rows) != k1 + k2:
            raise ValueError(f"expected {k1 + k2} rows, got {len(rows)}")
        if any(r.length != length for r in rows):
            raise ValueError("row length differs from code length")
        if any(r.lo for r in rows[k1:]):
            raise ValueError("order-2 rows must have all coordinates in {0, 2}")
        mat = np.array([r.digits() for r in rows], dtype=np.int64).reshape(len(rows), length)
        sf = standard_form(mat, length)
        if (sf.k1, sf.k2) != (k1, k2):
            raise ValueError(f"rows generate a code of type 4^{sf.k1} 2^{sf.k2}, not 4^{k1} 2^{k2}")
        object.__setattr__(self, "length", length)
        object.__setattr__(self, "k1", k1)
        object.__setattr__(self, "k2", k2)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_sf", sf)

    def __setattr__(self, name, value):
        raise AttributeError("Z4Code is immutable")

    @classmethod
    def from_generators(cls, rows: Iterable, length: int | None = None) -> "Z4Code":
        """Reduce arbitrary generators to standard form (original coordinate order kept)."""
        words = [r if isinstance(r, Z4Word) else Z4Word.from_digits(r) for r in rows]
        if length is None:
            if not words:
                raise ValueError("length required for an empty generator list")
            length = words[0].length
        mat = np.array([w.digits() for w in words], dtype=np.int64).reshape(len(words), length)
        sf = standard_form(mat, length)
        return cls._from_sf(sf, length)

    @classmethod
    def from_matrix(cls, matrix) -> "Z4Code":
        m = np.asarray(matrix, dtype=np.int64)
        return cls.from_generators([Z4Word.from_digits(r) for r in m], m.shape[1])

    @classmethod
    def _from_sf(cls, sf: StandardForm, length: int) -> "Z4Code":
        rows = [Z4Word.from_digits(r) for r in sf.unit_rows] + [Z4Word.from_digits(r) for r in sf.two_rows]
        return cls(length, sf.k1, sf.k2, rows)

    @classmethod
    def zero(cls, n: int) -> "Z4Code":
        return cls(n, 0, 0, [])

    @classmethod
    def full(cls, n: int) -> "Z4Code":
        return cls(n, n, 0, [Z4Word(n, 1 << i, 0) for i in range(n)])

    @property
    def standard(self) -> StandardForm:
        return self._sf

    @property
    def size(self) -> int:
        return 4**self.k1 * 2**self.k2

    @property
    def log2_size(self) -> int:
        return 2 * self.k1 + self.k2

    def matrix(self) -> np.ndarray:
        return np.array([r.digits() for r in self.rows], dtype=np.int64).reshape(len(self.rows), self.length)

    def __contains__(self, x) -> bool:
        v = np.array(x.digits() if isinstance(x, Z4Word) else x, dtype=np.int64)
        return not _reduce(self._sf, v).any()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Z4Code):
            return NotImplemented
        return (
            self.length == other.length
            and (self.k1, self.k2) == (other.k1, other.k2)
            and all(r in other for r in self.rows)
        )

    __hash__ = None

    def key(self) -> tuple[str, ...]:
        """Digit strings of the reduced standard form; equal codes give equal keys."""
        sf = self._sf
        return tuple("".join(map(str, r)) for r in sf.unit_rows) + ("|",) + tuple(
            "".join(map(str, r)) for r in sf.two_rows
        )

    def __repr__(self) -> str:
        return f"Z4Code(n={self.length}, k1={self.k1}, k2={self.k2})"

    def planes(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(lo rows, hi rows, radix) as kernel inputs."""
        lo = np.array([r.lo for r in self.rows], dtype=np.uint64)
        hi = np.array([r.hi for r in self.rows], dtype=np.uint64)
        radix = np.array([4] * self.k1 + [2] * self.k2, dtype=np.int64)
        return lo, hi, radix

    def permuted(self, perm: Sequence[int]) -> "Z4Code":
        return Z4Code.from_generators([permute_word(r, perm) for r in self.rows], self.length)

    def sign_changed(self, mask: int) -> "Z4Code":
        return Z4Code.from_generators([negate_coordinates(r, mask) for r in self.rows], self.length)


def dual(code: Z4Code) -> Z4Code:
    """Generators of the dual in standard form, built from the reduced form of ``code``."""
    n = code.length
    sf = code.standard
    U, T = sf.unit_pivots, sf.two_pivots
    R = [c for c in range(n) if c not in set(U) | set(T)]
    A = sf.unit_rows[:, list(T)] if T else np.zeros((len(U), 0), dtype=np.int64)
    B = sf.unit_rows[:, R] if R else np.zeros((len(U), 0), dtype=np.int64)
    C = (sf.two_rows[:, R] // 2) if len(T) and R else np.zeros((len(T), len(R)), dtype=np.int64)
    rows = []
    for li, col in enumerate(R):
        x = np.zeros(n, dtype=np.int64)
        for i, p in enumerate(U):
            x[p] = (-B[i, li] - int(np.dot(C[:, li], A[i]))) % 4
        for m, p in enumerate(T):
            x[p] = C[m, li]
        x[col] = 1
        rows.append(x)
    for m, p in enumerate(T):
        y = np.zeros(n, dtype=np.int64)
        for i, q in enumerate(U):
            y[q] = 2 * A[i, m]
        y[p] = 2
        rows.append(y)
    words = [Z4Word.from_digits(r) for r in rows]
    return Z4Code(n, len(R), len(T), words)


def is_self_dual(code: Z4Code, method: str = "gram") -> bool:
    """``gram``: 2k1 + k2 = n and all row products vanish; ``dual``: compare with the dual code."""
    if method == "dual":
        return code == dual(code)
    if method != "gram":
        raise ValueError(f"unknown method {method!r}")
    if 2 * code.k1 + code.k2 != code.length:
        return False
    rows = code.rows
    return all(inner_product(rows[i], rows[j]) == 0 for i in range(len(rows)) for j in range(i, len(rows)))


def residue(code: Z4Code) -> BinaryCode:
    res = BinaryCode(code.length, [r.lo for r in code.rows])
    if is_self_dual(code):
        from z4sd.gf2 import parity_class

        assert parity_class(res) == "doubly_even", "residue of a self-dual code must be doubly even"
    return res


def torsion(code: Z4Code) -> BinaryCode:
    gens = [r.lo for r in code.rows[: code.k1]] + [r.hi for r in code.rows[code.k1 :]]
    tor = BinaryCode(code.length, gens)
    if is_self_dual(code):
        from z4sd.gf2 import dual as bdual

        assert tor == bdual(residue(code)), "torsion of a self-dual code must be the residue's dual"
    return tor


def _euclid_mod8(x: Z4Word) -> int:
    return weights(x).euclidean % 8


def type_of(code: Z4Code, method: str = "auto") -> str:
    """``"I"`` or ``"II"`` for a self-dual code.

    The generator test checks every row and every pairwise row sum for
    Euclidean weight = 0 mod 8.  On a self-orthogonal code the Euclidean
    weight mod 8 is additive, so the test is exact.  ``auto`` also confirms
    by full enumeration when the code has at most 2**32 words.
    """
    if not is_self_dual(code):
        raise ValueError("type is defined for self-dual codes only")
    rows = code.rows
    gen_ok = all(_euclid_mod8(r) == 0 for r in rows) and all(
        _euclid_mod8(add(rows[i], rows[j])) == 0 for i in range(len(rows)) for j in range(i + 1, len(rows))
    )
    verdict = "II" if gen_ok else "I"
    if method == "generators":
        return verdict
    if method not in ("auto", "enumerate"):
        raise ValueError(f"unknown method {method!r}")
    from z4sd.search import ENUM_MAX_LOG2, split_histogram

    if method == "enumerate" or code.log2_size <= ENUM_MAX_LOG2:
        hist = split_histogram(code)
        odd, twos = np.nonzero(hist)
        exact = "II" if np.all((odd + 4 * twos) % 8 == 0) else "I"
        if exact != verdict:
            raise AssertionError(f"generator type test ({verdict}) disagrees with enumeration ({exact})")
        return exact
    return verdict


# ---------------------------------------------------------------------------
# .z4c text format

_HEADER = re.compile(r"^Z4CODE\s+n=(\d+)\s+k1=(\d+)\s+k2=(\d+)\s*$")


def parse_z4c(text: str) -> Z4Code:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ValueError("empty .z4c input")
    m = _HEADER.match(lines[0])
    if not m:
        raise ValueError(f"bad .z4c header: {lines[0]!r}")
    n, k1, k2 = map(int, m.groups())
    rows = lines[1:]
    for r in rows:
        if len(r) != n:
            raise ValueError(f"row of length {len(r)} in a code of length {n}")
    return Z4Code(n, k1, k2, [Z4Word.from_string(r) for r in rows])


def format_z4c(code: Z4Code, comments: Sequence[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"Z4CODE n={code.length} k1={code.k1} k2={code.k2}")
    out.extend(str(r) for r in code.rows)
    return "\n".join(out) + "\n"


def read_z4c(path) -> Z4Code:
    path = Path(path)
    try:
        return parse_z4c(path.read_text(encoding="utf-8"))
    except (OSError, ValueError) as exc:
        raise ValueError(f"{path}: {exc}") from exc


def write_z4c(path, code: Z4Code, comments: Sequence[str] = ()) -> None:
    Path(path).write_text(format_z4c(code, comments), encoding="utf-8")
