"""Binary polynomials modulo x^l + 1 and bit-packed GF(2) matrices.

Polynomials are stored as Python ints (bit ``i`` is the coefficient of
``x^i``); matrices are row-major ``uint64`` words, 64 columns per word.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from numba import njit

WORD = 64

# degree of the zero polynomial
NEG_INF = -math.inf


def _reduce_mod(bits: int, l: int) -> int:
    mask = (1 << l) - 1
    while bits >> l:
        bits = (bits & mask) ^ (bits >> l)
    return bits


@dataclass(frozen=True)
class GF2Poly:
    """Polynomial over GF(2); ``bits`` holds the coefficients as an int.

    When ``modulus_len`` is set the value is kept reduced modulo x^l + 1.
    """

    bits: int = 0
    modulus_len: int | None = None

    def __post_init__(self):
        if self.bits < 0:
            raise ValueError("coefficient mask must be nonnegative")
        if self.modulus_len is not None:
            if self.modulus_len <= 0:
                raise ValueError("modulus length must be positive")
            object.__setattr__(self, "bits", _reduce_mod(self.bits, self.modulus_len))

    @classmethod
    def from_exponents(cls, exps: Iterable[int], modulus_len: int | None = None) -> GF2Poly:
        bits = 0
        for e in exps:
            if e < 0:
                raise ValueError("negative exponent")
            bits ^= 1 << e
        return cls(bits, modulus_len)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int], modulus_len: int | None = None) -> GF2Poly:
        return cls.from_exponents((i for i, c in enumerate(coeffs) if c & 1), modulus_len)

    @classmethod
    def x_pow_plus_one(cls, l: int) -> GF2Poly:
        """The modulus x^l + 1 itself (unreduced)."""
        return cls((1 << l) | 1)

    @property
    def degree(self) -> int | float:
        """Degree, or ``NEG_INF`` for the zero polynomial."""
        return self.bits.bit_length() - 1 if self.bits else NEG_INF

    def is_zero(self) -> bool:
        return self.bits == 0

    def exponents(self) -> list[int]:
        out, b, i = [], self.bits, 0
        while b:
            if b & 1:
                out.append(i)
            b >>= 1
            i += 1
        return out

    def coeffs(self, length: int | None = None) -> np.ndarray:
        if length is None:
            length = self.modulus_len or max(self.bits.bit_length(), 1)
        out = np.zeros(length, dtype=np.uint8)
        for e in self.exponents():
            if e >= length:
                raise ValueError(f"x^{e} does not fit in {length} coefficients")
            out[e] = 1
        return out

    def __add__(self, other: GF2Poly) -> GF2Poly:
        return GF2Poly(self.bits ^ other.bits, self.modulus_len or other.modulus_len)

    def __str__(self) -> str:
        if not self.bits:
            return "0"
        terms = []
        for e in self.exponents():
            terms.append("1" if e == 0 else ("x" if e == 1 else f"x^{e}"))
        return "+".join(terms)


def _clmul(a: int, b: int) -> int:
    if a.bit_count() > b.bit_count():
        a, b = b, a
    out = 0
    while a:
        low = a & -a
        out ^= b << (low.bit_length() - 1)
        a ^= low
    return out


def poly_mul(a: GF2Poly, b: GF2Poly) -> GF2Poly:
    return GF2Poly(_clmul(a.bits, b.bits))


def poly_mul_mod(a: GF2Poly, b: GF2Poly, l: int) -> GF2Poly:
    """a*b reduced modulo x^l + 1."""
    if l <= 0:
        raise ValueError("modulus length l must be positive")
    return GF2Poly(_reduce_mod(_clmul(a.bits, b.bits), l), l)


def poly_divmod(a: GF2Poly, b: GF2Poly) -> tuple[GF2Poly, GF2Poly]:
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    q, r = 0, a.bits
    db = b.bits.bit_length()
    while r.bit_length() >= db:
        shift = r.bit_length() - db
        q ^= 1 << shift
        r ^= b.bits << shift
    return GF2Poly(q), GF2Poly(r)


def poly_gcd(a: GF2Poly, b: GF2Poly) -> GF2Poly:
    """Monic gcd over GF(2) (Euclid). Rejects gcd(0, 0)."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    x, y = a.bits, b.bits
    while y:
        x = poly_divmod(GF2Poly(x), GF2Poly(y))[1].bits
        x, y = y, x
    return GF2Poly(x)


def circulant_rank(gen: GF2Poly, l: int) -> int:
    """Rank of the l x l circulant generated by ``gen``: l - deg gcd(gen, x^l + 1)."""
    if l < 1:
        raise ValueError("l must be at least 1")
    g = GF2Poly(_reduce_mod(gen.bits, l))
    if g.is_zero():
        return 0
    return l - int(poly_gcd(g, GF2Poly.x_pow_plus_one(l)).degree)


def circulant_dense(gen: GF2Poly, l: int) -> np.ndarray:
    """Dense circulant: row i is the coefficient vector shifted right by i."""
    first = GF2Poly(_reduce_mod(gen.bits, l)).coeffs(l)
    return np.stack([np.roll(first, i) for i in range(l)])


# ---------------------------------------------------------------------------
# bit-packed kernels


def pack_rows(dense: np.ndarray) -> np.ndarray:
    dense = np.atleast_2d(np.asarray(dense, dtype=np.uint8) & 1)
    rows, cols = dense.shape
    nwords = max(1, -(-cols // WORD))
    padded = np.zeros((rows, nwords * WORD), dtype=np.uint8)
    padded[:, :cols] = dense
    # little-endian bit order inside each word
    as_bytes = np.packbits(padded.reshape(rows, nwords * 8, 8), axis=-1, bitorder="little")
    return as_bytes.reshape(rows, nwords * 8).view("<u8").astype(np.uint64).reshape(rows, nwords)


def unpack_rows(words: np.ndarray, cols: int) -> np.ndarray:
    words = np.ascontiguousarray(words, dtype=np.uint64)
    rows = words.shape[0]
    as_bytes = words.astype("<u8").view(np.uint8).reshape(rows, -1)
    bits = np.unpackbits(as_bytes, axis=1, bitorder="little")
    return bits[:, :cols].copy()


@njit(cache=True)
def _popcount64(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return (x * np.uint64(0x0101010101010101)) >> np.uint64(56)


@njit(cache=True)
def eliminate_packed(a, col_order):
    """In-place Gauss-Jordan elimination visiting columns in ``col_order``.

    Returns ``pivot_cols``; after the call row ``r`` of ``a`` has its leading
    one in ``pivot_cols[r]`` and that column is zero in every other row.
    """
    rows = a.shape[0]
    nwords = a.shape[1]
    pivots = np.empty(min(rows, col_order.shape[0]), dtype=np.int64)
    r = 0
    for c in col_order:
        if r == rows:
            break
        w = c >> 6
        bit = np.uint64(1) << np.uint64(c & 63)
        piv = -1
        for i in range(r, rows):
            if a[i, w] & bit:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for k in range(nwords):
                tmp = a[r, k]
                a[r, k] = a[piv, k]
                a[piv, k] = tmp
        for i in range(rows):
            if i != r and (a[i, w] & bit):
                for k in range(nwords):
                    a[i, k] ^= a[r, k]
        pivots[r] = c
        r += 1
    return pivots[:r]


@njit(cache=True)
def reduce_vector(basis, pivots, v):
    """Reduce packed row ``v`` by an eliminated basis; returns the residue."""
    out = v.copy()
    for r in range(pivots.shape[0]):
        c = pivots[r]
        if out[c >> 6] & (np.uint64(1) << np.uint64(c & 63)):
            for k in range(out.shape[0]):
                out[k] ^= basis[r, k]
    return out


@njit(cache=True)
def matvec_packed(a, v):
    """GF(2) product a @ v for packed rows ``a`` and packed vector ``v``."""
    rows = a.shape[0]
    out = np.zeros(rows, dtype=np.uint8)
    for i in range(rows):
        acc = np.uint64(0)
        for k in range(a.shape[1]):
            acc += _popcount64(a[i, k] & v[k])
        out[i] = np.uint8(acc & np.uint64(1))
    return out


def naive_rank(dense: np.ndarray) -> int:
    """Per-bit Gaussian elimination on an unpacked copy (reference only)."""
    m = (np.array(dense, dtype=np.uint8) & 1).copy()
    rows, cols = m.shape
    r = 0
    for c in range(cols):
        hits = np.nonzero(m[r:, c])[0]
        if hits.size == 0:
            continue
        p = r + hits[0]
        m[[r, p]] = m[[p, r]]
        for i in range(rows):
            if i != r and m[i, c]:
                m[i] ^= m[r]
        r += 1
        if r == rows:
            break
    return r


@dataclass(frozen=True, eq=False)
class GF2Matrix:
    """Dense GF(2) matrix in bit-packed row-major storage."""

    rows: int
    cols: int
    bits: np.ndarray

    def __post_init__(self):
        self.bits.setflags(write=False)

    @classmethod
    def from_dense(cls, dense) -> GF2Matrix:
        dense = np.asarray(dense, dtype=np.uint8)
        if dense.ndim != 2:
            raise ValueError("expected a 2-d array")
        rows, cols = dense.shape
        if rows == 0:
            return cls(0, cols, np.zeros((0, max(1, -(-cols // WORD))), dtype=np.uint64))
        return cls(rows, cols, pack_rows(dense))

    @classmethod
    def identity(cls, n: int) -> GF2Matrix:
        return cls.from_dense(np.eye(n, dtype=np.uint8))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> GF2Matrix:
        return cls.from_dense(np.zeros((rows, cols), dtype=np.uint8))

    def to_dense(self) -> np.ndarray:
        if self.rows == 0:
            return np.zeros((0, self.cols), dtype=np.uint8)
        return unpack_rows(self.bits, self.cols)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GF2Matrix)
            and self.shape == other.shape
            and bool(np.array_equal(self.bits, other.bits))
        )

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def vstack(self, other: GF2Matrix) -> GF2Matrix:
        if other.cols != self.cols:
            raise ValueError("column count mismatch")
        return GF2Matrix(self.rows + other.rows, self.cols, np.vstack([self.bits, other.bits]))

    def echelon(self) -> tuple[np.ndarray, np.ndarray]:
        """Row-reduced copy and its pivot columns (natural column order)."""
        work = self.bits.copy()
        pivots = eliminate_packed(work, np.arange(self.cols, dtype=np.int64))
        return work[: pivots.shape[0]].copy(), pivots

    def pack_vector(self, v) -> np.ndarray:
        v = np.asarray(v, dtype=np.uint8).ravel()
        if v.shape[0] != self.cols:
            raise ValueError(f"vector length {v.shape[0]} != {self.cols} columns")
        return pack_rows(v[None, :])[0]

    def matvec(self, v) -> np.ndarray:
        return matvec_packed(self.bits, self.pack_vector(v))


def gf2_rank(m: GF2Matrix) -> int:
    if m.rows == 0:
        return 0
    return int(m.echelon()[1].shape[0])


def in_rowspace(m: GF2Matrix, v) -> bool:
    """True iff ``v`` is a GF(2) combination of the rows of ``m``."""
    packed = m.pack_vector(v)
    if m.rows == 0:
        return not packed.any()
    basis, pivots = m.echelon()
    return not reduce_vector(basis, pivots, packed).any()


class RowspaceTester:
    """Caches an echelon basis for repeated membership queries."""

    def __init__(self, m: GF2Matrix):
        self.matrix = m
        if m.rows:
            self.basis, self.pivots = m.echelon()
        else:
            self.basis = np.zeros((0, m.bits.shape[1]), dtype=np.uint64)
            self.pivots = np.zeros(0, dtype=np.int64)

    @property
    def rank(self) -> int:
        return int(self.pivots.shape[0])

    def residue(self, v) -> np.ndarray:
        return reduce_vector(self.basis, self.pivots, self.matrix.pack_vector(v))

    def contains(self, v) -> bool:
        return not self.residue(v).any()
