"""Bit-packed linear algebra over GF(2) and over the ring F2 + uF2 (u^2 = 0).

Vectors live inside Python ints used as bitsets: bit ``i`` is coordinate
``i``.  The textual form reads coordinate 0 first, so ``"0111"`` denotes the
vector with coordinate 0 clear and coordinates 1..3 set.  All I/O goes
through the textual format, so the packing is an internal detail.

Ring elements of F2 + uF2 are encoded as the integers 0..3 with value
``a + 2b`` standing for ``a + bu``; the text alphabet is ``0 1 u 3`` where
``3`` denotes ``1 + u``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

# ---------------------------------------------------------------------------
# F2 + uF2 scalar arithmetic

RING_ELEMENTS = (0, 1, 2, 3)
RING_CHARS = "01u3"
_CHAR_TO_ELEM = {"0": 0, "1": 1, "u": 2, "3": 3}

#: Lee weights of 0, 1, u, 1+u.
LEE_WEIGHTS = (0, 1, 2, 1)


def ring_add(x: int, y: int) -> int:
    """Sum in F2 + uF2 (componentwise XOR of the a/b parts)."""
    return x ^ y


def ring_mul(x: int, y: int) -> int:
    """Product in F2 + uF2; u^2 = 0 kills the b*b cross term."""
    a1, b1 = x & 1, x >> 1
    a2, b2 = y & 1, y >> 1
    return (a1 & a2) | ((((a1 & b2) ^ (a2 & b1)) & 1) << 1)


def ring_char(x: int) -> str:
    return RING_CHARS[x]


def ring_from_char(c: str) -> int:
    try:
        return _CHAR_TO_ELEM[c]
    except KeyError:
        raise ValueError(f"not a ring symbol: {c!r}") from None


def is_unit(x: int) -> bool:
    """Units of F2 + uF2 are exactly 1 and 1+u."""
    return x & 1 == 1


# ---------------------------------------------------------------------------
# binary vectors and matrices


def parity(x: int) -> int:
    return bin(x).count("1") & 1


def parse_bits(text: str) -> int:
    """Pack a 0/1 string, leftmost character becoming coordinate 0."""
    bits = 0
    for i, ch in enumerate(text):
        if ch == "1":
            bits |= 1 << i
        elif ch != "0":
            raise ValueError(f"not a bit: {ch!r}")
    return bits


def format_bits(bits: int, n: int) -> str:
    return "".join("1" if (bits >> i) & 1 else "0" for i in range(n))


@dataclass(frozen=True)
class BitVector:
    """Element of F2^n, packed into an int (bit i = coordinate i)."""

    n: int
    bits: int

    def __post_init__(self):
        if self.n < 0 or not 0 <= self.bits < (1 << self.n):
            raise ValueError("bits out of range for length")

    @classmethod
    def from_text(cls, text: str) -> "BitVector":
        return cls(len(text), parse_bits(text))

    def to_text(self) -> str:
        return format_bits(self.bits, self.n)

    def weight(self) -> int:
        return bin(self.bits).count("1")

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.n != other.n:
            raise ValueError("length mismatch")
        return BitVector(self.n, self.bits ^ other.bits)


def euclidean_inner(x: BitVector, y: BitVector) -> int:
    """Standard inner product on F2^n."""
    if x.n != y.n:
        raise ValueError("length mismatch")
    return parity(x.bits & y.bits)


@dataclass(frozen=True)
class BitMatrix:
    """Matrix over GF(2); each row is a packed int of width ``cols``."""

    cols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        for r in self.rows:
            if not 0 <= r < (1 << self.cols):
                raise ValueError("row wider than cols")

    @classmethod
    def from_rows(cls, rows, cols: int) -> "BitMatrix":
        return cls(cols, tuple(rows))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def row_vectors(self) -> list[BitVector]:
        return [BitVector(self.cols, r) for r in self.rows]

    def transpose(self) -> "BitMatrix":
        out = [0] * self.cols
        for i, r in enumerate(self.rows):
            while r:
                low = r & -r
                out[low.bit_length() - 1] |= 1 << i
                r ^= low
        return BitMatrix(len(self.rows), tuple(out))


def gf2_rref(m: BitMatrix) -> tuple[BitMatrix, int, list[int]]:
    """Reduced row echelon form; returns (rref with zero rows dropped,
    rank, pivot column list)."""
    rows = list(m.rows)
    pivots: list[int] = []
    rank = 0
    for col in range(m.cols):
        src = next((i for i in range(rank, len(rows)) if (rows[i] >> col) & 1), None)
        if src is None:
            continue
        rows[rank], rows[src] = rows[src], rows[rank]
        for i in range(len(rows)):
            if i != rank and (rows[i] >> col) & 1:
                rows[i] ^= rows[rank]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return BitMatrix(m.cols, tuple(rows[:rank])), rank, pivots


def gf2_mul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Matrix product over GF(2)."""
    if a.cols != b.nrows:
        raise ValueError("inner dimensions differ")
    bt = b.transpose()
    out = []
    for r in a.rows:
        acc = 0
        for j, c in enumerate(bt.rows):
            if parity(r & c):
                acc |= 1 << j
        out.append(acc)
    return BitMatrix(b.cols, tuple(out))


# ---------------------------------------------------------------------------
# binary linear codes


@dataclass(frozen=True)
class BinaryCode:
    """Linear [n, k] code over F2 given by k independent generator rows."""

    n: int
    k: int
    gen: BitMatrix

    def __post_init__(self):
        if self.gen.cols != self.n or self.gen.nrows != self.k:
            raise ValueError("generator shape mismatch")
        _, rank, _ = gf2_rref(self.gen)
        if rank != self.k:
            raise ValueError("generator rows are dependent")

    @classmethod
    def from_rows(cls, rows, n: int) -> "BinaryCode":
        rows = tuple(rows)
        return cls(n, len(rows), BitMatrix(n, rows))

    def canonical(self) -> tuple[int, ...]:
        """rref generator rows; equal codes give equal tuples."""
        r, _, _ = gf2_rref(self.gen)
        return r.rows

    def codewords(self) -> Iterator[BitVector]:
        """All 2^k codewords (small k only)."""
        for msg in range(1 << self.k):
            acc = 0
            m = msg
            i = 0
            while m:
                if m & 1:
                    acc ^= self.gen.rows[i]
                m >>= 1
                i += 1
            yield BitVector(self.n, acc)

    def contains(self, v: BitVector) -> bool:
        if v.n != self.n:
            raise ValueError("length mismatch")
        stacked = BitMatrix(self.n, self.gen.rows + (v.bits,))
        _, rank, _ = gf2_rref(stacked)
        return rank == self.k


def is_self_dual(code: Union[BinaryCode, "RingCode"]) -> bool:
    """C = C-perp under the Euclidean inner product.

    For [n, k] binary codes this needs k = n/2 and pairwise orthogonal
    generators; the ring version needs the same over F2 + uF2.
    """
    if isinstance(code, RingCode):
        return _ring_self_dual(code)
    if code.n != 2 * code.k:
        return False
    rows = code.gen.rows
    for i, x in enumerate(rows):
        for y in rows[i:]:
            if parity(x & y):
                return False
    return True


# ---------------------------------------------------------------------------
# vectors and codes over F2 + uF2


@dataclass(frozen=True)
class RingVector:
    """Element of (F2 + uF2)^n stored as two bit-planes: a + bu."""

    n: int
    a: int
    b: int

    def __post_init__(self):
        top = 1 << self.n
        if not (0 <= self.a < top and 0 <= self.b < top):
            raise ValueError("bit-plane out of range for length")

    @classmethod
    def from_text(cls, text: str) -> "RingVector":
        a = b = 0
        for i, ch in enumerate(text):
            v = ring_from_char(ch)
            if v & 1:
                a |= 1 << i
            if v & 2:
                b |= 1 << i
        return cls(len(text), a, b)

    @classmethod
    def from_coeffs(cls, coeffs) -> "RingVector":
        coeffs = tuple(coeffs)
        a = b = 0
        for i, v in enumerate(coeffs):
            if v & 1:
                a |= 1 << i
            if v & 2:
                b |= 1 << i
        return cls(len(coeffs), a, b)

    def to_text(self) -> str:
        return "".join(ring_char(self.coeff(i)) for i in range(self.n))

    def coeff(self, i: int) -> int:
        return ((self.a >> i) & 1) | (((self.b >> i) & 1) << 1)

    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.coeff(i) for i in range(self.n))

    def lee_weight(self) -> int:
        # wt_L(a+bu) = wt(b) + wt(a+b): units weigh 1, u weighs 2.
        return bin(self.b).count("1") + bin(self.a ^ self.b).count("1")

    def __add__(self, other: "RingVector") -> "RingVector":
        if self.n != other.n:
            raise ValueError("length mismatch")
        return RingVector(self.n, self.a ^ other.a, self.b ^ other.b)

    def scale(self, c: int) -> "RingVector":
        """Scalar multiple by a ring element."""
        a1, b1 = c & 1, c >> 1
        a = self.a if a1 else 0
        b = (self.b if a1 else 0) ^ (self.a if b1 else 0)
        return RingVector(self.n, a, b)


def ring_inner(x: RingVector, y: RingVector) -> int:
    """Euclidean inner product over F2 + uF2 (no conjugation)."""
    if x.n != y.n:
        raise ValueError("length mismatch")
    a = parity(x.a & y.a)
    b = parity(x.a & y.b) ^ parity(x.b & y.a)
    return a | (b << 1)


def gray_map(v: RingVector) -> BitVector:
    """The isometry (a + bu) -> (b, a + b), doubling the length."""
    return BitVector(2 * v.n, v.b | ((v.a ^ v.b) << v.n))


def projection(v: RingVector) -> BitVector:
    """Reduce mod u: a + bu -> a."""
    return BitVector(v.n, v.a)


@dataclass(frozen=True)
class RingCode:
    """Code over F2 + uF2 of length n with k free generator rows.

    Freeness is checked operationally: the Gray images of ``g`` and ``u*g``
    for every generator row must be 2k independent binary vectors.
    """

    n: int
    k: int
    rows: tuple[RingVector, ...]

    def __post_init__(self):
        if len(self.rows) != self.k:
            raise ValueError("row count != k")
        for r in self.rows:
            if r.n != self.n:
                raise ValueError("row length mismatch")
        g = gray_image(self)
        if g.k != 2 * self.k:
            raise ValueError("rows not free: Gray dimension < 2k")

    @classmethod
    def from_texts(cls, texts) -> "RingCode":
        rows = tuple(RingVector.from_text(t) for t in texts)
        if not rows:
            raise ValueError("empty generator")
        return cls(rows[0].n, len(rows), rows)


def gray_image(code: RingCode) -> BinaryCode:
    """Binary image of a free-rank-k ring code: a [2n, 2k] code.

    Generates with both g and u*g for every row, then row-reduces.
    """
    n2 = 2 * code.n
    raw = []
    for r in code.rows:
        raw.append(gray_map(r).bits)
        raw.append(gray_map(r.scale(2)).bits)  # u*g -> (a, a)
    reduced, rank, _ = gf2_rref(BitMatrix(n2, tuple(raw)))
    return BinaryCode(n2, rank, reduced)


def _ring_self_dual(code: RingCode) -> bool:
    if code.n != 2 * code.k:
        return False
    for i, x in enumerate(code.rows):
        for y in code.rows[i:]:
            if ring_inner(x, y):
                return False
    return True


def lee_distance_min(code: RingCode, cap: int | None = None) -> int | None:
    """Minimum Lee weight, computed on the Gray image (Hamming = Lee there).

    Returns None if the minimum exceeds ``cap``.
    """
    from . import analysis  # deferred: analysis sits above algebra

    prof = analysis.weight_profile(gray_image(code), w_max=cap)
    return prof.d_min


# ---------------------------------------------------------------------------
# textual code format
#
#   code <n> <k> <F2|F2u>
#   <row text> ... (k lines)


def format_code(code: Union[BinaryCode, RingCode]) -> str:
    if isinstance(code, RingCode):
        head = f"code {code.n} {code.k} F2u"
        body = [r.to_text() for r in code.rows]
    else:
        head = f"code {code.n} {code.k} F2"
        body = [format_bits(r, code.n) for r in code.gen.rows]
    return "\n".join([head] + body) + "\n"


def parse_code(text: str) -> Union[BinaryCode, RingCode]:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty code text")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "code":
        raise ValueError(f"bad header: {lines[0]!r}")
    n, k = int(head[1]), int(head[2])
    alphabet = head[3]
    body = lines[1:]
    if len(body) != k:
        raise ValueError(f"expected {k} rows, got {len(body)}")
    for ln in body:
        if len(ln) != n:
            raise ValueError(f"row length {len(ln)} != n = {n}")
    if alphabet == "F2":
        return BinaryCode.from_rows((parse_bits(ln) for ln in body), n)
    if alphabet == "F2u":
        return RingCode.from_texts(body)
    raise ValueError(f"unknown alphabet: {alphabet!r}")
