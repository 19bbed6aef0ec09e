"""Deriving new self-dual codes from old: extension and neighbours.

The extension takes a self-dual length-n code, a unit c with c^2 = -1 and
a vector X with <X, X> = -1, and produces a self-dual length-(n+2) code
generated by (1, 0, X) together with (y_i, c*y_i, r_i) for every generator
row r_i, where y_i = <r_i, X>.  The two fresh coordinates sit in front.
The output depends only on the row space, not on the particular basis.

The neighbour of a self-dual binary code C at an even-weight x not in C is
D = <  <x>-perp  intersect  C,  x >, which again is self-dual and meets C in
codimension 1.  Chains iterate this step.

Witness tables for neighbour steps are conventionally printed as the last
n/2 coordinates of the code's systematic presentation (generator [I | B],
pivot columns moved to the front, relative orders preserved).  The helpers
at the bottom translate such "tail" witnesses into ambient coordinates,
tracking how the presentation evolves as a chain progresses: after each
step the new code is re-presented systematically *as seen through the
previous presentation*.  Re-deriving the presentation from the ambient
generator instead gives different (wrong) embeddings a few steps in.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Union

from . import analysis
from .algebra import (
    BinaryCode,
    BitMatrix,
    BitVector,
    RingCode,
    RingVector,
    gf2_rref,
    is_self_dual,
    parity,
    ring_inner,
    ring_mul,
)
from .construct import SearchFilter

#: neighbour witnesses are plain vectors; the alias marks intent in signatures
NeighbourWitness = BitVector


@dataclass(frozen=True)
class ExtensionWitness:
    """Unit c (c^2 = -1) and vector X (<X,X> = -1) for the extension step.

    Over F2 the only unit is 1; over F2+uF2 both 1 and 1+u qualify.
    """

    c: int
    x: Union[BitVector, RingVector]


def extend(code: Union[BinaryCode, RingCode], witness: ExtensionWitness):
    """Length n -> n + 2 extension preserving self-duality."""
    if isinstance(code, RingCode):
        return _extend_ring(code, witness)
    return _extend_binary(code, witness)


def _extend_binary(code: BinaryCode, witness: ExtensionWitness) -> BinaryCode:
    if not is_self_dual(code):
        raise ValueError("extension input must be self-dual")
    x = witness.x
    if not isinstance(x, BitVector) or x.n != code.n:
        raise ValueError("X must be a binary vector of the code length")
    if witness.c != 1:
        raise ValueError("c must be the unit 1 over F2")
    if x.weight() % 2 != 1:
        raise ValueError("<X, X> must be 1 over F2 (odd weight)")
    rows = [1 | (x.bits << 2)]
    for r in code.gen.rows:
        y = parity(r & x.bits)
        rows.append(y | (y << 1) | (r << 2))
    out = BinaryCode.from_rows(rows, code.n + 2)
    assert is_self_dual(out)
    return out


def _extend_ring(code: RingCode, witness: ExtensionWitness) -> RingCode:
    if not is_self_dual(code):
        raise ValueError("extension input must be self-dual")
    x = witness.x
    if not isinstance(x, RingVector) or x.n != code.n:
        raise ValueError("X must be a ring vector of the code length")
    c = witness.c
    if ring_mul(c, c) != 1:
        raise ValueError("c must be a unit with c^2 = 1")
    if ring_inner(x, x) != 1:
        raise ValueError("<X, X> must be 1")
    rows = [RingVector(code.n + 2, 1 | (x.a << 2), x.b << 2)]
    for r in code.rows:
        y = ring_inner(r, x)
        cy = ring_mul(c, y)
        rows.append(
            RingVector(
                code.n + 2,
                (y & 1) | ((cy & 1) << 1) | (r.a << 2),
                (y >> 1) | ((cy >> 1) << 1) | (r.b << 2),
            )
        )
    out = RingCode(code.n + 2, code.k + 1, tuple(rows))
    assert is_self_dual(out)
    return out


# ---------------------------------------------------------------------------
# neighbours


def neighbour(code: BinaryCode, x: NeighbourWitness) -> BinaryCode:
    """D = < <x>-perp intersect C, x > for even-weight x outside C."""
    if x.n != code.n:
        raise ValueError("witness length mismatch")
    if x.weight() % 2:
        raise ValueError("odd-weight witness: result would not be self-orthogonal")
    ips = [parity(r & x.bits) for r in code.gen.rows]
    if not any(ips):
        if code.contains(x):
            raise ValueError("witness is a codeword: the neighbour degenerates to C")
        raise ValueError("witness is orthogonal to C but not in it")
    p = ips.index(1)
    prow = code.gen.rows[p]
    rows = [r ^ prow if ips[i] else r
            for i, r in enumerate(code.gen.rows) if i != p]
    rows.append(x.bits)
    reduced, rank, _ = gf2_rref(BitMatrix(code.n, tuple(rows)))
    assert rank == code.k  # k-1 orthogonal rows plus x, which is not in C
    return BinaryCode(code.n, rank, reduced)


def kth_range_chain(c0: BinaryCode, xs) -> list[BinaryCode]:
    """Iterated neighbours N_(i+1) = < <x_i>-perp intersect N_(i), x_i >."""
    out = []
    cur = c0
    for i, x in enumerate(xs):
        try:
            cur = neighbour(cur, x)
        except ValueError as e:
            raise ValueError(f"chain step {i}: {e}") from None
        out.append(cur)
    return out


def random_neighbour_search(
    code: BinaryCode, flt: SearchFilter
) -> Iterator[tuple[NeighbourWitness, BinaryCode]]:
    """Seeded stream of neighbours meeting the filter.

    Witnesses are random even-weight vectors supported on the last n/2
    coordinates (the shape the witness tables use); odd draws get their top
    coordinate flipped.  The stream is deterministic per seed and stops
    after max_results yields.
    """
    if not is_self_dual(code):
        raise ValueError("need a self-dual starting code")
    rng = random.Random(flt.seed)
    half = code.n // 2
    found = 0
    while found < flt.max_results:
        bits = rng.getrandbits(half) << half
        if bin(bits).count("1") % 2:
            bits ^= 1 << (code.n - 1)
        if bits == 0:
            continue
        x = BitVector(code.n, bits)
        if code.contains(x):
            continue
        nb = neighbour(code, x)
        if flt.min_distance_target > 1 and not analysis.meets_min_distance(
            nb, flt.min_distance_target
        ):
            continue
        if flt.require_type != "any" and analysis.classify_type(nb) != flt.require_type:
            continue
        yield x, nb
        found += 1


# ---------------------------------------------------------------------------
# tail witnesses against systematic presentations


def systematic_permutation(code: BinaryCode) -> tuple[int, ...]:
    """Column order presenting the code systematically: pivot columns of
    the rref first, then the rest, both in ascending order."""
    _, _, pivots = gf2_rref(code.gen)
    pivot_set = set(pivots)
    rest = [c for c in range(code.n) if c not in pivot_set]
    return tuple(pivots + rest)


def embed_tail(tail: str, presentation: tuple[int, ...], n: int) -> NeighbourWitness:
    """Place a printed tail witness (the last len(tail) presentation
    coordinates) into ambient coordinates; all other coordinates zero."""
    if len(presentation) != n:
        raise ValueError("presentation length mismatch")
    k = n - len(tail)
    if k < 0:
        raise ValueError("tail longer than the code")
    bits = 0
    for j, ch in enumerate(tail):
        if ch == "1":
            bits |= 1 << presentation[k + j]
        elif ch != "0":
            raise ValueError(f"not a bit: {ch!r}")
    return BitVector(n, bits)


def _advance_presentation(code: BinaryCode, presentation: tuple[int, ...]) -> tuple[int, ...]:
    # re-standardize as seen through the current column order
    view_rows = []
    for r in code.gen.rows:
        v = 0
        for newpos, col in enumerate(presentation):
            if (r >> col) & 1:
                v |= 1 << newpos
        view_rows.append(v)
    _, _, pivots = gf2_rref(BitMatrix(code.n, tuple(view_rows)))
    pivot_set = set(pivots)
    rest = [c for c in range(code.n) if c not in pivot_set]
    return tuple(presentation[p] for p in pivots + rest)


@dataclass(frozen=True)
class TailStep:
    code: BinaryCode
    witness: NeighbourWitness
    presentation: tuple[int, ...]


@dataclass(frozen=True)
class TailChain:
    start: BinaryCode
    start_presentation: tuple[int, ...]
    steps: tuple[TailStep, ...]

    @property
    def codes(self) -> list[BinaryCode]:
        return [s.code for s in self.steps]

    @property
    def witnesses(self) -> list[NeighbourWitness]:
        return [s.witness for s in self.steps]


def tail_neighbour(
    code: BinaryCode, tail: str, presentation: tuple[int, ...] | None = None
) -> TailStep:
    """One neighbour step from a tail witness.

    Without an explicit presentation the code's own systematic permutation
    is used (correct for a single step; chains must thread presentations)."""
    if presentation is None:
        presentation = systematic_permutation(code)
    x = embed_tail(tail, presentation, code.n)
    nb = neighbour(code, x)
    return TailStep(nb, x, _advance_presentation(nb, presentation))


def tail_witness_chain(c0: BinaryCode, tails) -> TailChain:
    """Chain of neighbours driven by printed tail witnesses.

    Equivalent to kth_range_chain on the returned ambient witnesses; the
    systematic presentation is carried from step to step.
    """
    presentation = systematic_permutation(c0)
    steps = []
    cur = c0
    for i, tail in enumerate(tails):
        try:
            step = tail_neighbour(cur, tail, presentation)
        except ValueError as e:
            raise ValueError(f"chain step {i}: {e}") from None
        steps.append(step)
        cur = step.code
        presentation = step.presentation
    return TailChain(c0, systematic_permutation(c0), tuple(steps))
