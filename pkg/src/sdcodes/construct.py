"""Self-dual codes from 2x2 block group-ring generator matrices.

For a group of order n and group-ring elements v1, v2, v3, the generator is

    M_sigma = ( I_2n |  sigma(v1)  sigma(v2) )
              (      |  sigma(v2)  sigma(v3) )

a 2n x 4n matrix whose row space is self-dual exactly when the triple
satisfies the unitary-unit relations checked by ``check_theorem1``:

    v1 v1* + v2 v2* = 1        v1 v2* + v2 v3* = 0
    v2 v1* + v3 v2* = 0        v2 v2* + v3 v3* = 1

(the two middle conditions are images of each other under the canonical
anti-automorphism, but both are checked).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Union

from . import analysis
from .algebra import BinaryCode, RingCode, RingVector, gray_image
from .groups import (
    GroupRingElement,
    GroupSpec,
    gr_add,
    gr_mul,
    gr_one,
    gr_star,
    gr_zero,
    format_element,
    parse_element,
    sigma,
)

#: exhaustive searches are only attempted when |alphabet|^(3n) is at most this
SEARCH_SPACE_LIMIT = 1 << 24


@dataclass(frozen=True)
class BlockTriple:
    """The (v1, v2, v3) input of the block construction."""

    v1: GroupRingElement
    v2: GroupRingElement
    v3: GroupRingElement

    def __post_init__(self):
        if not (self.v1.group == self.v2.group == self.v3.group):
            raise ValueError("triple mixes groups")
        if not (self.v1.alphabet == self.v2.alphabet == self.v3.alphabet):
            raise ValueError("triple mixes alphabets")

    @property
    def group(self) -> GroupSpec:
        return self.v1.group

    @property
    def alphabet(self) -> str:
        return self.v1.alphabet


def format_triple(t: BlockTriple) -> str:
    return ";".join(format_element(v) for v in (t.v1, t.v2, t.v3))


def parse_triple(text: str, alphabet: str | None = None) -> BlockTriple:
    parts = text.split(";")
    if len(parts) != 3:
        raise ValueError("triple text needs three ';'-separated elements")
    v1, v2, v3 = (parse_element(p.strip(), alphabet) for p in parts)
    if {v1.alphabet, v2.alphabet, v3.alphabet} == {"F2", "F2u"}:
        # mixed inference (some parts carry u, some don't): promote to F2u
        v1, v2, v3 = (
            GroupRingElement(v.group, "F2u", v.coeffs) for v in (v1, v2, v3)
        )
    return BlockTriple(v1, v2, v3)


@dataclass(frozen=True)
class SearchFilter:
    """Acceptance predicate and bounds for the search streams."""

    min_distance_target: int = 0
    require_type: str = "any"  # any | I | II
    max_results: int = 1
    seed: int = 0
    mode: str = "exhaustive"  # exhaustive | random

    def __post_init__(self):
        if self.require_type not in ("any", "I", "II"):
            raise ValueError(f"bad require_type: {self.require_type!r}")
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"bad mode: {self.mode!r}")
        if self.max_results < 1:
            raise ValueError("max_results must be positive")


def check_theorem1(t: BlockTriple) -> bool:
    """The four group-ring relations equivalent to self-duality of M_sigma."""
    v1, v2, v3 = t.v1, t.v2, t.v3
    one = gr_one(t.group, t.alphabet)
    zero = gr_zero(t.group, t.alphabet)
    s1, s2, s3 = gr_star(v1), gr_star(v2), gr_star(v3)
    return (
        gr_add(gr_mul(v1, s1), gr_mul(v2, s2)) == one
        and gr_add(gr_mul(v1, s2), gr_mul(v2, s3)) == zero
        and gr_add(gr_mul(v2, s1), gr_mul(v3, s2)) == zero
        and gr_add(gr_mul(v2, s2), gr_mul(v3, s3)) == one
    )


def build_m_sigma(t: BlockTriple) -> Union[BinaryCode, RingCode]:
    """Assemble the [4n, 2n] code generated by (I | A) for the triple."""
    n = t.group.order
    s1, s2, s3 = sigma(t.v1), sigma(t.v2), sigma(t.v3)
    if t.alphabet == "F2":
        rows = []
        for r in range(2 * n):
            left, right = (s1[r], s2[r]) if r < n else (s2[r - n], s3[r - n])
            bits = 1 << r
            for c, val in enumerate(left):
                if val:
                    bits |= 1 << (2 * n + c)
            for c, val in enumerate(right):
                if val:
                    bits |= 1 << (3 * n + c)
            rows.append(bits)
        return BinaryCode.from_rows(rows, 4 * n)
    rows = []
    for r in range(2 * n):
        left, right = (s1[r], s2[r]) if r < n else (s2[r - n], s3[r - n])
        coeffs = [0] * (2 * n) + list(left) + list(right)
        coeffs[r] = 1
        rows.append(RingVector.from_coeffs(coeffs))
    return RingCode(4 * n, 2 * n, tuple(rows))


# ---------------------------------------------------------------------------
# search streams
#
# Exhaustive searches walk candidate triples in lexicographic coefficient
# order (v1 outermost).  The theorem-1 relations are prefiltered with packed
# coefficient masks: condition (v1 v1* + v2 v2* = 1) only needs the vv*
# table, and (v1 v2* + v2 v3* = 0) becomes a hash lookup of v1 v2* among
# the v2 v3* values.  Survivors get the full check before any code is built.


def _mask_coeffs(m: int, n: int) -> tuple[int, ...]:
    # MSB-first: ascending m = ascending lexicographic coefficient tuples
    return tuple((m >> (n - 1 - i)) & 1 for i in range(n))


def _pack(coeffs) -> int:
    packed = 0
    for i, c in enumerate(coeffs):
        packed |= c << (2 * i)
    return packed


def _passes(code: Union[BinaryCode, RingCode], flt: SearchFilter) -> bool:
    binary = gray_image(code) if isinstance(code, RingCode) else code
    if flt.min_distance_target > 1 and not analysis.meets_min_distance(
        binary, flt.min_distance_target
    ):
        return False
    if flt.require_type != "any":
        if analysis.classify_type(binary) != flt.require_type:
            return False
    return True


def _candidate_stream(slots: list[list[GroupRingElement]], flt: SearchFilter):
    """Yield index triples (i, j, k) into the three candidate slots."""
    c1, c2, c3 = slots
    if flt.mode == "random":
        rng = random.Random(flt.seed)
        while True:
            yield rng.randrange(len(c1)), rng.randrange(len(c2)), rng.randrange(len(c3))
        return

    vv = [
        [_pack(gr_mul(v, gr_star(v)).coeffs) for v in cand]
        for cand in slots
    ]
    one = 1  # identity: coefficient 1 at the identity element
    m3_maps: dict[int, dict[int, list[int]]] = {}
    for i in range(len(c1)):
        for j in range(len(c2)):
            if vv[0][i] ^ vv[1][j] != one:
                continue
            m3map = m3_maps.get(j)
            if m3map is None:
                m3map = {}
                for k in range(len(c3)):
                    if vv[1][j] ^ vv[2][k] != one:
                        continue
                    key = _pack(gr_mul(c2[j], gr_star(c3[k])).coeffs)
                    m3map.setdefault(key, []).append(k)
                m3_maps[j] = m3map
            key = _pack(gr_mul(c1[i], gr_star(c2[j])).coeffs)
            for k in m3map.get(key, ()):
                yield i, j, k


def _search(slots: list[list[GroupRingElement]], flt: SearchFilter):
    found = 0
    for i, j, k in _candidate_stream(slots, flt):
        t = BlockTriple(slots[0][i], slots[1][j], slots[2][k])
        if not check_theorem1(t):
            continue
        code = build_m_sigma(t)
        if not _passes(code, flt):
            continue
        yield t, code
        found += 1
        if found >= flt.max_results:
            return


def search_base(group: GroupSpec, flt: SearchFilter) -> Iterator[tuple[BlockTriple, BinaryCode]]:
    """Stream (triple, code) pairs over F2 for one group.

    Exhaustive mode visits all 2^(3n) triples in lexicographic coefficient
    order; random mode draws a seeded infinite sample (bounded by
    max_results).  Streams are deterministic for equal arguments.
    """
    n = group.order
    if flt.mode == "exhaustive" and (1 << (3 * n)) > SEARCH_SPACE_LIMIT:
        raise ValueError(
            f"2^{3 * n} triples exceed the exhaustive limit 2^24; use random mode"
        )
    cands = [
        GroupRingElement(group, "F2", _mask_coeffs(m, n)) for m in range(1 << n)
    ]
    slots = [cands, cands, cands]
    return _search(slots, flt)


def enumerate_lifts(base: BlockTriple, flt: SearchFilter) -> Iterator[tuple[BlockTriple, RingCode]]:
    """Stream (triple, code) pairs over F2+uF2 projecting onto ``base``.

    Candidates fix each a-plane to the base coefficients and range over all
    u-plane choices, so every yielded triple projects to ``base`` under mu.
    Filters apply to the Gray image (Lee metric).
    """
    if base.alphabet != "F2":
        raise ValueError("lift base must be over F2")
    n = base.group.order
    if flt.mode == "exhaustive" and (1 << (3 * n)) > SEARCH_SPACE_LIMIT:
        raise ValueError(
            f"2^{3 * n} lifts exceed the exhaustive limit 2^24; use random mode"
        )
    slots = []
    for v in (base.v1, base.v2, base.v3):
        slots.append(
            [
                GroupRingElement(
                    base.group,
                    "F2u",
                    tuple(
                        a | (((m >> (n - 1 - i)) & 1) << 1)
                        for i, a in enumerate(v.coeffs)
                    ),
                )
                for m in range(1 << n)
            ]
        )
    return _search(slots, flt)
