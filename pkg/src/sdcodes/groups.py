"""Finite groups with a fixed element listing, and group-ring arithmetic.

A group ring element v = sum alpha_i g_i over F2 or F2 + uF2 is stored as
its coefficient tuple in the listing order of the group.  The matrix
sigma(v) has (i, j) entry alpha at g_i^{-1} g_j; rows of sigma are therefore
index permutations of the coefficient vector, and sigma(v*) = sigma(v)^T.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .algebra import RING_CHARS, ring_add, ring_from_char, ring_mul

ALPHABETS = ("F2", "F2u")


@dataclass(frozen=True)
class GroupSpec:
    """A finite group as a multiplication table over a fixed listing."""

    name: str
    order: int
    labels: tuple[str, ...]
    mul: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]

    def __post_init__(self):
        n = self.order
        if len(self.labels) != n or len(self.mul) != n or len(self.inv) != n:
            raise ValueError("table sizes do not match order")


def _power_label(sym: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return sym
    return f"{sym}{e}"


@lru_cache(maxsize=None)
def cyclic_group(n: int) -> GroupSpec:
    """C_n listed as 1, x, x^2, ..., x^(n-1)."""
    if n < 2:
        raise ValueError("cyclic group order must be >= 2")
    labels = tuple(_power_label("x", i) or "1" for i in range(n))
    mul = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    inv = tuple((-i) % n for i in range(n))
    return GroupSpec(f"C{n}", n, labels, mul, inv)


@lru_cache(maxsize=None)
def dihedral_group_8() -> GroupSpec:
    """D_8 = <x, y | x^4 = y^2 = 1, x^y = x^-1>, listed as
    1, x, x^2, x^3, y, xy, x^2y, x^3y (index i + 4j for x^i y^j)."""

    def prod(p: int, q: int) -> int:
        i1, j1 = p % 4, p // 4
        i2, j2 = q % 4, q // 4
        # y x^i = x^(-i) y, so (x^i1 y^j1)(x^i2 y^j2) folds the middle term
        i = (i1 + i2) % 4 if j1 == 0 else (i1 - i2) % 4
        return i + 4 * (j1 ^ j2)

    labels = tuple((_power_label("x", i) + "y" * j) or "1" for j in (0, 1) for i in range(4))
    mul = tuple(tuple(prod(p, q) for q in range(8)) for p in range(8))
    inv = tuple(next(q for q in range(8) if mul[p][q] == 0) for p in range(8))
    return GroupSpec("D8", 8, labels, mul, inv)


def group_by_name(name: str) -> GroupSpec:
    if name == "D8":
        return dihedral_group_8()
    m = re.fullmatch(r"C(\d+)", name)
    if m:
        return cyclic_group(int(m.group(1)))
    raise ValueError(f"unknown group: {name!r}")


# ---------------------------------------------------------------------------
# group ring elements


@dataclass(frozen=True)
class GroupRingElement:
    group: GroupSpec
    alphabet: str
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.alphabet not in ALPHABETS:
            raise ValueError(f"unknown alphabet: {self.alphabet!r}")
        if len(self.coeffs) != self.group.order:
            raise ValueError("coefficient count != group order")
        limit = 2 if self.alphabet == "F2" else 4
        if any(not 0 <= c < limit for c in self.coeffs):
            raise ValueError("coefficient outside alphabet")

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def gr_zero(group: GroupSpec, alphabet: str = "F2") -> GroupRingElement:
    return GroupRingElement(group, alphabet, (0,) * group.order)


def gr_one(group: GroupSpec, alphabet: str = "F2") -> GroupRingElement:
    return GroupRingElement(group, alphabet, (1,) + (0,) * (group.order - 1))


def _check_compatible(v: GroupRingElement, w: GroupRingElement):
    if v.group != w.group:
        raise ValueError("group mismatch")
    if v.alphabet != w.alphabet:
        raise ValueError("alphabet mismatch")


def gr_add(v: GroupRingElement, w: GroupRingElement) -> GroupRingElement:
    _check_compatible(v, w)
    return GroupRingElement(
        v.group, v.alphabet, tuple(ring_add(a, b) for a, b in zip(v.coeffs, w.coeffs))
    )


def gr_mul(v: GroupRingElement, w: GroupRingElement) -> GroupRingElement:
    """Convolution product: (sum a_i g_i)(sum b_j g_j)."""
    _check_compatible(v, w)
    mul = v.group.mul
    out = [0] * v.group.order
    for i, a in enumerate(v.coeffs):
        if not a:
            continue
        for j, b in enumerate(w.coeffs):
            if b:
                k = mul[i][j]
                out[k] = ring_add(out[k], ring_mul(a, b))
    return GroupRingElement(v.group, v.alphabet, tuple(out))


def gr_star(v: GroupRingElement) -> GroupRingElement:
    """Canonical involution: the coefficient of g moves to g^-1."""
    out = [0] * v.group.order
    for i, a in enumerate(v.coeffs):
        out[v.group.inv[i]] = a
    return GroupRingElement(v.group, v.alphabet, tuple(out))


def sigma(v: GroupRingElement) -> tuple[tuple[int, ...], ...]:
    """The order x order matrix with (i, j) entry alpha_{g_i^-1 g_j}."""
    mul, inv = v.group.mul, v.group.inv
    n = v.group.order
    return tuple(tuple(v.coeffs[mul[inv[i]][j]] for j in range(n)) for i in range(n))


def is_unitary_unit(v: GroupRingElement) -> bool:
    """v v* = 1."""
    return gr_mul(v, gr_star(v)) == gr_one(v.group, v.alphabet)


# ---------------------------------------------------------------------------
# text form:  C8:00000111  /  C8/F2u:0u000113
#
# The alphabet tag may be omitted when the coefficient string makes it
# unambiguous (any u or 3 forces F2u; otherwise F2).


def format_element(v: GroupRingElement) -> str:
    body = "".join(RING_CHARS[c] for c in v.coeffs)
    inferred = "F2u" if any(c >= 2 for c in v.coeffs) else "F2"
    if inferred == v.alphabet:
        return f"{v.group.name}:{body}"
    return f"{v.group.name}/{v.alphabet}:{body}"


def parse_element(text: str, alphabet: str | None = None) -> GroupRingElement:
    head, sep, body = text.partition(":")
    if not sep:
        raise ValueError(f"missing ':' in element text: {text!r}")
    gname, slash, tag = head.partition("/")
    if slash:
        if alphabet is not None and alphabet != tag:
            raise ValueError("alphabet tag conflicts with requested alphabet")
        alphabet = tag
    group = group_by_name(gname)
    coeffs = tuple(ring_from_char(ch) for ch in body)
    if alphabet is None:
        alphabet = "F2u" if any(c >= 2 for c in coeffs) else "F2"
    return GroupRingElement(group, alphabet, coeffs)
