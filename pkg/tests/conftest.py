import random

import pytest

from sdcodes.algebra import BinaryCode, BitVector

# Status lines recorded by the end-to-end suite; echoed after the pytest
# summary so the checklist is visible without -s.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("reproduction checklist")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return random.Random(0xC0DE5)


@pytest.fixture
def hamming8() -> BinaryCode:
    # extended [8,4,4] Hamming code, self-dual and doubly-even
    rows = ["11110000", "11001100", "10101010", "01101001"]
    return BinaryCode.from_rows((BitVector.from_text(r).bits for r in rows), 8)


def random_selfdual(rng: random.Random, half: int) -> BinaryCode:
    """Random self-dual [2*half, half] code as (I | P) for a permutation
    matrix P: P P^T = I over F2, so the rows are pairwise orthogonal."""
    perm = list(range(half))
    rng.shuffle(perm)
    rows = []
    for i in range(half):
        a_bits = 1 << perm[i]
        rows.append((1 << i) | (a_bits << half))
    return BinaryCode.from_rows(rows, 2 * half)
