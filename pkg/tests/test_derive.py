import itertools

import pytest

from sdcodes import algebra as al
from sdcodes import derive as dv
from sdcodes.construct import SearchFilter

import oracles
from conftest import random_selfdual


def random_even_witness(rng, code):
    """Random even-weight vector outside the code (exists for n >= 4)."""
    while True:
        bits = rng.getrandbits(code.n)
        if oracles.popcount(bits) % 2:
            bits ^= 1 << rng.randrange(code.n)
        x = al.BitVector(code.n, bits)
        if bits and not code.contains(x):
            return x


# -- extension over F2 ---------------------------------------------------------

def test_extend_binary_shape_and_rows(hamming8):
    x = al.BitVector.from_text("10000000")
    out = dv.extend(hamming8, dv.ExtensionWitness(c=1, x=x))
    assert (out.n, out.k) == (10, 5)
    assert al.is_self_dual(out)
    # generated by (1, 0, X) and (y_i, y_i, r_i), new coordinates in front
    assert out.contains(al.BitVector(10, 1 | (x.bits << 2)))
    for r in hamming8.gen.rows:
        y = oracles.popcount(r & x.bits) % 2
        assert out.contains(al.BitVector(10, y | (y << 1) | (r << 2)))


def test_extend_binary_random_codes(rng):
    for half in (3, 4, 6):
        code = random_selfdual(rng, half)
        for _ in range(25):
            bits = rng.getrandbits(code.n)
            if oracles.popcount(bits) % 2 == 0:
                bits ^= 1 << rng.randrange(code.n)
            out = dv.extend(code, dv.ExtensionWitness(c=1, x=al.BitVector(code.n, bits)))
            assert (out.n, out.k) == (code.n + 2, code.k + 1)
            rows = list(out.gen.rows)
            assert all(
                oracles.euclidean_inner_ref(a, b) == 0
                for i, a in enumerate(rows) for b in rows[i:])


def test_extend_binary_is_basis_independent(hamming8):
    x = al.BitVector.from_text("11100000")
    rows = hamming8.gen.rows
    shuffled = al.BinaryCode.from_rows(
        (rows[3], rows[0] ^ rows[2], rows[1], rows[2]), 8)
    w = dv.ExtensionWitness(c=1, x=x)
    assert dv.extend(hamming8, w).canonical() == dv.extend(shuffled, w).canonical()


def test_extend_binary_rejects_bad_witnesses(hamming8):
    with pytest.raises(ValueError):  # even weight: <X,X> = 0
        dv.extend(hamming8, dv.ExtensionWitness(c=1, x=al.BitVector.from_text("11000000")))
    with pytest.raises(ValueError):  # wrong length
        dv.extend(hamming8, dv.ExtensionWitness(c=1, x=al.BitVector.from_text("1000")))
    with pytest.raises(ValueError):  # only unit over F2 is 1
        dv.extend(hamming8, dv.ExtensionWitness(c=3, x=al.BitVector.from_text("10000000")))
    not_sd = al.BinaryCode.from_rows((0b1, 0b10, 0b100, 0b1000), 8)
    with pytest.raises(ValueError):
        dv.extend(not_sd, dv.ExtensionWitness(c=1, x=al.BitVector.from_text("10000000")))


# -- extension over F2 + uF2 -----------------------------------------------------

def test_extend_ring_exhaustive_small():
    code = al.RingCode.from_texts(["11"])
    assert al.is_self_dual(code)
    cases = 0
    for coeffs in itertools.product(range(4), repeat=2):
        x = al.RingVector.from_coeffs(coeffs)
        for c in (1, 3):
            w = dv.ExtensionWitness(c=c, x=x)
            if al.ring_inner(x, x) != 1:
                with pytest.raises(ValueError):
                    dv.extend(code, w)
                continue
            out = dv.extend(code, w)
            assert (out.n, out.k) == (4, 2)
            assert al.is_self_dual(out)
            # row (1, 0, X) leads the generator
            assert list(out.rows[0].coeffs()) == [1, 0] + list(coeffs)
            cases += 1
    assert cases == 16


def test_extend_ring_rejects_non_unit_c():
    code = al.RingCode.from_texts(["11"])
    x = al.RingVector.from_text("10")
    for c in (0, 2):
        with pytest.raises(ValueError):
            dv.extend(code, dv.ExtensionWitness(c=c, x=x))
    with pytest.raises(ValueError):  # binary X against a ring code
        dv.extend(code, dv.ExtensionWitness(c=1, x=al.BitVector.from_text("10")))


# -- neighbours -------------------------------------------------------------------

def test_neighbour_properties(hamming8):
    x = al.BitVector.from_text("11000000")
    nb = dv.neighbour(hamming8, x)
    assert al.is_self_dual(nb)
    assert nb.contains(x)
    assert nb.canonical() != hamming8.canonical()
    inter = oracles.span_dim_intersection(
        list(hamming8.gen.rows), list(nb.gen.rows))
    assert inter == hamming8.k - 1


def test_neighbour_random_codes(rng):
    for half in (4, 6, 8):
        code = random_selfdual(rng, half)
        for _ in range(10):
            x = random_even_witness(rng, code)
            try:
                nb = dv.neighbour(code, x)
            except ValueError:
                continue  # witness orthogonal to the whole code; skip
            assert al.is_self_dual(nb)
            assert nb.contains(x)
            assert oracles.span_dim_intersection(
                list(code.gen.rows), list(nb.gen.rows)) == code.k - 1


def test_neighbour_rejects_bad_witnesses(hamming8):
    with pytest.raises(ValueError):  # odd weight
        dv.neighbour(hamming8, al.BitVector.from_text("10000000"))
    with pytest.raises(ValueError):  # codeword
        dv.neighbour(hamming8, al.BitVector(8, hamming8.gen.rows[0]))
    with pytest.raises(ValueError):  # length mismatch
        dv.neighbour(hamming8, al.BitVector.from_text("1100"))
    # orthogonal to C but outside: only possible when C is not self-dual
    thin = al.BinaryCode.from_rows((0b0011,), 4)
    with pytest.raises(ValueError):
        dv.neighbour(thin, al.BitVector(4, 0b1100))


def test_neighbour_of_neighbour_keeps_most_of_c(rng):
    code = random_selfdual(rng, 6)
    x1 = random_even_witness(rng, code)
    n1 = dv.neighbour(code, x1)
    x2 = random_even_witness(rng, n1)
    n2 = dv.neighbour(n1, x2)
    assert al.is_self_dual(n2)
    assert oracles.span_dim_intersection(
        list(code.gen.rows), list(n2.gen.rows)) >= code.k - 2


def test_kth_range_chain(rng):
    code = random_selfdual(rng, 6)
    assert dv.kth_range_chain(code, []) == []
    xs = []
    cur = code
    for _ in range(3):
        x = random_even_witness(rng, cur)
        xs.append(x)
        cur = dv.neighbour(cur, x)
    chain = dv.kth_range_chain(code, xs)
    assert len(chain) == 3
    prev = code
    for nb in chain:
        assert al.is_self_dual(nb)
        assert oracles.span_dim_intersection(
            list(prev.gen.rows), list(nb.gen.rows)) == code.k - 1
        prev = nb
    # failures carry the step index
    with pytest.raises(ValueError, match="chain step 1"):
        dv.kth_range_chain(code, [xs[0], al.BitVector(code.n, 0b1)])


def test_random_neighbour_search_is_seeded(rng):
    code = random_selfdual(rng, 8)
    flt = SearchFilter(mode="random", seed=11, max_results=4)
    a = list(dv.random_neighbour_search(code, flt))
    b = list(dv.random_neighbour_search(code, flt))
    assert [x.bits for x, _ in a] == [x.bits for x, _ in b]
    assert len(a) == 4
    half = code.n // 2
    for x, nb in a:
        assert x.bits >> half << half == x.bits  # supported on the tail half
        assert x.weight() % 2 == 0
        assert al.is_self_dual(nb)
        assert nb.contains(x)


def test_random_neighbour_search_filters(rng):
    code = random_selfdual(rng, 8)  # d = 2, so the filter must do real work
    flt = SearchFilter(mode="random", seed=3, max_results=2, min_distance_target=4)
    for x, nb in dv.random_neighbour_search(code, flt):
        assert oracles.min_distance(list(nb.gen.rows), nb.k) >= 4
    with pytest.raises(ValueError):
        not_sd = al.BinaryCode.from_rows((0b1, 0b10, 0b100, 0b1000), 8)
        next(dv.random_neighbour_search(not_sd, flt))


# -- tail witnesses ----------------------------------------------------------------

def test_systematic_permutation_orders_pivots_first():
    code = al.BinaryCode.from_rows((0b0110, 0b1010), 4)
    perm = dv.systematic_permutation(code)
    assert perm == (1, 2, 0, 3)
    t = dv.systematic_permutation(al.BinaryCode.from_rows((0b01, 0b10), 2))
    assert t == (0, 1)


def test_embed_tail_places_bits_by_presentation():
    perm = (1, 2, 0, 3)
    x = dv.embed_tail("01", perm, 4)
    assert x.bits == 0b1000  # tail position 1 -> presentation slot 3 -> column 3
    assert dv.embed_tail("10", perm, 4).bits == 0b0001
    assert dv.embed_tail("0000", perm, 4).bits == 0
    with pytest.raises(ValueError):
        dv.embed_tail("10101", perm, 4)
    with pytest.raises(ValueError):
        dv.embed_tail("1x", perm, 4)
    with pytest.raises(ValueError):
        dv.embed_tail("11", perm, 5)


def test_tail_neighbour_matches_default_presentation(rng):
    code = random_selfdual(rng, 6)
    tails = ("110000", "011010", "110110")
    for tail in tails:
        try:
            step = dv.tail_neighbour(code, tail)
        except ValueError:
            continue
        explicit = dv.tail_neighbour(code, tail, dv.systematic_permutation(code))
        assert step.code.canonical() == explicit.code.canonical()
        assert step.witness == explicit.witness


def test_tail_witness_chain_threads_presentations(rng):
    code = random_selfdual(rng, 6)
    tails = []
    cur, pres = code, dv.systematic_permutation(code)
    while len(tails) < 4:
        bits = rng.getrandbits(6)
        if oracles.popcount(bits) % 2:
            bits ^= 1 << rng.randrange(6)
        tail = "".join(str((bits >> i) & 1) for i in range(6))
        try:
            step = dv.tail_neighbour(cur, tail, pres)
        except ValueError:
            continue
        tails.append(tail)
        cur, pres = step.code, step.presentation
    chain = dv.tail_witness_chain(code, tails)
    assert chain.start == code
    assert chain.start_presentation == dv.systematic_permutation(code)
    assert len(chain.steps) == 4
    assert chain.codes[-1].canonical() == cur.canonical()
    # the same chain expressed through ambient witnesses
    ambient = dv.kth_range_chain(code, chain.witnesses)
    assert [c.canonical() for c in ambient] == [c.canonical() for c in chain.codes]
    prev = code
    for step in chain.steps:
        assert al.is_self_dual(step.code)
        assert step.code.contains(step.witness)
        assert oracles.span_dim_intersection(
            list(prev.gen.rows), list(step.code.gen.rows)) == code.k - 1
        assert sorted(step.presentation) == list(range(code.n))
        prev = step.code
    with pytest.raises(ValueError, match="chain step 0"):
        dv.tail_witness_chain(code, ["111000"])  # odd weight
