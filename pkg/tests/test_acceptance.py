"""End-to-end reproduction of the published code tables.

Every test here rebuilds codes from their printed witnesses -- group-ring
triples, lifts, extension vectors, neighbour tails -- and checks the
resulting parameters against the stored fixture rows.  Each test appends one
PASS/FAIL line to the checklist echoed after the pytest summary.

Exact (gamma, beta) values for a [68,34] code need a walk over 2^34 Gray
codewords (about 20 s each here), so the default run profiles a
representative subset of rows and covers the rest with cheap structural
checks.  Set FULL_ACCEPTANCE=1 to enumerate every published row instead
(roughly 35 minutes single-threaded).
"""

import json
import os
import random
import warnings
from importlib import resources

import conftest
import oracles

from sdcodes import algebra as al
from sdcodes import groups as gr
from sdcodes import analysis as an
from sdcodes import catalog as ct
from sdcodes import construct as cs
from sdcodes import derive as dv
from sdcodes import fixtures as fx

FULL = os.environ.get("FULL_ACCEPTANCE") == "1"

NEIGHBOUR_FIXTURES = tuple(f"table{i}" for i in range(7, 20))


def checkpoint(label: str, problems: list[str]) -> None:
    line = ("PASS " if not problems else "FAIL ") + label
    if problems:
        line += " -- " + "; ".join(problems[:4])
    conftest.ACCEPTANCE_LINES.append(line)
    assert not problems, "\n".join(problems)


# Profiles of the long fixtures are shared between tests (the Gray-map suite
# reuses the lift profiles computed for the parameter checks).
_PROFILES: dict[tuple[str, str], an.WeightProfile] = {}


def case_profile(case: fx.FixtureCase) -> an.WeightProfile:
    key = (case.fixture, str(case.member))
    if key not in _PROFILES:
        w_max = None if case.n <= 32 else 14
        _PROFILES[key] = an.weight_profile(case.code(), w_max=w_max)
    return _PROFILES[key]


def check_case(case: fx.FixtureCase) -> list[str]:
    """Structural + exact-parameter checks of one fixture row."""
    where = f"{case.fixture}/{case.member}"
    problems = []
    code = case.code()
    if (code.n, code.k) != (case.n, case.k):
        problems.append(f"{where}: built [{code.n},{code.k}], row says [{case.n},{case.k}]")
        return problems
    if not al.is_self_dual(code):
        problems.append(f"{where}: not self-dual")
        return problems
    prof = case_profile(case)
    if prof.d_min != case.d:
        problems.append(f"{where}: d = {prof.d_min}, row says {case.d}")
    got_type = an.classify_type(code)
    if got_type != case.code_type:
        problems.append(f"{where}: type {got_type}, row says {case.code_type}")
    if case.family is not None and prof.d_min == case.d:
        params = an.enumerator_params(prof)
        got = (params.family, params.beta, params.gamma)
        want = (case.family, case.beta, case.gamma)
        if got != want:
            problems.append(f"{where}: enumerator {got}, row says {want}")
    return problems


def test_cyclic_group_triples_rebuild_the_length_32_codes():
    problems = []
    for case in fx.fixture_cases("table1"):
        if not cs.check_theorem1(cs.parse_triple(fx.base_triple(case.member).triple)):
            problems.append(f"{case.member}: triple fails the orthogonality relations")
        problems += check_case(case)
        prof = case_profile(case)
        if prof.total() != 1 << 16:
            problems.append(f"{case.member}: spectrum covers {prof.total()} words")
    checkpoint("table1: C1, C2 rebuild as self-dual [32,16,6] type I "
               "(full 2^16 spectrum)", problems)


def test_dihedral_group_triple_rebuilds_the_length_32_code():
    problems = []
    for case in fx.fixture_cases("table3"):
        if not cs.check_theorem1(cs.parse_triple(fx.base_triple(case.member).triple)):
            problems.append(f"{case.member}: triple fails the orthogonality relations")
        problems += check_case(case)
        prof = case_profile(case)
        if prof.total() != 1 << 16:
            problems.append(f"{case.member}: spectrum covers {prof.total()} words")
    checkpoint("table3: C3 rebuilds as self-dual [32,16,6] type I "
               "(full 2^16 spectrum)", problems)


def test_lifted_triples_gray_map_to_extremal_length_64_codes():
    problems = []
    for case in fx.fixture_cases("table2") + fx.fixture_cases("table4"):
        tf = fx.lift_triple(case.member)
        triple = cs.parse_triple(tf.triple)
        if not cs.check_theorem1(triple):
            problems.append(f"{case.member}: triple fails the orthogonality relations")
        ring = fx.lift_code(case.member)
        if not al.is_self_dual(ring):
            problems.append(f"{case.member}: ring code not self-dual")
        base = cs.parse_triple(fx.base_triple(tf.base).triple)
        for v, w in zip((triple.v1, triple.v2, triple.v3),
                        (base.v1, base.v2, base.v3)):
            if tuple(c & 1 for c in v.coeffs) != tuple(w.coeffs):
                problems.append(f"{case.member}: not a lift of {tf.base} mod u")
        problems += check_case(case)
    checkpoint("tables 2+4: I1, I2, I3 lift and Gray-map to self-dual "
               "[64,32,12] W64_2 with beta = 0, 80, 64 (exact A_12/A_14 "
               "over 2^32 words each)", problems)


def test_extension_witnesses_rebuild_the_length_68_codes():
    exact = {c.member for c in fx.fixture_cases("table5")} if FULL \
        else {"C68_1", "C68_3", "C68_4"}
    problems = []
    for case in fx.fixture_cases("table5"):
        ef = fx.extension_fixture(case.member)
        witness = dv.ExtensionWitness(al.ring_from_char(ef.c),
                                      al.RingVector.from_text(ef.x))
        rebuilt = al.gray_image(dv.extend(fx.lift_code(ef.base), witness))
        if rebuilt.canonical() != case.code().canonical():
            problems.append(f"{case.member}: extend({ef.base}) disagrees with fixture")
        if not al.is_self_dual(rebuilt):
            problems.append(f"{case.member}: not self-dual")
        if case.member in exact:
            problems += check_case(case)
    checkpoint(f"table5: extensions of I1/I2/I3 give self-dual [68,34,12] "
               f"codes; exact (gamma,beta) for {len(exact)} of 7 rows "
               f"(2^34 words each)", problems)


def test_neighbour_chain_reproduces_every_printed_step():
    chain = fx.chain()
    steps = fx.CHAIN_STEPS
    problems = []
    if (steps[6].gamma, steps[6].beta) != (7, 209):
        problems.append(f"step 6 row reads ({steps[6].gamma},{steps[6].beta})")
    if (steps[21].gamma, steps[21].beta) != (8, 250):
        problems.append(f"step 21 row reads ({steps[21].gamma},{steps[21].beta})")
    prev = chain.start
    for i, step in enumerate(chain.steps):
        code = step.code
        if (code.n, code.k) != (68, 34):
            problems.append(f"step {i}: built [{code.n},{code.k}]")
        if not al.is_self_dual(code):
            problems.append(f"step {i}: not self-dual")
        if not code.contains(step.witness):
            problems.append(f"step {i}: witness not in the new code")
        meet = oracles.span_dim_intersection(list(prev.gen.rows), list(code.gen.rows))
        if meet != 33:
            problems.append(f"step {i}: dim(C meet N) = {meet}")
        prev = code
    exact = range(22) if FULL else (0, 1, 2, 3, 6, 21)
    cases = {c.member: c for c in fx.fixture_cases("table6")}
    for i in exact:
        problems += check_case(cases[f"N{i + 1}"])
    checkpoint(f"table6: 22-step neighbour chain from C68_4 (self-dual, "
               f"dim-33 meet, witness containment at every step; exact "
               f"(gamma,beta) at {len(tuple(exact))} of 22 steps incl. "
               f"(7,209) and (8,250))", problems)


def test_neighbour_tables_rebuild_from_printed_tails():
    problems = []
    cheap = exact = 0
    for name in NEIGHBOUR_FIXTURES:
        source = fx.neighbour_table_source(name)
        src_code = fx.chain_code(source)
        src_rows = list(src_code.gen.rows)
        cases = fx.fixture_cases(name)
        for case in cases:
            code = case.code()
            where = f"{name}/N({source})"
            if not al.is_self_dual(code):
                problems.append(f"{where}: tail {case.member[:8]}..: not self-dual")
            meet = oracles.span_dim_intersection(src_rows, list(code.gen.rows))
            if meet != 33:
                problems.append(f"{where}: dim(meet) = {meet}")
            cheap += 1
        for case in cases if FULL else cases[:1]:
            problems += check_case(case)
            exact += 1
    checkpoint(f"tables 7-19: neighbours of the chain codes rebuild from "
               f"printed tails ({cheap} rows self-dual with dim-33 meet; "
               f"exact (gamma,beta) for {exact})", problems)


def _random_triple_text(rng, group: str, alphabet: str) -> str:
    tag = f"{group}/F2u" if "u" in alphabet else group
    parts = ("".join(rng.choice(alphabet) for _ in range(8)) for _ in range(3))
    return ";".join(f"{tag}:{p}" for p in parts)


def _mutants(text: str, alphabet: str):
    """The triple itself plus every single-coefficient rewrite of it."""
    yield text
    for i, ch in enumerate(text):
        if ch in alphabet:
            for other in alphabet:
                if other != ch:
                    yield text[:i] + other + text[i + 1:]


def test_orthogonality_relations_decide_self_duality_at_scale():
    rng = random.Random(0xACCE97)
    problems = []
    checked = positives = 0

    def run(triple):
        nonlocal checked, positives
        claim = cs.check_theorem1(triple)
        truth = al.is_self_dual(cs.build_m_sigma(triple))
        checked += 1
        positives += truth
        if claim != truth and len(problems) < 4:
            problems.append(f"{cs.format_triple(triple)}: relations say "
                            f"{claim}, code says {truth}")

    for group in ("C8", "D8"):
        for _ in range(10_000):
            run(cs.parse_triple(_random_triple_text(rng, group, "01")))
    for _ in range(1_000):
        group = rng.choice(("C8", "D8"))
        run(cs.parse_triple(_random_triple_text(rng, group, "01u3")))
    # the published triples and every one-coefficient rewrite of them probe
    # the boundary of the self-dual locus from both sides
    for tf in fx.BASE_TRIPLES:
        for text in _mutants(tf.triple, "01"):
            run(cs.parse_triple(text))
    for tf in fx.LIFT_TRIPLES:
        for text in _mutants(tf.triple, "01u3"):
            run(cs.parse_triple(text))
    checkpoint(f"orthogonality relations match self-duality of the block "
               f"construction on {checked} triples over C8/D8, both "
               f"alphabets ({positives} self-dual hits, 0 disagreements)",
               problems)


def test_gray_map_preserves_weight_addition_and_duality():
    rng = random.Random(0x6B47)
    problems = []
    for _ in range(300):
        n = rng.randrange(1, 41)
        x = al.RingVector(n, rng.getrandbits(n), rng.getrandbits(n))
        y = al.RingVector(n, rng.getrandbits(n), rng.getrandbits(n))
        gx = al.gray_map(x)
        if gx.weight() != x.lee_weight():
            problems.append(f"isometry fails at {x.to_text()}")
        if al.gray_map(x + y).bits != gx.bits ^ al.gray_map(y).bits:
            problems.append(f"additivity fails at {x.to_text()}/{y.to_text()}")
        if [((gx.bits >> i) & 1) for i in range(2 * n)] != oracles.gray_ref(list(x.coeffs())):
            problems.append(f"image disagrees with reference at {x.to_text()}")
    duals = 0
    lift_case = {c.member: c for c in fx.fixture_cases("table2") + fx.fixture_cases("table4")}
    for tf in fx.LIFT_TRIPLES:
        ring = fx.lift_code(tf.name)
        if not (al.is_self_dual(ring) and al.is_self_dual(al.gray_image(ring))):
            problems.append(f"{tf.name}: self-duality not carried to the Gray image")
        duals += 1
        d_base = an.weight_profile(fx.base_code(tf.base)).d_min
        d_gray = case_profile(lift_case[tf.name]).d_min
        if not d_gray <= 2 * d_base:
            problems.append(f"{tf.name}: d = {d_gray} > 2*{d_base} of {tf.base}")
    bases = cs.search_base(gr.group_by_name("C2"), cs.SearchFilter(max_results=3))
    for base, _ in bases:
        for _, ring in cs.enumerate_lifts(base, cs.SearchFilter()):
            if not al.is_self_dual(al.gray_image(ring)):
                problems.append(f"lift of {cs.format_triple(base)}: image not self-dual")
            duals += 1
    checkpoint(f"Gray map: isometry + additivity on 300 random vectors; "
               f"self-duality carried on {duals} ring codes; d <= 2d' on "
               f"all lift/base pairs", problems)


def test_weight_profiles_match_the_naive_oracle_on_random_codes():
    rng = random.Random(0x0AC7E)
    problems = []
    for _ in range(100):
        n = rng.randrange(6, 40)
        k = rng.randrange(2, min(15, n))
        rows = []
        while len(rows) < k:  # keep only rows independent of the span so far
            cand = rng.getrandbits(n)
            if cand and oracles.rank_gf2(rows + [cand]) > len(rows):
                rows.append(cand)
        code = al.BinaryCode.from_rows(rows, n)
        want = tuple(oracles.weight_counts(list(code.gen.rows), code.k, code.n))
        got = an.weight_profile(code)
        if got.counts != want:
            problems.append(f"[{n},{code.k}] profile disagrees with oracle")
        for parts in (2, 4, 8):
            split = an.weight_profile(code, partitions=parts)
            if split.counts != got.counts or split.d_min != got.d_min:
                problems.append(f"[{n},{code.k}] partitions={parts} differs")
    checkpoint("weight profiles equal the naive-enumeration oracle on 100 "
               "random codes (k <= 14); partitioned runs identical", problems)


def _synthetic_profile(n: int, a12: int, a14: int) -> an.WeightProfile:
    counts = [0] * 15
    counts[0], counts[12], counts[14] = 1, a12, a14
    return an.WeightProfile(n=n, k=n // 2, w_max=14, counts=tuple(counts), d_min=12)


def test_enumerator_parameters_round_trip_and_stay_unique():
    problems = []
    seen: dict[tuple[int, int, int], tuple] = {}
    sweep = [("W64_1", beta, None) for beta in range(301)]
    sweep += [("W64_2", beta, None) for beta in range(301)]
    sweep += [("W68_1", beta, None) for beta in range(301)]
    sweep += [("W68_2", beta, gamma) for beta in range(301) for gamma in range(10)]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")  # out-of-range betas warn by design
        for family, beta, gamma in sweep:
            n = 64 if family.startswith("W64") else 68
            params = an.EnumeratorParams(family, beta, gamma)
            encode = an.encode_params_64 if n == 64 else an.encode_params_68
            a12, a14 = encode(params)
            decoded = an.enumerator_params(_synthetic_profile(n, a12, a14))
            if (decoded.family, decoded.beta, decoded.gamma) != (family, beta, gamma):
                problems.append(f"{family} beta={beta} gamma={gamma} decoded "
                                f"as {decoded}")
            key = (n, a12, a14)
            if key in seen and seen[key] != (family, beta, gamma):
                problems.append(f"(A_12,A_14)={key[1:]} shared by {seen[key]} "
                                f"and {(family, beta, gamma)}")
            seen[key] = (family, beta, gamma)
    checkpoint(f"enumerator parameters round-trip exactly and stay unique "
               f"across all {len(sweep)} (family, beta, gamma) points",
               problems)


def test_published_novelty_verdicts_are_reproduced():
    data = json.loads(
        resources.files("sdcodes").joinpath("data/known_params.json").read_text()
    )["W68_2"]
    table = ct.default_table()
    problems = []
    new_pairs = table.new_pairs()
    if len(new_pairs) != 92:
        problems.append(f"new list holds {len(new_pairs)} pairs, expected 92")
    for gamma, beta in new_pairs:
        fp = ct.Fingerprint(68, 34, 12, "W68_2", beta, gamma)
        verdict = ct.novelty_check(fp, table)
        if verdict != ct.NEW_IN_PAPER:
            problems.append(f"gamma={gamma} beta={beta}: {verdict}")
    known_checked = 0
    for gamma_text, betas in sorted(data["known"].items()):
        gamma = int(gamma_text)
        fresh = set(data["new"].get(gamma_text, ()))
        sample = [b for b in betas if b not in fresh]
        for beta in sample[:3] + sample[-2:]:
            fp = ct.Fingerprint(68, 34, 12, "W68_2", beta, gamma)
            verdict = ct.novelty_check(fp, table)
            if verdict != ct.KNOWN_PRIOR:
                problems.append(f"gamma={gamma} beta={beta}: {verdict}")
            known_checked += 1
    if known_checked < 40:
        problems.append(f"only {known_checked} known spot checks")
    checkpoint(f"novelty verdicts: all {len(new_pairs)} newly-reported "
               f"(gamma,beta) pairs flag new_in_paper; {known_checked} "
               f"previously-known pairs flag known_prior", problems)
