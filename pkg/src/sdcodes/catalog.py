"""Persistent store of verified codes with provenance and novelty flags.

Records live in a directory as one text file per code plus an ``index``
file; everything is plain text so a catalog diffs cleanly under version
control.  Each record carries a parameter fingerprint ``(n, k, d, family,
beta, gamma)``; equal fingerprints do *not* imply equivalent codes, they
only identify the weight-enumerator class.  Novelty is judged against the
transcribed parameter lists in ``data/known_params.json``: parameters
published as previously known map to ``known_prior``, parameters claimed
new by the source tables map to ``new_in_paper``, and anything else is
``new_here``.

Provenance is an ordered list of textual steps that can be replayed:

* ``construct <triple>`` / ``lift <triple>`` -- build the block generator
  matrix from a group-ring triple (``lift`` is the conventional verb when
  the triple is over F2+uF2),
* ``extend c=<unit> x=<vector>`` -- length +2 extension,
* ``gray`` -- Gray image of a ring code,
* ``neighbour x=<bits>`` -- neighbour step with a full-length witness,
* ``neighbour tail=<bits>`` -- neighbour step with a printed tail witness;
  consecutive tail steps thread the systematic presentation forward, the
  convention under which the published chains reproduce.

A record with no provenance replays to its stored generator.
"""

from __future__ import annotations

import json
import threading
import warnings
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

from . import analysis
from .algebra import (
    BinaryCode,
    BitVector,
    RingVector,
    format_code,
    gray_image,
    is_self_dual,
    parse_code,
    ring_from_char,
)
from .construct import build_m_sigma, parse_triple
from .derive import ExtensionWitness, extend, neighbour, systematic_permutation, tail_neighbour

KNOWN_PRIOR = "known_prior"
NEW_IN_PAPER = "new_in_paper"
NEW_HERE = "new_here"
UNLISTED = "unlisted"

NOVELTIES = (KNOWN_PRIOR, NEW_IN_PAPER, NEW_HERE)


class CatalogError(Exception):
    pass


class ReplayMismatch(CatalogError):
    """Provenance replay produced a different fingerprint than stored."""


@dataclass(frozen=True)
class Fingerprint:
    """Parameters identifying a weight-enumerator class, not a code."""

    n: int
    k: int
    d: int
    family: Optional[str] = None
    beta: Optional[int] = None
    gamma: Optional[int] = None

    def as_line(self) -> str:
        parts = [str(self.n), str(self.k), str(self.d)]
        parts.append(self.family if self.family is not None else "-")
        parts.append(str(self.beta) if self.beta is not None else "-")
        parts.append(str(self.gamma) if self.gamma is not None else "-")
        return " ".join(parts)

    @classmethod
    def from_line(cls, line: str) -> "Fingerprint":
        f = line.split()
        if len(f) != 6:
            raise CatalogError(f"bad fingerprint line: {line!r}")
        return cls(int(f[0]), int(f[1]), int(f[2]),
                   None if f[3] == "-" else f[3],
                   None if f[4] == "-" else int(f[4]),
                   None if f[5] == "-" else int(f[5]))


@dataclass(frozen=True)
class CatalogRecord:
    id: str
    fingerprint: Fingerprint
    generator: str  # textual code block
    provenance: tuple[str, ...] = ()
    aut_order_claim: Optional[int] = None  # printed value, never verified
    novelty: str = NEW_HERE

    def code(self) -> BinaryCode:
        code = parse_code(self.generator)
        if not isinstance(code, BinaryCode):
            raise CatalogError("catalog records hold binary codes")
        return code


def fingerprint_of(code: BinaryCode, threads: int = 1) -> Fingerprint:
    """Analyze a code far enough to fingerprint it.

    Small codes get a full weight profile; larger ones are profiled up to
    weight 14, enough for the [64,32,12] / [68,34,12] enumerator families.
    """
    if code.k <= 16:
        prof = analysis.weight_profile(code, threads=threads)
    else:
        prof = analysis.weight_profile(code, w_max=14, threads=threads)
    if prof.d_min is None:
        raise CatalogError(
            f"minimum distance exceeds the profiled window (w <= {prof.w_max})")
    try:
        params = analysis.enumerator_params(prof)
    except ValueError:
        return Fingerprint(code.n, code.k, prof.d_min)
    return Fingerprint(code.n, code.k, prof.d_min,
                       params.family, params.beta, params.gamma)


class KnownParamsTable:
    """Transcribed parameter lists: previously known and claimed new."""

    def __init__(self, data: Optional[dict] = None):
        if data is None:
            text = resources.files("sdcodes").joinpath(
                "data/known_params.json").read_text()
            data = json.loads(text)
        self._w64 = {fam: frozenset(data[fam]["known_beta"])
                     for fam in ("W64_1", "W64_2")}
        w68 = data["W68_2"]
        self._known = {int(g): frozenset(v) for g, v in w68["known"].items()}
        self._new = {int(g): frozenset(v) for g, v in w68["new"].items()}
        self.claimed_new_counts = tuple(data["claimed_new_counts"])

    def known_prior(self, family: str, beta: int, gamma: Optional[int] = None) -> bool:
        if family in self._w64:
            return beta in self._w64[family]
        if family == "W68_2" and gamma is not None:
            return beta in self._known.get(gamma, frozenset())
        return False

    def new_in_paper(self, family: str, beta: int, gamma: Optional[int] = None) -> bool:
        if family == "W68_2" and gamma is not None:
            return beta in self._new.get(gamma, frozenset())
        return False

    def new_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted((g, b) for g, bs in self._new.items() for b in bs))

    def conflicts(self) -> tuple[tuple[int, int], ...]:
        """(gamma, beta) pairs present in both lists — data-entry errors."""
        return tuple(sorted((g, b) for g, bs in self._new.items()
                            for b in bs if b in self._known.get(g, frozenset())))

    def conflict_report(self) -> str:
        lines = []
        pairs = self.conflicts()
        if not pairs:
            return "known/new lists are disjoint"
        lines.append(
            f"data-entry error: {len(pairs)} (gamma, beta) pairs appear in "
            "both the previously-known and the claimed-new lists:")
        for g, b in pairs:
            lines.append(f"  gamma={g} beta={b}")
        known = sorted((g, b) for g, bs in self._known.items() for b in bs)
        new = self.new_pairs()
        lines.append(f"known multiset: {len(known)} pairs")
        lines.append(f"new multiset: {len(new)} pairs")
        return "\n".join(lines)


_DEFAULT_TABLE: Optional[KnownParamsTable] = None


def default_table() -> KnownParamsTable:
    global _DEFAULT_TABLE
    if _DEFAULT_TABLE is None:
        _DEFAULT_TABLE = KnownParamsTable()
    return _DEFAULT_TABLE


def novelty_check(fp: Fingerprint, table: Optional[KnownParamsTable] = None) -> str:
    """Classify a fingerprint as known_prior / new_in_paper / unlisted.

    Only the W68_2 family has transcribed lists; everything else is
    unlisted.  The two pairs present in both lists (see conflict_report)
    classify as new_in_paper: the claimed-new list takes precedence.
    """
    if fp.family != "W68_2" or fp.beta is None or fp.gamma is None:
        return UNLISTED
    table = table or default_table()
    if table.new_in_paper(fp.family, fp.beta, fp.gamma):
        return NEW_IN_PAPER
    if table.known_prior(fp.family, fp.beta, fp.gamma):
        return KNOWN_PRIOR
    return UNLISTED


def record_novelty(fp: Fingerprint, table: Optional[KnownParamsTable] = None) -> str:
    """Novelty as stored on records: unlisted parameters are new here."""
    nov = novelty_check(fp, table)
    return NEW_HERE if nov == UNLISTED else nov


# ---------------------------------------------------------------------------
# the file store


def _record_text(rec: CatalogRecord) -> str:
    lines = [f"id {rec.id}", f"novelty {rec.novelty}"]
    if rec.aut_order_claim is not None:
        lines.append(f"aut_order_claim {rec.aut_order_claim}")
    lines.append(f"fingerprint {rec.fingerprint.as_line()}")
    for step in rec.provenance:
        lines.append(f"provenance {step}")
    lines.append(rec.generator.rstrip("\n"))
    return "\n".join(lines) + "\n"


def _parse_record(text: str) -> CatalogRecord:
    fields: dict[str, object] = {"provenance": []}
    lines = text.splitlines()
    for i, line in enumerate(lines):
        key, _, rest = line.partition(" ")
        if key == "code":
            fields["generator"] = "\n".join(lines[i:]) + "\n"
            break
        if key == "provenance":
            fields["provenance"].append(rest)
        elif key == "fingerprint":
            fields["fingerprint"] = Fingerprint.from_line(rest)
        elif key == "aut_order_claim":
            fields["aut_order_claim"] = int(rest)
        elif key in ("id", "novelty"):
            fields[key] = rest
        else:
            raise CatalogError(f"unknown record field {key!r}")
    else:
        raise CatalogError("record has no code block")
    return CatalogRecord(
        id=fields["id"],
        fingerprint=fields["fingerprint"],
        generator=fields["generator"],
        provenance=tuple(fields["provenance"]),
        aut_order_claim=fields.get("aut_order_claim"),
        novelty=fields.get("novelty", NEW_HERE),
    )


def index_line(rec: CatalogRecord) -> str:
    fp = rec.fingerprint
    return " ".join([
        rec.id, str(fp.n), str(fp.k), str(fp.d),
        fp.family if fp.family is not None else "-",
        str(fp.beta) if fp.beta is not None else "-",
        str(fp.gamma) if fp.gamma is not None else "-",
        rec.novelty,
    ])


def replay_provenance(steps, generator: Optional[str] = None):
    """Execute provenance steps and return the resulting code.

    With no steps the stored generator itself is the result.  Consecutive
    ``neighbour tail=...`` steps thread the systematic presentation forward.
    """
    steps = list(steps)
    if not steps:
        if generator is None:
            raise CatalogError("empty provenance and no stored generator")
        return parse_code(generator)
    cur = None
    presentation = None
    for step in steps:
        verb, _, rest = step.strip().partition(" ")
        if verb in ("construct", "lift"):
            cur = build_m_sigma(parse_triple(rest))
            presentation = None
        elif verb == "extend":
            args = dict(kv.split("=", 1) for kv in rest.split())
            witness = ExtensionWitness(c=ring_from_char(args["c"]),
                                       x=RingVector.from_text(args["x"]))
            cur = extend(cur, witness)
            presentation = None
        elif verb == "gray":
            cur = gray_image(cur)
            presentation = None
        elif verb == "neighbour":
            key, _, value = rest.strip().partition("=")
            if key == "tail":
                if presentation is None:
                    presentation = systematic_permutation(cur)
                ts = tail_neighbour(cur, value, presentation)
                cur, presentation = ts.code, ts.presentation
            elif key == "x":
                cur = neighbour(cur, BitVector.from_text(value))
                presentation = None
            else:
                raise CatalogError(f"bad neighbour argument {rest!r}")
        else:
            raise CatalogError(f"unknown provenance verb {verb!r}")
    if cur is None:
        raise CatalogError("provenance produced nothing")
    return cur


class CatalogStore:
    """Single-writer, multi-reader directory of records.

    Writes are serialized through a lock; reads never mutate.  The index
    is rewritten from scratch on every ingest, so a store round-trips
    byte-for-byte.
    """

    INDEX = "index"

    def __init__(self, root):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._lock = threading.Lock()

    def _record_path(self, record_id: str) -> Path:
        if not record_id or not all(
                c.isalnum() or c in "_.-" for c in record_id):
            raise CatalogError(f"bad record id {record_id!r}")
        return self.root / f"{record_id}.rec"

    def ids(self) -> tuple[str, ...]:
        index = self.root / self.INDEX
        if not index.exists():
            return ()
        return tuple(line.split()[0]
                     for line in index.read_text().splitlines() if line)

    def load(self, record_id: str) -> CatalogRecord:
        path = self._record_path(record_id)
        if not path.exists():
            raise CatalogError(f"no record {record_id!r}")
        return _parse_record(path.read_text())

    def records(self) -> tuple[CatalogRecord, ...]:
        return tuple(self.load(i) for i in self.ids())

    def _write_index(self, records) -> None:
        text = "".join(index_line(r) + "\n" for r in records)
        (self.root / self.INDEX).write_text(text)

    def ingest(self, record_id: str, code: BinaryCode, provenance=(),
               aut_order_claim: Optional[int] = None,
               table: Optional[KnownParamsTable] = None,
               threads: int = 1) -> CatalogRecord:
        """Analyze, fingerprint, flag novelty, and persist a self-dual code."""
        if not is_self_dual(code):
            raise CatalogError("catalog only stores self-dual codes")
        fp = fingerprint_of(code, threads=threads)
        rec = CatalogRecord(
            id=record_id,
            fingerprint=fp,
            generator=format_code(code),
            provenance=tuple(provenance),
            aut_order_claim=aut_order_claim,
            novelty=record_novelty(fp, table),
        )
        with self._lock:
            existing = self.records()
            if any(r.id == record_id for r in existing):
                raise CatalogError(f"duplicate id {record_id!r}")
            canonical = code.canonical()
            for other in existing:
                if other.fingerprint != fp:
                    continue
                if other.code().canonical() == canonical:
                    raise CatalogError(
                        f"exact duplicate of {other.id!r} (identical canonical"
                        " generator)")
                warnings.warn(
                    f"{record_id!r} and {other.id!r} share fingerprint "
                    f"({fp.as_line()}): possible equivalence, unresolved")
            self._record_path(record_id).write_text(_record_text(rec))
            self._write_index(existing + (rec,))
        return rec

    def replay(self, record_id: str) -> BinaryCode:
        """Re-execute a record's provenance and check the fingerprint."""
        rec = self.load(record_id)
        code = replay_provenance(rec.provenance, rec.generator)
        if not isinstance(code, BinaryCode):
            raise CatalogError("provenance must end at a binary code (add 'gray')")
        fp = fingerprint_of(code)
        if fp != rec.fingerprint:
            raise ReplayMismatch(
                f"{record_id!r}: replayed {fp.as_line()} != stored "
                f"{rec.fingerprint.as_line()}")
        return code

    def possible_equivalences(self) -> tuple[tuple[str, str], ...]:
        """Pairs of distinct records sharing a fingerprint (kept unresolved)."""
        records = self.records()
        out = []
        for i, a in enumerate(records):
            for b in records[i + 1:]:
                if a.fingerprint == b.fingerprint:
                    out.append((a.id, b.id))
        return tuple(out)

    def novelty_tally(self) -> dict[str, int]:
        tally = {n: 0 for n in NOVELTIES}
        for rec in self.records():
            tally[rec.novelty] = tally.get(rec.novelty, 0) + 1
        return tally

    def summary(self, table: Optional[KnownParamsTable] = None) -> str:
        """Verified-new tally next to the published headline counts."""
        table = table or default_table()
        tally = self.novelty_tally()
        counts = "/".join(str(c) for c in table.claimed_new_counts)
        return (f"records={len(self.ids())} known_prior={tally[KNOWN_PRIOR]} "
                f"new_in_paper={tally[NEW_IN_PAPER]} new_here={tally[NEW_HERE]} "
                f"(published claims: {counts} new)")
