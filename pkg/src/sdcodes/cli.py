"""Command-line entry point.

Every run prints a header echoing the package version, the run
configuration, and the built-in fixture checksum, so outputs are
reproducible byte-for-byte given the same flags.  Exit codes: 0 success,
1 verification mismatch, 2 invalid input, 3 budget exceeded.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field
from typing import Optional

import click

from . import __version__, analysis, catalog, construct, derive, fixtures
from .algebra import (
    BinaryCode,
    BitVector,
    RingCode,
    RingVector,
    format_code,
    gray_image,
    is_self_dual,
    parse_code,
    ring_from_char,
)
from .construct import SearchFilter, format_triple, parse_triple
from .groups import group_by_name

EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3


class BudgetExceeded(click.ClickException):
    exit_code = EXIT_BUDGET

    def __init__(self):
        super().__init__("budget exceeded")


@dataclass
class RunConfig:
    threads: int = 1
    seed: Optional[int] = None
    machine: bool = False
    budget_seconds: Optional[float] = None
    started: float = field(default_factory=time.monotonic)

    def check_budget(self) -> None:
        if (self.budget_seconds is not None
                and time.monotonic() - self.started > self.budget_seconds):
            raise BudgetExceeded()

    def header(self, subcommand: str, **flags) -> None:
        pairs = [f"seed={self._fmt(self.seed)}", f"threads={self.threads}",
                 f"budget={self._fmt(self.budget_seconds)}"]
        pairs += [f"{k}={self._fmt(v)}" for k, v in sorted(flags.items())]
        if self.machine:
            click.echo(f"version={__version__}")
            click.echo(f"fixtures={fixtures.checksum()}")
            click.echo(f"config=subcommand={subcommand} " + " ".join(pairs))
        else:
            click.echo(f"# sdcodes {__version__}")
            click.echo(f"# config: subcommand={subcommand} " + " ".join(pairs))
            click.echo(f"# fixtures: {fixtures.checksum()}")

    @staticmethod
    def _fmt(value) -> str:
        if value is None:
            return "-"
        if isinstance(value, bool):
            return "yes" if value else "no"
        return str(value)


def _fail(message: str, code: int = EXIT_INVALID) -> "NoReturn":
    click.echo(f"error: {message}")
    sys.exit(code)


def _load_code(path: str):
    try:
        with open(path) as fh:
            return parse_code(fh.read())
    except OSError as exc:
        _fail(f"cannot read {path}: {exc.strerror}")
    except ValueError as exc:
        _fail(f"{path}: {exc}")


@click.group()
@click.option("--threads", default=1, show_default=True,
              help="Partitions for the big weight-profile enumerations.")
@click.option("--seed", default=None, type=int,
              help="Seed for randomized subcommand modes (required there).")
@click.option("--machine", is_flag=True, help="Emit key=value records.")
@click.option("--budget-seconds", default=None, type=float,
              help="Abort (exit 3) once this much wall time is spent.")
@click.pass_context
def main(ctx, threads, seed, machine, budget_seconds):
    """Self-dual code constructions, derivations, and table verification."""
    if threads < 1:
        raise click.UsageError("--threads must be positive")
    ctx.obj = RunConfig(threads=threads, seed=seed, machine=machine,
                        budget_seconds=budget_seconds)


def _profile_for(case: fixtures.FixtureCase, code, cfg: RunConfig):
    if case.n == 32:
        return analysis.weight_profile(code)
    return analysis.weight_profile(code, w_max=14, threads=cfg.threads)


def _case_checks(case: fixtures.FixtureCase, cfg: RunConfig) -> list[str]:
    """All mismatches between a fixture case and its rebuilt code."""
    code = case.code()
    problems = []
    if (code.n, code.k) != (case.n, case.k):
        problems.append(f"built [{code.n},{code.k}], expected [{case.n},{case.k}]")
        return problems
    if not is_self_dual(code):
        problems.append("not self-dual")
        return problems
    prof = _profile_for(case, code, cfg)
    if prof.d_min != case.d:
        problems.append(f"d={prof.d_min}, expected {case.d}")
        return problems
    ctype = analysis.classify_type(code)
    if ctype != case.code_type:
        problems.append(f"type={ctype}, expected {case.code_type}")
    if case.family is not None:
        params = analysis.enumerator_params(prof)
        if params.family != case.family:
            problems.append(f"family={params.family}, expected {case.family}")
        if params.beta != case.beta:
            problems.append(f"beta={params.beta}, expected {case.beta}")
        if case.gamma is not None and params.gamma != case.gamma:
            problems.append(f"gamma={params.gamma}, expected {case.gamma}")
    return problems


@main.command()
@click.option("--fixture", "fixture_name", required=True,
              help="Fixture to rebuild and check (table1..table19, or all).")
@click.option("--prefix", type=int, default=None,
              help="Only check the first N members of the fixture.")
@click.pass_obj
def verify(cfg: RunConfig, fixture_name: str, prefix: Optional[int]):
    """Rebuild fixture codes and check them against their printed values."""
    cfg.header("verify", fixture=fixture_name, prefix=prefix)
    if fixture_name == "all":
        names = fixtures.fixture_names()
    else:
        try:
            fixtures.fixture_cases(fixture_name)
        except KeyError as exc:
            _fail(str(exc.args[0]))
        names = (fixture_name,)
    failures = 0
    for name in names:
        cases = fixtures.fixture_cases(name)
        if prefix is not None:
            cases = cases[:prefix]
        for case in cases:
            cfg.check_budget()
            problems = _case_checks(case, cfg)
            expected = (f"[{case.n},{case.k},{case.d}] type={case.code_type}"
                        + (f" family={case.family} beta={case.beta}" if case.family else "")
                        + (f" gamma={case.gamma}" if case.gamma is not None else ""))
            if cfg.machine:
                status = "pass" if not problems else "fail"
                line = (f"fixture={name} member={case.member} status={status}")
                if problems:
                    line += " reason=" + ";".join(p.replace(" ", "_") for p in problems)
                click.echo(line)
            elif problems:
                click.echo(f"FAIL {name}/{case.member}: " + "; ".join(problems))
            else:
                click.echo(f"PASS {name}/{case.member}: {expected}")
            failures += bool(problems)
    if failures:
        _fail(f"{failures} fixture member(s) failed", EXIT_MISMATCH)


def _filter_from_flags(cfg: RunConfig, mode: str, min_d: int, max_results: int,
                       require_type: str) -> SearchFilter:
    if mode == "random" and cfg.seed is None:
        raise click.UsageError("random mode requires an explicit --seed")
    return SearchFilter(min_distance_target=min_d, require_type=require_type,
                        max_results=max_results, seed=cfg.seed or 0, mode=mode)


@main.command()
@click.option("--group", "group_name", required=True, help="C<n> or D8.")
@click.option("--mode", type=click.Choice(["exhaustive", "random"]),
              default="exhaustive", show_default=True)
@click.option("--min-d", default=0, show_default=True)
@click.option("--max-results", default=1, show_default=True)
@click.option("--type", "require_type", type=click.Choice(["any", "I", "II"]),
              default="any", show_default=True)
@click.pass_obj
def search(cfg: RunConfig, group_name, mode, min_d, max_results, require_type):
    """Search binary generator triples whose block matrix is self-dual."""
    cfg.header("search", group=group_name, mode=mode, min_d=min_d,
               max_results=max_results, type=require_type)
    try:
        group = group_by_name(group_name)
        flt = _filter_from_flags(cfg, mode, min_d, max_results, require_type)
        stream = construct.search_base(group, flt)
    except ValueError as exc:
        _fail(str(exc))
    for triple, code in stream:
        cfg.check_budget()
        text = format_triple(triple)
        if cfg.machine:
            click.echo(f"triple={text} n={code.n} k={code.k}")
        else:
            click.echo(text)


@main.command()
@click.option("--lift-of", "base_text", required=True,
              help="Binary triple to lift, e.g. 'C8:00000111;C8:...;C8:...'.")
@click.option("--mode", type=click.Choice(["exhaustive", "random"]),
              default="random", show_default=True)
@click.option("--min-d", default=0, show_default=True)
@click.option("--max-results", default=1, show_default=True)
@click.option("--type", "require_type", type=click.Choice(["any", "I", "II"]),
              default="any", show_default=True)
@click.pass_obj
def lift(cfg: RunConfig, base_text, mode, min_d, max_results, require_type):
    """Search lifts of a binary triple; filters apply to the Gray image."""
    cfg.header("lift", lift_of=base_text, mode=mode, min_d=min_d,
               max_results=max_results, type=require_type)
    try:
        base = parse_triple(base_text, alphabet="F2")
        flt = _filter_from_flags(cfg, mode, min_d, max_results, require_type)
        stream = construct.enumerate_lifts(base, flt)
    except ValueError as exc:
        _fail(str(exc))
    for triple, code in stream:
        cfg.check_budget()
        text = format_triple(triple)
        if cfg.machine:
            click.echo(f"triple={text} n={code.n} k={code.k}")
        else:
            click.echo(text)


@main.command()
@click.option("--code", "code_path", required=True, type=click.Path())
@click.option("--c", "c_text", required=True, type=click.Choice(["0", "1", "u", "3"]),
              help="Unit with c^2 = 1 (0 is always rejected).")
@click.option("--x", "x_text", required=True,
              help="Extension vector over the code's alphabet.")
@click.pass_obj
def extend(cfg: RunConfig, code_path, c_text, x_text):
    """Extend a self-dual code to length n+2 with a (c, X) witness."""
    cfg.header("extend", code=code_path, c=c_text, x=x_text)
    code = _load_code(code_path)
    try:
        if isinstance(code, BinaryCode):
            witness = derive.ExtensionWitness(
                c=ring_from_char(c_text), x=BitVector.from_text(x_text))
        else:
            witness = derive.ExtensionWitness(
                c=ring_from_char(c_text), x=RingVector.from_text(x_text))
        out = derive.extend(code, witness)
    except ValueError as exc:
        _fail(str(exc))
    click.echo(format_code(out), nl=False)


@main.command()
@click.option("--code", "code_path", required=True, type=click.Path())
@click.option("--x", "x_text", required=True, help="Witness bits.")
@click.option("--pad-tail", is_flag=True,
              help="Treat --x as a printed tail: embed it through the code's "
                   "systematic presentation instead of ambient coordinates.")
@click.pass_obj
def neighbour(cfg: RunConfig, code_path, x_text, pad_tail):
    """Replace a self-dual code by a neighbour through one witness."""
    cfg.header("neighbour", code=code_path, x=x_text, pad_tail=pad_tail)
    code = _load_code(code_path)
    if not isinstance(code, BinaryCode):
        _fail("neighbour steps apply to binary codes; take the Gray image first")
    try:
        if pad_tail:
            out = derive.tail_neighbour(code, x_text).code
        else:
            out = derive.neighbour(code, BitVector.from_text(x_text))
    except ValueError as exc:
        _fail(str(exc))
    click.echo(format_code(out), nl=False)


@main.command()
@click.option("--code", "code_path", required=True, type=click.Path())
@click.option("--witness-file", "witness_path", required=True, type=click.Path(),
              help="One witness per line: full-length bits, or printed tails "
                   "(half length) threaded through systematic presentations.")
@click.pass_obj
def chain(cfg: RunConfig, code_path, witness_path):
    """Apply a sequence of neighbour witnesses; print the final code."""
    cfg.header("chain", code=code_path, witness_file=witness_path)
    code = _load_code(code_path)
    if not isinstance(code, BinaryCode):
        _fail("chains apply to binary codes; take the Gray image first")
    try:
        with open(witness_path) as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
    except OSError as exc:
        _fail(f"cannot read {witness_path}: {exc.strerror}")
    for ln in lines:
        if len(ln) not in (code.n, code.n // 2):
            _fail(f"witness length {len(ln)} fits neither ambient ({code.n}) "
                  f"nor tail ({code.n // 2}) form")
    cur = code
    presentation = None
    for i, ln in enumerate(lines):
        cfg.check_budget()
        try:
            if len(ln) == code.n:
                cur = derive.neighbour(cur, BitVector.from_text(ln))
                presentation = None
            else:
                if presentation is None:
                    presentation = derive.systematic_permutation(cur)
                step = derive.tail_neighbour(cur, ln, presentation)
                cur, presentation = step.code, step.presentation
        except ValueError as exc:
            _fail(f"chain step {i}: {exc}")
        if cfg.machine:
            click.echo(f"step={i} n={cur.n} k={cur.k} self_dual=yes")
        else:
            click.echo(f"step {i}: [{cur.n},{cur.k}] self-dual")
    click.echo(format_code(cur), nl=False)


@main.command()
@click.option("--code", "code_path", required=True, type=click.Path())
@click.option("--wmax", default=14, show_default=True,
              help="Profile weights up to this bound.")
@click.option("--full", is_flag=True, help="Profile the complete distribution.")
@click.pass_obj
def analyze(cfg: RunConfig, code_path, wmax, full):
    """Weight profile, enumerator family parameters, type, extremality."""
    cfg.header("analyze", code=code_path, wmax=wmax, full=full)
    code = _load_code(code_path)
    if isinstance(code, RingCode):
        code = gray_image(code)
    w_max = None if full else min(wmax, code.n)
    try:
        prof = analysis.weight_profile(code, w_max=w_max, threads=cfg.threads)
    except ValueError as exc:
        _fail(str(exc))
    sep = "=" if cfg.machine else " = "
    for w in range(prof.w_max + 1):
        click.echo(f"A_{w}{sep}{prof.count(w)}")
    click.echo(f"d={prof.d_min if prof.d_min is not None else '-'}")
    try:
        params = analysis.enumerator_params(prof)
        click.echo(f"family={params.family}")
        click.echo(f"beta={params.beta}")
        click.echo(f"gamma={params.gamma if params.gamma is not None else '-'}")
    except ValueError:
        click.echo("family=-")
        click.echo("beta=-")
        click.echo("gamma=-")
    ctype = analysis.classify_type(code)
    click.echo(f"type={ctype if ctype != analysis.NOT_SELF_DUAL else '-'}")
    if prof.d_min is None or ctype == analysis.NOT_SELF_DUAL:
        click.echo("extremal=-")
    else:
        verdict = analysis.extremality(code.n, prof.d_min, ctype)
        click.echo(f"extremal={'yes' if verdict == analysis.EXTREMAL else 'no'}")


@main.group(name="catalog")
@click.option("--dir", "store_dir", required=True, type=click.Path(),
              help="Catalog directory (created if missing).")
@click.pass_context
def catalog_group(ctx, store_dir):
    """Persistent store of verified codes with provenance and novelty."""
    ctx.obj = (ctx.obj, catalog.CatalogStore(store_dir))


@catalog_group.command(name="add")
@click.option("--id", "record_id", required=True)
@click.option("--code", "code_path", required=True, type=click.Path())
@click.option("--provenance", "prov_path", type=click.Path(), default=None,
              help="File with one provenance step per line.")
@click.option("--aut-claim", type=int, default=None,
              help="Printed automorphism-group order (stored unverified).")
@click.pass_obj
def catalog_add(obj, record_id, code_path, prov_path, aut_claim):
    """Analyze, fingerprint, and store a self-dual code."""
    cfg, store = obj
    cfg.header("catalog-add", id=record_id, code=code_path,
               provenance=prov_path, aut_claim=aut_claim, dir=str(store.root))
    code = _load_code(code_path)
    if isinstance(code, RingCode):
        _fail("the catalog stores binary codes; take the Gray image first")
    provenance = ()
    if prov_path is not None:
        try:
            with open(prov_path) as fh:
                provenance = tuple(ln.strip() for ln in fh if ln.strip())
        except OSError as exc:
            _fail(f"cannot read {prov_path}: {exc.strerror}")
    try:
        rec = store.ingest(record_id, code, provenance,
                           aut_order_claim=aut_claim, threads=cfg.threads)
    except catalog.CatalogError as exc:
        _fail(str(exc))
    click.echo(catalog.index_line(rec))


@catalog_group.command(name="list")
@click.pass_obj
def catalog_list(obj):
    """Print the index: id n k d family beta gamma novelty."""
    cfg, store = obj
    cfg.header("catalog-list", dir=str(store.root))
    for record_id in store.ids():
        click.echo(catalog.index_line(store.load(record_id)))
    click.echo(store.summary())


@catalog_group.command(name="show")
@click.option("--id", "record_id", required=True)
@click.pass_obj
def catalog_show(obj, record_id):
    """Print one stored record verbatim."""
    cfg, store = obj
    cfg.header("catalog-show", id=record_id, dir=str(store.root))
    try:
        rec = store.load(record_id)
    except catalog.CatalogError as exc:
        _fail(str(exc))
    click.echo(catalog._record_text(rec), nl=False)


@catalog_group.command(name="replay")
@click.option("--id", "record_id", required=True)
@click.pass_obj
def catalog_replay(obj, record_id):
    """Re-execute a record's provenance and check its fingerprint."""
    cfg, store = obj
    cfg.header("catalog-replay", id=record_id, dir=str(store.root))
    try:
        store.replay(record_id)
    except catalog.ReplayMismatch as exc:
        _fail(str(exc), EXIT_MISMATCH)
    except catalog.CatalogError as exc:
        _fail(str(exc))
    click.echo(f"replay {record_id}: fingerprint reproduced")


@catalog_group.command(name="novelty")
@click.option("--id", "record_id", default=None,
              help="Record to classify; omit for the table-level report.")
@click.pass_obj
def catalog_novelty(obj, record_id):
    """Novelty of one record, or the known/new consistency report."""
    cfg, store = obj
    cfg.header("catalog-novelty", id=record_id, dir=str(store.root))
    if record_id is not None:
        try:
            rec = store.load(record_id)
        except catalog.CatalogError as exc:
            _fail(str(exc))
        click.echo(f"{record_id} novelty={rec.novelty} "
                   f"fingerprint={rec.fingerprint.as_line()}")
        return
    table = catalog.default_table()
    click.echo(table.conflict_report())
    click.echo(store.summary(table))


def run() -> None:
    """Console-script shim: usage errors exit 2, budget aborts exit 3."""
    try:
        main(standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        sys.exit(exc.exit_code)
    except click.exceptions.Exit as exc:
        sys.exit(exc.exit_code)
    except click.exceptions.Abort:
        sys.exit(EXIT_INVALID)


if __name__ == "__main__":
    run()
