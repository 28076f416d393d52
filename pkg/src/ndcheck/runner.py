"""Test runner: binds generated inputs to properties, enforces budgets and
drop limits, detects exhaustive domains, and produces structured reports.
"""

from __future__ import annotations

import json
import tempfile
from collections import Counter
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Callable

from .gen import BaseType, Generator
from .prop import (
    DROPPED,
    FALSIFIED,
    INCONCLUSIVE,
    SATISFIED,
    EvalContext,
    Prop,
)
from .searchtree import DEFAULT_NODE_BUDGET, Strategy, enumerate_tree
from .values import render_args

# spec kinds
UNIT = "unit"
PARAM = "param"
POLY = "poly"
IO = "io"

# spec origins
USER = "user"
CONTRACT = "contract"

# verdicts
PASSED = "Passed"
PASSED_EXHAUSTIVE = "PassedExhaustive"
FALSIFIED_V = "Falsified"
EXHAUSTED_V = "Exhausted"
SKIPPED_PROVED = "SkippedProved"
ERROR = "Error"

_PASSING = (PASSED, PASSED_EXHAUSTIVE, SKIPPED_PROVED)


@dataclass(frozen=True)
class TestSpec:
    """A registered, named, located test.

    kind selects the payload: a unit or io test carries a ready property; a
    parameterized test carries an input generator and a property-producing
    body; a polymorphic test carries one parameterized instantiation per
    base type (all four must be present).
    """

    __test__ = False  # not a pytest class, despite the name

    name: str
    module: str
    line: int | None = None
    kind: str = UNIT
    prop: Prop | None = None
    input_gen: Generator | None = None
    body: Callable[..., Prop] | None = None
    arity: int = 1
    by_base_type: dict[BaseType, "TestSpec"] | None = None
    origin: str = USER
    proof_file: str | None = None


@dataclass(frozen=True)
class RunConfig:
    max_tests: int = 100
    drop_limit: int = 10_000
    default_base_type: BaseType = BaseType.ORDERING
    strategy_kind: str = "rand_level_diag"
    seed: int = 0
    node_budget: int = DEFAULT_NODE_BUDGET
    value_budget: int = 10_000
    proof_dir: str | Path | None = None
    selection: tuple[str, ...] = ()
    scratch_dir: str | Path | None = None

    def __post_init__(self):
        if self.max_tests < 1:
            raise ValueError("max_tests must be >= 1")
        if self.drop_limit < 1:
            raise ValueError("drop_limit must be >= 1")

    @property
    def strategy(self) -> Strategy:
        return Strategy(self.strategy_kind, self.seed, self.node_budget)


@dataclass(frozen=True)
class Verdict:
    kind: str
    tests_executed: int = 0
    tests_dropped: int = 0
    case_index: int | None = None
    arguments: str | None = None
    results: str | None = None
    message: str | None = None
    proof_file: str | None = None
    counterexample: Any = None  # raw failing input, for re-evaluation


@dataclass(frozen=True)
class TestEntry:
    __test__ = False

    name: str
    module: str
    line: int | None
    verdict: Verdict
    labels: tuple[tuple[str, int], ...] = ()  # label frequency, sorted


@dataclass(frozen=True)
class TestReport:
    __test__ = False

    entries: tuple[TestEntry, ...]

    @property
    def summary(self) -> dict[str, int]:
        counts = Counter(e.verdict.kind for e in self.entries)
        return dict(sorted(counts.items()))

    @property
    def exit_code(self) -> int:
        return 0 if all(e.verdict.kind in _PASSING for e in self.entries) else 1

    def entry(self, name: str) -> TestEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)


def _context(cfg: RunConfig, scratch: Path | None) -> EvalContext:
    return EvalContext(
        strategy=cfg.strategy,
        value_budget=cfg.value_budget,
        for_all_limit=cfg.max_tests,
        scratch_dir=scratch,
    )


def instantiate_poly(spec: TestSpec, cfg: RunConfig) -> TestSpec:
    """Pick the instantiation for the configured base type and rename it.

    Non-polymorphic specs pass through unchanged.
    """
    if spec.kind != POLY:
        return spec
    if not spec.by_base_type or cfg.default_base_type not in spec.by_base_type:
        raise LookupError(
            f"{spec.name}: no instantiation for base type {cfg.default_base_type.value}"
        )
    inst = spec.by_base_type[cfg.default_base_type]
    return replace(
        inst,
        name=f"{spec.name}_ON_BASETYPE",
        module=spec.module,
        line=spec.line,
        origin=spec.origin,
    )


def run_param(spec: TestSpec, cfg: RunConfig, ctx: EvalContext | None = None) -> tuple[Verdict, Counter]:
    """Run one parameterized test: draw de-duplicated inputs, evaluate the
    body per input, and account executed and dropped cases."""
    ctx = ctx or _context(cfg, None)
    assert spec.input_gen is not None and spec.body is not None
    enum = enumerate_tree(spec.input_gen.tree, ctx.strategy)
    seen: set = set()
    labels: Counter = Counter()
    executed = 0
    dropped = 0
    stream = iter(enum)
    while executed < cfg.max_tests and dropped < cfg.drop_limit:
        try:
            raw = next(stream)
        except StopIteration:
            break
        key = ctx.key_fn(raw)
        if key in seen:
            continue
        seen.add(key)
        try:
            prop = spec.body(*raw) if spec.arity > 1 else spec.body(raw)
            out = prop.check(ctx)
        except Exception as exc:  # noqa: BLE001 - a failing test body is a verdict
            return (
                Verdict(
                    ERROR,
                    tests_executed=executed,
                    tests_dropped=dropped,
                    message=f"{type(exc).__name__}: {exc} (input {render_args(raw, spec.arity)})",
                ),
                labels,
            )
        labels.update(out.labels)
        if out.status == DROPPED:
            dropped += 1
            continue
        if out.status == FALSIFIED:
            executed += 1
            return (
                Verdict(
                    FALSIFIED_V,
                    tests_executed=executed,
                    tests_dropped=dropped,
                    case_index=executed,
                    arguments=render_args(raw, spec.arity),
                    results=out.results,
                    counterexample=raw,
                ),
                labels,
            )
        if out.status == INCONCLUSIVE:
            return (
                Verdict(
                    ERROR,
                    tests_executed=executed,
                    tests_dropped=dropped,
                    message=f"{out.detail} (input {render_args(raw, spec.arity)})",
                ),
                labels,
            )
        executed += 1
    if executed >= cfg.max_tests:
        return Verdict(PASSED, tests_executed=executed, tests_dropped=dropped), labels
    if enum.budget_exceeded:
        return (
            Verdict(
                ERROR,
                tests_executed=executed,
                tests_dropped=dropped,
                message=(
                    f"input generator exceeded the node budget after {executed} tests;"
                    " domain coverage undecided"
                ),
            ),
            labels,
        )
    # input domain ended: full enumeration or drop limit
    if executed > 0:
        return (
            Verdict(PASSED_EXHAUSTIVE, tests_executed=executed, tests_dropped=dropped),
            labels,
        )
    return Verdict(EXHAUSTED_V, tests_executed=0, tests_dropped=dropped), labels


def _run_prop_once(spec: TestSpec, ctx: EvalContext) -> tuple[Verdict, Counter]:
    labels: Counter = Counter()
    try:
        out = spec.prop.check(ctx)
    except Exception as exc:  # noqa: BLE001
        return Verdict(ERROR, message=f"{type(exc).__name__}: {exc}"), labels
    labels.update(out.labels)
    if out.status == SATISFIED:
        return Verdict(PASSED, tests_executed=1), labels
    if out.status == FALSIFIED:
        return (
            Verdict(
                FALSIFIED_V,
                tests_executed=1,
                case_index=1,
                arguments=out.arguments,
                results=out.results,
            ),
            labels,
        )
    if out.status == DROPPED:
        return Verdict(EXHAUSTED_V, tests_executed=0, tests_dropped=1), labels
    return Verdict(ERROR, message=out.detail), labels


def run_suite(specs: list[TestSpec], cfg: RunConfig) -> TestReport:
    """Execute the given specs in registration order under one configuration.

    Proof files (if a proof directory is configured) turn matching specs
    into skipped entries; everything else gets exactly one verdict.
    """
    if cfg.proof_dir is not None:
        from .contracts import apply_proofs, scan_proofs

        specs = apply_proofs(specs, scan_proofs(cfg.proof_dir))
    entries: list[TestEntry] = []
    tmp: tempfile.TemporaryDirectory | None = None
    if cfg.scratch_dir is not None:
        scratch = Path(cfg.scratch_dir)
    else:
        tmp = tempfile.TemporaryDirectory(prefix="ndcheck-")
        scratch = Path(tmp.name)
    try:
        ctx = _context(cfg, scratch)
        for spec in specs:
            entries.append(_run_spec(spec, cfg, ctx))
    finally:
        if tmp is not None:
            tmp.cleanup()
    return TestReport(tuple(entries))


def _run_spec(spec: TestSpec, cfg: RunConfig, ctx: EvalContext) -> TestEntry:
    name, module, line = spec.name, spec.module, spec.line
    labels: Counter = Counter()
    if spec.proof_file is not None:
        verdict = Verdict(SKIPPED_PROVED, proof_file=spec.proof_file)
    elif spec.kind == POLY:
        try:
            inst = instantiate_poly(spec, cfg)
        except LookupError as exc:
            inst = None
            verdict = Verdict(ERROR, message=str(exc))
        if inst is not None:
            name = inst.name
            verdict, labels = run_param(inst, cfg, ctx)
    elif spec.kind == PARAM:
        verdict, labels = run_param(spec, cfg, ctx)
    elif spec.kind in (UNIT, IO):
        verdict, labels = _run_prop_once(spec, ctx)
    else:
        verdict = Verdict(ERROR, message=f"unknown spec kind {spec.kind!r}")
    label_table = tuple(sorted(labels.items(), key=lambda kv: (-kv[1], kv[0])))
    return TestEntry(name, module, line, verdict, label_table)


# -- rendering -------------------------------------------------------------


def _ordinal(n: int) -> str:
    if n % 100 in (11, 12, 13):
        return f"{n}th"
    suffix = {1: "st", 2: "nd", 3: "rd"}.get(n % 10, "th")
    return f"{n}{suffix}"


def _verdict_lines(e: TestEntry) -> list[str]:
    v = e.verdict
    if v.kind == PASSED:
        return [f" OK, passed {v.tests_executed} tests."]
    if v.kind == PASSED_EXHAUSTIVE:
        return [f" Passed all available tests: {v.tests_executed} tests."]
    if v.kind == EXHAUSTED_V:
        return [f" Arguments exhausted after {v.tests_executed} test."]
    if v.kind == SKIPPED_PROVED:
        return [f" Skipped: proved by {v.proof_file}."]
    if v.kind == ERROR:
        return [f" Error: {v.message}"]
    lines = [f"Falsified by {_ordinal(v.case_index)} test."]
    if v.arguments is not None:
        lines.append(f"Arguments: {v.arguments}")
    if v.results is not None:
        lines.append(f"Results: {v.results}")
    return lines


def _entry_header(e: TestEntry) -> str:
    if e.line is not None:
        return f"{e.name} (module {e.module}, line {e.line}):"
    return f"{e.name} (module {e.module}):"


def render_report(report: TestReport, fmt: str = "text") -> str:
    """Render a report as human-readable text or as JSON lines (one record
    per test, fixed field order)."""
    if fmt == "text":
        blocks = []
        for e in report.entries:
            lines = [_entry_header(e)] + _verdict_lines(e)
            lines += [f" {count}x {label}" for label, count in e.labels]
            blocks.append("\n".join(lines))
        return "\n".join(blocks)
    if fmt == "json":
        records = []
        for e in report.entries:
            v = e.verdict
            records.append(
                json.dumps(
                    {
                        "name": e.name,
                        "module": e.module,
                        "line": e.line,
                        "verdict": v.kind,
                        "tests_executed": v.tests_executed,
                        "tests_dropped": v.tests_dropped,
                        "case_index": v.case_index,
                        "arguments": v.arguments,
                        "results": v.results,
                        "labels": {k: c for k, c in e.labels},
                        "proof_file": v.proof_file,
                        "message": v.message,
                    }
                )
            )
        return "\n".join(records)
    raise ValueError(f"unknown report format: {fmt!r}")
