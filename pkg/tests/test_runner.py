"""Runner verdicts, accounting, and report rendering."""

import json

import pytest

from ndcheck.gen import BaseType, Generator, builtin, pair_of
from ndcheck.prop import EvalContext, classify, implies, is_equal, returns
from ndcheck.runner import (
    ERROR,
    EXHAUSTED_V,
    FALSIFIED_V,
    IO,
    PARAM,
    PASSED,
    PASSED_EXHAUSTIVE,
    POLY,
    SKIPPED_PROVED,
    UNIT,
    RunConfig,
    TestEntry,
    TestReport,
    TestSpec,
    Verdict,
    instantiate_poly,
    render_report,
    run_param,
    run_suite,
)
from ndcheck.searchtree import Strategy, choice, defer, enumerate_tree, one_of, value
from ndcheck.values import canonical


def nat_chain(k=0):
    return choice(value(k), defer(lambda: nat_chain(k + 1)))


def param_spec(gen, body, name="p", arity=1):
    return TestSpec(name=name, module="T", line=1, kind=PARAM, input_gen=gen, body=body, arity=arity)


def input_order(gen, cfg, n):
    """Replay the runner's de-duplicated input stream independently."""
    seen, out = set(), []
    for v in enumerate_tree(gen.tree, cfg.strategy):
        k = canonical(v)
        if k in seen:
            continue
        seen.add(k)
        out.append(v)
        if len(out) >= n:
            break
    return out


class TestRunParam:
    def test_finite_domain_pass_is_exhaustive(self):
        gen = pair_of(builtin(BaseType.BOOL), builtin(BaseType.BOOL))
        spec = param_spec(gen, lambda a, b: is_equal(not (a or b), (not a) and (not b)), arity=2)
        verdict, _ = run_param(spec, RunConfig())
        assert verdict.kind == PASSED_EXHAUSTIVE
        assert verdict.tests_executed == 4

    def test_infinite_domain_pass_stops_at_max_tests(self):
        spec = param_spec(builtin(BaseType.INT), lambda n: is_equal(n, n))
        verdict, _ = run_param(spec, RunConfig(max_tests=37))
        assert verdict.kind == PASSED and verdict.tests_executed == 37

    def test_domain_exactly_max_tests_counts_as_plain_pass(self):
        gen = Generator(one_of(range(10)), "ten")
        spec = param_spec(gen, lambda n: is_equal(n, n))
        verdict, _ = run_param(spec, RunConfig(max_tests=10))
        assert verdict.kind == PASSED and verdict.tests_executed == 10

    def test_all_dropped_is_exhausted_zero(self):
        spec = param_spec(
            builtin(BaseType.INT),
            lambda n: implies(False, lambda: is_equal(n, n)),
        )
        cfg = RunConfig(drop_limit=200)
        verdict, _ = run_param(spec, cfg)
        assert verdict.kind == EXHAUSTED_V
        assert verdict.tests_executed == 0
        assert verdict.tests_dropped == 200

    def test_finite_domain_with_drops_passes_exhaustively(self):
        gen = Generator(one_of(range(8)), "eight")
        spec = param_spec(gen, lambda n: implies(n % 2 == 0, lambda: is_equal(n, n)))
        verdict, _ = run_param(spec, RunConfig())
        assert verdict.kind == PASSED_EXHAUSTIVE
        assert verdict.tests_executed == 4
        assert verdict.tests_dropped == 4

    def test_drop_accounting_sums_to_drawn_inputs(self):
        gen = Generator(one_of(range(8)), "eight")
        spec = param_spec(gen, lambda n: implies(n % 2 == 0, lambda: is_equal(n, n)))
        verdict, _ = run_param(spec, RunConfig())
        assert verdict.tests_executed + verdict.tests_dropped == 8

    def test_falsification_records_case_and_counterexample(self):
        cfg = RunConfig()
        gen = Generator(one_of(range(10)), "ten")
        bad = input_order(gen, cfg, 10)[2]  # third drawn input will fail
        spec = param_spec(gen, lambda n, bad=bad: is_equal(n == bad, False))
        verdict, _ = run_param(spec, cfg)
        assert verdict.kind == FALSIFIED_V
        assert verdict.case_index == 3
        assert verdict.counterexample == bad
        assert verdict.arguments == str(bad)

    def test_case_index_ignores_dropped_cases(self):
        cfg = RunConfig()
        gen = Generator(one_of(range(12)), "twelve")
        order = input_order(gen, cfg, 12)
        evens = [n for n in order if n % 2 == 0]
        bad = evens[1]  # second executed case
        spec = param_spec(
            gen,
            lambda n, bad=bad: implies(n % 2 == 0, lambda: is_equal(n == bad, False)),
        )
        verdict, _ = run_param(spec, cfg)
        assert verdict.kind == FALSIFIED_V
        assert verdict.case_index == 2
        assert verdict.counterexample == bad

    def test_monotonic_case_index_under_larger_max_tests(self):
        gen = builtin(BaseType.INT)
        spec = param_spec(gen, lambda n: is_equal(abs(n) < 15, True))
        small, _ = run_param(spec, RunConfig(max_tests=80))
        large, _ = run_param(spec, RunConfig(max_tests=160))
        assert small.kind == large.kind == FALSIFIED_V
        assert small.case_index == large.case_index
        assert small.counterexample == large.counterexample

    def test_body_exception_is_an_error_verdict(self):
        def body(n):
            raise RuntimeError("boom")

        spec = param_spec(builtin(BaseType.INT), body)
        verdict, _ = run_param(spec, RunConfig(max_tests=5))
        assert verdict.kind == ERROR
        assert "boom" in verdict.message

    def test_inconclusive_outcome_is_an_error_verdict(self):
        spec = param_spec(
            builtin(BaseType.BOOL),
            lambda _b: is_equal(nat_chain(), value(0)),
        )
        cfg = RunConfig(node_budget=2)
        verdict, _ = run_param(spec, cfg)
        assert verdict.kind == ERROR
        assert "undecided" in verdict.message

    def test_input_budget_exhaustion_is_an_error_not_exhaustive_pass(self):
        spec = param_spec(Generator(nat_chain(), "nats"), lambda n: is_equal(n, n))
        verdict, _ = run_param(spec, RunConfig(max_tests=100_000, node_budget=60))
        assert verdict.kind == ERROR
        assert "budget" in verdict.message

    def test_reproducible_for_fixed_seed(self):
        spec = param_spec(builtin(BaseType.INT), lambda n: is_equal(n, n))
        cfg = RunConfig(max_tests=50, seed=21)
        assert run_param(spec, cfg) == run_param(spec, cfg)

    def test_exhaustive_count_matches_brute_force(self):
        # PassedExhaustive(n) must equal the number of distinct,
        # guard-satisfying values in the (small, finite) domain
        domains = [list(range(6)), [1, 1, 2, 3], list(range(13)), ["a", "b", "a"]]
        guards = [lambda v: True, lambda v: str(v) < "4"]
        for domain in domains:
            for guard in guards:
                gen = Generator(one_of(domain), "dom")
                spec = param_spec(
                    gen,
                    lambda v, g=guard: implies(g(v), lambda: is_equal(v, v)),
                )
                verdict, _ = run_param(spec, RunConfig())
                expect = len({canonical(v) for v in domain if guard(v)})
                if expect:
                    assert verdict.kind == PASSED_EXHAUSTIVE
                    assert verdict.tests_executed == expect
                else:
                    assert verdict.kind == EXHAUSTED_V


class TestPoly:
    def poly(self):
        by = {
            bt: TestSpec(
                name="prop", module="M", line=2, kind=PARAM,
                input_gen=builtin(bt), body=lambda v: is_equal(v, v),
            )
            for bt in BaseType
        }
        return TestSpec(name="prop", module="M", line=2, kind=POLY, by_base_type=by)

    def test_renamed_with_base_type_suffix(self):
        inst = instantiate_poly(self.poly(), RunConfig())
        assert inst.name == "prop_ON_BASETYPE"
        assert inst.kind == PARAM
        assert inst.input_gen.name == "Ordering"

    def test_configured_base_type_selected(self):
        inst = instantiate_poly(self.poly(), RunConfig(default_base_type=BaseType.INT))
        assert inst.input_gen.name == "Int"

    def test_non_poly_specs_unchanged(self):
        spec = param_spec(builtin(BaseType.INT), lambda n: is_equal(n, n))
        assert instantiate_poly(spec, RunConfig()) is spec

    def test_missing_instantiation_is_an_error_verdict(self):
        broken = TestSpec(
            name="prop", module="M", line=2, kind=POLY,
            by_base_type={BaseType.INT: self.poly().by_base_type[BaseType.INT]},
        )
        report = run_suite([broken], RunConfig())
        assert report.entries[0].verdict.kind == ERROR


class TestRunSuite:
    def test_one_verdict_per_spec_in_registration_order(self):
        specs = [
            TestSpec(name="u1", module="M", line=1, kind=UNIT, prop=is_equal(1, 1)),
            param_spec(builtin(BaseType.BOOL), lambda b: is_equal(b, b), name="p1"),
            TestSpec(name="u2", module="M", line=3, kind=UNIT, prop=is_equal(1, 2)),
        ]
        report = run_suite(specs, RunConfig())
        assert [e.name for e in report.entries] == ["u1", "p1", "u2"]
        assert [e.verdict.kind for e in report.entries] == [
            PASSED, PASSED_EXHAUSTIVE, FALSIFIED_V,
        ]

    def test_io_specs_share_scratch_in_order(self):
        def write(p):
            (p / "TEST").write_text("Hello")
            return None

        def read(p):
            return (p / "TEST").read_text()

        specs = [
            TestSpec(name="w", module="IO", line=1, kind=IO, prop=returns(write, None)),
            TestSpec(name="r", module="IO", line=2, kind=IO, prop=returns(read, "Hello")),
        ]
        report = run_suite(specs, RunConfig())
        assert [e.verdict.kind for e in report.entries] == [PASSED, PASSED]

    def test_unit_dropped_guard_reports_exhausted_zero(self):
        spec = TestSpec(
            name="u", module="M", line=1, kind=UNIT,
            prop=implies(False, lambda: is_equal(1, 1)),
        )
        report = run_suite([spec], RunConfig())
        assert report.entries[0].verdict.kind == EXHAUSTED_V

    def test_proof_dir_marks_specs_skipped(self, tmp_path):
        (tmp_path / "proof-u1.agda").write_text("qed")
        specs = [
            TestSpec(name="u1", module="M", line=1, kind=UNIT, prop=is_equal(1, 2)),
            TestSpec(name="u2", module="M", line=2, kind=UNIT, prop=is_equal(1, 1)),
        ]
        report = run_suite(specs, RunConfig(proof_dir=tmp_path))
        assert report.entries[0].verdict.kind == SKIPPED_PROVED
        assert report.entries[0].verdict.proof_file == "proof-u1.agda"
        assert report.entries[1].verdict.kind == PASSED

    def test_labels_aggregate_into_frequency_table(self):
        gen = Generator(one_of(range(10)), "ten")
        spec = param_spec(
            gen,
            lambda n: classify(n % 2 == 0, "even", is_equal(n, n)),
        )
        report = run_suite([spec], RunConfig())
        assert report.entries[0].labels == (("even", 5),)


class TestExitCodes:
    def entry(self, kind, **kw):
        return TestEntry("t", "M", 1, Verdict(kind, **kw))

    def test_all_passing_kinds_exit_zero(self):
        report = TestReport(
            (
                self.entry(PASSED, tests_executed=100),
                self.entry(PASSED_EXHAUSTIVE, tests_executed=4),
                self.entry(SKIPPED_PROVED, proof_file="proof-t.agda"),
            )
        )
        assert report.exit_code == 0

    @pytest.mark.parametrize(
        "verdict",
        [
            Verdict(FALSIFIED_V, tests_executed=1, case_index=1),
            Verdict(EXHAUSTED_V, tests_executed=0),
            Verdict(ERROR, message="x"),
        ],
    )
    def test_any_failing_verdict_exits_one(self, verdict):
        report = TestReport(
            (
                TestEntry("ok", "M", 1, Verdict(PASSED, tests_executed=100)),
                TestEntry("bad", "M", 2, verdict),
            )
        )
        assert report.exit_code == 1

    def test_exit_code_depends_only_on_verdict_multiset(self):
        a = TestReport((self.entry(PASSED, tests_executed=1), self.entry(FALSIFIED_V, tests_executed=1, case_index=1)))
        b = TestReport((self.entry(FALSIFIED_V, tests_executed=1, case_index=1), self.entry(PASSED, tests_executed=1)))
        assert a.exit_code == b.exit_code == 1


class TestRendering:
    def test_passed_line(self):
        e = TestEntry("revLength_ON_BASETYPE", "Rev", 9, Verdict(PASSED, tests_executed=100))
        assert render_report(TestReport((e,))) == (
            "revLength_ON_BASETYPE (module Rev, line 9):\n OK, passed 100 tests."
        )

    def test_exhaustive_line(self):
        e = TestEntry("negOr", "BoolTest", 4, Verdict(PASSED_EXHAUSTIVE, tests_executed=4))
        assert render_report(TestReport((e,))) == (
            "negOr (module BoolTest, line 4):\n Passed all available tests: 4 tests."
        )

    def test_exhausted_line(self):
        e = TestEntry("revRevIsIdLong", "Rev", 13, Verdict(EXHAUSTED_V, tests_executed=0, tests_dropped=10_000))
        assert render_report(TestReport((e,))) == (
            "revRevIsIdLong (module Rev, line 13):\n Arguments exhausted after 0 test."
        )

    def test_falsified_block(self):
        e = TestEntry(
            "concIsCommutative",
            "ConcDup",
            20,
            Verdict(
                FALSIFIED_V,
                tests_executed=8,
                case_index=8,
                arguments="[-1] [-3]",
                results="([-1,-3],[-3,-1])",
            ),
        )
        assert render_report(TestReport((e,))) == (
            "concIsCommutative (module ConcDup, line 20):\n"
            "Falsified by 8th test.\n"
            "Arguments: [-1] [-3]\n"
            "Results: ([-1,-3],[-3,-1])"
        )

    def test_line_omitted_when_unknown(self):
        e = TestEntry("t", "M", None, Verdict(PASSED, tests_executed=1))
        assert render_report(TestReport((e,))).startswith("t (module M):")

    @pytest.mark.parametrize(
        "n,word",
        [(1, "1st"), (2, "2nd"), (3, "3rd"), (4, "4th"), (11, "11th"), (12, "12th"),
         (13, "13th"), (21, "21st"), (22, "22nd"), (23, "23rd"), (101, "101st"), (111, "111th")],
    )
    def test_ordinals(self, n, word):
        e = TestEntry("t", "M", 1, Verdict(FALSIFIED_V, tests_executed=n, case_index=n))
        assert f"Falsified by {word} test." in render_report(TestReport((e,)))

    def test_json_lines_carry_all_fields(self):
        e = TestEntry(
            "t", "M", 7,
            Verdict(FALSIFIED_V, tests_executed=3, tests_dropped=1, case_index=3,
                    arguments="[1]", results="(a,b)"),
            labels=(("even", 2),),
        )
        rec = json.loads(render_report(TestReport((e,)), "json"))
        assert rec == {
            "name": "t", "module": "M", "line": 7, "verdict": "Falsified",
            "tests_executed": 3, "tests_dropped": 1, "case_index": 3,
            "arguments": "[1]", "results": "(a,b)", "labels": {"even": 2},
            "proof_file": None, "message": None,
        }

    def test_unknown_format_rejected(self):
        with pytest.raises(ValueError):
            render_report(TestReport(()), "xml")

    def test_json_report_reproducible(self):
        spec = param_spec(builtin(BaseType.INT), lambda n: is_equal(n, n))
        cfg = RunConfig(max_tests=40, seed=5)
        a = render_report(run_suite([spec], cfg), "json")
        b = render_report(run_suite([spec], cfg), "json")
        assert a == b
