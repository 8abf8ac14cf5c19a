# tests/test_cli.py
import io
import json
from pathlib import Path

import pytest

import src.main as gt
from src.cli import commands
from src.cli.commands import cmd_compute, compute, crosscheck
from src.cli.corpus import cyclic_classes, epsilon_corpus, reduced_words, symbol_corpus
from src.cli.reports import ComputeResult, SuiteReport
from src.cli.runner import CorpusRunner
from src.core.config import ParallelConfig, RunConfig
from src.core.constants import Model, Operation, OutputFormat
from src.core.exceptions import ConfigurationError, GenericityError, ParseError
from tests.conftest import tensor

ROOT = Path(__file__).resolve().parents[1]


@pytest.fixture(autouse=True)
def repo_profile(monkeypatch):
    """Run against the repository's development profile"""
    monkeypatch.chdir(ROOT)
    for name in ("GT_ENV", "GT_SEED", "GT_DEGREE", "GT_MAX_PARALLELISM", "GT_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)


def run(capsys, *argv):
    code = gt.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.strip(), captured.err


class TestCompute:
    def test_graded_bracket(self, capsys):
        code, out, _ = run(capsys, "-p", "3", "bracket", "graded", "x1 x2^2", "x2 x3^2")
        assert code == 0
        assert out == "|x1 x2^2 x3^2| - |x1 x3^2 x2^2|"

    def test_generators_commute(self, capsys):
        assert run(capsys, "-p", "2", "bracket", "geometric", "g1", "g2")[:2] == (0, "0")

    def test_mu_models_differ_by_framing_term(self, capsys):
        _, geometric, _ = run(capsys, "-p", "2", "mu", "geometric", "g1")
        _, skein, _ = run(capsys, "-p", "2", "mu", "skein", "g1")
        assert geometric == str(tensor(("1", "g1", 1)))
        assert skein == "0"

    def test_cobracket(self, capsys):
        code, out, _ = run(capsys, "cobracket", "skein", "|g1^2|")
        assert code == 0
        assert out == "|1|∧|g1^2|"

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "bracket", "graded", "x1 x2", "x1 x3", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data['operation'] == "bracket"
        assert data['model'] == "graded"
        assert {term['word'] for term in data['result']['terms']} == {"|x1 x3 x2|", "|x1 x2 x3|"}

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "result.txt"
        code, out, _ = run(capsys, "-p", "2", "bracket", "geometric", "g1", "g2", "--output", str(target))
        assert code == 0 and out == ""
        assert target.read_text(encoding="utf-8") == "0\n"

    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "bracket", "geometric", "|g1", "|g2|")
        assert code == 2
        assert "Unterminated" in err

    def test_graded_rejects_inverses(self, capsys):
        assert run(capsys, "cobracket", "graded", "x1^-1 x2")[0] == 2

    def test_genericity_error_exit(self, capsys, monkeypatch):
        def fail(*args, **kwargs):
            raise GenericityError("vertex on cut ray", {'ray': 1})
        monkeypatch.setattr(gt, "cmd_compute", fail)
        code, _, err = run(capsys, "bracket", "geometric", "g1", "g2")
        assert code == 3
        assert json.loads(err.strip().splitlines()[-1])['feature'] == "vertex on cut ray"

    def test_arity(self, run_config):
        with pytest.raises(ParseError):
            compute(Operation.BRACKET, Model.GRADED, ["x1"], run_config)

    def test_stdin_batches(self, run_config):
        out = io.StringIO()
        stdin = io.StringIO("x1 x2; x1 x3\n\nx1; x2\n")
        assert cmd_compute(Operation.BRACKET, Model.GRADED, ["-"], run_config, 3, out, stdin) == 0
        assert out.getvalue().splitlines() == ["-|x1 x2 x3| + |x1 x3 x2|", "0"]


class TestCrosscheck:
    def test_trivial_corpus(self, capsys):
        code, out, _ = run(capsys, "crosscheck", "bracket", "--max-len", "0", "-p", "2")
        assert (code, out) == (0, "PASS (trivial corpus)")

    def test_bracket_on_generators(self, capsys):
        code, out, _ = run(capsys, "crosscheck", "bracket", "--max-len", "1", "-p", "2")
        assert (code, out) == (0, "PASS (6 cases)")

    @pytest.mark.parametrize("operation", list(Operation))
    def test_models_agree(self, operation, run_config, inline_parallel):
        report = crosscheck(operation, run_config, CorpusRunner(inline_parallel))
        assert report.passed, report.counterexample
        assert report.cases > 0

    @pytest.mark.slow
    @pytest.mark.parametrize("operation", ["bracket", "mu"])
    def test_length_three(self, capsys, operation):
        code, out, _ = run(capsys, "crosscheck", operation, "--max-len", "3", "-p", "2")
        assert code == 0 and out.startswith("PASS")

    @pytest.mark.slow
    @pytest.mark.parametrize("operation", ["bracket", "mu", "cobracket"])
    def test_length_four_three_punctures(self, capsys, operation):
        code, out, _ = run(capsys, "crosscheck", operation, "--max-len", "4", "-p", "3")
        assert code == 0, out
        assert out.startswith("PASS")


class TestCheck:
    def test_conway(self, capsys):
        assert run(capsys, "check", "conway-exp", "-N", "4")[:2] == (0, "PASS (4 cases)")

    def test_epsilon(self, capsys):
        code, out, _ = run(capsys, "check", "epsilon", "--trials", "30", "--seed", "7")
        assert code == 0 and out == "PASS (30 cases)"

    def test_jacobi(self, capsys):
        code, out, _ = run(capsys, "check", "jacobi", "--max-len", "2", "-p", "2")
        assert code == 0 and out.startswith("PASS")

    def test_symbols(self, capsys):
        code, out, _ = run(capsys, "check", "symbols", "--max-len", "2", "-p", "2", "-N", "4")
        assert code == 0, out
        assert out.startswith("PASS")

    def test_json_report(self, capsys):
        code, out, _ = run(capsys, "check", "conway-exp", "-N", "3", "--format", "json")
        data = json.loads(out)
        assert code == 0
        assert data['passed'] is True
        assert [row['degree'] for row in data['details']] == [1, 2, 3]

    def test_missing_profile_uses_defaults(self, capsys):
        assert run(capsys, "--env", "missing-profile", "check", "conway-exp")[:2] == (0, "PASS (6 cases)")

    def test_failing_suite_exits_four(self, capsys, monkeypatch):
        def failing(*args, **kwargs):
            report = SuiteReport("crosscheck-bracket")
            report.record(0, False, {'inputs': ["|g1|", "|g2|"]})
            return report
        monkeypatch.setattr(commands, "crosscheck", failing)
        code, out, _ = run(capsys, "crosscheck", "bracket", "--max-len", "1", "-p", "2")
        assert code == 4
        assert out.startswith("FAIL (1 of 1 cases)")


class TestReports:
    def test_suite_round_trip(self):
        report = SuiteReport("crosscheck-bracket")
        report.record(0, True)
        report.record(1, False, {'inputs': ["|g1|", "|g2|"]})
        report.record_inconclusive()
        restored = SuiteReport.from_json(report.to_json())
        assert restored == report
        assert not restored.passed

    def test_failure_text(self):
        report = SuiteReport("epsilon")
        report.record(3, False, {'B': [1, 2]})
        assert report.to_text().splitlines() == ["FAIL (1 of 1 cases)", "  index: 3", "  B: [1, 2]"]

    def test_inconclusive_text(self):
        report = SuiteReport("symbols")
        report.record(0, True)
        report.record_inconclusive()
        assert report.render(OutputFormat.TEXT) == "PASS (1 cases), 1 inconclusive"

    def test_compute_result_json(self):
        result = ComputeResult("mu", "graded", ["x1 x1"], "|x1|⊗1", {'degree': 8})
        assert json.loads(result.to_json())['inputs'] == ["x1 x1"]
        assert ComputeResult.from_json(result.to_json()) == result


class TestCorpus:
    def test_reduced_words(self):
        words = reduced_words(2, 1)
        assert [str(w) for w in words] == ["g1", "g1^-1", "g1^2", "g1^-2"]

    def test_cyclic_classes_skip_identity(self):
        classes = cyclic_classes(2, 1)
        assert [str(c) for c in classes] == ["|g1|", "|g1^-1|", "|g1^2|", "|g1^-2|"]

    def test_epsilon_corpus_is_seeded(self):
        assert epsilon_corpus(5, 3) == epsilon_corpus(5, 3)
        assert all(len(b) >= 1 for b, _ in epsilon_corpus(20, 1))

    def test_symbol_corpus_is_augmentation_free(self):
        for _, combo in symbol_corpus(2, 2):
            assert combo.augmentation().is_zero()


class TestRunner:
    def test_inline_keeps_order(self, inline_parallel):
        assert CorpusRunner(inline_parallel).run(abs, [-3, 1, -2]) == [3, 1, 2]

    @pytest.mark.slow
    def test_process_pool_keeps_order(self):
        runner = CorpusRunner(ParallelConfig(max_parallelism=2, chunk_size=2))
        assert runner.run(abs, range(-5, 0)) == [5, 4, 3, 2, 1]

    def test_run_config_validation(self):
        with pytest.raises(ConfigurationError):
            RunConfig(punctures=0)
