# src/cli/commands.py
"""Handlers behind the gt subcommands"""

import sys
from functools import partial
from typing import IO, Dict, Iterable, List, Optional, Tuple

from src.chords.conway import conway_exponential_identity
from src.chords.lambda_alg import PhiTerm, epsilon_cancellation
from src.cli.corpus import cyclic_classes, epsilon_corpus, reduced_words, symbol_corpus
from src.cli.reports import ComputeResult, SuiteReport
from src.cli.runner import CorpusRunner
from src.core.config import Config, RunConfig
from src.core.constants import (
    EXIT_OK, EXIT_SUITE_FAILURE, GRADED_LETTER, GROUP_LETTER, Model, Operation, Suite
)
from src.core.exceptions import GoldmanTuraevError, ParseError
from src.expansion.magnus import ExpansionConfig
from src.expansion.symbols import check_bracket_symbol, check_cobracket_symbol
from src.graded.bialgebra import bialgebra_check, cyclic_corpus
from src.graded.elements import CyclicGradedElement, GradedElement
from src.graded.operations import gr_bracket, gr_delta, gr_mu
from src.planar.operations import (
    delta_geometric, goldman_bracket_geometric, infer_punctures, mu_geometric
)
from src.skein.operations import bracket_skein, bracket_skein_combo, delta_skein, mu_skein
from src.utils.logger import ComputationLogger
from src.words.combos import LoopCombo, TensorElement
from src.words.group import CyclicClass, GroupWord
from src.words.serialization import combo_to_dict, parse_letters, parse_loop_combo, parse_word

log = ComputationLogger(__name__)

ARITY = {Operation.BRACKET: 2, Operation.MU: 1, Operation.COBRACKET: 1}


# Graded inputs

def _positive(word, text: str) -> Tuple[int, ...]:
    indices = []
    for index, sign in word:
        if sign < 0:
            raise ParseError(f"Graded words take positive powers only: {text!r}")
        indices.append(index)
    return tuple(indices)


def graded_cyclic(combo: LoopCombo, text: str, degree: int) -> CyclicGradedElement:
    terms = []
    for loop, c in combo:
        if c.b1 != 0:
            raise ParseError(f"Graded coefficients are rational: {text!r}")
        terms.append((_positive(loop.letters, text), c.b0))
    return CyclicGradedElement(terms, degree)


def _combo_length(combo: LoopCombo) -> int:
    return max((len(loop) for loop in combo.keys()), default=0)


# compute

def _compute_graded(operation: Operation, inputs: List[str], p: Optional[int],
                    run: RunConfig) -> ComputeResult:
    if operation == Operation.MU:
        word = _positive(parse_letters(inputs[0], GRADED_LETTER, p), inputs[0])
        result = gr_mu(GradedElement.word(word, max(run.degree, len(word))))
    else:
        combos = [parse_loop_combo(text, GRADED_LETTER, p) for text in inputs]
        # Output words are never longer than the inputs combined
        degree = max(run.degree, sum(_combo_length(c) for c in combos))
        elements = [graded_cyclic(c, text, degree) for c, text in zip(combos, inputs)]
        result = gr_bracket(*elements) if operation == Operation.BRACKET else gr_delta(elements[0])
    return ComputeResult(operation.value, Model.GRADED.value, inputs, str(result), result.to_dict())


def compute(operation: Operation, model: Model, inputs: List[str], run: RunConfig,
            punctures: Optional[int] = None) -> ComputeResult:
    """Evaluate one operation in one model on textual inputs"""
    if len(inputs) != ARITY[operation]:
        raise ParseError(f"{operation.value} takes {ARITY[operation]} argument(s), got {len(inputs)}")
    if model == Model.GRADED:
        return _compute_graded(operation, inputs, punctures, run)

    if operation == Operation.MU:
        w = parse_word(inputs[0], GROUP_LETTER, punctures)
        p = punctures or infer_punctures(w)
        result = mu_geometric(w, p) if model == Model.GEOMETRIC else mu_skein(w, p)
    elif operation == Operation.BRACKET:
        x, y = (parse_loop_combo(text, GROUP_LETTER, punctures) for text in inputs)
        p = punctures or infer_punctures(x, y)
        if model == Model.GEOMETRIC:
            result = goldman_bracket_geometric(x, y, p)
        else:
            result = bracket_skein_combo(x, y, p)
    else:
        x = parse_loop_combo(inputs[0], GROUP_LETTER, punctures)
        p = punctures or infer_punctures(x)
        result = delta_geometric(x, p) if model == Model.GEOMETRIC else delta_skein(x, p)
    return ComputeResult(operation.value, model.value, inputs, str(result), combo_to_dict(result))


def _stdin_inputs(stream: IO[str]) -> Iterable[List[str]]:
    """One input set per nonblank line, arguments separated by ';'"""
    for line in stream:
        if line.strip():
            yield [part.strip() for part in line.split(";")]


def cmd_compute(operation: Operation, model: Model, inputs: List[str], run: RunConfig,
                punctures: Optional[int], out: IO[str], stdin: IO[str] = sys.stdin) -> int:
    batches = _stdin_inputs(stdin) if inputs == ["-"] else [inputs]
    for batch in batches:
        result = compute(operation, model, batch, run, punctures)
        out.write(result.render(run.output_format) + "\n")
    return EXIT_OK


# crosscheck

def _failure(error: GoldmanTuraevError, inputs: List[str]) -> Tuple[bool, Dict]:
    detail = error.to_dict() if hasattr(error, 'to_dict') else {'error': str(error)}
    return False, {'inputs': inputs, **detail}


def bracket_case(pair: Tuple[CyclicClass, CyclicClass], punctures: int) -> Tuple[bool, Dict]:
    alpha, beta = pair
    inputs = [str(alpha), str(beta)]
    try:
        geometric = goldman_bracket_geometric(LoopCombo.basis(alpha), LoopCombo.basis(beta), punctures)
        skein = bracket_skein(alpha, beta, punctures)
    except GoldmanTuraevError as e:
        return _failure(e, inputs)
    return geometric == skein, {'inputs': inputs, 'geometric': str(geometric), 'skein': str(skein)}


def mu_case(w: GroupWord, punctures: int) -> Tuple[bool, Dict]:
    inputs = [str(w)]
    try:
        geometric = mu_geometric(w, punctures)
        skein = mu_skein(w, punctures) + TensorElement.basis((CyclicClass.trivial(), w))
    except GoldmanTuraevError as e:
        return _failure(e, inputs)
    return geometric == skein, {'inputs': inputs, 'geometric': str(geometric), 'skein': str(skein)}


def cobracket_case(alpha: CyclicClass, punctures: int) -> Tuple[bool, Dict]:
    inputs = [str(alpha)]
    try:
        geometric = delta_geometric(LoopCombo.basis(alpha), punctures)
        skein = delta_skein(LoopCombo.basis(alpha), punctures)
    except GoldmanTuraevError as e:
        return _failure(e, inputs)
    return geometric == skein, {'inputs': inputs, 'geometric': str(geometric), 'skein': str(skein)}


def crosscheck(operation: Operation, run: RunConfig, runner: CorpusRunner) -> SuiteReport:
    """Geometric against skein model over the length-lexicographic corpus"""
    p = run.punctures
    if operation == Operation.BRACKET:
        classes = cyclic_classes(run.max_len, p)
        corpus = [(a, b) for i, a in enumerate(classes) for b in classes[i + 1:]]
        fn = partial(bracket_case, punctures=p)
    elif operation == Operation.MU:
        corpus = reduced_words(run.max_len, p)
        fn = partial(mu_case, punctures=p)
    else:
        corpus = cyclic_classes(run.max_len, p)
        fn = partial(cobracket_case, punctures=p)

    report = SuiteReport(f"crosscheck-{operation.value}")
    for index, (ok, detail) in enumerate(runner.run(fn, corpus)):
        report.record(index, ok, detail)
    log.log_crosscheck(operation.value, report.cases, report.failures)
    return report


def cmd_crosscheck(operation: Operation, run: RunConfig, config: Config, out: IO[str]) -> int:
    report = crosscheck(operation, run, CorpusRunner(config.parallel))
    out.write(report.render(run.output_format) + "\n")
    return EXIT_OK if report.passed else EXIT_SUITE_FAILURE


# check

def epsilon_case(item: Tuple[Tuple[int, ...], PhiTerm]) -> Tuple[bool, Dict]:
    b, x = item
    first, second = epsilon_cancellation(b, x)
    return first.is_zero() and second.is_zero(), {
        'B': list(b), 'v': list(x.v), 'w': list(x.w), 'coeff': str(x.coeff),
        'epsilon_one': str(first), 'epsilon_two': str(second),
    }


def symbol_case(item: Tuple, cfg: ExpansionConfig) -> Tuple[Optional[bool], Dict]:
    """None marks an inconclusive check"""
    if item[0] == "bracket":
        _, (label_a, alpha), (label_b, beta) = item
        inputs = [label_a, label_b]
        report = check_bracket_symbol(alpha, beta, cfg)
    else:
        _, (label_a, alpha) = item
        inputs = [label_a]
        report = check_cobracket_symbol(alpha, cfg)
    if report.inconclusive:
        return None, {}
    return report.equal, {'check': item[0], 'inputs': inputs, **report.to_dict()}


def check(suite: Suite, run: RunConfig, runner: CorpusRunner) -> SuiteReport:
    """Run one property suite"""
    report = SuiteReport(suite.value)
    if suite in (Suite.JACOBI, Suite.COJACOBI, Suite.COCYCLE):
        result = bialgebra_check(suite.value, cyclic_corpus(run.max_len, run.punctures))
        report.cases, report.failures = result.cases, result.failures
        report.counterexample = result.counterexample
        return report

    if suite == Suite.CONWAY_EXP:
        result = conway_exponential_identity(run.degree)
        for index, row in enumerate(result.rows):
            report.record(index, row['equal'], row)
        report.details = result.rows
        return report

    if suite == Suite.EPSILON:
        outcomes = runner.run(epsilon_case, epsilon_corpus(run.trials, run.seed))
    else:
        cfg = ExpansionConfig(run.punctures, run.degree)
        combos = symbol_corpus(run.max_len, run.punctures)
        corpus = [("cobracket", entry) for entry in combos]
        corpus += [("bracket", a, b) for i, a in enumerate(combos) for b in combos[i + 1:]]
        outcomes = runner.run(partial(symbol_case, cfg=cfg), corpus)

    for index, (ok, detail) in enumerate(outcomes):
        if ok is None:
            report.record_inconclusive()
        else:
            report.record(index, ok, detail)
    log.log_suite(suite.value, report.passed, report.counterexample)
    return report


def cmd_check(suite: Suite, run: RunConfig, config: Config, out: IO[str]) -> int:
    report = check(suite, run, CorpusRunner(config.parallel))
    out.write(report.render(run.output_format) + "\n")
    return EXIT_OK if report.passed else EXIT_SUITE_FAILURE
