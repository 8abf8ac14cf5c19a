# src/graded/bialgebra.py
"""Lie bialgebra axiom checks for the graded Goldman-Turaev operations"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from src.core.exceptions import InputError
from src.graded.elements import CyclicGradedElement, GradedWedge, Word, cyclic_word, format_word
from src.graded.operations import adjoint_action, gr_bracket, gr_delta, wedge_as_tensor
from src.utils.logger import ComputationLogger

log = ComputationLogger(__name__)

KINDS = ("jacobi", "cojacobi", "cocycle")


@dataclass
class BialgebraReport:
    """Outcome of one axiom check over a corpus"""
    kind: str
    cases: int = 0
    failures: int = 0
    counterexample: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, inputs: Sequence[Word], residual) -> None:
        self.cases += 1
        if residual:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = {
                    'inputs': [f"|{format_word(w)}|" for w in inputs],
                    'residual': str(residual),
                }

    def to_dict(self) -> dict:
        return {
            'kind': self.kind,
            'cases': self.cases,
            'failures': self.failures,
            'passed': self.passed,
            'counterexample': self.counterexample,
        }


def cyclic_corpus(max_len: int, letters: int) -> List[Word]:
    """Canonical cyclic words of length 1..max_len, degree-lexicographic"""
    words = set()
    for n in range(1, max_len + 1):
        for w in product(range(1, letters + 1), repeat=n):
            words.add(cyclic_word(w))
    return sorted(words, key=lambda w: (len(w), w))


def _jacobi(x: CyclicGradedElement, y: CyclicGradedElement, z: CyclicGradedElement):
    return (gr_bracket(x, gr_bracket(y, z)) + gr_bracket(y, gr_bracket(z, x))
            + gr_bracket(z, gr_bracket(x, y)))


def _cojacobi(x: CyclicGradedElement) -> Dict[Tuple[Word, Word, Word], Fraction]:
    """(1 + tau + tau^2)(delta (x) id) delta(x) as a 3-tensor"""
    first = wedge_as_tensor(gr_delta(x))
    triple: Dict[Tuple[Word, Word, Word], Fraction] = {}
    for (a, b), c in first.items():
        for (u, v), d in wedge_as_tensor(gr_delta(CyclicGradedElement.word(a, x.degree))).items():
            for key in ((u, v, b), (b, u, v), (v, b, u)):
                triple[key] = triple.get(key, Fraction(0)) + c * d
    return {k: v for k, v in triple.items() if v != 0}


def _cocycle(x: CyclicGradedElement, y: CyclicGradedElement) -> GradedWedge:
    return gr_delta(gr_bracket(x, y)) - adjoint_action(x, gr_delta(y)) + adjoint_action(y, gr_delta(x))


def bialgebra_check(kind: str, corpus: Sequence[Word], degree: Optional[int] = None) -> BialgebraReport:
    """Check Jacobi on triples, co-Jacobi on single words or the cocycle condition on pairs.

    The truncation defaults to one large enough that no term of the check is dropped.
    """
    if kind not in KINDS:
        raise InputError(f"Unknown axiom {kind!r}; expected one of {', '.join(KINDS)}")
    corpus = [cyclic_word(w) for w in corpus]
    longest = max((len(w) for w in corpus), default=1)
    n = degree or max(3 * longest, 1)
    report = BialgebraReport(kind)
    elements = [CyclicGradedElement.word(w, n) for w in corpus]
    if kind == "jacobi":
        for i, j, k in product(range(len(corpus)), repeat=3):
            if not i < j < k:
                continue
            report.record((corpus[i], corpus[j], corpus[k]), _jacobi(elements[i], elements[j], elements[k]))
    elif kind == "cojacobi":
        for w, x in zip(corpus, elements):
            report.record((w,), _cojacobi(x))
    else:
        for i, j in product(range(len(corpus)), repeat=2):
            if i < j:
                report.record((corpus[i], corpus[j]), _cocycle(elements[i], elements[j]))
    log.log_suite(kind, report.passed, report.counterexample)
    return report
