# src/graded/operations.py
"""Associated graded Goldman bracket, self-intersection map and Turaev cobracket"""

from fractions import Fraction
from typing import Dict, List, Tuple

from src.core.constants import Model
from src.graded.elements import (
    CyclicGradedElement, GradedElement, GradedTensor, GradedWedge, Word, check_same_degree
)
from src.utils.logger import ComputationLogger

log = ComputationLogger(__name__)


def bracket_terms(z: Word, w: Word) -> List[Tuple[Word, int]]:
    """Pairing terms of [|z|, |w|] for the given rotations of z and w"""
    terms = []
    for j in range(len(z)):
        for k in range(len(w)):
            if z[j] != w[k]:
                continue
            head, tail = w[:k], w[k + 1:]
            terms.append((head + z[j + 1:] + z[:j + 1] + tail, 1))
            terms.append((head + z[j:] + z[:j] + tail, -1))
    return terms


def gr_bracket(z: CyclicGradedElement, w: CyclicGradedElement) -> CyclicGradedElement:
    """Graded Goldman bracket; each output word has length l + m - 1"""
    degree = check_same_degree(z, w)
    terms = []
    for u, a in z:
        for v, b in w:
            terms += [(word, a * b * s) for word, s in bracket_terms(u, v)]
    result = CyclicGradedElement(terms, degree)
    log.log_operation("bracket", Model.GRADED.value, len(z) * len(w), len(result))
    return result


def mu_terms(w: Word) -> List[Tuple[Tuple[Word, Word], int]]:
    terms = []
    for j in range(len(w)):
        for k in range(j + 1, len(w)):
            if w[j] != w[k]:
                continue
            terms.append(((w[j:k], w[:j] + w[k + 1:]), 1))
            terms.append(((w[j + 1:k], w[:j + 1] + w[k + 1:]), -1))
    return terms


def gr_mu(x: GradedElement) -> GradedTensor:
    """Graded self-intersection map; output total length m - 1"""
    terms = []
    for word, c in x:
        terms += [(key, c * s) for key, s in mu_terms(word)]
    result = GradedTensor(terms, x.degree)
    log.log_operation("mu", Model.GRADED.value, len(x), len(result))
    return result


def delta_terms(w: Word) -> List[Tuple[Tuple[Word, Word], int]]:
    """Pairing cuts of the given rotation of a cyclic word"""
    terms = []
    for j in range(len(w)):
        for k in range(j + 1, len(w)):
            if w[j] != w[k]:
                continue
            terms.append(((w[j:k], w[k + 1:] + w[:j]), 1))
            terms.append(((w[k:] + w[:j], w[j + 1:k]), 1))
    return terms


def gr_delta(x: CyclicGradedElement) -> GradedWedge:
    """Graded Turaev cobracket"""
    terms = []
    for word, c in x:
        terms += [(key, c * s) for key, s in delta_terms(word)]
    result = GradedWedge(terms, x.degree)
    log.log_operation("cobracket", Model.GRADED.value, len(x), len(result))
    return result


def gr_trace(x: GradedElement) -> CyclicGradedElement:
    """As -> |As|"""
    return CyclicGradedElement(list(x), x.degree)


def close_and_alternate(t: GradedTensor) -> GradedWedge:
    """Alt((id (x) trace) t)"""
    return GradedWedge([((loop, path), c) for (loop, path), c in t], t.degree)


def wedge_as_tensor(x: GradedWedge) -> Dict[Tuple[Word, Word], Fraction]:
    """a ^ b = a (x) b - b (x) a"""
    out: Dict[Tuple[Word, Word], Fraction] = {}
    for (a, b), c in x:
        out[(a, b)] = out.get((a, b), Fraction(0)) + c
        out[(b, a)] = out.get((b, a), Fraction(0)) - c
    return out


def adjoint_action(z: CyclicGradedElement, x: GradedWedge) -> GradedWedge:
    """z . (a ^ b) = [z, a] ^ b + a ^ [z, b]"""
    degree = check_same_degree(z, x)
    terms = []
    for (a, b), c in x:
        za = gr_bracket(z, CyclicGradedElement.word(a, degree))
        zb = gr_bracket(z, CyclicGradedElement.word(b, degree))
        terms += [((u, b), c * k) for u, k in za]
        terms += [((a, v), c * k) for v, k in zb]
    return GradedWedge(terms, degree)
