# src/expansion/magnus.py
"""Exponential (Magnus) expansion of the free group into truncated As<x1..xp>"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict

from src.core.constants import DEFAULT_EXPANSION_DEGREE, DEFAULT_PUNCTURES
from src.core.exceptions import InputError
from src.graded.elements import CyclicGradedElement, GradedElement
from src.graded.operations import gr_trace
from src.utils.validators import Validators
from src.words.combos import LoopCombo, PathCombo
from src.words.group import GroupWord


@dataclass(frozen=True)
class ExpansionConfig:
    """Puncture count and truncation degree of the expansion"""
    punctures: int = DEFAULT_PUNCTURES
    degree: int = DEFAULT_EXPANSION_DEGREE

    def __post_init__(self):
        Validators.validate_punctures(self.punctures)
        Validators.validate_degree(self.degree)


def _letter_series(index: int, sign: int, degree: int) -> GradedElement:
    """e^{sign * x_index} up to the truncation degree"""
    return GradedElement([
        ((index,) * n, Fraction(sign ** n, factorial(n))) for n in range(degree + 1)
    ], degree)


def phi_path(w: GroupWord, cfg: ExpansionConfig) -> GradedElement:
    """phi(gamma_i^{+-1}) = e^{+-x_i}, extended multiplicatively"""
    if w.max_index() > cfg.punctures:
        raise InputError(f"Word {w} uses more than {cfg.punctures} generators")
    result = GradedElement.one(cfg.degree)
    cache: Dict = {}
    for index, sign in w:
        if (index, sign) not in cache:
            cache[(index, sign)] = _letter_series(index, sign, cfg.degree)
        result = result * cache[(index, sign)]
    return result


def _rational(coeff, what: str) -> Fraction:
    if coeff.b1 != 0:
        raise InputError(f"{what} has a nonzero b-part; the expansion is defined on /1 classes")
    return coeff.b0


def phi_group_algebra(x: PathCombo, cfg: ExpansionConfig) -> GradedElement:
    result = GradedElement((), cfg.degree)
    for w, c in x:
        result = result + phi_path(w, cfg).scale(_rational(c, "Path combination"))
    return result


def phi_loop(x: LoopCombo, cfg: ExpansionConfig) -> CyclicGradedElement:
    """Trace of phi_path on the cyclic representative of each class"""
    result = CyclicGradedElement((), cfg.degree)
    for loop, c in x:
        result = result + gr_trace(phi_path(loop.word, cfg)).scale(_rational(c, "Loop combination"))
    return result
