# src/chords/conway.py
"""The Conway chord relation identity (e^{C/2} - e^{-C/2}) swap = (e^{a/2} - e^{-a/2}) id"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, List, Tuple

from src.utils.logger import ComputationLogger
from src.utils.validators import Validators

log = ComputationLogger(__name__)

IDENTITY = 0
SWAP = 1


class TwoStrandSeries:
    """Truncated power series in a with coefficients in the group algebra of {id, swap}"""

    def __init__(self, terms: Dict[Tuple[int, int], Fraction], degree: int):
        self.degree = degree
        self.terms = {k: Fraction(v) for k, v in terms.items() if v != 0 and k[0] <= degree}

    @classmethod
    def monomial(cls, power: int, perm: int, c, degree: int) -> "TwoStrandSeries":
        return cls({(power, perm): Fraction(c)}, degree)

    def __add__(self, other: "TwoStrandSeries") -> "TwoStrandSeries":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return TwoStrandSeries(out, self.degree)

    def scale(self, c) -> "TwoStrandSeries":
        return TwoStrandSeries({k: Fraction(c) * v for k, v in self.terms.items()}, self.degree)

    def __sub__(self, other: "TwoStrandSeries") -> "TwoStrandSeries":
        return self + other.scale(-1)

    def __mul__(self, other: "TwoStrandSeries") -> "TwoStrandSeries":
        out: Dict[Tuple[int, int], Fraction] = {}
        for (p1, s1), v1 in self.terms.items():
            for (p2, s2), v2 in other.terms.items():
                key = (p1 + p2, s1 ^ s2)
                out[key] = out.get(key, Fraction(0)) + v1 * v2
        return TwoStrandSeries(out, self.degree)

    def component(self, power: int) -> Dict[int, Fraction]:
        return {perm: v for (p, perm), v in self.terms.items() if p == power}

    def exp(self) -> "TwoStrandSeries":
        """exp of a series without constant term"""
        result = TwoStrandSeries.monomial(0, IDENTITY, 1, self.degree)
        power = TwoStrandSeries.monomial(0, IDENTITY, 1, self.degree)
        for k in range(1, self.degree + 1):
            power = power * self
            result = result + power.scale(Fraction(1, factorial(k)))
        return result


@dataclass
class ConwayReport:
    degree: int
    rows: List[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(row['equal'] for row in self.rows)

    def to_dict(self) -> dict:
        return {'degree': self.degree, 'passed': self.passed, 'rows': self.rows}


def _format(component: Dict[int, Fraction]) -> str:
    names = {IDENTITY: "id", SWAP: "swap"}
    parts = [f"{v}*{names[p]}" for p, v in sorted(component.items())]
    return " + ".join(parts) if parts else "0"


def conway_exponential_identity(degree: int) -> ConwayReport:
    """Expand both sides with C = a * swap and swap^2 = id, compare degree by degree"""
    n = Validators.validate_degree(degree)
    chord = TwoStrandSeries.monomial(1, SWAP, 1, n)
    a = TwoStrandSeries.monomial(1, IDENTITY, 1, n)
    swap = TwoStrandSeries.monomial(0, SWAP, 1, n)
    lhs = (chord.scale(Fraction(1, 2)).exp() - chord.scale(Fraction(-1, 2)).exp()) * swap
    rhs = a.scale(Fraction(1, 2)).exp() - a.scale(Fraction(-1, 2)).exp()
    report = ConwayReport(n)
    for k in range(1, n + 1):
        left, right = lhs.component(k), rhs.component(k)
        report.rows.append({
            'degree': k, 'lhs': _format(left), 'rhs': _format(right), 'equal': left == right
        })
    log.log_suite("conway-exp", report.passed)
    return report
