# src/skein/division.py
"""Multiplication and division by b between the /1 quotient and the first s-layer"""

from fractions import Fraction
from typing import Iterable, Iterator, List, Optional, Tuple, Union

from src.core.constants import MAX_LAYERS
from src.core.exceptions import InputError
from src.planar.loops import standard_loop, standard_path
from src.skein.diagram import (
    ClassCombo, DiagramClass, TangleDiagram, diagram_from_loops, q_projection, smoothing
)
from src.words.coefficient import Coefficient, Scalar


class RawSkeinSum:
    """Formal linear combination of diagrams with coefficients in Q[b]/(b^2)"""

    def __init__(self, terms: Iterable[Tuple[TangleDiagram, Union[Coefficient, Scalar]]] = ()):
        self.terms: List[Tuple[TangleDiagram, Coefficient]] = [
            (d, Coefficient.of(c)) for d, c in terms if not Coefficient.of(c).is_zero()
        ]

    def __iter__(self) -> Iterator[Tuple[TangleDiagram, Coefficient]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "RawSkeinSum") -> "RawSkeinSum":
        return RawSkeinSum(self.terms + other.terms)

    def __sub__(self, other: "RawSkeinSum") -> "RawSkeinSum":
        return self + other.scale(-1)

    def scale(self, c: Union[Coefficient, Scalar]) -> "RawSkeinSum":
        c = Coefficient.of(c)
        return RawSkeinSum([(d, c * k) for d, k in self.terms])

    @classmethod
    def of(cls, diagram: TangleDiagram, c: Union[Coefficient, Scalar] = 1) -> "RawSkeinSum":
        return cls([(diagram, c)])


def b_check(x: RawSkeinSum) -> ClassCombo:
    """Division by b: b*D -> class(D), D -> 1/2 sum_x sign(x) class(D smoothed at x).

    Terms in b^2 and above vanish in the coefficient ring already.
    """
    terms = []
    for diagram, c in x:
        if c.b1:
            terms.append((q_projection(diagram), c.b1))
        if c.b0:
            for crossing in diagram.crossings:
                terms.append((smoothing(diagram, crossing), Fraction(crossing.sign, 2) * c.b0))
    return ClassCombo(terms)


def realize(cls: DiagramClass, punctures: int) -> TangleDiagram:
    """A diagram whose q-projection is the given class: circles, then paths, stacked upward"""
    count = len(cls.circles) + len(cls.paths)
    if count == 0:
        raise InputError("Cannot realize an empty class")
    if len(cls.paths) > 1:
        raise InputError("Only one bullet-to-star strand can be realized")
    if count > MAX_LAYERS:
        raise InputError(f"At most {MAX_LAYERS} components can be realized")
    loops = [standard_loop(c.word, punctures, k) for k, c in enumerate(cls.circles)]
    offset = len(loops)
    loops += [standard_path(w, punctures, offset + k) for k, w in enumerate(cls.paths)]
    return diagram_from_loops(loops)


def b_hat(x: ClassCombo, punctures: Optional[int] = None) -> RawSkeinSum:
    """Multiplication by b of a /1 element, through a chosen realization of each class"""
    p = punctures or _punctures_of(x)
    return RawSkeinSum([(realize(cls, p), Coefficient.b() * c) for cls, c in x])


def _punctures_of(x: ClassCombo) -> int:
    p = 1
    for cls, _ in x:
        for c in cls.circles:
            p = max(p, c.word.max_index())
        for w in cls.paths:
            p = max(p, w.max_index())
    return p
