# src/skein/telescope.py
"""Conway-quotient normalization by telescoping crossing switches"""

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Union

from src.core.exceptions import InputError
from src.skein.diagram import ClassCombo, Crossing, DiagramClass, TangleDiagram, q_projection, smoothing
from src.utils.logger import get_logger
from src.words.coefficient import Coefficient

logger = get_logger(__name__)

Selector = Union[Callable[[Crossing], int], Dict[int, int]]


@dataclass(frozen=True)
class SkeinNormalForm:
    """word_part + b * b_part in the Conway quotient mod s-degree 2"""
    word_part: ClassCombo = field(default_factory=ClassCombo)
    b_part: ClassCombo = field(default_factory=ClassCombo)
    switches: int = 0

    def __add__(self, other: "SkeinNormalForm") -> "SkeinNormalForm":
        return SkeinNormalForm(self.word_part + other.word_part, self.b_part + other.b_part,
                               self.switches + other.switches)

    def __neg__(self) -> "SkeinNormalForm":
        return SkeinNormalForm(-self.word_part, -self.b_part, self.switches)

    def __sub__(self, other: "SkeinNormalForm") -> "SkeinNormalForm":
        return self + (-other)

    def is_zero(self) -> bool:
        return self.word_part.is_zero() and self.b_part.is_zero()

    def as_coefficients(self) -> Dict[DiagramClass, Coefficient]:
        merged: Dict[DiagramClass, Coefficient] = {}
        for key, c in self.word_part:
            merged[key] = merged.get(key, Coefficient.zero()) + c
        for key, c in self.b_part:
            merged[key] = merged.get(key, Coefficient.zero()) + Coefficient.b() * c
        return merged

    def to_dict(self) -> dict:
        def terms(combo):
            return [{'coeff': c.to_dict(), 'class': key.to_dict()} for key, c in combo]
        return {'word_part': terms(self.word_part), 'b_part': terms(self.b_part)}


def _target_of(selector: Selector, index: int, crossing: Crossing) -> int:
    if isinstance(selector, dict):
        return selector.get(index, crossing.over)
    return selector(crossing)


def telescope_normalize(diagram: TangleDiagram, target: Selector,
                        order: Optional[Sequence[int]] = None) -> SkeinNormalForm:
    """Switch off-target crossings one at a time.

    A switch at a crossing of sign e turns D into D' with D - D' = e * b * D_0, where
    D_0 is the oriented smoothing; D_0 only matters through its /1 class. The result
    is D = D_target + b * sum, reported as the class of D plus the b-part.
    """
    crossings = list(diagram.crossings)
    indices = list(order) if order is not None else diagram.ordered_crossings()
    if sorted(indices) != sorted(set(indices)) or any(not 0 <= k < len(crossings) for k in indices):
        raise InputError("Telescoping order must list distinct crossing indices")
    b_terms: List = []
    for k in indices:
        x = crossings[k]
        if _target_of(target, k, x) == x.over:
            continue
        b_terms.append((smoothing(diagram, x), x.sign))
        crossings[k] = x.switched()
    pending = [k for k in range(len(crossings))
               if k not in indices and _target_of(target, k, crossings[k]) != crossings[k].over]
    if pending:
        raise InputError(f"Crossings {pending} are off target but missing from the order")
    logger.debug(f"Telescoped {len(b_terms)} switches")
    return SkeinNormalForm(ClassCombo.basis(q_projection(diagram)), ClassCombo(b_terms), len(b_terms))
