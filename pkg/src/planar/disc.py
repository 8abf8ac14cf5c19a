# src/planar/disc.py
"""The p-punctured disc with its cut system"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from src.core.constants import BULLET, STAR
from src.core.exceptions import GenericityError
from src.planar.geometry import Point
from src.utils.validators import Validators
from src.words.group import Letter


@dataclass(frozen=True)
class PuncturedDisc:
    """Box [0, p+1] x [-1, 1] with punctures at (i, 0) and vertical cut rays above them.

    The boundary path nu runs west along the bottom edge from the star to the bullet
    and crosses no cut ray.
    """
    punctures: int

    def __post_init__(self):
        Validators.validate_punctures(self.punctures)

    @property
    def width(self) -> int:
        return self.punctures + 1

    @property
    def bullet(self) -> Point:
        return BULLET

    @property
    def star(self) -> Point:
        return STAR

    def puncture(self, i: int) -> Point:
        return Fraction(i), Fraction(0)

    def nu(self) -> Tuple[Point, Point]:
        return self.star, self.bullet

    def contains(self, point: Point) -> bool:
        x, y = point
        return 0 <= x <= self.width and -1 <= y <= 1

    def check_vertex(self, point: Point) -> None:
        """Reject vertices lying on a cut ray, on a puncture or outside the box"""
        x, y = point
        if not self.contains(point):
            raise GenericityError("vertex outside disc", {'point': [str(x), str(y)]})
        if x.denominator == 1 and 1 <= x <= self.punctures and y >= 0:
            feature = "vertex on puncture" if y == 0 else "vertex on cut ray"
            raise GenericityError(feature, {'point': [str(x), str(y)], 'ray': int(x)})

    def ray_crossings(self, a: Point, b: Point) -> List[Tuple[Fraction, Letter]]:
        """Transverse crossings of segment [a, b] with the cut rays.

        Returns (local parameter, letter) pairs in order along the segment; a crossing
        in the +x direction reads gamma_i, in the -x direction gamma_i^-1.
        """
        (x0, y0), (x1, y1) = a, b
        if x0 == x1:
            return []
        lo, hi = sorted((x0, x1))
        direction = 1 if x1 > x0 else -1
        found = []
        for i in range(1, self.punctures + 1):
            if not lo < i < hi:
                continue
            s = (i - x0) / (x1 - x0)
            y = y0 + (y1 - y0) * s
            if y == 0:
                raise GenericityError("segment through puncture", {'puncture': i})
            if y > 0:
                found.append((s, (i, direction)))
        found.sort(key=lambda item: item[0])
        return found
