# src/planar/intersections.py
"""Transverse double points of polylines"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple

from src.core.exceptions import GenericityError
from src.planar.geometry import Point, det, segment_intersection, sign
from src.planar.loops import PLLoop
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class IntersectionRecord:
    """A transverse double point.

    For a self-intersection t1 < t2 on the same curve; otherwise t1 lies on the
    first curve and t2 on the second. sign = sign det(tangent at t1, tangent at t2).
    """
    point: Point
    t1: Fraction
    t2: Fraction
    sign: int

    def to_dict(self) -> dict:
        return {
            'point': [str(self.point[0]), str(self.point[1])],
            'at': [str(self.t1), str(self.t2)],
            'sign': self.sign,
        }

    def swapped(self) -> "IntersectionRecord":
        """The same double point seen from the other curve"""
        return IntersectionRecord(self.point, self.t2, self.t1, -self.sign)


def _adjacent(i: int, j: int, loop: PLLoop) -> bool:
    if j == i + 1:
        return True
    return loop.closed and i == 0 and j == loop.length - 1


def _check_point(point: Point, loop: PLLoop) -> None:
    x, y = point
    if x.denominator == 1 and 1 <= x <= loop.punctures and y > 0:
        raise GenericityError("double point on cut ray", {'point': [str(x), str(y)]})


Box = Tuple[Fraction, Fraction, Fraction, Fraction]


@lru_cache(maxsize=1024)
def _boxes(loop: PLLoop) -> Tuple[Box, ...]:
    return tuple(
        (min(a[0], b[0]), max(a[0], b[0]), min(a[1], b[1]), max(a[1], b[1]))
        for a, b in loop.segments()
    )


def _disjoint(p: Box, q: Box) -> bool:
    return p[1] < q[0] or q[1] < p[0] or p[3] < q[2] or q[3] < p[2]


@lru_cache(maxsize=4096)
def _records(first: PLLoop, second: Optional[PLLoop]) -> Tuple[IntersectionRecord, ...]:
    self_case = second is None
    other = first if self_case else second
    segs_a, segs_b = first.segments(), other.segments()
    boxes_a, boxes_b = _boxes(first), _boxes(other)
    records = []
    for i, (a0, a1) in enumerate(segs_a):
        start = i + 1 if self_case else 0
        for j in range(start, len(segs_b)):
            b0, b1 = segs_b[j]
            if self_case and _adjacent(i, j, first):
                # Shared vertex only; a fold back along the same line overlaps
                u_dir = (a1[0] - a0[0], a1[1] - a0[1])
                v_dir = (b1[0] - b0[0], b1[1] - b0[1])
                if det(u_dir, v_dir) == 0 and u_dir[0] * v_dir[0] + u_dir[1] * v_dir[1] < 0:
                    raise GenericityError("adjacent edges fold back", {'segments': [i, j]})
                continue
            if _disjoint(boxes_a[i], boxes_b[j]):
                continue
            hit = segment_intersection(a0, a1, b0, b1)
            if hit is None:
                continue
            s, u, point = hit
            if s in (0, 1) or u in (0, 1):
                raise GenericityError("intersection at a vertex", {
                    'point': [str(point[0]), str(point[1])], 'segments': [i, j]
                })
            _check_point(point, first)
            t1, t2 = i + s, j + u
            eps = sign(det(first.tangent(t1), other.tangent(t2)))
            records.append(IntersectionRecord(point, t1, t2, eps))
    points = [r.point for r in records]
    if len(set(points)) != len(points):
        raise GenericityError("triple point", {})
    records.sort(key=lambda r: (r.t1, r.t2))
    logger.debug(f"Found {len(records)} double points")
    return tuple(records)


def _curve_key(loop: PLLoop) -> tuple:
    return loop.closed, loop.punctures, loop.points


def transverse_intersections(first: PLLoop, second: Optional[PLLoop] = None) -> List[IntersectionRecord]:
    """All transverse double points of one curve with itself, or of two curves.

    Touching at a vertex, collinear overlap and triple points raise GenericityError.
    Records are sorted by (t1, t2). Results are cached per curve pair, and a pair is
    computed in one order only.
    """
    if second is None or _curve_key(first) <= _curve_key(second):
        return list(_records(first, second))
    swapped = [r.swapped() for r in _records(second, first)]
    return sorted(swapped, key=lambda r: (r.t1, r.t2))
