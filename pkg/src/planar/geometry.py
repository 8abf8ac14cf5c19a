# src/planar/geometry.py
"""Exact rational plane geometry predicates"""

from fractions import Fraction
from typing import Optional, Sequence, Tuple

from src.core.exceptions import GenericityError, InputError

Point = Tuple[Fraction, Fraction]
Vector = Tuple[Fraction, Fraction]


def sub(a: Point, b: Point) -> Vector:
    return a[0] - b[0], a[1] - b[1]


def det(u: Vector, v: Vector) -> Fraction:
    """2x2 determinant det(u, v)"""
    return u[0] * v[1] - u[1] * v[0]


def sign(x) -> int:
    return (x > 0) - (x < 0)


def orientation(a: Point, b: Point, c: Point) -> int:
    """+1 if a, b, c turn counterclockwise, -1 clockwise, 0 collinear"""
    return sign(det(sub(b, a), sub(c, a)))


def lerp(a: Point, b: Point, s: Fraction) -> Point:
    return a[0] + (b[0] - a[0]) * s, a[1] + (b[1] - a[1]) * s


def segment_intersection(p1: Point, p2: Point, q1: Point,
                         q2: Point) -> Optional[Tuple[Fraction, Fraction, Point]]:
    """Intersection of segments [p1, p2] and [q1, q2].

    Returns (s, u, point) with local parameters s, u in [0, 1], or None.
    Collinear overlapping segments raise GenericityError.
    """
    r = sub(p2, p1)
    q = sub(q2, q1)
    denom = det(r, q)
    qp = sub(q1, p1)
    if denom == 0:
        if det(qp, r) != 0:
            return None
        # Collinear: reject any shared portion
        rr = r[0] * r[0] + r[1] * r[1]
        t0 = (qp[0] * r[0] + qp[1] * r[1]) / rr
        t1 = t0 + (q[0] * r[0] + q[1] * r[1]) / rr
        lo, hi = min(t0, t1), max(t0, t1)
        if hi < 0 or lo > 1:
            return None
        raise GenericityError("collinear segments", {
            'segments': [_point_json(p1), _point_json(p2), _point_json(q1), _point_json(q2)]
        })
    s = det(qp, q) / denom
    u = det(qp, r) / denom
    if 0 <= s <= 1 and 0 <= u <= 1:
        return s, u, lerp(p1, p2, s)
    return None


def quadrant(v: Vector) -> int:
    """Half-open quadrant index 0..3 of a nonzero direction"""
    x, y = v
    if x > 0 and y >= 0:
        return 0
    if x <= 0 and y > 0:
        return 1
    if x < 0 and y <= 0:
        return 2
    return 3


def turning_quarters(directions: Sequence[Vector]) -> int:
    """Signed number of quadrant boundaries crossed around a closed direction cycle"""
    total = 0
    n = len(directions)
    for k in range(n):
        d1 = directions[k]
        d2 = directions[(k + 1) % n]
        turn = sign(det(d1, d2))
        q1, q2 = quadrant(d1), quadrant(d2)
        if turn > 0:
            total += (q2 - q1) % 4
        elif turn < 0:
            total -= (q1 - q2) % 4
        elif d1[0] * d2[0] + d1[1] * d2[1] < 0:
            raise InputError(f"U-turn between consecutive edges {d1} and {d2}")
    return total


def rotation_of_points(points: Sequence[Point]) -> int:
    """Rotation number of the closed polygon through the given vertices"""
    n = len(points)
    directions = []
    for k in range(n):
        d = sub(points[(k + 1) % n], points[k])
        if d == (0, 0):
            raise InputError(f"Zero-length edge at vertex {k}")
        directions.append(d)
    quarters = turning_quarters(directions)
    if quarters % 4:
        raise InputError("Turning of a closed polygon is not a whole number of turns")
    return quarters // 4


def _point_json(p: Point) -> list:
    return [str(p[0]), str(p[1])]
