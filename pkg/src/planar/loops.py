# src/planar/loops.py
"""Polyline loops and paths, their words, and the standard representatives"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple, Union

from src.core.constants import BULLET, KINK_DIAMETER, MAX_LAYERS, STAR, KinkSite
from src.core.exceptions import InputError, ParseError
from src.planar.disc import PuncturedDisc
from src.planar.geometry import Point, Vector, lerp, rotation_of_points, sub
from src.utils.logger import get_logger
from src.utils.validators import Validators
from src.words.group import (
    CyclicClass, GroupWord, Letter, cyclic_canonical, format_letters, free_letters
)

logger = get_logger(__name__)

RayEvent = Tuple[Fraction, Letter]
# A based word, reduced or not; petals are drawn letter by letter
Letters = Union[GroupWord, Tuple[Letter, ...]]


@dataclass(frozen=True)
class PLLoop:
    """Oriented polyline with exact vertices.

    A closed loop carries the implicit edge from its last vertex back to the first.
    An open path runs from its first to its last vertex. The parameter of a point on
    segment k at local position s is k + s.
    """
    points: Tuple[Point, ...]
    closed: bool
    punctures: int

    def __post_init__(self):
        points = tuple(Validators.validate_rational_pair(pt) for pt in self.points)
        object.__setattr__(self, 'points', points)
        minimum = 3 if self.closed else 2
        if len(points) < minimum:
            raise InputError(f"A {'closed loop' if self.closed else 'path'} needs "
                             f"at least {minimum} vertices")
        for a, b in self.segments():
            if a == b:
                raise InputError(f"Zero-length edge at {a}")
        disc = self.disc
        for point in points:
            disc.check_vertex(point)

    @property
    def disc(self) -> PuncturedDisc:
        return PuncturedDisc(self.punctures)

    def segments(self) -> List[Tuple[Point, Point]]:
        pts = self.points
        segs = [(pts[k], pts[k + 1]) for k in range(len(pts) - 1)]
        if self.closed:
            segs.append((pts[-1], pts[0]))
        return segs

    @property
    def length(self) -> int:
        """Parameter length: the number of segments"""
        return len(self.points) if self.closed else len(self.points) - 1

    def point_at(self, t: Fraction) -> Point:
        k = min(int(t), self.length - 1)
        a, b = self.segments()[k]
        return lerp(a, b, t - k)

    def tangent(self, t: Fraction) -> Vector:
        k = min(int(t), self.length - 1)
        a, b = self.segments()[k]
        return sub(b, a)

    def closed_with_nu(self) -> "PLLoop":
        """Close a bullet-to-star path by the boundary arc nu"""
        if self.closed:
            return self
        if self.points[0] != BULLET or self.points[-1] != STAR:
            raise InputError("Only bullet-to-star paths close by nu")
        return PLLoop(self.points, True, self.punctures)

    def to_dict(self) -> dict:
        return {
            'points': [[str(x), str(y)] for x, y in self.points],
            'closed': self.closed,
            'punctures': self.punctures,
        }

    @classmethod
    def from_dict(cls, data: dict, punctures: Optional[int] = None) -> "PLLoop":
        """Load a loop; without a puncture count, the smallest disc holding every vertex is used"""
        try:
            points = tuple(Validators.validate_rational_pair(pt) for pt in data['points'])
            closed = bool(data.get('closed', True))
            p = data.get('punctures', punctures)
            p = enclosing_punctures(points) if p is None else int(p)
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"Malformed loop document: {e}")
        return cls(points, closed, p)


def enclosing_punctures(points: Sequence[Point]) -> int:
    """Fewest punctures whose disc [0, p+1] x [-1, 1] contains the given points"""
    if not points:
        raise InputError("A loop needs vertices")
    return max(1, math.ceil(max(x for x, _ in points)) - 1)


@lru_cache(maxsize=4096)
def ray_events(loop: PLLoop) -> Tuple[RayEvent, ...]:
    """Signed cut-ray crossings in parameter order"""
    disc = loop.disc
    events = []
    for k, (a, b) in enumerate(loop.segments()):
        for s, letter in disc.ray_crossings(a, b):
            events.append((k + s, letter))
    return tuple(events)


def letters_between(events: Sequence[RayEvent], t1: Fraction, t2: Fraction) -> Tuple[Letter, ...]:
    """Letters read strictly between parameters t1 < t2"""
    return tuple(letter for t, letter in events if t1 < t < t2)


def letters_around(events: Sequence[RayEvent], t: Fraction) -> Tuple[Letter, ...]:
    """Letters of a closed loop read once around starting at parameter t"""
    after = [letter for s, letter in events if s > t]
    before = [letter for s, letter in events if s < t]
    return tuple(after + before)


def loop_word(loop: PLLoop, free: bool = False) -> Union[GroupWord, CyclicClass]:
    """Based word of the loop (read from parameter 0) or its free class"""
    word = GroupWord(free_letters(letter for _, letter in ray_events(loop)))
    return cyclic_canonical(word) if free else word


def rotation_number(loop: PLLoop) -> int:
    """Rotation number of a closed loop by a quadrant walk of its edge directions"""
    if not loop.closed:
        raise InputError("Rotation number is defined for closed loops; close the path by nu first")
    return rotation_of_points(loop.points)



def _max_index(w: Letters) -> int:
    return max((i for i, _ in w), default=0)


# Standard representatives

def _slot(k: int, layer: int) -> int:
    return k * MAX_LAYERS + layer + 1


def track_height(j: int, layer: int) -> Fraction:
    """Height of the j-th track, strictly decreasing in j, inside (-1/2, -1/4)"""
    s = _slot(j, layer)
    return Fraction(-1, 4) - Fraction(s, 4 * (s + 1))


def petal_top(k: int, layer: int) -> Fraction:
    s = _slot(k, layer)
    return Fraction(1, 4) + Fraction(s, 2 * (s + 1))


def petal_half_width(k: int, layer: int) -> Fraction:
    s = _slot(k, layer)
    return Fraction(1, 8) + Fraction(s, 8 * (s + 1))


def base_height(layer: int) -> Fraction:
    return Fraction(-3, 4) - Fraction(layer + 1, 4 * (layer + 2))


def base_xs(layer: int) -> Tuple[Fraction, Fraction]:
    offset = Fraction(layer + 1, 10 * (layer + 2))
    return Fraction(3, 10) + offset, Fraction(3, 5) + offset


def _skeleton(w: Letters, layer: int, start: Point, end: Point) -> List[Point]:
    """Vertices of the petal curve reading w from start to end"""
    x, y = start
    points = [start]
    for k, (index, sign) in enumerate(w):
        a = petal_half_width(k, layer)
        entry, exit_ = (index - a, index + a) if sign > 0 else (index + a, index - a)
        track = track_height(k, layer)
        top = petal_top(k, layer)
        points += [(x, track), (entry, track), (entry, top), (exit_, top)]
        x = exit_
    track = track_height(len(w), layer)
    points += [(x, track), (end[0], track), end]
    return points


@dataclass(frozen=True)
class KinkRecord:
    """A kink inserted on a path; spin +1 is counterclockwise, -1 clockwise"""
    site: KinkSite
    spin: int
    point: Point


def _kink_vertices(start: Point, d: Vector, spin: int, h: Fraction) -> Tuple[List[Point], Point]:
    """Template vertices of one kink along unit axis direction d, and its crossing point"""
    r = (d[1], -d[0])
    if spin > 0:
        r = (-r[0], -r[1])

    def at(u, v):
        return start[0] + u * d[0] + v * r[0], start[1] + u * d[1] + v * r[1]
    return [at(2 * h, 0), at(2 * h, h), at(h, h), at(h, -h), at(3 * h, -h), at(3 * h, 0)], at(h, 0)


# Prime denominator keeps kink edges off every track and base height
_KINK_LOW = Fraction(-15, 16) + Fraction(1, 1009)
_KINK_HIGH = Fraction(-1, 2)


def _kinked_segment(a: Point, b: Point, spins: Sequence[int],
                    site: KinkSite) -> Tuple[List[Point], List[KinkRecord]]:
    """Vertices strictly inside vertical segment [a, b] realizing the given kinks"""
    if not spins:
        return [], []
    up = 1 if b[1] > a[1] else -1
    d = (Fraction(0), Fraction(up))
    span = _KINK_HIGH - _KINK_LOW
    h = min(KINK_DIAMETER / 2, span / (4 * len(spins) + 1))
    vertices, records = [], []
    for n, spin in enumerate(spins):
        offset = _KINK_LOW + 4 * h * n if up > 0 else _KINK_HIGH - 4 * h * n
        kink, crossing = _kink_vertices((a[0], offset), d, spin, h)
        vertices += kink
        records.append(KinkRecord(site, spin, crossing))
    return vertices, records


def kinked_path(w: Letters, punctures: int, layer: int = 0,
                start_spins: Sequence[int] = (), end_spins: Sequence[int] = ()
                ) -> Tuple[PLLoop, List[KinkRecord]]:
    """Bullet-to-star path reading w with the given kinks near each endpoint"""
    Validators.validate_layer(layer)
    if _max_index(w) > punctures:
        raise InputError(f"Word {format_letters(tuple(w))} uses a generator beyond p = {punctures}")
    skeleton = _skeleton(w, layer, BULLET, STAR)
    head, head_kinks = _kinked_segment(skeleton[0], skeleton[1], start_spins, KinkSite.START)
    tail, tail_kinks = _kinked_segment(skeleton[-2], skeleton[-1], end_spins, KinkSite.END)
    points = [skeleton[0]] + head + skeleton[1:-1] + tail + [skeleton[-1]]
    return PLLoop(tuple(points), False, punctures), head_kinks + tail_kinks


def normalizing_spins(w: Letters, punctures: int, layer: int = 0) -> List[int]:
    """Kinks that bring the nu-closed rotation number of the bare path to zero"""
    bare, _ = kinked_path(w, punctures, layer)
    rotation = rotation_number(bare.closed_with_nu())
    return [-1 if rotation > 0 else 1] * abs(rotation)


@lru_cache(maxsize=2048)
def standard_path(w: Letters, punctures: int, layer: int = 0,
                  kink_site: KinkSite = KinkSite.START) -> PLLoop:
    """Rotation-normalized bullet-to-star representative of w"""
    spins = normalizing_spins(w, punctures, layer)
    if kink_site == KinkSite.START:
        path, _ = kinked_path(w, punctures, layer, start_spins=spins)
    else:
        path, _ = kinked_path(w, punctures, layer, end_spins=spins)
    logger.debug(f"standard_path {w}: {len(spins)} kinks at {kink_site.value}")
    return path


@lru_cache(maxsize=2048)
def standard_loop(w: Letters, punctures: int, layer: int = 0) -> PLLoop:
    """Closed representative of w based near the bottom edge; layers are mutually generic"""
    Validators.validate_layer(layer)
    if _max_index(w) > punctures:
        raise InputError(f"Word {format_letters(tuple(w))} uses a generator beyond p = {punctures}")
    y = base_height(layer)
    x_start, x_end = base_xs(layer)
    points = _skeleton(w, layer, (x_start, y), (x_end, y))
    return PLLoop(tuple(points), True, punctures)

