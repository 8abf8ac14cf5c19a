# src/skein/diagram.py
"""Bottom-projection tangle diagrams with over/under data"""

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from src.core.exceptions import InputError
from src.planar.geometry import Point
from src.planar.intersections import transverse_intersections
from src.planar.loops import PLLoop, letters_around, letters_between, ray_events
from src.words.combos import Combination
from src.words.group import CyclicClass, GroupWord, cyclic_canonical, format_letters, free_letters

CURVE = "curve"
KINK_A = "kink-a"
KINK_B = "kink-b"

BOTTOM = "bottom"
TOP = "top"


@dataclass(frozen=True)
class Crossing:
    """A double point of strands a and b at parameters t_a, t_b.

    For a self-crossing a == b and t_a < t_b. `over` is 0 when the pass at t_a is on
    top and 1 when the pass at t_b is. `planar_sign` is sign det(tangent_a, tangent_b).
    """
    strand_a: int
    t_a: Fraction
    strand_b: int
    t_b: Fraction
    point: Point
    planar_sign: int
    over: int = 1
    kind: str = CURVE

    @property
    def sign(self) -> int:
        """Crossing sign: sign det(over tangent, under tangent)"""
        return self.planar_sign if self.over == 0 else -self.planar_sign

    @property
    def is_self(self) -> bool:
        return self.strand_a == self.strand_b

    @property
    def under_first(self) -> bool:
        return self.over == 1

    def order_key(self) -> tuple:
        return self.strand_a, self.t_a, self.strand_b, self.t_b

    def switched(self) -> "Crossing":
        return replace(self, over=1 - self.over)

    def to_dict(self) -> dict:
        return {
            'strands': [self.strand_a, self.strand_b],
            'at': [str(self.t_a), str(self.t_b)],
            'over': self.over,
            'kind': self.kind,
        }


@dataclass(frozen=True)
class DiagramClass:
    """The /1 class of a diagram: free classes of its circles and words of its paths"""
    circles: Tuple[CyclicClass, ...] = ()
    paths: Tuple[GroupWord, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'circles', tuple(sorted(self.circles, key=lambda c: c.sort_key())))
        object.__setattr__(self, 'paths', tuple(self.paths))

    @property
    def skeleton(self) -> Tuple[int, int]:
        return len(self.circles), len(self.paths)

    def sort_key(self) -> tuple:
        return (self.skeleton, tuple(c.sort_key() for c in self.circles),
                tuple(w.sort_key() for w in self.paths))

    def __str__(self) -> str:
        parts = [str(c) for c in self.circles] + [format_letters(w.letters) for w in self.paths]
        return "[" + ", ".join(parts) + "]"

    def to_dict(self) -> dict:
        return {
            'circles': [format_letters(c.letters) for c in self.circles],
            'paths': [format_letters(w.letters) for w in self.paths],
        }


class ClassCombo(Combination[DiagramClass]):
    """Linear combination of /1 diagram classes"""
    pass


@dataclass(frozen=True)
class TangleDiagram:
    """Strands in the punctured disc with a crossing list.

    `level` records whether the endpoints of open strands sit on the floor or,
    after a flip, on the ceiling.
    """
    components: Tuple[PLLoop, ...]
    crossings: Tuple[Crossing, ...]
    level: str = BOTTOM

    @property
    def punctures(self) -> int:
        return max(c.punctures for c in self.components)

    @property
    def skeleton(self) -> Tuple[int, int]:
        closed = sum(1 for c in self.components if c.closed)
        return closed, len(self.components) - closed

    def writhe(self) -> int:
        return sum(x.sign for x in self.crossings)

    def ordered_crossings(self) -> List[int]:
        """Crossing indices in lexicographic (strand, parameter) order"""
        return sorted(range(len(self.crossings)), key=lambda k: self.crossings[k].order_key())

    def with_crossings(self, crossings: Sequence[Crossing]) -> "TangleDiagram":
        return replace(self, crossings=tuple(crossings))

    def to_dict(self) -> dict:
        return {
            'components': [c.to_dict() for c in self.components],
            'crossings': [x.to_dict() for x in self.crossings],
            'level': self.level,
        }


def self_crossings(loop: PLLoop, strand: int, over: int = 1,
                   kinds: Optional[Dict[Point, str]] = None) -> List[Crossing]:
    """Self-crossings of one strand with a uniform over/under choice"""
    kinds = kinds or {}
    return [
        Crossing(strand, r.t1, strand, r.t2, r.point, r.sign, over, kinds.get(r.point, CURVE))
        for r in transverse_intersections(loop)
    ]


def diagram_from_loops(loops: Sequence[PLLoop], over: int = 1) -> TangleDiagram:
    """Diagram on the given strands; each strand under-first (over=1) or over-first,
    later strands over earlier ones at mixed crossings"""
    if not loops:
        raise InputError("A diagram needs at least one strand")
    crossings = []
    for i, loop in enumerate(loops):
        crossings += self_crossings(loop, i, over)
        for j in range(i):
            crossings += _mixed(loops[j], j, loop, i)
    return TangleDiagram(tuple(loops), tuple(crossings))


def _mixed(lower: PLLoop, i: int, upper: PLLoop, j: int) -> List[Crossing]:
    return [
        Crossing(i, r.t1, j, r.t2, r.point, r.sign, over=1)
        for r in transverse_intersections(lower, upper)
    ]


def stack(first: TangleDiagram, second: TangleDiagram) -> TangleDiagram:
    """Place `second` on top of `first`: every mixed crossing has the second strand over"""
    shift = len(first.components)
    moved = [
        replace(x, strand_a=x.strand_a + shift, strand_b=x.strand_b + shift)
        for x in second.crossings
    ]
    mixed = []
    for i, lower in enumerate(first.components):
        for j, upper in enumerate(second.components):
            mixed += _mixed(lower, i, upper, shift + j)
    return TangleDiagram(first.components + second.components,
                         first.crossings + tuple(moved) + tuple(mixed), first.level)


def flip_diagram(diagram: TangleDiagram) -> TangleDiagram:
    """Mirror in the ceiling: every crossing switched, endpoints moved to the other level"""
    level = TOP if diagram.level == BOTTOM else BOTTOM
    return TangleDiagram(diagram.components, tuple(x.switched() for x in diagram.crossings), level)


def _word(letters) -> GroupWord:
    return GroupWord(free_letters(letters))


def _cyclic(letters) -> CyclicClass:
    return cyclic_canonical(_word(letters))


def q_projection(diagram: TangleDiagram) -> DiagramClass:
    """Homotopy data of each strand: free class of circles, word of open strands"""
    circles, paths = [], []
    for loop in diagram.components:
        letters = [letter for _, letter in ray_events(loop)]
        if loop.closed:
            circles.append(_cyclic(letters))
        else:
            paths.append(_word(letters))
    return DiagramClass(tuple(circles), tuple(paths))


def closure(diagram: TangleDiagram) -> DiagramClass:
    """Close every bullet-to-star strand by nu; all components become circles"""
    projected = q_projection(diagram)
    return DiagramClass(projected.circles + tuple(cyclic_canonical(w) for w in projected.paths))


def smoothing(diagram: TangleDiagram, crossing: Crossing) -> DiagramClass:
    """/1 class of the oriented smoothing at one crossing"""
    comps = diagram.components
    events = [ray_events(c) for c in comps]
    a, b = crossing.strand_a, crossing.strand_b
    ta, tb = crossing.t_a, crossing.t_b
    circles: List[CyclicClass] = []
    paths: List[GroupWord] = []

    def before(k, t):
        return letters_between(events[k], -1, t)

    def after(k, t):
        return letters_between(events[k], t, comps[k].length + 1)

    if a == b:
        inner = letters_between(events[a], ta, tb)
        circles.append(_cyclic(inner))
        outer = before(a, ta) + after(a, tb)
        if comps[a].closed:
            circles.append(_cyclic(outer))
        else:
            paths.append(_word(outer))
    elif comps[a].closed and comps[b].closed:
        circles.append(_cyclic(letters_around(events[a], ta) + letters_around(events[b], tb)))
    elif comps[a].closed or comps[b].closed:
        path, loop, tp, tl = (b, a, tb, ta) if comps[a].closed else (a, b, ta, tb)
        paths.append(_word(before(path, tp) + letters_around(events[loop], tl) + after(path, tp)))
    else:
        paths.append(_word(before(a, ta) + after(b, tb)))
        paths.append(_word(before(b, tb) + after(a, ta)))
    for k, comp in enumerate(comps):
        if k in (a, b):
            continue
        letters = [letter for _, letter in events[k]]
        if comp.closed:
            circles.append(_cyclic(letters))
        else:
            paths.append(_word(letters))
    return DiagramClass(tuple(circles), tuple(paths))
