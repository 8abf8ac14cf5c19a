# src/chords/relations.py
"""Admissible 4T relation instances and small diagram enumeration"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, permutations, product
from typing import Iterator, List, Tuple

from src.chords.diagrams import ChordCombo, ChordDiagram, Skeleton, chord_normal_form
from src.core.constants import Quotient


@dataclass(frozen=True)
class FourTRelation:
    """sum of sign * diagram over four terms, zero in the chord diagram space"""
    fixed: int
    moving: int
    end: int
    terms: Tuple[Tuple[ChordDiagram, int], ...]

    @property
    def t_degree(self) -> int:
        return self.terms[0][0].t_degree

    def evaluate(self, quotient: Quotient) -> ChordCombo:
        total = ChordCombo()
        for diagram, sign in self.terms:
            total = total + chord_normal_form(diagram, quotient).scale(sign)
        return total


def _neighbor(diagram: ChordDiagram, component: int, position: Fraction, after: bool,
              exclude: Tuple[int, int]) -> Fraction:
    """A free position just after (or before) `position` on a component"""
    others = [p for p, k, e in diagram.endpoints(component) if (k, e) != exclude]
    if after:
        later = [p for p in others if p > position]
        return (position + min(later)) / 2 if later else position + 1
    earlier = [p for p in others if p < position]
    return (position + max(earlier)) / 2 if earlier else position - 1


def four_t_neighbors(diagram: ChordDiagram) -> List[FourTRelation]:
    """4T instances around each strand-strand chord t = (P, Q).

    One end of another chord d slides to just after P, before P, after Q and before Q,
    with signs +, -, +, -. The other end of d stays put, on a strand or a pole.
    """
    diagram.require_admissible()
    skeleton = diagram.skeleton
    relations = []
    for i, fixed in enumerate(diagram.chords):
        if not diagram.is_strand_strand(fixed):
            continue
        for j, moving in enumerate(diagram.chords):
            if j == i:
                continue
            for end in (0, 1):
                if skeleton.is_pole(moving[end][0]) and skeleton.is_pole(moving[1 - end][0]):
                    continue
                terms = []
                for site, after, sign in ((fixed[0], True, 1), (fixed[0], False, -1),
                                          (fixed[1], True, 1), (fixed[1], False, -1)):
                    position = _neighbor(diagram, site[0], site[1], after, (j, end))
                    new_end = (site[0], position)
                    chord = (new_end, moving[1]) if end == 0 else (moving[0], new_end)
                    chords = diagram.chords[:j] + (chord,) + diagram.chords[j + 1:]
                    terms.append((ChordDiagram(skeleton, chords, diagram.a_power), sign))
                relations.append(FourTRelation(i, j, end, tuple(terms)))
    return relations


def enumerate_diagrams(skeleton: Skeleton, chords: int) -> Iterator[ChordDiagram]:
    """All admissible diagrams with the given number of chords, up to pole-endpoint order.

    Strand endpoints take every arrangement along the strands; pole endpoints are
    stacked in chord order.
    """
    strands = list(range(skeleton.strands))
    poles = [skeleton.pole_component(k) for k in range(1, skeleton.poles + 1)]
    kinds = [('ss', None)] + [('ps', pole) for pole in poles]
    seen = set()
    for choice in combinations_with_replacement(range(len(kinds)), chords):
        labels = []
        for k, kind in enumerate(choice):
            ends = 2 if kinds[kind][0] == 'ss' else 1
            labels += [k] * ends
        for arrangement in set(permutations(labels)):
            for placement in product(strands, repeat=len(arrangement)):
                ends = {k: [] for k in range(chords)}
                for n, (k, component) in enumerate(zip(arrangement, placement)):
                    ends[k].append((component, Fraction(n)))
                built = []
                for k, kind in enumerate(choice):
                    if kinds[kind][0] == 'ss':
                        built.append((ends[k][0], ends[k][1]))
                    else:
                        built.append((ends[k][0], (kinds[kind][1], Fraction(k))))
                diagram = ChordDiagram(skeleton, tuple(built))
                key = (diagram.chords,)
                if key not in seen:
                    seen.add(key)
                    yield diagram
