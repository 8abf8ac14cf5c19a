# src/chords/diagrams.py
"""Admissible chord diagrams on skeleta with poles and their normal forms"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from src.core.constants import Direction, Quotient
from src.core.exceptions import InadmissibleDiagramError, InputError, ParseError
from src.graded.elements import Word, cyclic_word, format_word, word_key
from src.words.combos import Combination

Site = Tuple[int, Fraction]
Chord = Tuple[Site, Site]


@dataclass(frozen=True)
class Skeleton:
    """Circles, bottom intervals and poles; component ids run in that order"""
    circles: int = 0
    bottoms: int = 1
    poles: int = 2

    @property
    def strands(self) -> int:
        return self.circles + self.bottoms

    @property
    def size(self) -> int:
        return self.strands + self.poles

    def is_circle(self, component: int) -> bool:
        return 0 <= component < self.circles

    def is_bottom(self, component: int) -> bool:
        return self.circles <= component < self.strands

    def is_pole(self, component: int) -> bool:
        return self.strands <= component < self.size

    def pole_letter(self, component: int) -> int:
        return component - self.strands + 1

    def pole_component(self, letter: int) -> int:
        return self.strands + letter - 1

    def to_dict(self) -> dict:
        return {'circles': self.circles, 'bottoms': self.bottoms, 'poles': self.poles}


@dataclass(frozen=True)
class ChordDiagram:
    """Chords between sites (component id, position); positions order endpoints along a component"""
    skeleton: Skeleton
    chords: Tuple[Chord, ...] = ()
    a_power: int = 0

    def __post_init__(self):
        chords = tuple(
            ((int(c1), Fraction(p1)), (int(c2), Fraction(p2))) for (c1, p1), (c2, p2) in self.chords
        )
        object.__setattr__(self, 'chords', chords)
        sites = [site for chord in chords for site in chord]
        if len(set(sites)) != len(sites):
            raise InputError("Two chord endpoints share a site")
        for component, _ in sites:
            if not 0 <= component < self.skeleton.size:
                raise InputError(f"Component {component} not in skeleton")
        if self.a_power < 0:
            raise InputError("a-power must be non-negative")

    def is_strand_strand(self, chord: Chord) -> bool:
        return not self.skeleton.is_pole(chord[0][0]) and not self.skeleton.is_pole(chord[1][0])

    def is_admissible(self) -> bool:
        return not any(self.skeleton.is_pole(a[0]) and self.skeleton.is_pole(b[0])
                       for a, b in self.chords)

    def require_admissible(self) -> None:
        if not self.is_admissible():
            raise InadmissibleDiagramError("Diagram has a pole-pole chord")

    @property
    def t_degree(self) -> int:
        return len(self.chords) + self.a_power

    @property
    def s_degree(self) -> int:
        return sum(1 for c in self.chords if self.is_strand_strand(c)) + self.a_power

    def endpoints(self, component: int) -> List[Tuple[Fraction, int, int]]:
        """(position, chord index, end) of the endpoints on a component, in order"""
        found = [
            (site[1], k, e)
            for k, chord in enumerate(self.chords)
            for e, site in enumerate(chord)
            if site[0] == component
        ]
        return sorted(found)

    def to_dict(self) -> dict:
        return {
            'skeleton': self.skeleton.to_dict(),
            'chords': [[[a[0], str(a[1])], [b[0], str(b[1])]] for a, b in self.chords],
            'a_power': self.a_power,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ChordDiagram":
        try:
            skeleton = Skeleton(**data['skeleton'])
            chords = tuple(
                ((int(a[0]), Fraction(a[1])), (int(b[0]), Fraction(b[1]))) for a, b in data['chords']
            )
            return cls(skeleton, chords, int(data.get('a_power', 0)))
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"Malformed chord diagram: {e}")


@dataclass(frozen=True)
class ChordWord:
    """Pole-word data of a diagram without strand-strand chords: cyclic words of the
    circles and linear words of the bottom intervals, with an a-power"""
    circles: Tuple[Word, ...] = ()
    bottoms: Tuple[Word, ...] = ()
    a_power: int = 0

    def __post_init__(self):
        circles = tuple(sorted((cyclic_word(c) for c in self.circles), key=word_key))
        object.__setattr__(self, 'circles', circles)
        object.__setattr__(self, 'bottoms', tuple(tuple(b) for b in self.bottoms))

    def sort_key(self) -> tuple:
        return (self.a_power, len(self.circles), tuple(word_key(c) for c in self.circles),
                tuple(word_key(b) for b in self.bottoms))

    @property
    def s_degree(self) -> int:
        return self.a_power

    def __str__(self) -> str:
        parts = [f"|{format_word(c)}|" for c in self.circles] + [format_word(b) for b in self.bottoms]
        body = "[" + ", ".join(parts) + "]"
        if self.a_power == 0:
            return body
        return ("a*" if self.a_power == 1 else f"a^{self.a_power}*") + body


class ChordCombo(Combination[ChordWord]):
    """Rational combination of chord words"""
    pass


def _component_tokens(diagram: ChordDiagram, component: int) -> List[Tuple[int, Optional[Tuple[int, int]]]]:
    """Along a strand: pole letters, or (chord index, end) markers for strand-strand chords"""
    tokens = []
    skeleton = diagram.skeleton
    for _, k, e in diagram.endpoints(component):
        chord = diagram.chords[k]
        other = chord[1 - e]
        if skeleton.is_pole(other[0]):
            tokens.append((skeleton.pole_letter(other[0]), None))
        else:
            tokens.append((0, (k, e)))
    return tokens


def _pole_words(diagram: ChordDiagram) -> ChordWord:
    skeleton = diagram.skeleton
    circles = [tuple(t for t, _ in _component_tokens(diagram, c)) for c in range(skeleton.circles)]
    bottoms = [tuple(t for t, _ in _component_tokens(diagram, c))
               for c in range(skeleton.circles, skeleton.strands)]
    return ChordWord(tuple(circles), tuple(bottoms), diagram.a_power)


def _smooth(diagram: ChordDiagram, k: int) -> ChordWord:
    """Oriented smoothing along the single strand-strand chord k: arriving at one end
    continue from the other end"""
    skeleton = diagram.skeleton
    tokens = {c: _component_tokens(diagram, c) for c in range(skeleton.strands)}
    (ca, _), (cb, _) = diagram.chords[k]

    def index_of(c, e):
        return next(n for n, (_, m) in enumerate(tokens[c]) if m == (k, e))

    ia, ib = index_of(ca, 0), index_of(cb, 1)
    letters = {c: [t for t, _ in tokens[c]] for c in tokens}
    circles = [tuple(letters[c]) for c in range(skeleton.circles) if c not in (ca, cb)]
    bottoms = {c: tuple(letters[c]) for c in range(skeleton.circles, skeleton.strands)
               if c not in (ca, cb)}
    la, lb = letters[ca], letters[cb]
    if ca == cb:
        lo, hi = sorted((ia, ib))
        circles.append(tuple(la[lo + 1:hi]))
        if skeleton.is_circle(ca):
            circles.append(tuple(la[hi + 1:]) + tuple(la[:lo]))
        else:
            bottoms[ca] = tuple(la[:lo]) + tuple(la[hi + 1:])
    elif skeleton.is_circle(ca) and skeleton.is_circle(cb):
        circles.append(tuple(la[ia + 1:] + la[:ia]) + tuple(lb[ib + 1:] + lb[:ib]))
    elif skeleton.is_circle(ca) or skeleton.is_circle(cb):
        (cp, ip), (cc, ic) = ((cb, ib), (ca, ia)) if skeleton.is_circle(ca) else ((ca, ia), (cb, ib))
        lp, lc = letters[cp], letters[cc]
        bottoms[cp] = tuple(lp[:ip]) + tuple(lc[ic + 1:] + lc[:ic]) + tuple(lp[ip + 1:])
    else:
        # Two intervals exchange their tails
        bottoms[ca] = tuple(la[:ia]) + tuple(lb[ib + 1:])
        bottoms[cb] = tuple(lb[:ib]) + tuple(la[ia + 1:])
    ordered = [bottoms[c] for c in sorted(bottoms)]
    return ChordWord(tuple(circles), tuple(ordered), diagram.a_power + 1)


def chord_normal_form(diagram: ChordDiagram, quotient: Quotient = Quotient.SLASH_ONE) -> ChordCombo:
    """Normal form in the /1 or 1/2 quotient; pole endpoints commute in both"""
    diagram.require_admissible()
    strand_chords = [k for k, c in enumerate(diagram.chords) if diagram.is_strand_strand(c)]
    if quotient == Quotient.SLASH_ONE:
        if strand_chords or diagram.a_power:
            return ChordCombo()
        return ChordCombo.basis(_pole_words(diagram))
    if diagram.s_degree != 1:
        return ChordCombo()
    if diagram.a_power == 1:
        return ChordCombo.basis(_pole_words(diagram))
    return ChordCombo.basis(_smooth(diagram, strand_chords[0]))


def flip_chord(x):
    """Vertical mirror with ascending poles, scaled by (-1)^s.

    ChordWord -> ChordCombo with reversed words; ChordDiagram -> (diagram, sign)
    with strand and pole orders reversed.
    """
    if isinstance(x, ChordWord):
        flipped = ChordWord(tuple(tuple(reversed(c)) for c in x.circles),
                            tuple(tuple(reversed(b)) for b in x.bottoms), x.a_power)
        return ChordCombo.basis(flipped, (-1) ** x.s_degree)
    if isinstance(x, ChordCombo):
        result = ChordCombo()
        for word, c in x:
            result = result + flip_chord(word).scale(c)
        return result
    if isinstance(x, ChordDiagram):
        chords = tuple(((a[0], -a[1]), (b[0], -b[1])) for a, b in x.chords)
        return ChordDiagram(x.skeleton, chords, x.a_power), (-1) ** x.s_degree
    raise InputError(f"Cannot flip {type(x).__name__}")


def gr_lift(word: Sequence[int], poles: int, direction: Direction = Direction.ASCENDING) -> ChordDiagram:
    """Bottom-interval diagram with the k-th strand endpoint joined to pole word[k];
    pole endpoints follow (ascending) or oppose (descending) the strand order"""
    skeleton = Skeleton(0, 1, poles)
    chords = []
    for k, letter in enumerate(word):
        if not 1 <= letter <= poles:
            raise InputError(f"Pole letter {letter} out of range 1..{poles}")
        height = k if direction == Direction.ASCENDING else -k
        chords.append(((0, Fraction(k)), (skeleton.pole_component(letter), Fraction(height))))
    return ChordDiagram(skeleton, tuple(chords))
