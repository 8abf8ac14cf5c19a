# src/chords/lambda_alg.py
"""Algebraic lifts on the bottom interval and the cancellation of their corrections"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Sequence, Tuple, Union

from src.chords.diagrams import ChordCombo, ChordWord
from src.core.constants import Direction
from src.core.exceptions import ConsistencyError
from src.graded.elements import GradedTensor, GradedWedge, Word
from src.graded.operations import close_and_alternate

CHORD = 0

Leg = Tuple[int, ...]


@dataclass(frozen=True)
class StrandTerm:
    """A chord diagram on the bottom interval in the 1/2 layer.

    The interval is an up leg followed by a down leg. Tokens are pole letters, or 0
    for an end of the strand-strand chord. Stacking X on Y puts Y's up leg above X's
    and Y's down leg before X's.
    """
    up: Leg = ()
    down: Leg = ()

    def __mul__(self, other: "StrandTerm") -> "StrandTerm":
        return StrandTerm(self.up + other.up, other.down + self.down)

    @property
    def reading(self) -> Leg:
        return self.up + self.down

    @property
    def chord_ends(self) -> int:
        return sum(1 for t in self.reading if t == CHORD)

    def sort_key(self) -> tuple:
        return len(self.reading), self.up, self.down


@dataclass(frozen=True)
class PhiTerm:
    """c * v t w: pole words v, w on either side of one strand-strand chord t"""
    v: Word
    w: Word
    coeff: Fraction = Fraction(1)

    def as_term(self) -> StrandTerm:
        return StrandTerm(tuple(self.v) + (CHORD,) + tuple(self.w), (CHORD,))

    def flip(self) -> "PhiTerm":
        """(v t w)^# = - w t v"""
        return PhiTerm(self.w, self.v, -self.coeff)


def word_term(word: Sequence[int]) -> StrandTerm:
    return StrandTerm(tuple(word), ())


KINK = StrandTerm((CHORD, CHORD), ())


class StrandCombo:
    """Rational combination of StrandTerms"""

    def __init__(self, terms: Iterable[Tuple[StrandTerm, Union[int, Fraction]]] = ()):
        data: Dict[StrandTerm, Fraction] = {}
        for term, c in terms:
            data[term] = data.get(term, Fraction(0)) + Fraction(c)
        self.terms = {k: v for k, v in data.items() if v != 0}

    def __iter__(self):
        return iter(sorted(self.terms.items(), key=lambda kv: kv[0].sort_key()))

    def __add__(self, other: "StrandCombo") -> "StrandCombo":
        return StrandCombo(list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self) -> "StrandCombo":
        return StrandCombo([(k, -v) for k, v in self.terms.items()])

    def __sub__(self, other: "StrandCombo") -> "StrandCombo":
        return self + (-other)

    def __mul__(self, other: "StrandCombo") -> "StrandCombo":
        return StrandCombo([(a * b, x * y) for a, x in self.terms.items() for b, y in other.terms.items()])

    def scale(self, c) -> "StrandCombo":
        return StrandCombo([(k, Fraction(c) * v) for k, v in self.terms.items()])

    def __eq__(self, other) -> bool:
        return isinstance(other, StrandCombo) and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    @classmethod
    def of(cls, term: StrandTerm, c=1) -> "StrandCombo":
        return cls([(term, c)])

    def s_part(self, s: int) -> "StrandCombo":
        """Terms with exactly s strand-strand chords"""
        return StrandCombo([(k, v) for k, v in self.terms.items() if k.chord_ends == 2 * s])


def phi_combo(phi: Sequence[PhiTerm], flipped: bool = False) -> StrandCombo:
    return StrandCombo([((x.flip() if flipped else x).as_term(), (x.flip() if flipped else x).coeff)
                        for x in phi])


def commutator(x: StrandCombo, y: StrandCombo) -> StrandCombo:
    return x * y - y * x


def lambda_alg(word: Sequence[int], direction: Direction, phi: Sequence[PhiTerm] = ()) -> StrandCombo:
    """Ascending: D + [D, phi] + D t/2. Descending: D + [phi^#, D]^{2,1} + (t/2) D.

    Pole endpoints commute in the 1/2 layer, so both directions start from the same
    word term, and the strand swap (2,1) leaves the reading order unchanged.
    """
    base = StrandCombo.of(word_term(word))
    half_kink = StrandCombo.of(KINK, Fraction(1, 2))
    if direction == Direction.ASCENDING:
        return base + commutator(base, phi_combo(phi)) + base * half_kink
    return base + commutator(phi_combo(phi, flipped=True), base) + half_kink * base


def a_check(x: StrandCombo) -> GradedTensor:
    """Division by a: smooth the single chord; circle between its ends, path the rest"""
    terms = []
    degree = 1
    for term, c in x:
        reading = term.reading
        ends = [n for n, t in enumerate(reading) if t == CHORD]
        if len(ends) != 2:
            raise ConsistencyError("Division by a needs exactly one strand-strand chord",
                                   {'reading': list(reading)})
        lo, hi = ends
        circle = reading[lo + 1:hi]
        path = reading[:lo] + reading[hi + 1:]
        degree = max(degree, len(reading) - 2)
        terms.append(((circle, path), c))
    return GradedTensor(terms, degree)


def to_chord_words(x: StrandCombo) -> ChordCombo:
    """/1 image: terms carrying a chord vanish; the rest read as bottom words"""
    return ChordCombo([(ChordWord((), (term.reading,)), c) for term, c in x if term.chord_ends == 0])


def epsilon_one(b: Word, x: PhiTerm) -> GradedWedge:
    """Alt(cl(a_check([B, X] - [X^#, B]^{2,1})))"""
    big_b = StrandCombo.of(word_term(b))
    term = StrandCombo.of(x.as_term(), x.coeff)
    flipped = StrandCombo.of(x.flip().as_term(), x.flip().coeff)
    return close_and_alternate(a_check(commutator(big_b, term) - commutator(flipped, big_b)))


def epsilon_two(b: Word) -> GradedWedge:
    """Alt(cl(a_check(B t/2 - (t/2) B)))"""
    big_b = StrandCombo.of(word_term(b))
    half_kink = StrandCombo.of(KINK, Fraction(1, 2))
    return close_and_alternate(a_check(big_b * half_kink - half_kink * big_b))


def epsilon_cancellation(b: Word, x: PhiTerm) -> Tuple[GradedWedge, GradedWedge]:
    """Both correction terms of the algebraic cobracket; each vanishes identically"""
    return epsilon_one(b, x), epsilon_two(b)


def correction_difference(word: Sequence[int], phi: Sequence[PhiTerm]) -> GradedWedge:
    """Alt(cl(a_check(lambda_a - lambda_d))) restricted to the chord-carrying part"""
    diff = lambda_alg(word, Direction.ASCENDING, phi) - lambda_alg(word, Direction.DESCENDING, phi)
    return close_and_alternate(a_check(diff.s_part(1)))
