# src/graded/elements.py
"""Truncated elements of the free associative algebra As<x1..xp> and of |As|"""

from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Tuple, Union

from src.core.constants import DEFAULT_GRADED_DEGREE, GRADED_LETTER
from src.core.exceptions import ConsistencyError
from src.utils.validators import Validators
from src.words.group import format_letters

Word = Tuple[int, ...]
Rational = Union[int, Fraction]


def word_key(word: Word) -> tuple:
    """Degree first, then lexicographic"""
    return len(word), word


def cyclic_word(word: Iterable[int]) -> Word:
    """Least rotation of a cyclic word"""
    word = tuple(word)
    if not word:
        return word
    return min(word[k:] + word[:k] for k in range(len(word)))


def format_word(word: Word) -> str:
    return format_letters(tuple((i, 1) for i in word), GRADED_LETTER)


def check_same_degree(*elements: "_Graded") -> int:
    degrees = {e.degree for e in elements}
    if len(degrees) != 1:
        raise ConsistencyError("Mixed truncation degrees", {'degrees': sorted(degrees)})
    return degrees.pop()


class _Graded:
    """Finite map key -> Fraction truncated at total letter count `degree`"""

    def __init__(self, terms: Union[Dict, Iterable[Tuple]] = (), degree: int = DEFAULT_GRADED_DEGREE):
        self.degree = Validators.validate_degree(degree)
        items = terms.items() if isinstance(terms, dict) else terms
        data: Dict = {}
        self.truncated = False
        for key, c in items:
            key = self._normalize(key)
            if self._size(key) > degree:
                self.truncated = True
                continue
            data[key] = data.get(key, Fraction(0)) + Fraction(c)
        self._terms = {k: v for k, v in data.items() if v != 0}

    def _normalize(self, key):
        return tuple(key)

    @staticmethod
    def _size(key) -> int:
        return len(key)

    @staticmethod
    def _sort_key(key) -> tuple:
        return word_key(key)

    def _new(self, terms) -> "_Graded":
        return type(self)(terms, self.degree)

    def terms(self) -> List[Tuple]:
        return sorted(self._terms.items(), key=lambda kv: self._sort_key(kv[0]))

    def __iter__(self) -> Iterator[Tuple]:
        return iter(self.terms())

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, key) -> Fraction:
        return self._terms.get(self._normalize(key), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if type(self) is not type(other):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash((type(self).__name__, self.degree, frozenset(self._terms.items())))

    def __add__(self, other: "_Graded") -> "_Graded":
        check_same_degree(self, other)
        return self._new(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "_Graded":
        return self._new([(k, -v) for k, v in self._terms.items()])

    def __sub__(self, other: "_Graded") -> "_Graded":
        return self + (-other)

    def scale(self, c: Rational) -> "_Graded":
        return self._new([(k, Fraction(c) * v) for k, v in self._terms.items()])

    __rmul__ = scale

    def homogeneous(self, d: int) -> "_Graded":
        """Component of total letter count d"""
        return self._new([(k, v) for k, v in self._terms.items() if self._size(k) == d])

    def lowest_degree(self):
        return min((self._size(k) for k in self._terms), default=None)

    def _format_key(self, key) -> str:
        return format_word(key)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for n, (key, c) in enumerate(self.terms()):
            text = self._format_key(key)
            mag = abs(c)
            term = text if mag == 1 else f"{mag}*{text}"
            if n == 0:
                out = term if c > 0 else f"-{term}"
            else:
                out += f" + {term}" if c > 0 else f" - {term}"
        return out

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self}, N={self.degree})"

    def to_dict(self) -> dict:
        return {
            'degree': self.degree,
            'terms': [{'coeff': str(c), 'word': self._format_key(k)} for k, c in self.terms()],
        }


class GradedElement(_Graded):
    """Element of As truncated at degree N"""

    @classmethod
    def word(cls, word: Iterable[int], degree: int = DEFAULT_GRADED_DEGREE,
             c: Rational = 1) -> "GradedElement":
        return cls([(tuple(word), c)], degree)

    @classmethod
    def one(cls, degree: int = DEFAULT_GRADED_DEGREE) -> "GradedElement":
        return cls([((), 1)], degree)

    def __mul__(self, other: "GradedElement") -> "GradedElement":
        """Concatenation product, truncated"""
        check_same_degree(self, other)
        return GradedElement([
            (u + v, a * b)
            for u, a in self._terms.items()
            for v, b in other._terms.items()
            if len(u) + len(v) <= self.degree
        ], self.degree)

    def _format_key(self, key) -> str:
        return format_word(key)


class CyclicGradedElement(_Graded):
    """Element of |As|: keys are least rotations; the empty cyclic word is a basis element"""

    def _normalize(self, key):
        return cyclic_word(key)

    @classmethod
    def word(cls, word: Iterable[int], degree: int = DEFAULT_GRADED_DEGREE,
             c: Rational = 1) -> "CyclicGradedElement":
        return cls([(tuple(word), c)], degree)

    def _format_key(self, key) -> str:
        return f"|{format_word(key)}|"


class GradedTensor(_Graded):
    """Element of |As| (x) As with keys (cyclic word, word)"""

    def _normalize(self, key):
        return cyclic_word(key[0]), tuple(key[1])

    @staticmethod
    def _size(key) -> int:
        return len(key[0]) + len(key[1])

    @staticmethod
    def _sort_key(key) -> tuple:
        return word_key(key[0]), word_key(key[1])

    def _format_key(self, key) -> str:
        return f"|{format_word(key[0])}|⊗{format_word(key[1])}"

    def to_dict(self) -> dict:
        return {
            'degree': self.degree,
            'terms': [{'coeff': str(c), 'loop': format_word(k[0]), 'path': format_word(k[1])}
                      for k, c in self.terms()],
        }


class GradedWedge(_Graded):
    """Element of |As| ^ |As| with keys (a, b), a < b in degree-lexicographic order"""

    def __init__(self, terms=(), degree: int = DEFAULT_GRADED_DEGREE):
        items = terms.items() if isinstance(terms, dict) else terms
        oriented = []
        for (a, b), c in items:
            a, b = cyclic_word(a), cyclic_word(b)
            if a == b:
                continue
            if word_key(b) < word_key(a):
                oriented.append(((b, a), -Fraction(c)))
            else:
                oriented.append(((a, b), c))
        super().__init__(oriented, degree)

    def _normalize(self, key):
        return tuple(key[0]), tuple(key[1])

    @staticmethod
    def _size(key) -> int:
        return len(key[0]) + len(key[1])

    @staticmethod
    def _sort_key(key) -> tuple:
        return word_key(key[0]), word_key(key[1])

    def _format_key(self, key) -> str:
        return f"|{format_word(key[0])}|∧|{format_word(key[1])}|"

    def to_dict(self) -> dict:
        return {
            'degree': self.degree,
            'terms': [{'coeff': str(c), 'left': format_word(k[0]), 'right': format_word(k[1])}
                      for k, c in self.terms()],
        }
