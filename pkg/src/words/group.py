"""Free group on p generators: reduced words and conjugacy classes"""

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Tuple

from src.core.constants import GROUP_LETTER
from src.core.exceptions import InputError
from src.utils.validators import Validators

Letter = Tuple[int, int]


def letter_key(letter: Letter) -> Tuple[int, int]:
    """Total order on letters: index ascending, then +1 before -1"""
    index, sign = letter
    return index, 0 if sign > 0 else 1


def format_letters(letters: Tuple[Letter, ...], prefix: str = GROUP_LETTER) -> str:
    """Render letters in the textual grammar, grouping equal runs as powers"""
    if not letters:
        return "1"
    parts = []
    i = 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        index, sign = letters[i]
        power = (j - i) * sign
        parts.append(f"{prefix}{index}" if power == 1 else f"{prefix}{index}^{power}")
        i = j
    return " ".join(parts)


def _free_reduce(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    stack = []
    for index, sign in letters:
        if stack and stack[-1] == (index, -sign):
            stack.pop()
        else:
            stack.append((index, sign))
    return tuple(stack)


@dataclass(frozen=True, order=False)
class GroupWord:
    """A freely reduced word in the generators gamma_i^{+-1}"""
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        letters = tuple((int(i), int(s)) for i, s in self.letters)
        if _free_reduce(letters) != letters:
            raise InputError(f"GroupWord must be freely reduced: {letters}")
        object.__setattr__(self, 'letters', letters)

    @classmethod
    def identity(cls) -> "GroupWord":
        return cls(())

    @classmethod
    def generator(cls, index: int, sign: int = 1) -> "GroupWord":
        return cls(((index, sign),))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, item):
        return self.letters[item]

    def is_identity(self) -> bool:
        return not self.letters

    def sort_key(self) -> tuple:
        return tuple(letter_key(letter) for letter in self.letters)

    def __lt__(self, other: "GroupWord") -> bool:
        return self.sort_key() < other.sort_key()

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return group_multiply(self, other)

    def inverse(self) -> "GroupWord":
        return group_invert(self)

    def max_index(self) -> int:
        return max((i for i, _ in self.letters), default=0)

    def __str__(self) -> str:
        return format_letters(self.letters)

    def __repr__(self) -> str:
        return f"GroupWord({self})"


@dataclass(frozen=True)
class CyclicClass:
    """A conjugacy class: cyclically reduced word in least rotation"""
    word: GroupWord = GroupWord()

    def __post_init__(self):
        if self.word.letters != _least_rotation(_cyclic_reduce(self.word.letters)):
            raise InputError(f"CyclicClass must be canonical: {self.word}")

    @classmethod
    def trivial(cls) -> "CyclicClass":
        return cls(GroupWord())

    @property
    def letters(self) -> Tuple[Letter, ...]:
        return self.word.letters

    def __len__(self) -> int:
        return len(self.word)

    def is_trivial(self) -> bool:
        return self.word.is_identity()

    def sort_key(self) -> tuple:
        return self.word.sort_key()

    def __lt__(self, other: "CyclicClass") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return f"|{self.word}|"

    def __repr__(self) -> str:
        return f"CyclicClass({self})"


def reduce_word(raw: Iterable, p: Optional[int] = None) -> GroupWord:
    """Freely reduce a raw letter sequence"""
    letters = Validators.validate_word_letters(raw, p)
    return GroupWord(_free_reduce(letters))


def group_multiply(u: GroupWord, v: GroupWord) -> GroupWord:
    return GroupWord(_free_reduce(u.letters + v.letters))


def group_invert(u: GroupWord) -> GroupWord:
    return GroupWord(tuple((i, -s) for i, s in reversed(u.letters)))


def _cyclic_reduce(letters: Tuple[Letter, ...]) -> Tuple[Letter, ...]:
    start, end = 0, len(letters)
    while end - start >= 2 and letters[start] == (letters[end - 1][0], -letters[end - 1][1]):
        start += 1
        end -= 1
    return letters[start:end]


def _least_rotation(letters: Tuple[Letter, ...]) -> Tuple[Letter, ...]:
    if not letters:
        return letters
    rotations = (letters[k:] + letters[:k] for k in range(len(letters)))
    return min(rotations, key=lambda r: tuple(letter_key(x) for x in r))


def cyclic_canonical(w: GroupWord) -> CyclicClass:
    """Conjugacy-class normal form of a reduced word"""
    return CyclicClass(GroupWord(_least_rotation(_cyclic_reduce(w.letters))))


def free_letters(raw: Iterable[Letter]) -> Tuple[Letter, ...]:
    """Free reduction without validation, for internal word reading"""
    return _free_reduce(raw)
