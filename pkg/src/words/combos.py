"""Linear combinations over Q[b]/(b^2): group algebra, trace, tensors, wedges"""

from typing import Callable, Dict, Generic, Hashable, Iterable, Iterator, Tuple, TypeVar, Union

from src.core.exceptions import ConsistencyError
from src.words.coefficient import Coefficient, Scalar
from src.words.group import CyclicClass, GroupWord, cyclic_canonical, group_multiply

K = TypeVar('K', bound=Hashable)
CoeffLike = Union[Coefficient, Scalar]


class Combination(Generic[K]):
    """Immutable finite map key -> Coefficient without zero entries"""

    def __init__(self, terms: Union[Dict[K, CoeffLike], Iterable[Tuple[K, CoeffLike]], None] = None):
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        data: Dict[K, Coefficient] = {}
        for key, coeff in items:
            key = self._normalize_key(key)
            data[key] = data.get(key, Coefficient.zero()) + Coefficient.of(coeff)
        self._terms = {k: v for k, v in data.items() if not v.is_zero()}

    def _normalize_key(self, key):
        return key

    @classmethod
    def _sort_key(cls, key) -> tuple:
        return key.sort_key()

    @classmethod
    def basis(cls, key: K, coeff: CoeffLike = 1):
        return cls([(key, coeff)])

    def __iter__(self) -> Iterator[Tuple[K, Coefficient]]:
        return iter(self.terms())

    def terms(self):
        return sorted(self._terms.items(), key=lambda kv: self._sort_key(kv[0]))

    def keys(self):
        return [k for k, _ in self.terms()]

    def coefficient(self, key: K) -> Coefficient:
        return self._terms.get(self._normalize_key(key), Coefficient.zero())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def augmentation(self) -> Coefficient:
        """Sum of coefficients"""
        total = Coefficient.zero()
        for coeff in self._terms.values():
            total = total + coeff
        return total

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        return type(self) is type(other) and self._terms == other._terms

    def __hash__(self):
        return hash((type(self).__name__, frozenset(self._terms.items())))

    def __add__(self, other):
        return type(self)(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self):
        return type(self)([(k, -v) for k, v in self._terms.items()])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: CoeffLike):
        c = Coefficient.of(c)
        return type(self)([(k, c * v) for k, v in self._terms.items()])

    __rmul__ = scale

    def map_keys(self, fn: Callable, target=None):
        target = target or type(self)
        return target([(fn(k), v) for k, v in self._terms.items()])

    def b_part(self):
        """Terms of b^1 with their rational coefficients"""
        return type(self)([(k, v.b1) for k, v in self._terms.items()])

    def word_part(self):
        """Terms of b^0"""
        return type(self)([(k, v.b0) for k, v in self._terms.items()])

    def divide_by_b(self):
        """Exact division by b; requires a vanishing b^0 part"""
        if any(v.b0 != 0 for v in self._terms.values()):
            raise ConsistencyError("Element has a nonzero b^0 part and is not divisible by b")
        return self.b_part()

    def _format_key(self, key) -> str:
        return str(key)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for key, coeff in self.terms():
            text = self._format_key(key)
            if coeff.b1 == 0 and coeff.b0 in (1, -1):
                term = text if coeff.b0 == 1 else f"-{text}"
            elif coeff.b1 == 0 and coeff.b0 < 0:
                term = f"-{-coeff.b0}*{text}"
            else:
                term = f"{coeff}*{text}"
            out.append(term)
        result = out[0]
        for term in out[1:]:
            result += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return result

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"


class PathCombo(Combination[GroupWord]):
    """Element of the group algebra Q[b]/(b^2) pi"""

    def __mul__(self, other: "PathCombo") -> "PathCombo":
        return PathCombo([
            (group_multiply(u, v), a * c)
            for u, a in self._terms.items()
            for v, c in other._terms.items()
        ])


class LoopCombo(Combination[CyclicClass]):
    """Element of |Q pi|, spanned by free homotopy classes"""

    def _normalize_key(self, key):
        if isinstance(key, GroupWord):
            return cyclic_canonical(key)
        return key


class TensorElement(Combination[Tuple[CyclicClass, GroupWord]]):
    """Element of |Q pi| (x) Q pi"""

    @classmethod
    def _sort_key(cls, key) -> tuple:
        return key[0].sort_key(), key[1].sort_key()

    def _format_key(self, key) -> str:
        return f"{key[0]}⊗{key[1]}"


class WedgeElement(Combination[Tuple[CyclicClass, CyclicClass]]):
    """Element of |Q pi| ^ |Q pi| with keys (a, b), a < b"""

    def __init__(self, terms=None):
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        oriented = []
        for (a, b), coeff in items:
            if a == b:
                continue
            if b < a:
                oriented.append(((b, a), -Coefficient.of(coeff)))
            else:
                oriented.append(((a, b), coeff))
        super().__init__(oriented)

    @classmethod
    def _sort_key(cls, key) -> tuple:
        return key[0].sort_key(), key[1].sort_key()

    def _format_key(self, key) -> str:
        return f"{key[0]}∧{key[1]}"


def trace_to_loops(x: PathCombo) -> LoopCombo:
    return LoopCombo([(cyclic_canonical(w), c) for w, c in x])


def wedge_normalize(pairs: Iterable[Tuple[CyclicClass, CyclicClass, CoeffLike]]) -> WedgeElement:
    return WedgeElement([((a, b), c) for a, b, c in pairs])


def close_tensor(x: TensorElement) -> Dict[Tuple[CyclicClass, CyclicClass], Coefficient]:
    """Apply the trace to the path factor: |Q pi| (x) Q pi -> |Q pi| (x) |Q pi|"""
    closed: Dict[Tuple[CyclicClass, CyclicClass], Coefficient] = {}
    for (loop, path), coeff in x:
        key = (loop, cyclic_canonical(path))
        closed[key] = closed.get(key, Coefficient.zero()) + coeff
    return closed


def alternate(closed: Dict[Tuple[CyclicClass, CyclicClass], Coefficient]) -> WedgeElement:
    """Alt(x (x) y) = x (x) y - y (x) x, stored as 2-term wedges"""
    return WedgeElement([((a, b), c) for (a, b), c in closed.items()])
