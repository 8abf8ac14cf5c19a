"""Exact coefficients in Q[b]/(b^2)"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class Coefficient:
    """b0 + b1*b with rational parts; b^2 terms are dropped"""
    b0: Fraction = Fraction(0)
    b1: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, 'b0', Fraction(self.b0))
        object.__setattr__(self, 'b1', Fraction(self.b1))

    @classmethod
    def of(cls, value: Union["Coefficient", Scalar]) -> "Coefficient":
        if isinstance(value, Coefficient):
            return value
        return cls(Fraction(value))

    @classmethod
    def zero(cls) -> "Coefficient":
        return cls()

    @classmethod
    def one(cls) -> "Coefficient":
        return cls(Fraction(1))

    @classmethod
    def b(cls) -> "Coefficient":
        return cls(Fraction(0), Fraction(1))

    def is_zero(self) -> bool:
        return self.b0 == 0 and self.b1 == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other):
        other = Coefficient.of(other)
        return Coefficient(self.b0 + other.b0, self.b1 + other.b1)

    __radd__ = __add__

    def __neg__(self):
        return Coefficient(-self.b0, -self.b1)

    def __sub__(self, other):
        return self + (-Coefficient.of(other))

    def __rsub__(self, other):
        return Coefficient.of(other) - self

    def __mul__(self, other):
        other = Coefficient.of(other)
        return Coefficient(self.b0 * other.b0, self.b0 * other.b1 + self.b1 * other.b0)

    __rmul__ = __mul__

    def to_dict(self) -> dict:
        return {'b0': str(self.b0), 'b1': str(self.b1)}

    @classmethod
    def from_dict(cls, data: dict) -> "Coefficient":
        return cls(Fraction(data.get('b0', '0')), Fraction(data.get('b1', '0')))

    def __str__(self) -> str:
        if self.b1 == 0:
            return str(self.b0)
        if self.b0 == 0:
            return f"{self.b1}b"
        return f"({self.b0} + {self.b1}b)"
