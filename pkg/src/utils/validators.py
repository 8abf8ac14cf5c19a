"""Input validation utilities"""

from fractions import Fraction
from typing import Any, Iterable, Tuple, Union

from src.core.constants import MAX_LAYERS
from src.core.exceptions import InputError, ParseError
from src.utils.logger import get_logger

logger = get_logger(__name__)

Number = Union[int, str, Fraction]


class Validators:
    """Common validation functions"""

    @staticmethod
    def validate_punctures(p: int) -> int:
        """Validate puncture count"""
        if not isinstance(p, int) or p < 1:
            raise InputError(f"Puncture count must be a positive integer, got {p!r}")
        return p

    @staticmethod
    def validate_degree(n: int) -> int:
        """Validate truncation degree"""
        if not isinstance(n, int) or n < 1:
            raise InputError(f"Truncation degree must be >= 1, got {n!r}")
        return n

    @staticmethod
    def validate_layer(layer: int) -> int:
        """Validate a loop synthesis layer"""
        if not isinstance(layer, int) or not 0 <= layer < MAX_LAYERS:
            raise InputError(f"Layer must be in 0..{MAX_LAYERS - 1}, got {layer!r}")
        return layer

    @staticmethod
    def validate_letter(letter: Any, p: int = None) -> Tuple[int, int]:
        """Validate a signed generator (index, sign)"""
        try:
            index, sign = letter
        except (TypeError, ValueError):
            raise InputError(f"Letter must be an (index, sign) pair, got {letter!r}")
        if not isinstance(index, int) or index < 1:
            raise InputError(f"Generator index must be >= 1, got {index!r}")
        if p is not None and index > p:
            raise InputError(f"Generator index {index} out of range 1..{p}")
        if sign not in (1, -1):
            raise InputError(f"Generator sign must be +1 or -1, got {sign!r}")
        return index, sign

    @staticmethod
    def validate_word_letters(letters: Iterable[Any], p: int = None) -> Tuple[Tuple[int, int], ...]:
        """Validate every letter of a raw letter sequence"""
        return tuple(Validators.validate_letter(letter, p) for letter in letters)

    @staticmethod
    def validate_rational(value: Number) -> Fraction:
        """Parse an exact rational from int, Fraction or "num/den" text"""
        if isinstance(value, bool):
            raise ParseError(f"Invalid rational {value!r}")
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, str):
            try:
                return Fraction(value.strip())
            except (ValueError, ZeroDivisionError) as e:
                raise ParseError(f"Invalid rational {value!r}: {e}")
        raise ParseError(f"Invalid rational {value!r}: floats are not accepted")

    @staticmethod
    def validate_rational_pair(point: Any) -> Tuple[Fraction, Fraction]:
        """Parse an exact rational point"""
        try:
            x, y = point
        except (TypeError, ValueError):
            raise ParseError(f"Point must be a pair, got {point!r}")
        return Validators.validate_rational(x), Validators.validate_rational(y)
