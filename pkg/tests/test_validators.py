# tests/test_validators.py
from fractions import Fraction

import pytest

from src.core.constants import MAX_LAYERS
from src.core.exceptions import InputError, ParseError
from src.utils.validators import Validators


class TestValidators:
    def test_punctures(self):
        assert Validators.validate_punctures(3) == 3
        with pytest.raises(InputError):
            Validators.validate_punctures(0)

    def test_degree(self):
        with pytest.raises(InputError):
            Validators.validate_degree(0)

    def test_layer(self):
        assert Validators.validate_layer(MAX_LAYERS - 1) == MAX_LAYERS - 1
        with pytest.raises(InputError):
            Validators.validate_layer(MAX_LAYERS)

    @pytest.mark.parametrize("letter", [(0, 1), (1, 2), "g1", (1,)])
    def test_bad_letters(self, letter):
        with pytest.raises(InputError):
            Validators.validate_letter(letter)

    def test_letter_beyond_punctures(self):
        with pytest.raises(InputError):
            Validators.validate_letter((3, -1), p=2)

    @pytest.mark.parametrize("value, expected", [
        (2, Fraction(2)), ("3/4", Fraction(3, 4)), (" -1/2 ", Fraction(-1, 2)), (Fraction(1, 3), Fraction(1, 3)),
    ])
    def test_rationals(self, value, expected):
        assert Validators.validate_rational(value) == expected

    @pytest.mark.parametrize("value", [0.5, True, "1/0", "abc"])
    def test_rejected_rationals(self, value):
        with pytest.raises(ParseError):
            Validators.validate_rational(value)

    def test_rational_pair(self):
        assert Validators.validate_rational_pair(["1/2", 1]) == (Fraction(1, 2), Fraction(1))
        with pytest.raises(ParseError):
            Validators.validate_rational_pair([1, 2, 3])
