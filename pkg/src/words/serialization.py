"""Textual word grammar and JSON term lists"""

import json
import re
from fractions import Fraction
from typing import List, Optional, Tuple

from src.core.constants import GROUP_LETTER
from src.core.exceptions import ParseError
from src.words.coefficient import Coefficient
from src.words.combos import Combination, LoopCombo, PathCombo, TensorElement, WedgeElement
from src.words.group import CyclicClass, GroupWord, Letter, cyclic_canonical, format_letters, free_letters

_TOKEN = re.compile(r'\s*(?:(?P<letter>[A-Za-z])(?P<index>\d+)(?:\^(?P<power>[+-]?\d+))?|(?P<one>1)(?![\d/]))')
_COEFF = re.compile(r'\s*(?P<num>\d+(?:/\d+)?)\s*\*?')


def parse_letters(text: str, prefix: str = GROUP_LETTER, p: Optional[int] = None,
                  offset: int = 0) -> Tuple[Letter, ...]:
    """Parse `g1 g2^-1 g1^2` into a raw (unreduced) letter sequence.

    A bare `1` stands for the identity and may appear on its own only.
    """
    letters: List[Letter] = []
    pos = 0
    saw_one = False
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if not match:
            raise ParseError(f"Unexpected character {text[pos:].lstrip()[:1]!r}",
                             offset + pos + len(text[pos:]) - len(text[pos:].lstrip()))
        if match.group('one'):
            saw_one = True
        else:
            start = offset + match.start('letter')
            if match.group('letter') != prefix:
                raise ParseError(f"Expected letter {prefix!r}, got {match.group('letter')!r}", start)
            index = int(match.group('index'))
            if index < 1 or (p is not None and index > p):
                raise ParseError(f"Generator index {index} out of range", start)
            power = int(match.group('power') or 1)
            if power == 0:
                raise ParseError("Zero exponent", start)
            sign = 1 if power > 0 else -1
            letters.extend([(index, sign)] * abs(power))
        pos = match.end()
    if saw_one and letters:
        raise ParseError("Identity '1' cannot be combined with letters", offset)
    return tuple(letters)


def parse_word(text: str, prefix: str = GROUP_LETTER, p: Optional[int] = None) -> GroupWord:
    """Parse and freely reduce a based word"""
    stripped = text.strip()
    if stripped.startswith("|"):
        raise ParseError("Expected a based word, got a cyclic class", text.index("|"))
    return GroupWord(free_letters(parse_letters(text, prefix, p)))


def parse_cyclic(text: str, prefix: str = GROUP_LETTER, p: Optional[int] = None) -> CyclicClass:
    """Parse a cyclic class; the `|...|` wrapper is optional"""
    body, offset = _unwrap(text)
    return cyclic_canonical(GroupWord(free_letters(parse_letters(body, prefix, p, offset))))


def _unwrap(text: str) -> Tuple[str, int]:
    stripped = text.strip()
    lead = len(text) - len(text.lstrip())
    if stripped.startswith("|"):
        if not stripped.endswith("|") or len(stripped) < 2:
            raise ParseError("Unterminated '|'", lead + len(stripped))
        return stripped[1:-1], lead + 1
    return text, 0


def parse_loop_combo(text: str, prefix: str = GROUP_LETTER, p: Optional[int] = None) -> LoopCombo:
    """Parse `2*|g1 g2| - 1/2*|g1| + |1|` into a LoopCombo.

    A single word without bars is read as one cyclic class.
    """
    if "|" not in text:
        return LoopCombo.basis(parse_cyclic(text, prefix, p))
    terms = []
    pos = 0
    sign = 1
    expect_term = True
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        ch = text[pos]
        if ch in "+-":
            sign = sign * (1 if ch == "+" else -1)
            pos += 1
            expect_term = True
            continue
        if not expect_term:
            raise ParseError("Expected '+' or '-' between terms", pos)
        coeff = Fraction(1)
        match = _COEFF.match(text, pos)
        if match and ch != "|":
            coeff = Fraction(match.group('num'))
            pos = match.end()
            while pos < len(text) and text[pos].isspace():
                pos += 1
        if pos >= len(text) or text[pos] != "|":
            raise ParseError("Expected '|'", pos)
        end = text.find("|", pos + 1)
        if end < 0:
            raise ParseError("Unterminated '|'", pos)
        body = text[pos + 1:end]
        word = GroupWord(free_letters(parse_letters(body, prefix, p, pos + 1)))
        terms.append((cyclic_canonical(word), sign * coeff))
        pos = end + 1
        sign = 1
        expect_term = False
    if expect_term:
        raise ParseError("Expected a term", len(text))
    return LoopCombo(terms)


def _format(key, prefix: str) -> str:
    return format_letters(key.letters, prefix)


def combo_to_dict(combo: Combination, prefix: str = GROUP_LETTER) -> dict:
    """JSON-ready term list in sorted key order"""
    terms = []
    for key, coeff in combo.terms():
        entry = {'coeff': coeff.to_dict()}
        if isinstance(combo, TensorElement):
            entry['loop'] = _format(key[0], prefix)
            entry['path'] = _format(key[1], prefix)
        elif isinstance(combo, WedgeElement):
            entry['left'] = _format(key[0], prefix)
            entry['right'] = _format(key[1], prefix)
        else:
            entry['word'] = _format(key, prefix)
        terms.append(entry)
    return {'terms': terms}


def combo_from_dict(data: dict, kind: type, prefix: str = GROUP_LETTER) -> Combination:
    """Inverse of combo_to_dict"""
    try:
        entries = data['terms']
        terms = []
        for entry in entries:
            coeff = Coefficient.from_dict(entry['coeff'])
            if kind is TensorElement:
                key = (parse_cyclic(entry['loop'], prefix), parse_word(entry['path'], prefix))
            elif kind is WedgeElement:
                key = (parse_cyclic(entry['left'], prefix), parse_cyclic(entry['right'], prefix))
            elif kind is PathCombo:
                key = parse_word(entry['word'], prefix)
            else:
                key = parse_cyclic(entry['word'], prefix)
            terms.append((key, coeff))
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"Malformed term list: {e}")
    return kind(terms)


def combo_to_json(combo: Combination, prefix: str = GROUP_LETTER) -> str:
    return json.dumps(combo_to_dict(combo, prefix), ensure_ascii=False, sort_keys=True)
