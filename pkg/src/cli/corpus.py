# src/cli/corpus.py
"""Deterministic corpora of words, classes and seeded random inputs"""

import random
from fractions import Fraction
from typing import List, Tuple

from src.chords.lambda_alg import PhiTerm
from src.words.combos import LoopCombo, PathCombo, trace_to_loops
from src.words.group import CyclicClass, GroupWord, Letter, cyclic_canonical, letter_key


def alphabet(p: int) -> List[Letter]:
    """gamma_1, gamma_1^-1, gamma_2, ... in the letter order"""
    return sorted(((i, s) for i in range(1, p + 1) for s in (1, -1)), key=letter_key)


def reduced_words(max_len: int, p: int, include_identity: bool = False) -> List[GroupWord]:
    """All reduced words up to max_len, length-lexicographic"""
    letters = alphabet(p)
    level = [()]
    words = [GroupWord()] if include_identity else []
    for _ in range(max_len):
        level = [
            w + (x,)
            for w in level
            for x in letters
            if not w or w[-1] != (x[0], -x[1])
        ]
        words += [GroupWord(w) for w in level]
    return words


def cyclic_classes(max_len: int, p: int) -> List[CyclicClass]:
    """Nontrivial conjugacy classes with a representative of length <= max_len"""
    classes = {cyclic_canonical(w) for w in reduced_words(max_len, p)}
    classes.discard(CyclicClass.trivial())
    return sorted(classes, key=lambda c: (len(c), c.sort_key()))


def magnus_difference(w: GroupWord) -> LoopCombo:
    """|prod (letter - 1)|, whose symbol has degree len(w)"""
    one = GroupWord()
    product = PathCombo.basis(one)
    for letter in w:
        product = product * PathCombo([(GroupWord((letter,)), 1), (one, -1)])
    return trace_to_loops(product)


def symbol_corpus(max_len: int, p: int) -> List[Tuple[str, LoopCombo]]:
    """Augmentation-reduced loop combinations built from words of length <= max_len"""
    corpus = []
    for c in cyclic_classes(max_len, p):
        corpus.append((f"{c} - |1|", LoopCombo([(c, 1), (CyclicClass.trivial(), -1)])))
    for w in reduced_words(max_len, p):
        if len(w) < 2:
            continue
        combo = magnus_difference(w)
        if not combo.is_zero():
            corpus.append((f"trace of ({w}) - 1 product", combo))
    return corpus


def random_positive_word(rng: random.Random, max_len: int, letters: int,
                         min_len: int = 0) -> Tuple[int, ...]:
    n = rng.randint(min_len, max_len)
    return tuple(rng.randint(1, letters) for _ in range(n))


def epsilon_corpus(trials: int, seed: int, max_len: int = 4,
                   letters: int = 3) -> List[Tuple[Tuple[int, ...], PhiTerm]]:
    """Seeded (B, v t w) triples"""
    rng = random.Random(seed)
    corpus = []
    for _ in range(trials):
        b = random_positive_word(rng, max_len, letters, min_len=1)
        v = random_positive_word(rng, max_len, letters)
        w = random_positive_word(rng, max_len, letters)
        coeff = Fraction(rng.randint(1, 5), rng.randint(1, 3))
        corpus.append((b, PhiTerm(v, w, coeff)))
    return corpus
