# tests/conftest.py
"""Shared fixtures and helpers"""

import pytest

from src.core.config import ParallelConfig, RunConfig
from src.words.combos import LoopCombo, TensorElement, WedgeElement
from src.words.group import CyclicClass, GroupWord
from src.words.serialization import parse_cyclic, parse_loop_combo, parse_word


def word(text: str) -> GroupWord:
    return parse_word(text)


def cls(text: str) -> CyclicClass:
    return parse_cyclic(text)


def loops(text: str) -> LoopCombo:
    return parse_loop_combo(text)


def tensor(*terms) -> TensorElement:
    """tensor(("1", "g1", 2), ...) -> 2|1|⊗g1 + ..."""
    return TensorElement([((cls(a), word(b)), c) for a, b, c in terms])


def wedge(*terms) -> WedgeElement:
    return WedgeElement([((cls(a), cls(b)), c) for a, b, c in terms])


ONE = CyclicClass.trivial()


@pytest.fixture
def run_config():
    return RunConfig(punctures=2, degree=4, seed=7, trials=20, max_len=2)


@pytest.fixture
def inline_parallel():
    return ParallelConfig(max_parallelism=1, chunk_size=64)
