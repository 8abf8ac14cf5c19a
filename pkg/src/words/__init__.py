"""Free-group words, cyclic classes and their linear combinations"""

from src.words.coefficient import Coefficient
from src.words.group import (
    CyclicClass, GroupWord, Letter, cyclic_canonical, group_invert,
    group_multiply, reduce_word
)
from src.words.combos import (
    LoopCombo, PathCombo, TensorElement, WedgeElement, trace_to_loops,
    wedge_normalize
)

__all__ = [
    'Coefficient', 'CyclicClass', 'GroupWord', 'Letter', 'LoopCombo',
    'PathCombo', 'TensorElement', 'WedgeElement', 'cyclic_canonical',
    'group_invert', 'group_multiply', 'reduce_word', 'trace_to_loops',
    'wedge_normalize',
]
