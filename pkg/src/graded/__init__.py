"""Associated graded Goldman-Turaev Lie bialgebra on cyclic words"""

from src.graded.bialgebra import BialgebraReport, bialgebra_check, cyclic_corpus
from src.graded.elements import (
    CyclicGradedElement, GradedElement, GradedTensor, GradedWedge, cyclic_word
)
from src.graded.operations import (
    adjoint_action, close_and_alternate, gr_bracket, gr_delta, gr_mu, gr_trace
)

__all__ = [
    'BialgebraReport', 'CyclicGradedElement', 'GradedElement', 'GradedTensor',
    'GradedWedge', 'adjoint_action', 'bialgebra_check', 'close_and_alternate',
    'cyclic_corpus', 'cyclic_word', 'gr_bracket', 'gr_delta', 'gr_mu', 'gr_trace',
]
