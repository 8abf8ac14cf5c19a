"""Exact planar geometry in the punctured disc"""

from src.planar.disc import PuncturedDisc
from src.planar.intersections import IntersectionRecord, transverse_intersections
from src.planar.loops import (
    PLLoop, kinked_path, loop_word, rotation_number, standard_loop, standard_path
)
from src.planar.operations import (
    bracket_of_loops, delta_geometric, goldman_bracket_geometric, mu_geometric, mu_of_path,
    tilde_delta
)

__all__ = [
    'IntersectionRecord', 'PLLoop', 'PuncturedDisc', 'bracket_of_loops', 'delta_geometric',
    'goldman_bracket_geometric', 'kinked_path', 'loop_word', 'mu_geometric', 'mu_of_path',
    'rotation_number', 'standard_loop', 'standard_path', 'tilde_delta',
    'transverse_intersections',
]
