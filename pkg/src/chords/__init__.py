"""Chord diagrams, their quotients, flips and the algebraic lifts"""

from src.chords.conway import ConwayReport, conway_exponential_identity
from src.chords.diagrams import (
    ChordCombo, ChordDiagram, ChordWord, Skeleton, chord_normal_form, flip_chord, gr_lift
)
from src.chords.lambda_alg import (
    PhiTerm, StrandCombo, StrandTerm, a_check, epsilon_cancellation, lambda_alg
)
from src.chords.relations import FourTRelation, enumerate_diagrams, four_t_neighbors

__all__ = [
    'ChordCombo', 'ChordDiagram', 'ChordWord', 'ConwayReport', 'FourTRelation',
    'PhiTerm', 'Skeleton', 'StrandCombo', 'StrandTerm', 'a_check',
    'chord_normal_form', 'conway_exponential_identity', 'enumerate_diagrams',
    'epsilon_cancellation', 'flip_chord', 'four_t_neighbors', 'gr_lift', 'lambda_alg',
]
