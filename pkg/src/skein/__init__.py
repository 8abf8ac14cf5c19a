"""Bottom-projection tangle diagrams in the Conway quotient"""

from src.skein.diagram import (
    ClassCombo, Crossing, DiagramClass, TangleDiagram, closure, flip_diagram,
    q_projection, smoothing, stack
)
from src.skein.division import RawSkeinSum, b_check, b_hat, realize
from src.skein.lifts import knot_diagram, lift_ascending, lift_descending
from src.skein.operations import bracket_skein, bracket_skein_combo, delta_skein, mu_skein
from src.skein.telescope import SkeinNormalForm, telescope_normalize

__all__ = [
    'ClassCombo', 'Crossing', 'DiagramClass', 'RawSkeinSum', 'SkeinNormalForm',
    'TangleDiagram', 'b_check', 'b_hat', 'bracket_skein', 'bracket_skein_combo',
    'closure', 'delta_skein', 'flip_diagram', 'knot_diagram', 'lift_ascending',
    'lift_descending', 'mu_skein', 'q_projection', 'realize', 'smoothing', 'stack',
    'telescope_normalize',
]
