# src/skein/operations.py
"""Skein-theoretic bracket, self-intersection map and cobracket"""

from typing import Optional, Tuple

from src.core.constants import Model
from src.core.exceptions import ConsistencyError
from src.planar.operations import infer_punctures
from src.skein.diagram import CURVE, KINK_B, stack
from src.skein.lifts import knot_diagram, lift_ascending, lift_descending
from src.skein.telescope import SkeinNormalForm, telescope_normalize
from src.utils.logger import ComputationLogger
from src.words.combos import LoopCombo, TensorElement, WedgeElement, alternate, close_tensor
from src.words.group import CyclicClass, GroupWord

log = ComputationLogger(__name__)


def _require_no_word_part(form: SkeinNormalForm, what: str) -> None:
    if not form.word_part.is_zero():
        raise ConsistencyError(f"{what}: nonzero word part", {
            'word_part': [{'class': k.to_dict(), 'coeff': c.to_dict()} for k, c in form.word_part]
        })


def stacking_commutator(alpha: CyclicClass, beta: CyclicClass, punctures: int,
                        layers: Tuple[int, int] = (0, 1)) -> SkeinNormalForm:
    """K1 K2 - K2 K1 telescoped over the mixed crossings"""
    first = knot_diagram(alpha, punctures, layers[0])
    second = knot_diagram(beta, punctures, layers[1])
    upper = stack(first, second)
    lower = stack(second, first)
    # Mixed crossings of `upper` have the first knot below; switch them to put it on top
    target = {k: 0 for k, x in enumerate(upper.crossings) if not x.is_self}
    return telescope_normalize(upper, target) - telescope_normalize(lower, {})


def bracket_skein(alpha: CyclicClass, beta: CyclicClass, punctures: Optional[int] = None,
                  layers: Tuple[int, int] = (0, 1)) -> LoopCombo:
    """Goldman bracket as the stacking commutator divided by b"""
    p = punctures or infer_punctures(alpha, beta)
    form = stacking_commutator(alpha, beta, p, layers)
    _require_no_word_part(form, "stacking commutator")
    terms = []
    for cls, c in form.b_part:
        if cls.skeleton != (1, 0):
            raise ConsistencyError("Mixed smoothing is not a single circle", {'class': cls.to_dict()})
        terms.append((cls.circles[0], c))
    result = LoopCombo(terms)
    log.log_operation("bracket", Model.SKEIN.value, len(alpha) + len(beta), len(result))
    return result


def bracket_skein_combo(x: LoopCombo, y: LoopCombo, punctures: Optional[int] = None) -> LoopCombo:
    """Bilinear extension of bracket_skein"""
    p = punctures or infer_punctures(x, y)
    result = LoopCombo()
    for alpha, a in x:
        for beta, b in y:
            result = result + bracket_skein(alpha, beta, p).scale(a * b)
    return result


def lift_difference(w: GroupWord, punctures: int, layer: int = 0) -> SkeinNormalForm:
    """Ascending minus descending lift, curve crossings switched first and framing kink B last"""
    ascending = lift_ascending(w, punctures, layer)
    descending = lift_descending(w, punctures, layer)
    curve = [k for k in ascending.ordered_crossings() if ascending.crossings[k].kind == CURVE]
    framing = [k for k, x in enumerate(ascending.crossings) if x.kind == KINK_B]
    order = curve + framing + [k for k in range(len(ascending.crossings)) if k not in curve + framing]
    target = {k: x.over for k, x in enumerate(descending.crossings)}
    return telescope_normalize(ascending, target, order) - telescope_normalize(descending, {})


def mu_skein(w: GroupWord, punctures: Optional[int] = None, layer: int = 0) -> TensorElement:
    """(lift_ascending - lift_descending) / b read on the circle-plus-path skeleton"""
    p = punctures or infer_punctures(w)
    form = lift_difference(w, p, layer)
    _require_no_word_part(form, "lift difference")
    terms = []
    for cls, c in form.b_part:
        if cls.skeleton != (1, 1):
            raise ConsistencyError("Smoothing does not lie on a circle and a path", {'class': cls.to_dict()})
        terms.append(((cls.circles[0], cls.paths[0]), c))
    result = TensorElement(terms)
    log.log_operation("mu", Model.SKEIN.value, len(w), len(result))
    return result


def delta_skein(x: LoopCombo, punctures: Optional[int] = None) -> WedgeElement:
    """Alt(cl(mu_skein)); the framing term is carried by the kink switch"""
    p = punctures or infer_punctures(x)
    result = WedgeElement()
    for alpha, c in x:
        result = result + alternate(close_tensor(mu_skein(alpha.word, p))).scale(c)
    log.log_operation("cobracket", Model.SKEIN.value, len(x), len(result))
    return result
