# src/planar/operations.py
"""Geometric Goldman bracket, self-intersection map and enhanced Turaev cobracket"""

from functools import lru_cache
from typing import Optional

from src.core.constants import KinkSite, Model
from src.planar.intersections import transverse_intersections
from src.planar.loops import (
    PLLoop, letters_around, letters_between, ray_events, standard_loop, standard_path
)
from src.utils.logger import ComputationLogger
from src.words.combos import LoopCombo, TensorElement, WedgeElement, alternate, close_tensor
from src.words.group import CyclicClass, GroupWord, cyclic_canonical, free_letters

log = ComputationLogger(__name__)


def infer_punctures(*elements) -> int:
    """Smallest puncture count supporting every word in the given elements"""
    p = 1
    for element in elements:
        if isinstance(element, (GroupWord, CyclicClass)):
            keys = [element]
        else:
            keys = element.keys()
        for key in keys:
            parts = key if isinstance(key, tuple) else (key,)
            for part in parts:
                word = part.word if isinstance(part, CyclicClass) else part
                p = max(p, word.max_index())
    return p


def bracket_of_loops(first: PLLoop, second: PLLoop) -> LoopCombo:
    """Bracket of two transverse closed representatives"""
    events_a, events_b = ray_events(first), ray_events(second)
    terms = []
    for q in transverse_intersections(first, second):
        letters = letters_around(events_a, q.t1) + letters_around(events_b, q.t2)
        terms.append((cyclic_canonical(GroupWord(free_letters(letters))), -q.sign))
    return LoopCombo(terms)


@lru_cache(maxsize=4096)
def _bracket_classes(alpha: CyclicClass, beta: CyclicClass, punctures: int,
                     layers=(0, 1)) -> LoopCombo:
    return bracket_of_loops(standard_loop(alpha.word, punctures, layers[0]),
                            standard_loop(beta.word, punctures, layers[1]))


def goldman_bracket_geometric(x: LoopCombo, y: LoopCombo, punctures: Optional[int] = None,
                              layers=(0, 1)) -> LoopCombo:
    """[x, y] = -sum over intersections q of eps_q |alpha_q beta_q|, extended bilinearly"""
    p = punctures or infer_punctures(x, y)
    result = LoopCombo()
    for alpha, a in x:
        for beta, b in y:
            result = result + _bracket_classes(alpha, beta, p, tuple(layers)).scale(a * b)
    log.log_operation("bracket", Model.GEOMETRIC.value, len(x) * len(y), len(result))
    return result


def mu_of_path(path: PLLoop) -> TensorElement:
    """mu read off a rotation-normalized bullet-to-star representative"""
    events = ray_events(path)
    terms = []
    for r in transverse_intersections(path):
        loop = letters_between(events, r.t1, r.t2)
        rest = letters_between(events, -1, r.t1) + letters_between(events, r.t2, path.length + 1)
        key = (cyclic_canonical(GroupWord(free_letters(loop))), GroupWord(free_letters(rest)))
        terms.append((key, -r.sign))
    return TensorElement(terms)


def mu_geometric(w: GroupWord, punctures: Optional[int] = None, layer: int = 0,
                 kink_site: KinkSite = KinkSite.START) -> TensorElement:
    """mu(w) = -sum over self-intersections of eps |w_{t1 t2}| (x) w_{0 t1} w_{t2 1}"""
    p = punctures or infer_punctures(w)
    result = mu_of_path(standard_path(w, p, layer, kink_site))
    log.log_operation("mu", Model.GEOMETRIC.value, len(w), len(result))
    return result


@lru_cache(maxsize=4096)
def tilde_delta(w: GroupWord, punctures: Optional[int] = None, layer: int = 0,
                kink_site: KinkSite = KinkSite.START) -> WedgeElement:
    """Alt((1 (x) |.|) mu(w)) + |w| ^ |1| on a based word"""
    closed = alternate(close_tensor(mu_geometric(w, punctures, layer, kink_site)))
    framing = WedgeElement([((cyclic_canonical(w), CyclicClass.trivial()), 1)])
    return closed + framing


def delta_geometric(x: LoopCombo, punctures: Optional[int] = None) -> WedgeElement:
    """Enhanced Turaev cobracket, through the least-rotation representative of each class"""
    p = punctures or infer_punctures(x)
    result = WedgeElement()
    for alpha, c in x:
        result = result + tilde_delta(alpha.word, p).scale(c)
    log.log_operation("cobracket", Model.GEOMETRIC.value, len(x), len(result))
    return result
