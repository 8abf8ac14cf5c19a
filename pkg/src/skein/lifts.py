# src/skein/lifts.py
"""Framed ascending and descending lifts of based words"""

from functools import lru_cache
from typing import Dict, Optional

from src.core.constants import KinkSite
from src.core.exceptions import ConsistencyError
from src.planar.geometry import Point
from src.planar.loops import kinked_path, normalizing_spins, standard_loop
from src.planar.operations import infer_punctures
from src.skein.diagram import (
    CURVE, KINK_A, KINK_B, TangleDiagram, diagram_from_loops, self_crossings
)
from src.utils.logger import get_logger
from src.words.group import CyclicClass, GroupWord

logger = get_logger(__name__)

# Framing kinks near the star: A counterclockwise, then B clockwise
FRAMING_SPINS = (1, -1)


def _framed_path(w: GroupWord, punctures: int, layer: int):
    spins = normalizing_spins(w, punctures, layer)
    path, kinks = kinked_path(w, punctures, layer, start_spins=spins, end_spins=FRAMING_SPINS)
    framing = [k for k in kinks if k.site == KinkSite.END]
    kinds: Dict[Point, str] = {framing[0].point: KINK_A, framing[1].point: KINK_B}
    return path, kinds


def lift_ascending(w: GroupWord, punctures: Optional[int] = None, layer: int = 0) -> TangleDiagram:
    """Every self-crossing traversed under-first; writhe 1"""
    p = punctures or infer_punctures(w)
    path, kinds = _framed_path(w, p, layer)
    diagram = TangleDiagram((path,), tuple(self_crossings(path, 0, over=1, kinds=kinds)))
    if diagram.writhe() != 1:
        raise ConsistencyError("Ascending lift does not have writhe 1", {
            'word': str(w), 'writhe': diagram.writhe()
        })
    logger.debug(f"Ascending lift of {w}: {len(diagram.crossings)} crossings")
    return diagram


def lift_descending(w: GroupWord, punctures: Optional[int] = None, layer: int = 0) -> TangleDiagram:
    """Curve crossings over-first; the clockwise framing kink switched so the writhe is 1"""
    ascending = lift_ascending(w, punctures, layer)
    crossings = [
        x.switched() if x.kind in (CURVE, KINK_B) else x
        for x in ascending.crossings
    ]
    diagram = ascending.with_crossings(crossings)
    if diagram.writhe() != 1:
        raise ConsistencyError("Descending lift does not have writhe 1", {
            'word': str(w), 'writhe': diagram.writhe()
        })
    return diagram


@lru_cache(maxsize=2048)
def knot_diagram(c: CyclicClass, punctures: Optional[int] = None, layer: int = 0) -> TangleDiagram:
    """Closed standard loop of a class with under-first self-crossings"""
    p = punctures or infer_punctures(c)
    return diagram_from_loops([standard_loop(c.word, p, layer)])
