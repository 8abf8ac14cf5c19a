# src/expansion/symbols.py
"""I-adic symbols and symbol-level formality checks for the bracket and cobracket"""

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from src.core.exceptions import InputError, UndetectableSymbolError
from src.expansion.magnus import ExpansionConfig, phi_loop
from src.graded.elements import CyclicGradedElement, GradedWedge, _Graded
from src.graded.operations import gr_bracket, gr_delta
from src.planar.operations import delta_geometric, goldman_bracket_geometric
from src.utils.logger import get_logger
from src.words.combos import LoopCombo, WedgeElement
from src.words.group import CyclicClass

logger = get_logger(__name__)

# delta_geometric is built on mu = -sum eps; its degree-lowering part is -delta_gr
COBRACKET_SYMBOL_SIGN = -1


@dataclass
class SymbolReport:
    """Comparison of one graded component against the graded operation"""
    kind: str
    degree_checked: Optional[int] = None
    lhs: Optional[_Graded] = None
    rhs: Optional[_Graded] = None
    equal: bool = False
    inconclusive: bool = False
    reason: str = ""
    lower_degree: Optional[int] = None

    def to_dict(self) -> dict:
        data = {
            'degree_checked': self.degree_checked,
            'lhs': str(self.lhs) if self.lhs is not None else None,
            'rhs': str(self.rhs) if self.rhs is not None else None,
            'equal': self.equal,
        }
        if self.inconclusive:
            data['inconclusive'] = True
            data['reason'] = self.reason
        if self.lower_degree is not None:
            data['lower_degree'] = self.lower_degree
        return data


def augmentation_reduced(x: LoopCombo) -> LoopCombo:
    """x - eps(x)|1|"""
    eps = x.augmentation()
    if eps.is_zero():
        return x
    return x - LoopCombo([(CyclicClass.trivial(), eps)])


def nontrivial_part(x: LoopCombo) -> LoopCombo:
    """x without its |1| term"""
    return LoopCombo([(loop, c) for loop, c in x if not loop.is_trivial()])


def symbol(x: _Graded) -> Tuple[int, _Graded]:
    """Lowest nonzero homogeneous component"""
    d = x.lowest_degree()
    if d is None:
        raise UndetectableSymbolError(
            f"No nonzero component up to degree {x.degree}"
            + (" (terms were truncated)" if x.truncated else "")
        )
    return d, x.homogeneous(d)


def loop_symbol(x: LoopCombo, cfg: ExpansionConfig) -> Tuple[int, CyclicGradedElement]:
    return symbol(phi_loop(augmentation_reduced(x), cfg))


def phi_wedge(x: WedgeElement, cfg: ExpansionConfig) -> GradedWedge:
    """(phi (x) phi) on |Q pi| ^ |Q pi|"""
    terms = []
    for (a, b), c in x:
        if c.b1 != 0:
            raise InputError("Wedge element has a nonzero b-part")
        left = phi_loop(LoopCombo.basis(a), cfg)
        right = phi_loop(LoopCombo.basis(b), cfg)
        terms += [
            ((u, v), c.b0 * p * q)
            for u, p in left for v, q in right
            if len(u) + len(v) <= cfg.degree
        ]
    return GradedWedge(terms, cfg.degree)


def _lowest_below(x: _Graded, d: int) -> Optional[int]:
    low = x.lowest_degree()
    return low if low is not None and low < d else None


def _inconclusive(kind: str, reason: str) -> SymbolReport:
    logger.info(f"{kind} symbol check inconclusive: {reason}")
    return SymbolReport(kind=kind, inconclusive=True, reason=reason)


def check_bracket_symbol(alpha: LoopCombo, beta: LoopCombo, cfg: ExpansionConfig) -> SymbolReport:
    """gr of phi([alpha, beta]_G) against the graded bracket of the symbols"""
    try:
        r, sa = loop_symbol(alpha, cfg)
        s, sb = loop_symbol(beta, cfg)
    except UndetectableSymbolError as e:
        return _inconclusive("bracket", str(e))
    d = r + s - 1
    if d > cfg.degree:
        return _inconclusive("bracket", f"degree {d} exceeds truncation {cfg.degree}")

    bracket = goldman_bracket_geometric(nontrivial_part(alpha), nontrivial_part(beta), cfg.punctures)
    full = phi_loop(bracket, cfg)
    lhs = full.homogeneous(d)
    rhs = gr_bracket(sa, sb)
    lower = _lowest_below(full, d)
    return SymbolReport(
        kind="bracket", degree_checked=d, lhs=lhs, rhs=rhs,
        equal=lhs == rhs and lower is None, lower_degree=lower,
    )


def check_cobracket_symbol(alpha: LoopCombo, cfg: ExpansionConfig) -> SymbolReport:
    """gr of (phi (x) phi)(delta alpha) against the graded cobracket of the symbol"""
    try:
        r, sa = loop_symbol(alpha, cfg)
    except UndetectableSymbolError as e:
        return _inconclusive("cobracket", str(e))
    d = r - 1

    full = phi_wedge(delta_geometric(nontrivial_part(alpha), cfg.punctures), cfg)
    lhs = full.homogeneous(d)
    rhs = gr_delta(sa).scale(COBRACKET_SYMBOL_SIGN)
    lower = _lowest_below(full, d)
    return SymbolReport(
        kind="cobracket", degree_checked=d, lhs=lhs, rhs=rhs,
        equal=lhs == rhs and lower is None, lower_degree=lower,
    )


def cobracket_residual(alpha: LoopCombo, cfg: ExpansionConfig) -> Dict[int, GradedWedge]:
    """Nonzero components of (phi (x) phi)(delta alpha) - sign * delta_gr(phi alpha) below N"""
    reduced = augmentation_reduced(alpha)
    lhs = phi_wedge(delta_geometric(nontrivial_part(reduced), cfg.punctures), cfg)
    rhs = gr_delta(phi_loop(reduced, cfg)).scale(COBRACKET_SYMBOL_SIGN)
    diff = lhs - rhs
    # rhs is complete only below degree N
    return {
        d: diff.homogeneous(d)
        for d in range(cfg.degree)
        if not diff.homogeneous(d).is_zero()
    }
