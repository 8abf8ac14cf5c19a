"""Exponential expansion and symbol-level formality checks"""

from src.expansion.magnus import ExpansionConfig, phi_group_algebra, phi_loop, phi_path
from src.expansion.symbols import (
    COBRACKET_SYMBOL_SIGN, SymbolReport, augmentation_reduced, check_bracket_symbol,
    check_cobracket_symbol, cobracket_residual, loop_symbol, nontrivial_part, phi_wedge, symbol
)

__all__ = [
    'COBRACKET_SYMBOL_SIGN', 'ExpansionConfig', 'SymbolReport', 'augmentation_reduced',
    'check_bracket_symbol', 'check_cobracket_symbol', 'cobracket_residual', 'loop_symbol',
    'nontrivial_part', 'phi_group_algebra', 'phi_loop', 'phi_path', 'phi_wedge', 'symbol',
]
