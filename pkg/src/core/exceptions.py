"""Custom exceptions for the Goldman-Turaev toolkit"""

from typing import Any, Dict, Optional


class GoldmanTuraevError(Exception):
    """Base exception for all toolkit errors"""
    pass


class InputError(GoldmanTuraevError):
    """Raised when an input value is out of range or malformed"""
    pass


class ParseError(InputError):
    """Raised when a textual word or JSON document cannot be parsed"""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class GenericityError(GoldmanTuraevError):
    """Raised when planar input is not in generic position"""

    def __init__(self, feature: str, detail: Optional[Dict[str, Any]] = None):
        self.feature = feature
        self.detail = detail or {}
        super().__init__(f"Non-generic input: {feature}")

    def to_dict(self) -> dict:
        return {'error': 'genericity', 'feature': self.feature, 'detail': self.detail}


class ConsistencyError(GoldmanTuraevError):
    """Raised when an internal mathematical invariant fails"""

    def __init__(self, message: str, detail: Optional[Dict[str, Any]] = None):
        self.detail = detail or {}
        super().__init__(message)

    def to_dict(self) -> dict:
        return {'error': 'consistency', 'message': str(self), 'detail': self.detail}


class UndetectableSymbolError(GoldmanTuraevError):
    """Raised when an element has no nonzero component within truncation"""
    pass


class InadmissibleDiagramError(GoldmanTuraevError):
    """Raised when a chord diagram contains a pole-pole chord"""
    pass


class ConfigurationError(GoldmanTuraevError):
    """Raised when configuration is invalid"""
    pass
