"""Exception types raised across the package."""

from __future__ import annotations


class CubicatError(Exception):
    """Base class for all package errors."""


class ArityMismatch(CubicatError):
    def __init__(self, message: str, expression: str | None = None):
        super().__init__(message)
        self.expression = expression


class DslSyntaxError(CubicatError):
    """Malformed DSL text. ``position`` is the 0-based character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnsupportedAdjoint(CubicatError):
    pass


class WidthMismatch(CubicatError):
    pass


class WidthLimitExceeded(CubicatError):
    pass


class NotClosed(CubicatError):
    pass


class VariantNotDeclared(CubicatError):
    pass


class BoundExceeded(CubicatError):
    pass


class LeafMismatch(CubicatError):
    pass


class ConfigError(CubicatError):
    pass
