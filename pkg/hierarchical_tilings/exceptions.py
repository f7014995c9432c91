# File: /hierarchical_tilings/exceptions.py
# Directory: /hierarchical_tilings

"""Custom exceptions for hierarchical-tilings."""


class HierarchyError(Exception):
    """Base exception for hierarchical-tilings."""
    pass


class ValidationError(HierarchyError):
    """Raised when a constructor receives malformed data."""
    pass


class ConfigurationError(HierarchyError):
    """Raised when configuration is invalid."""
    pass


class PatternError(HierarchyError):
    """Raised when a pattern operation is geometrically impossible."""
    pass


class SubstitutionError(HierarchyError):
    """Raised when a substitution cannot support the requested operation."""
    pass


class HypothesisError(HierarchyError):
    """
    Raised when a construction's hypothesis is not witnessed.

    The periodic-configuration builder raises it with the message
    "constant 2x2 block hypothesis not witnessed" when no level of the
    substitution shows a constant 2x2 block within the search depth.
    """
    pass


class UnknownWindowError(HierarchyError):
    """Raised when a block map meets a window outside its table."""

    def __init__(self, window, center):
        self.window = window
        self.center = center
        super().__init__(f"window {window} at center {center} is outside the block map domain")


class ConjugacyError(HierarchyError):
    """
    Raised when two tiling specs are not conjugate by the length invariant.

    The message is always "not conjugate: length invariants differ"; the
    invariant of a spec (|A|, |B|) is |A| + tau |B|.
    """
    pass


class TilingError(HierarchyError):
    """Raised when a tiling cannot be expanded as requested."""
    pass


class GeometryError(HierarchyError):
    """Raised when a distance or region computation is undefined."""
    pass


class RuleFileError(HierarchyError):
    """Raised when a rule, tiling or patch file cannot be parsed."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")
