### hierarchical_tilings/utils/validation.py

"""Validation utilities for hierarchical-tilings."""

from typing import Any, Dict, Optional, Tuple, Union

from ..core.substitution import Substitution1D
from ..core.substitution2d import Substitution2D
from ..exceptions import ValidationError

System = Union[Substitution1D, Substitution2D]


class Validator:
    """Argument checks shared by the command-line front end."""

    @staticmethod
    def validate_letter(system: System, letter: str) -> str:
        if letter not in system.alphabet:
            raise ValidationError(f"unknown letter {letter!r}; alphabet is {list(system.alphabet.letters)}")
        return letter

    @staticmethod
    def validate_level(level: int, cap: int = 64) -> int:
        if not 0 <= level <= cap:
            raise ValidationError(f"invalid level {level}: expected 0..{cap}")
        return level

    @staticmethod
    def validate_dimension(system: System, dimension: int) -> System:
        actual = 1 if isinstance(system, Substitution1D) else 2
        if actual != dimension:
            raise ValidationError(f"expected a {dimension}D substitution, got a {actual}D one")
        return system


def validate_report_data(data: Dict[str, Any]) -> Tuple[bool, Optional[str]]:
    """Check that a parsed report carries what certificate re-verification needs."""
    for key in ("command", "inputs", "result"):
        if key not in data:
            return False, f"Missing required field: {key}"

    certificate = data.get("certificate")
    if not isinstance(certificate, dict):
        return False, "Report has no embedded certificate"

    for key in ("radius", "config", "transcript", "refutation", "m_cap"):
        if key not in certificate:
            return False, f"Certificate is missing {key}"

    if not isinstance(data["inputs"], dict) or "rules" not in data["inputs"]:
        return False, "Report inputs do not name the substitution"

    return True, None
