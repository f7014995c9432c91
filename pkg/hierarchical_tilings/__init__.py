# File: /hierarchical_tilings/__init__.py
# Directory: /hierarchical_tilings

"""
hierarchical-tilings: Substitution Subshifts and Fibonacci Tilings
==================================================================

Exact tools for substitution subshifts in one and two dimensions, their
finite-type approximations, sliding block codes, and Fibonacci tilings of
the line and plane.
"""

from .version import __version__

__author__ = "hierarchical-tilings contributors"

# Core imports
from .core.golden import GoldenNumber, TAU
from .core.substitution import Substitution1D, fibonacci
from .core.substitution2d import ProductSubstitution2D, BlockSubstitution2D, chair, fibonacci_product
from .core.finite_type import separation_certificate, verify_certificate
from .core.sliding_block import SlidingBlockCode, compose
from .core.tiling_line import LineTiling, TileSpec, tiling_metric
from .core.conjugacy import conjugate, non_sbc_witness

# Utility imports
from .utils.performance import PerformanceMonitor
from .utils.serializer import ReportSerializer

from .config import Config, default_config

__all__ = [
    # Core
    "GoldenNumber",
    "TAU",
    "Substitution1D",
    "fibonacci",
    "ProductSubstitution2D",
    "BlockSubstitution2D",
    "chair",
    "fibonacci_product",
    "separation_certificate",
    "verify_certificate",
    "SlidingBlockCode",
    "compose",
    "LineTiling",
    "TileSpec",
    "tiling_metric",
    "conjugate",
    "non_sbc_witness",

    # Utils
    "PerformanceMonitor",
    "ReportSerializer",

    # Configuration
    "Config",
    "default_config",
]
