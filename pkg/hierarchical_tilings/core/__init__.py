# hierarchical_tilings/core/__init__.py

"""Core components: symbolic systems, substitutions, finite-type approximations and tilings."""

from .golden import GoldenNumber, TAU, golden
from .symbolic import Alphabet, Pattern, PeriodicConfig, Window, project, shift
from .substitution import Substitution1D, fibonacci
from .substitution2d import (
    BlockSubstitution2D,
    ProductSubstitution2D,
    Substitution2D,
    chair,
    fibonacci_product,
    product,
)
from .finite_type import (
    SeparationCertificate,
    WindowSFT,
    aperiodicity_certificate_1d,
    constant_block_configuration,
    is_member,
    separation_certificate,
    sft_from_language,
    verify_certificate,
)
from .sliding_block import BlockMap, SlidingBlockCode, apply, compose, detect_code
from .tiling_line import LineTiling, TileSpec, tiling_metric, translate
from .conjugacy import conjugate, conjugated_substitution, modulus_probe, non_sbc_witness
from .tiling_plane import (
    ProductTiling,
    RowsTiling,
    distinct_offsets,
    frame_check,
    neighborhood_census,
    rows_conjugate,
    rows_sample,
)

__all__ = [
    "GoldenNumber",
    "TAU",
    "golden",
    "Alphabet",
    "Pattern",
    "PeriodicConfig",
    "Window",
    "project",
    "shift",
    "Substitution1D",
    "fibonacci",
    "Substitution2D",
    "ProductSubstitution2D",
    "BlockSubstitution2D",
    "product",
    "chair",
    "fibonacci_product",
    "WindowSFT",
    "SeparationCertificate",
    "sft_from_language",
    "is_member",
    "constant_block_configuration",
    "separation_certificate",
    "verify_certificate",
    "aperiodicity_certificate_1d",
    "BlockMap",
    "SlidingBlockCode",
    "apply",
    "compose",
    "detect_code",
    "TileSpec",
    "LineTiling",
    "translate",
    "tiling_metric",
    "conjugate",
    "conjugated_substitution",
    "non_sbc_witness",
    "modulus_probe",
    "RowsTiling",
    "ProductTiling",
    "rows_sample",
    "rows_conjugate",
    "distinct_offsets",
    "frame_check",
    "neighborhood_census",
]
