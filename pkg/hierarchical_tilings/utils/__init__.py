# hierarchical_tilings/utils/__init__.py

"""Utility modules for hierarchical-tilings."""

from .parser import load_patch, load_rules, load_tiling, parse_exact
from .serializer import ReportSerializer, SerializationFormat
from .performance import PerformanceMonitor

__all__ = [
    "load_rules",
    "load_tiling",
    "load_patch",
    "parse_exact",
    "ReportSerializer",
    "SerializationFormat",
    "PerformanceMonitor"
]
