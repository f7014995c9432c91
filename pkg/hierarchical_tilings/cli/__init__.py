# File: /hierarchical_tilings/cli/__init__.py
# Directory: /hierarchical_tilings/cli

"""
Command-line front end for hierarchical-tilings.
"""

from .main import cli, main

__all__ = [
    "cli",
    "main"
]
