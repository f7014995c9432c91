# File: /hierarchical_tilings/config.py
# Directory: /hierarchical_tilings

"""Configuration management for hierarchical-tilings."""

import os
from dataclasses import dataclass, field, fields
from fractions import Fraction
from typing import Any, Dict, Optional
import json

from .exceptions import ConfigurationError


ENV_PREFIX = "HIER_TILINGS_"


@dataclass
class LoggingConfig:
    """Logging configuration."""
    level: str = "INFO"
    format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    file_path: Optional[str] = None
    max_file_size: int = 10 * 1024 * 1024  # 10MB
    backup_count: int = 5


@dataclass
class EnumerationConfig:
    """Bounds for language saturation and certificate searches."""
    m_cap_factor: int = 8
    saturation_level_cap: int = 64
    constant_block_search_depth: int = 6
    period_search_cap: int = 16


@dataclass
class TilingConfig:
    """Precision and horizon settings for tiling computations."""
    epsilon: Fraction = Fraction(1, 10**8)
    max_tower_depth: int = 256
    horizon_cap: int = 4096
    ladder_steps: int = 40
    offset_resolution: Fraction = Fraction(1, 10**6)
    frame_margin: Fraction = Fraction(1, 8)

    def __post_init__(self):
        self.epsilon = Fraction(self.epsilon)
        self.offset_resolution = Fraction(self.offset_resolution)
        self.frame_margin = Fraction(self.frame_margin)
        if self.epsilon <= 0:
            raise ConfigurationError("epsilon must be positive")
        if self.offset_resolution <= 0:
            raise ConfigurationError("offset_resolution must be positive")


@dataclass
class OutputConfig:
    """Report output configuration."""
    format: str = "json"
    decimal_places: int = 12
    default_seed: int = 0

    def __post_init__(self):
        if self.format not in ("json", "msgpack"):
            raise ConfigurationError(f"unsupported report format: {self.format}")


@dataclass
class Config:
    """Main configuration class."""
    logging: LoggingConfig = field(default_factory=LoggingConfig)
    enumeration: EnumerationConfig = field(default_factory=EnumerationConfig)
    tiling: TilingConfig = field(default_factory=TilingConfig)
    output: OutputConfig = field(default_factory=OutputConfig)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Config':
        """Build a configuration from nested section dictionaries."""
        sections = {f.name: f.default_factory for f in fields(cls)}
        unknown = set(data) - set(sections)
        if unknown:
            raise ConfigurationError(f"unknown configuration sections: {sorted(unknown)}")
        try:
            return cls(**{name: factory(**data.get(name, {})) for name, factory in sections.items()})
        except TypeError as e:
            raise ConfigurationError(str(e)) from e

    @classmethod
    def from_file(cls, file_path: str) -> 'Config':
        """Load configuration from JSON file."""
        with open(file_path, 'r') as f:
            data = json.load(f)

        return cls.from_dict(data)

    @classmethod
    def from_environment(cls) -> 'Config':
        """Load configuration from environment variables."""
        return cls(
            logging=LoggingConfig(
                level=os.getenv(f'{ENV_PREFIX}LOG_LEVEL', 'INFO'),
                file_path=os.getenv(f'{ENV_PREFIX}LOG_FILE')
            ),
            enumeration=EnumerationConfig(
                m_cap_factor=int(os.getenv(f'{ENV_PREFIX}M_CAP_FACTOR', '8'))
            ),
            tiling=TilingConfig(
                epsilon=Fraction(os.getenv(f'{ENV_PREFIX}EPSILON', '1/100000000')),
                horizon_cap=int(os.getenv(f'{ENV_PREFIX}HORIZON_CAP', '4096'))
            ),
            output=OutputConfig(
                default_seed=int(os.getenv(f'{ENV_PREFIX}SEED', '0'))
            )
        )


# Default configuration instance
default_config = Config()
