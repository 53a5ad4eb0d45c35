"""Library settings models."""
from pathlib import Path
from typing import Literal
import yaml
from pydantic import BaseModel, Field, ValidationError
from pasch_geometry.exceptions import ConfigurationError


class SearchLimits(BaseModel):
    """Bounds for exhaustive map enumeration (|B|^|A| candidates)."""
    max_source: int = Field(default=8, ge=1, description="Largest source carrier")
    max_target: int = Field(default=12, ge=1, description="Largest target carrier")

    def admits(self, source_size: int, target_size: int) -> bool:
        """Bounds both carriers unless one side has a single element."""
        if source_size <= 1 or target_size <= 1:
            return True
        return source_size <= self.max_source and target_size <= self.max_target


class LoggingSettings(BaseModel):
    """Logging configuration, see utils.logging.setup_logger."""
    level: Literal['DEBUG', 'INFO', 'WARNING', 'ERROR'] = 'WARNING'
    output_format: Literal['text', 'json'] = 'text'
    file: str | None = Field(default=None, description="Optional log file path")
    file_size: float = Field(default=10, description="Rotation size in MB")
    backup_count: int = 5


class PaschSettings(BaseModel):
    """Root schema for settings YAML."""
    limits: SearchLimits = Field(default_factory=SearchLimits)
    apex_max_size: int = Field(
        default=6,
        ge=1,
        description="Largest built-in fixture used as a default cone apex"
    )
    logging: LoggingSettings = Field(default_factory=LoggingSettings)


DEFAULT_LIMITS = SearchLimits()


def load_settings_from_yaml(path: Path) -> PaschSettings:
    """
    Load and validate settings from a YAML file.

    Args:
        path: Path to YAML settings file

    Returns:
        Validated PaschSettings

    Raises:
        ConfigurationError: If file not found or validation fails
    """
    if not path.exists():
        raise ConfigurationError(f"Configuration file not found: {path}")

    try:
        with open(path, 'r', encoding='utf-8') as f:
            config_dict = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise ConfigurationError(f"Invalid YAML syntax: {e}")

    try:
        return PaschSettings(**(config_dict or {}))
    except (ValidationError, TypeError) as e:
        raise ConfigurationError(f"Invalid settings: {e}")
