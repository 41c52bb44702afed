"""Run configuration: defaults, an optional YAML file, QHECKE_CACHE and flag overrides."""

import logging
import os
from fractions import Fraction
from typing import Any, Dict, Literal, Mapping, Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from .arithmetic import DEFAULT_MAX_TENSOR_ENTRIES, Arithmetic, ArithmeticMode
from .exceptions import ConfigError
from .rmatrix import DEFAULT_RANK_CUTOFF

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_FILE = "qhecke.yaml"
CACHE_ENV_VAR = "QHECKE_CACHE"


class RunConfig(BaseModel):
    """Settings shared by every command of a run."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    mode: Literal["exact", "numeric"] = "exact"
    v0: str = "3/2"
    max_degree: Optional[int] = Field(default=None, ge=0)
    max_tensor_entries: int = Field(default=DEFAULT_MAX_TENSOR_ENTRIES, ge=1)
    cache_dir: Optional[str] = None
    output: Optional[str] = None
    format: Literal["json", "table"] = "json"
    rank_cutoff: int = Field(default=DEFAULT_RANK_CUTOFF, ge=1)
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "WARNING"

    @field_validator("v0", mode="before")
    @classmethod
    def _v0_text(cls, value: Any) -> str:
        try:
            return str(Fraction(str(value).strip()))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"v0 must be a rational number, got {value!r}")

    @field_validator("log_level", mode="before")
    @classmethod
    def _upper_level(cls, value: Any) -> Any:
        return value.upper() if isinstance(value, str) else value

    @model_validator(mode="after")
    def _numeric_point(self) -> "RunConfig":
        if self.mode == "numeric":
            point = Fraction(self.v0)
            if point <= 0 or point == 1:
                raise ValueError(f"numeric mode needs a positive v0 != 1, got {self.v0}")
        return self

    @property
    def v0_fraction(self) -> Fraction:
        return Fraction(self.v0)

    def arithmetic(self) -> Arithmetic:
        """The arithmetic context the settings describe."""
        if self.mode == "numeric":
            return Arithmetic(
                mode=ArithmeticMode.NUMERIC,
                v0=self.v0_fraction,
                max_degree=self.max_degree,
                max_tensor_entries=self.max_tensor_entries,
            )
        return Arithmetic(max_degree=self.max_degree, max_tensor_entries=self.max_tensor_entries)

    def cache(self):
        """An IdempotentCache rooted at ``cache_dir``, or None."""
        if not self.cache_dir:
            return None
        from .utils.cache import IdempotentCache

        return IdempotentCache(self.cache_dir)

    @classmethod
    def build(cls, values: Mapping[str, Any]) -> "RunConfig":
        try:
            return cls(**values)
        except ValidationError as e:
            problems = "; ".join(
                f"{'.'.join(str(p) for p in error['loc']) or 'config'}: {error['msg']}" for error in e.errors()
            )
            raise ConfigError(f"Invalid configuration: {problems}")


def load_config_file(path: str) -> Dict[str, Any]:
    """Read a flat YAML mapping of RunConfig keys.

    Raises:
        ConfigError: If the file is unreadable or not a mapping.
    """
    try:
        with open(path) as f:
            content = yaml.safe_load(f)
    except (OSError, yaml.YAMLError) as e:
        raise ConfigError(f"Error loading configuration file {path}: {str(e)}")
    if content is None:
        return {}
    if not isinstance(content, dict):
        raise ConfigError(f"Configuration file {path} must hold a mapping")
    logger.debug(f"Loaded configuration from {path}")
    return content


def resolve_config(
    config_path: Optional[str] = None,
    overrides: Optional[Mapping[str, Any]] = None,
    environ: Optional[Mapping[str, str]] = None,
) -> RunConfig:
    """Merge defaults < YAML file < QHECKE_CACHE < explicit overrides.

    ``config_path`` falls back to ./qhecke.yaml when that file exists. Overrides
    whose value is None are treated as unset.
    """
    environ = os.environ if environ is None else environ
    values: Dict[str, Any] = {}
    if config_path is None and os.path.exists(DEFAULT_CONFIG_FILE):
        config_path = DEFAULT_CONFIG_FILE
    if config_path is not None:
        values.update(load_config_file(config_path))
    if environ.get(CACHE_ENV_VAR):
        values["cache_dir"] = environ[CACHE_ENV_VAR]
    for key, value in (overrides or {}).items():
        if value is not None:
            values[key] = value
    return RunConfig.build(values)
