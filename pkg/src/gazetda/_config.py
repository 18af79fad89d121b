"""Flat TOML config loading with strict key checking."""

from __future__ import annotations

from pathlib import Path
from typing import Any, Mapping, Union

try:
    import tomllib  # Python >= 3.11
except ModuleNotFoundError:  # pragma: no cover - depends on interpreter
    import tomli as tomllib

from .errors import ConfigError


def load_flat_toml(path: Union[str, Path]) -> dict[str, Any]:
    """Parse a TOML file and require a single flat table (no sections)."""
    path = Path(path)
    try:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}") from None
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"invalid config {path}: {exc}") from None
    for key, value in data.items():
        if isinstance(value, dict):
            raise ConfigError(
                f"config {path}: nested tables are not allowed (key {key!r})"
            )
    return data


def check_keys(
    data: Mapping[str, Any], known: set[str], required: set[str], where: str
) -> None:
    """Reject unknown keys and report missing required ones."""
    unknown = sorted(set(data) - known)
    if unknown:
        raise ConfigError(f"{where}: unknown keys {unknown}")
    missing = sorted(required - set(data))
    if missing:
        raise ConfigError(f"{where}: missing required keys {missing}")
