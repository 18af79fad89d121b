"""Exception hierarchy shared across the package.

Two broad families matter for the CLI exit codes: configuration problems
(bad option values, malformed config files) and data problems (malformed or
degenerate input tracks, incompatible feature schemas).
"""

from __future__ import annotations


class ConfigError(Exception):
    """A configuration value or config file is invalid."""


class DataError(Exception):
    """Input data is malformed, inconsistent, or degenerate."""


class TrackParseError(DataError):
    """A track file could not be parsed. Carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(DataError):
    """Parsed data violates an invariant (e.g. non-increasing timestamps)."""


class DegenerateTrackError(DataError):
    """A track has too few usable samples to process."""


class ZeroVarianceError(DataError):
    """Automatic bandwidth selection failed because all points coincide."""


class SchemaMismatchError(DataError):
    """A feature matrix does not match the schema a model was trained on."""
