"""Run configuration, read from a ``key=value`` file.

Recognised keys mirror :class:`Config`; blank lines and ``#`` comments are
ignored, unknown keys are an error.  ``CUBICAT_CONFIG`` names the file used
when none is given explicitly.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from pathlib import Path

from .engine import DEFAULT_WIDTH_LIMIT, Variant
from .errors import ConfigError
from .trees import DEFAULT_SIGNED_BOUND

ENV_VAR = "CUBICAT_CONFIG"
FORMATS = ("json", "dot", "text")


@dataclass(frozen=True)
class Config:
    widthLimit: int = DEFAULT_WIDTH_LIMIT  # noqa: N815 - key names match the file format
    treeBound: int = DEFAULT_SIGNED_BOUND  # noqa: N815
    outputFormat: str = "json"  # noqa: N815
    variant: Variant = Variant.PLAIN

    def __post_init__(self):
        if self.widthLimit <= 0 or self.treeBound <= 0:
            raise ConfigError("limits must be positive")
        if self.outputFormat not in FORMATS:
            raise ConfigError(f"outputFormat must be one of {', '.join(FORMATS)}")


def _convert(key: str, value: str):
    if key in ("widthLimit", "treeBound"):
        try:
            return int(value)
        except ValueError:
            raise ConfigError(f"{key} must be an integer, got {value!r}") from None
    if key == "variant":
        try:
            return Variant(value)
        except ValueError:
            raise ConfigError(f"variant must be F or Ftilde, got {value!r}") from None
    return value


def parse_config(text: str, base: Config | None = None) -> Config:
    known = {f.name for f in fields(Config)}
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep:
            raise ConfigError(f"line {lineno}: expected key=value")
        if key not in known:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        values[key] = _convert(key, value)
    return replace(base or Config(), **values)


def load_config(path: str | os.PathLike | None = None) -> Config:
    """Config from ``path``, else from ``$CUBICAT_CONFIG``, else defaults."""
    if path is None:
        path = os.environ.get(ENV_VAR) or None
    if path is None:
        return Config()
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    return parse_config(text)
