"""Compute budget and output settings.

Settings come from a JSON file (path in ``GRIDKNOT_CONFIG`` or passed
explicitly) and may be overridden field by field.
"""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, fields, replace

ENV_VAR = "GRIDKNOT_CONFIG"


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class Config:
    homfly_crossing_cap: int = 16
    theta_state_cap: int = 10**6
    output_format: str = "text"  # "text" or "json"

    def __post_init__(self):
        if self.homfly_crossing_cap <= 0 or self.theta_state_cap <= 0:
            raise ConfigError("caps must be positive")
        if self.output_format not in ("text", "json"):
            raise ConfigError(f"output_format must be text or json, not {self.output_format!r}")

    def to_json(self) -> dict:
        return asdict(self)

    def override(self, **kwargs) -> "Config":
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


def load_config(path: str | None = None) -> Config:
    path = path or os.environ.get(ENV_VAR)
    if not path:
        return Config()
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    known = {f.name for f in fields(Config)}
    unknown = set(data) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    return Config(**data)
