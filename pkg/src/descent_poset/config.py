"""Run configuration shared by the library guards and the CLI."""
from __future__ import annotations

import os
from dataclasses import dataclass

MAX_LEN_ENV = "DESCENT_POSET_MAX_LEN"
WORKERS_ENV = "DESCENT_POSET_WORKERS"

DEFAULT_MAX_INTERVAL_TOP_LENGTH = 14
DEFAULT_SCAN_TOP_LENGTH = 10
DEFAULT_VERIFY_THRESHOLD = 8
FORMATS = ("json", "csv", "text")


@dataclass(frozen=True)
class RunConfig:
    """Limits and output settings for CLI runs.

    Every numeric field is a positive exact integer; no floating point is
    used anywhere in the package.
    """

    max_interval_top_length: int = DEFAULT_MAX_INTERVAL_TOP_LENGTH
    verify_threshold: int = DEFAULT_VERIFY_THRESHOLD
    parallel_width: int | None = None  # None: decided from the machine
    output_path: str | None = None
    format: str = "json"

    def __post_init__(self):
        if self.max_interval_top_length < 1 or self.verify_threshold < 1:
            raise ValueError("limits must be positive")
        if self.verify_threshold > self.max_interval_top_length:
            raise ValueError("verify_threshold must not exceed max_interval_top_length")
        if self.parallel_width is not None and self.parallel_width < 1:
            raise ValueError("parallel_width must be positive")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")


def load_config(**overrides) -> RunConfig:
    """Config from defaults, the environment, then explicit overrides."""
    values = {}
    env_max = os.environ.get(MAX_LEN_ENV)
    if env_max:
        values["max_interval_top_length"] = int(env_max)
    values.update({k: v for k, v in overrides.items() if v is not None})
    return RunConfig(**values)
