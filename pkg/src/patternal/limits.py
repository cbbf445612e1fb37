"""Resource caps shared by the graph builders and searches."""

from __future__ import annotations

import os

DEFAULT_MAX_VERTICES = 10**6
DEFAULT_SEARCH_BUDGET = 10**8

ENV_MAX_VERTICES = "PATTERNAL_MAX_VERTICES"


class InstanceTooLarge(ValueError):
    """Raised when an instance would exceed the configured vertex cap."""


def max_vertices(override: int | None = None) -> int:
    if override is not None:
        if override <= 0:
            raise ValueError("vertex cap must be positive")
        return override
    raw = os.environ.get(ENV_MAX_VERTICES)
    if raw:
        value = int(raw)
        if value <= 0:
            raise ValueError(f"{ENV_MAX_VERTICES} must be positive")
        return value
    return DEFAULT_MAX_VERTICES


def check_vertex_count(count: int, cap: int | None = None) -> None:
    limit = max_vertices(cap)
    if count > limit:
        raise InstanceTooLarge(f"instance needs {count} vertices, cap is {limit}")
