"""Resource caps shared by every module.

Defaults keep all exhaustive methods at desk scale.  They can be overridden
through the ``INDMOD_CAPS`` environment variable, e.g.
``INDMOD_CAPS="module_dim=128,weyl_order=2000"``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

__all__ = ["Caps", "CapError", "get_caps", "set_caps"]


class CapError(ValueError):
    """A requested computation exceeds a configured cap."""


@dataclass(frozen=True)
class Caps:
    rank: int = 8
    positive_roots: int = 240
    weyl_order: int = 1152
    sl2_m: int = 64
    module_dim: int = 96
    field_degree: int = 16
    field_order: int = 1 << 16
    group_order: int = 10_000
    lattice_size: int = 5000

    def check(self, name: str, value: int) -> None:
        limit = getattr(self, name)
        if value > limit:
            raise CapError(f"{name} cap exceeded: {value} > {limit}")


def _parse_env(text: str) -> dict[str, int]:
    known = {f.name for f in fields(Caps)}
    out: dict[str, int] = {}
    for item in text.replace(";", ",").split(","):
        item = item.strip()
        if not item:
            continue
        key, _, value = item.partition("=")
        key = key.strip()
        if key not in known:
            raise ValueError(f"unknown cap {key!r} in INDMOD_CAPS")
        n = int(value)
        if n <= 0:
            raise ValueError(f"cap {key} must be positive")
        out[key] = n
    return out


_current: Caps | None = None


def get_caps() -> Caps:
    global _current
    if _current is None:
        _current = replace(Caps(), **_parse_env(os.environ.get("INDMOD_CAPS", "")))
    return _current


def set_caps(caps: Caps | None) -> None:
    """Install ``caps`` process-wide; ``None`` re-reads the environment."""
    global _current
    _current = caps
