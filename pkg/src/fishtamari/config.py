"""Run-time budgets and tolerances.

Values come from the dataclass defaults, then an optional ``key=value`` file
(path in ``FISHTAMARI_CONFIG``), then ``FISHTAMARI_<KEY>`` environment
variables, e.g. ``FISHTAMARI_MAX_SIZE=8``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

ENV_PREFIX = "FISHTAMARI_"


@dataclass(frozen=True)
class Config:
    node_budget: int = 100_000     # Hasse diagram nodes (n <= 10)
    max_size: int = 8              # largest n for exhaustive enumeration
    suite_max_size: int = 6        # default size for verification suites
    verify_order: int = 64
    asymptotic_order: int = 500
    rho_tolerance: float = 0.01
    constant_tolerance: float = 0.25


def _coerce(cfg: Config, raw: dict[str, str]) -> Config:
    types = {f.name: f.type for f in fields(Config)}
    updates = {}
    for key, value in raw.items():
        key = key.strip().lower()
        if key not in types:
            raise KeyError(f"unknown config key {key!r}")
        updates[key] = float(value) if types[key] == "float" else int(value)
    return replace(cfg, **updates)


def read_config_file(path: str) -> dict[str, str]:
    raw = {}
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            key, _, value = line.partition("=")
            raw[key] = value.strip()
    return raw


def load(path: str | None = None, environ=None) -> Config:
    environ = os.environ if environ is None else environ
    cfg = Config()
    path = path or environ.get(ENV_PREFIX + "CONFIG")
    if path:
        cfg = _coerce(cfg, read_config_file(path))
    env = {f.name: environ[ENV_PREFIX + f.name.upper()]
           for f in fields(Config) if ENV_PREFIX + f.name.upper() in environ}
    return _coerce(cfg, env)


_current: Config | None = None


def get() -> Config:
    global _current
    if _current is None:
        _current = load()
    return _current


def set_config(cfg: Config | None) -> None:
    """Install ``cfg`` globally; ``None`` forces a reload on next access."""
    global _current
    _current = cfg
