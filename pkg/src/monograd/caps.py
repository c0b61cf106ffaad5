"""Resource caps, overridable through the MONOGRAD_CAPS environment variable.

Format: comma-separated key=value pairs, e.g.

    MONOGRAD_CAPS="polarized-vars=20,component-enum=100000"

Recognized keys: polarized-vars, component-enum, lq-generators, colex-enum.
"""

import os
from dataclasses import dataclass, replace

_ENV_VAR = "MONOGRAD_CAPS"

_KEYMAP = {
    "polarized-vars": "polarized_vars",
    "component-enum": "component_enum",
    "lq-generators": "lq_generators",
    "colex-enum": "colex_enum",
}


@dataclass(frozen=True)
class Caps:
    polarized_vars: int = 24
    component_enum: int = 10**6
    lq_generators: int = 64
    colex_enum: int = 10**6


def _from_env(base: Caps) -> Caps:
    raw = os.environ.get(_ENV_VAR, "").strip()
    if not raw:
        return base
    overrides = {}
    for item in raw.split(","):
        item = item.strip()
        if not item:
            continue
        key, _, value = item.partition("=")
        key = key.strip()
        if key not in _KEYMAP:
            raise ValueError(f"unknown {_ENV_VAR} key: {key!r}")
        overrides[_KEYMAP[key]] = int(value)
    return replace(base, **overrides)


def default_caps() -> Caps:
    """Caps from defaults plus any MONOGRAD_CAPS overrides (read per call)."""
    return _from_env(Caps())
