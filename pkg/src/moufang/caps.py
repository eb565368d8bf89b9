"""Size caps for the exponential parts of the toolkit.

Defaults can be overridden with the ``MOUFANG_CAPS`` environment variable,
a comma-separated list of ``name=value`` pairs, e.g.
``MOUFANG_CAPS="bracket=7,enumerate=6,canonical=8"``.
"""

import os

DEFAULTS = {
    "bracket": 6,  # longest power checked over all bracketings
    "enumerate": 5,  # largest order for exhaustive enumeration
    "canonical": 7,  # largest order for brute-force canonical forms
}

ENV_VAR = "MOUFANG_CAPS"


def get_cap(name: str) -> int:
    """Return the effective cap, reading the environment on every call."""
    if name not in DEFAULTS:
        raise KeyError(name)
    raw = os.environ.get(ENV_VAR, "")
    for item in raw.split(","):
        key, sep, value = item.partition("=")
        if sep and key.strip() == name:
            return int(value)
    return DEFAULTS[name]
