"""Size caps for the exhaustive routines.

Every oracle in this package is exact; when an input is too large for the
exhaustive search the routine raises :class:`CapExceededError` instead of
truncating.  The Hamiltonian oracle cap can be overridden with the
``IDEALGRAPH_ORACLE_CAP`` environment variable.
"""

from __future__ import annotations

import os

IDEAL_CAP = 4096
INDEPENDENCE_CAP = 64
GRAPH_CAP = 2000
INDUCED_LENGTH_CAP = 8
INDUCED_VERTEX_CAP = 64
SPECTRUM_CAP = 14
DEFAULT_ORACLE_CAP = 16

ORACLE_CAP_ENV = "IDEALGRAPH_ORACLE_CAP"


class CapExceededError(ValueError):
    """An input is larger than the configured cap of an exhaustive routine."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


def oracle_cap(override: int | None = None) -> int:
    if override is not None:
        return override
    raw = os.environ.get(ORACLE_CAP_ENV)
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"{ORACLE_CAP_ENV} must be an integer, got {raw!r}") from None
        if value < 0:
            raise ValueError(f"{ORACLE_CAP_ENV} must be non-negative")
        return value
    return DEFAULT_ORACLE_CAP


def check_cap(what: str, size: int, cap: int) -> None:
    if size > cap:
        raise CapExceededError(what, size, cap)
