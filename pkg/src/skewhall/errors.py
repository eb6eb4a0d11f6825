"""Exception hierarchy shared by every skewhall module."""

from __future__ import annotations

import os


class SkewHallError(Exception):
    """Base class for domain errors (CLI exit status 1)."""


class NotConvex(SkewHallError):
    pass


class UnsupportedDimension(SkewHallError):
    pass


class PreconditionFailed(SkewHallError):
    """A module does not satisfy a predicate the operation requires."""

    def __init__(self, predicate: str, detail: str = ""):
        self.predicate = predicate
        msg = f"precondition failed: {predicate}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class NotASubmodule(SkewHallError):
    pass


class DimensionMismatch(SkewHallError):
    pass


class ClassOutsideCategory(SkewHallError):
    pass


class NotAFiltration(SkewHallError):
    pass


class ResourceCapExceeded(SkewHallError):
    """An enumeration grew past the configured element ceiling (exit status 3)."""


CAP_ENV = "SKEWHALL_MAX_ELEMENTS"
DEFAULT_CAP = 5_000_000


def resource_cap(override: int | None = None) -> int:
    if override is not None:
        return override
    raw = os.environ.get(CAP_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise SkewHallError(f"{CAP_ENV} must be an integer, got {raw!r}") from None
    return DEFAULT_CAP


def check_cap(count: int, cap: int, what: str) -> None:
    if count > cap:
        raise ResourceCapExceeded(f"{what}: more than {cap} elements (set {CAP_ENV} to raise the ceiling)")
