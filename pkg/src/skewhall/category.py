from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CategorySpec:
    """Which subcategory of finite modules a Hall algebra is built on.

    The four quotient algebras are selected by ``require_type_alpha`` and
    ``require_gradable``; ``origin_support`` restricts to the subalgebra of
    modules on which every generator acts nilpotently. The skew-shape algebra
    is all three flags set.
    """

    n: int
    require_type_alpha: bool = False
    require_gradable: bool = False
    origin_support: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")

    @property
    def is_skew(self) -> bool:
        return self.require_type_alpha and self.require_gradable and self.origin_support

    @classmethod
    def skew(cls, n: int) -> CategorySpec:
        return cls(n, True, True, True)

    @classmethod
    def parse(cls, text: str, n: int) -> CategorySpec:
        """Parse the ``a,gr,origin`` flag syntax; empty means the full algebra."""
        flags = {f.strip() for f in text.split(",") if f.strip()}
        unknown = flags - {"a", "gr", "origin"}
        if unknown:
            raise ValueError(f"unknown category flag(s): {sorted(unknown)}")
        return cls(n, "a" in flags, "gr" in flags, "origin" in flags)

    def flags(self) -> str:
        parts = [p for p, on in (("a", self.require_type_alpha), ("gr", self.require_gradable), ("origin", self.origin_support)) if on]
        return ",".join(parts)

    def __str__(self) -> str:
        name = "H"
        sup = [s for s, on in (("α", self.require_type_alpha), ("gr", self.require_gradable)) if on]
        if sup:
            name += "^{" + ",".join(sup) + "}"
        if self.origin_support:
            name += "_0"
        return f"{name}(n={self.n})"
