"""Skew tableaux in two dimensions, read as filtrations of shape modules.

A filling ``f`` that increases along rows and up columns makes every set
``{s : f(s) >= k}`` a filter of the shape, hence the support of a submodule.
Standard tableaux give complete flags with one-box quotients; semistandard
ones give flags whose layers are unions of horizontal strips.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from . import _kernels
from .errors import NotAFiltration, UnsupportedDimension, check_cap, resource_cap
from .modules import ModuleClass, module_from_shape
from .shapes import Box, SkewShape, components_of_points, is_filter, parse_shape, render_ascii


def _left(b: Box) -> Box:
    return (b[0] - 1, b[1])


def _below(b: Box) -> Box:
    return (b[0], b[1] - 1)


def _require_plane(shape: SkewShape) -> None:
    if shape.n != 2:
        raise UnsupportedDimension(f"tableaux need n = 2, got n = {shape.n}")


@dataclass(frozen=True)
class Tableau:
    """A filling of a plane skew shape; ``entries[k]`` sits in ``shape.boxes[k]``."""

    shape: SkewShape
    entries: tuple[int, ...]

    def __post_init__(self):
        _require_plane(self.shape)
        if len(self.entries) != len(self.shape.boxes):
            raise ValueError("one entry per box is required")
        if any((not isinstance(e, int)) or e < 1 for e in self.entries):
            raise ValueError("entries must be positive integers")

    @classmethod
    def from_mapping(cls, shape: SkewShape, values: Mapping[Box, int]) -> Tableau:
        return cls(shape, tuple(int(values[b]) for b in shape.boxes))

    def as_mapping(self) -> dict[Box, int]:
        return dict(zip(self.shape.boxes, self.entries))

    def _row_col_ok(self, strict_rows: bool) -> bool:
        f = self.as_mapping()
        for b, v in f.items():
            left, below = _left(b), _below(b)
            if left in f and (f[left] >= v if strict_rows else f[left] > v):
                return False
            if below in f and f[below] >= v:
                return False
        return True

    @property
    def is_standard(self) -> bool:
        return sorted(self.entries) == list(range(1, len(self.entries) + 1)) and self._row_col_ok(True)

    @property
    def is_semistandard(self) -> bool:
        return self._row_col_ok(False)

    def render(self) -> str:
        return render_ascii(self.shape, self.as_mapping())

    def to_literal(self) -> dict:
        return {"shape": [list(b) for b in self.shape.boxes], "entries": list(self.entries)}

    @classmethod
    def from_literal(cls, data: Mapping) -> Tableau:
        from .shapes import shape_from_json

        shape = shape_from_json(data["shape"], 2)
        raw = {tuple(b): e for b, e in zip(data["shape"], data["entries"])}
        # the literal may list boxes unnormalised; shift onto the stored shape
        lows = [min(b[i] for b in raw) for i in range(2)] if raw else [0, 0]
        values = {(b[0] - lows[0], b[1] - lows[1]): e for b, e in raw.items()}
        return cls.from_mapping(shape, values)


def enumerate_standard(shape: SkewShape, cap: int | None = None) -> list[Tableau]:
    """All standard fillings, sorted by entry tuple.

    Entry k goes into a box whose left and lower neighbours (when present in
    the shape) already carry smaller entries.
    """
    _require_plane(shape)
    cap = resource_cap(cap)
    boxes = shape.box_set
    out: list[Tableau] = []
    filled: dict[Box, int] = {}

    def rec(k: int):
        if k > len(boxes):
            out.append(Tableau(shape, tuple(filled[b] for b in shape.boxes)))
            check_cap(len(out), cap, "standard tableaux")
            return
        for b in shape.boxes:
            if b in filled:
                continue
            if any(nb in boxes and nb not in filled for nb in (_left(b), _below(b))):
                continue
            filled[b] = k
            rec(k + 1)
            del filled[b]

    rec(1)
    return sorted(out, key=lambda t: t.entries)


def enumerate_semistandard(shape: SkewShape, max_entry: int, cap: int | None = None) -> list[Tableau]:
    """Semistandard fillings with entries in 1..max_entry, sorted by entry tuple."""
    _require_plane(shape)
    cap = resource_cap(cap)
    order = shape.boxes  # lexicographic order visits left and lower neighbours first
    out: list[Tableau] = []
    filled: dict[Box, int] = {}

    def rec(k: int):
        if k == len(order):
            out.append(Tableau(shape, tuple(filled[b] for b in shape.boxes)))
            check_cap(len(out), cap, "semistandard tableaux")
            return
        b = order[k]
        low = 1
        if _left(b) in filled:
            low = max(low, filled[_left(b)])
        if _below(b) in filled:
            low = max(low, filled[_below(b)] + 1)
        for v in range(low, max_entry + 1):
            filled[b] = v
            rec(k + 1)
        filled.pop(b, None)

    rec(0)
    return sorted(out, key=lambda t: t.entries)


def filtration_from_tableau(t: Tableau) -> list[frozenset[Box]]:
    """The chain S_{>=1} ⊇ S_{>=2} ⊇ ... ⊇ S_{>=max+1} = ∅ of filters."""
    if not t.is_semistandard:
        raise NotAFiltration("entries must weakly increase along rows and strictly up columns")
    f = t.as_mapping()
    top = max(t.entries, default=0)
    chain = [frozenset(b for b, v in f.items() if v >= k) for k in range(1, top + 2)]
    for layer in chain:
        if not is_filter(t.shape, layer):
            raise NotAFiltration(f"{sorted(layer)} is not up-closed")
    return chain


def filtration_quotients(t: Tableau) -> list[ModuleClass]:
    """Class of each successive quotient M_{S>=k} / M_{S>=k+1}."""
    chain = filtration_from_tableau(t)
    return [ModuleClass.of(components_of_points(2, a - b)) for a, b in zip(chain, chain[1:])]


def is_horizontal_strip(shape: SkewShape) -> bool:
    """Connected and contained in a single row."""
    return shape.is_connected and len({b[1] for b in shape.boxes}) <= 1


def tableau_from_filtration(shape: SkewShape, chain: Sequence[frozenset]) -> Tableau:
    """Inverse of :func:`filtration_from_tableau`: f(s) = largest k with s in chain[k-1]."""
    _require_plane(shape)
    chain = [frozenset(tuple(b) for b in layer) for layer in chain]
    if not chain or chain[0] != shape.box_set or chain[-1]:
        raise NotAFiltration("a filtration must start at the whole shape and end empty")
    for a, b in zip(chain, chain[1:]):
        if not b <= a:
            raise NotAFiltration("chain is not decreasing")
    for layer in chain:
        if not is_filter(shape, layer):
            raise NotAFiltration(f"{sorted(layer)} is not up-closed")
    values = {b: max(k for k, layer in enumerate(chain, 1) if b in layer) for b in shape.boxes}
    t = Tableau.from_mapping(shape, values)
    if not t.is_semistandard:
        raise NotAFiltration("layers do not give a semistandard filling")
    return t


def count_standard_via_chains(shape: SkewShape, cap: int | None = None) -> int:
    """Count complete flags 0 = L_0 ⊂ ... ⊂ L_m = M_S of submodules.

    Works on the module side: submodule supports come from the closure
    kernel on M_S, and flags are counted by dynamic programming over them.
    """
    _require_plane(shape)
    m = module_from_shape(shape)
    if m.size == 0:
        return 1
    cap = resource_cap(cap)
    closed = set(_kernels.closed_subsets(m.n, m.size, m.flat))
    check_cap(len(closed), cap, "submodules")
    full = (1 << m.size) - 1
    ways = {0: 1}
    for mask in sorted(closed, key=lambda x: bin(x).count("1")):
        if mask == 0:
            continue
        total = 0
        rest = mask
        while rest:
            bit = rest & -rest
            rest ^= bit
            total += ways.get(mask ^ bit, 0) if (mask ^ bit) in closed else 0
        ways[mask] = total
    return ways.get(full, 0)


def parse_tableau(shape_text: str, entries_text: str) -> Tableau:
    """Shape literal plus comma-separated entries in sorted box order."""
    shape = parse_shape(shape_text, 2)
    entries = tuple(int(e) for e in entries_text.replace(";", ",").split(",") if e.strip())
    return Tableau(shape, entries)
