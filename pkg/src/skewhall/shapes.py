"""n-dimensional skew shapes: finite convex subsets of Z^n up to translation.

A shape is stored in its canonical translate (minimum coordinate 0 on every
axis) with boxes sorted lexicographically. Disconnected convex shapes are
representable, but isomorphism classes of decomposable modules are kept as
multisets of connected shapes elsewhere (see :mod:`skewhall.classes`).
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .errors import NotConvex, UnsupportedDimension, check_cap, resource_cap

Box = tuple[int, ...]


@dataclass(frozen=True)
class SkewShape:
    n: int
    boxes: tuple[Box, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ambient dimension must be positive")
        if any(len(b) != self.n for b in self.boxes):
            raise ValueError("box of wrong dimension")
        if list(self.boxes) != sorted(set(self.boxes)):
            raise ValueError("boxes must be sorted and distinct; use canonicalize()")
        if self.boxes and any(min(b[i] for b in self.boxes) != 0 for i in range(self.n)):
            raise ValueError("shape is not translation-normalized; use canonicalize()")

    def __len__(self) -> int:
        return len(self.boxes)

    def __iter__(self):
        return iter(self.boxes)

    def __contains__(self, box) -> bool:
        return box in self.box_set

    @cached_property
    def box_set(self) -> frozenset[Box]:
        return frozenset(self.boxes)

    @property
    def sort_key(self):
        return (len(self.boxes), self.boxes)

    def __lt__(self, other: SkewShape) -> bool:
        return self.sort_key < other.sort_key

    def span(self, axis: int) -> int:
        if not self.boxes:
            return 0
        return max(b[axis] for b in self.boxes)

    def is_connected(self) -> bool:
        return len(components(self)) <= 1

    def minimal_boxes(self) -> list[Box]:
        return [b for b in self.boxes if not any(_lower_neighbor(b, i) in self for i in range(self.n))]

    def literal(self) -> str:
        return format_shape(self)

    def __repr__(self) -> str:
        return f"SkewShape({self.n}, {format_shape(self)!r})"


def _lower_neighbor(b: Box, i: int) -> Box:
    return b[:i] + (b[i] - 1,) + b[i + 1 :]


def _upper_neighbor(b: Box, i: int) -> Box:
    return b[:i] + (b[i] + 1,) + b[i + 1 :]


def _neighbors(b: Box):
    for i in range(len(b)):
        yield _lower_neighbor(b, i)
        yield _upper_neighbor(b, i)


def leq(x: Sequence[int], y: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(x, y))


def is_convex(points: Iterable[Sequence[int]]) -> bool:
    """True iff every lattice point between two members is a member.

    Checked through unit steps: for x <= y in the set and any axis with
    x_i < y_i, x + e_i must be present. Induction on |z - x|_1 shows this
    implies the full interval condition.
    """
    pts = {tuple(p) for p in points}
    for x in pts:
        for y in pts:
            if x == y or not leq(x, y):
                continue
            for i in range(len(x)):
                if x[i] < y[i] and _upper_neighbor(x, i) not in pts:
                    return False
    return True


def normalize(n: int, points: Iterable[Sequence[int]]) -> tuple[Box, ...]:
    """Translate so each axis has minimum 0; sort. No convexity check."""
    pts = {tuple(int(c) for c in p) for p in points}
    for p in pts:
        if len(p) != n:
            raise ValueError(f"point {p} is not {n}-dimensional")
    if not pts:
        return ()
    lows = [min(p[i] for p in pts) for i in range(n)]
    return tuple(sorted(tuple(c - lo for c, lo in zip(p, lows)) for p in pts))


def canonicalize(n: int, points: Iterable[Sequence[int]]) -> SkewShape:
    boxes = normalize(n, points)
    if not is_convex(boxes):
        raise NotConvex(f"points {list(boxes)} do not form a convex subposet of Z^{n}")
    return SkewShape(n, boxes)


def connected_parts(points: Iterable[Box]) -> list[list[Box]]:
    """Unit-step connected components of a point set, in raw coordinates."""
    remaining = set(points)
    parts = []
    for start in sorted(remaining):
        if start not in remaining:
            continue
        remaining.discard(start)
        part, stack = [start], [start]
        while stack:
            b = stack.pop()
            for nb in _neighbors(b):
                if nb in remaining:
                    remaining.discard(nb)
                    part.append(nb)
                    stack.append(nb)
        parts.append(sorted(part))
    return parts


def components(shape: SkewShape) -> list[SkewShape]:
    # components of a convex set are convex, so no re-check
    comps = [SkewShape(shape.n, normalize(shape.n, part)) for part in connected_parts(shape.boxes)]
    return sorted(comps, key=lambda s: s.sort_key)


def components_of_points(n: int, points: Iterable[Box]) -> tuple[SkewShape, ...]:
    """Canonical connected components of a convex point set, sorted."""
    return tuple(sorted((SkewShape(n, normalize(n, part)) for part in connected_parts(points)), key=lambda s: s.sort_key))


def enumerate_connected_shapes(n: int, k: int, cap: int | None = None) -> frozenset[SkewShape]:
    """All connected canonical shapes with ``k`` boxes.

    Built by adding one adjacent box at a time. Every connected convex shape
    with at least two boxes has a maximal or minimal box whose removal leaves
    it connected (take an extremal cut box with the smallest side component;
    a minimal/maximal box inside that side yields a smaller one), so growth
    through connected convex shapes reaches everything.
    """
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    return _connected_shapes(n, k, resource_cap(cap))


@lru_cache(maxsize=None)
def _connected_shapes(n: int, k: int, cap: int) -> frozenset[SkewShape]:
    if k == 0:
        return frozenset({SkewShape(n, ())})
    if k == 1:
        return frozenset({SkewShape(n, ((0,) * n,))})
    found: set[tuple[Box, ...]] = set()
    for shape in _connected_shapes(n, k - 1, cap):
        boxes = shape.box_set
        candidates = {nb for b in shape.boxes for nb in _neighbors(b)} - boxes
        for c in candidates:
            grown = boxes | {c}
            if is_convex(grown):
                found.add(normalize(n, grown))
        check_cap(len(found), cap, f"connected shapes (n={n}, k={k})")
    return frozenset(SkewShape(n, b) for b in found)


def filters_of(shape: SkewShape) -> list[frozenset[Box]]:
    """All up-closed subsets of the poset of boxes, in a deterministic order.

    These are the supports of submodules of the shape module. Computed from
    the componentwise order directly (include a box => include everything
    above it; exclude => exclude everything below).
    """
    boxes = list(shape.boxes)
    m = len(boxes)
    above = [frozenset(j for j in range(m) if leq(boxes[i], boxes[j])) for i in range(m)]
    below = [frozenset(j for j in range(m) if leq(boxes[j], boxes[i])) for i in range(m)]
    out: list[frozenset[Box]] = []

    def rec(i: int, inside: frozenset, outside: frozenset):
        while i < m and (i in inside or i in outside):
            i += 1
        if i == m:
            out.append(frozenset(boxes[j] for j in inside))
            return
        grown = inside | above[i]
        if not grown & outside:
            rec(i + 1, grown, outside)
        shrunk = outside | below[i]
        if not shrunk & inside:
            rec(i + 1, inside, shrunk)

    rec(0, frozenset(), frozenset())
    return sorted(out, key=lambda f: (len(f), sorted(f)))


def is_filter(shape: SkewShape, subset: Iterable[Box]) -> bool:
    sub = set(subset)
    if not sub <= shape.box_set:
        return False
    return all(_upper_neighbor(b, i) in sub for b in sub for i in range(shape.n) if _upper_neighbor(b, i) in shape)


def permute(shape: SkewShape, sigma: Sequence[int]) -> SkewShape:
    """Relabel axes: generator i of the result acts as generator sigma[i] did.

    ``sigma`` is 0-based (``sigma[i]`` is the image of i). A box s becomes
    (s[sigma[0]], ..., s[sigma[n-1]]); for n = 2 the swap is transposition.
    """
    if sorted(sigma) != list(range(shape.n)):
        raise ValueError(f"{sigma} is not a permutation of 0..{shape.n - 1}")
    return SkewShape(shape.n, normalize(shape.n, (tuple(b[s] for s in sigma) for b in shape.boxes)))


def inverse_permutation(sigma: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma):
        inv[s] = i
    return tuple(inv)


def render_ascii(shape: SkewShape, labels: Mapping[Box, object] | None = None) -> str:
    """French-notation drawing (y grows upward) for n = 2.

    Boxes draw as ``[]``; with ``labels`` each box shows its label, padded to a
    common width.
    """
    if shape.n != 2:
        raise UnsupportedDimension(f"render_ascii needs n = 2, got n = {shape.n}")
    if not shape.boxes:
        return ""
    if labels:
        width = max(len(str(v)) for v in labels.values())
        cell = lambda b: "[" + str(labels[b]).rjust(width) + "]"  # noqa: E731
        blank = " " * (width + 2)
    else:
        cell = lambda b: "[]"  # noqa: E731
        blank = "  "
    rows = []
    for y in range(shape.span(1), -1, -1):
        line = "".join(cell((x, y)) if (x, y) in shape else blank for x in range(shape.span(0) + 1))
        rows.append(line.rstrip())
    return "\n".join(rows)


def parse_points(text: str) -> list[Box]:
    """Parse ``(0,0);(1,0);(0,1)``. The empty string is the empty shape."""
    text = text.strip()
    if not text:
        return []
    points = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise ValueError(f"bad box literal {chunk!r}")
        inner = chunk[1:-1].strip()
        points.append(tuple(int(c) for c in inner.split(",") if c.strip() != ""))
    return points


def parse_shape(text: str, n: int | None = None) -> SkewShape:
    points = parse_points(text)
    if n is None:
        if not points:
            raise ValueError("cannot infer dimension of the empty shape; pass n")
        n = len(points[0])
    return canonicalize(n, points)


def shape_from_json(data: Sequence[Sequence[int]], n: int | None = None) -> SkewShape:
    points = [tuple(p) for p in data]
    if n is None:
        if not points:
            raise ValueError("cannot infer dimension of the empty shape; pass n")
        n = len(points[0])
    return canonicalize(n, points)


def format_shape(shape: SkewShape) -> str:
    return ";".join("(" + ",".join(str(c) for c in b) + ")" for b in shape.boxes)


def interval(k: int) -> SkewShape:
    """The one-dimensional shape with k boxes (the k-vertex ladder)."""
    return SkewShape(1, tuple((i,) for i in range(k)))
