"""Finite pointed-set modules over the free commutative monoid on n generators.

Elements are ``0..size`` with 0 the basepoint; generator i acts through the
table ``action[i]``. Monomials are never stored: ``x^e`` acts by composing
generator maps. For n = 1 this is exactly a module over F1<t>.
"""

from __future__ import annotations

from collections import Counter, deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from . import _kernels
from .errors import DimensionMismatch, NotASubmodule, NotConvex, PreconditionFailed
from .shapes import SkewShape, canonicalize, interval

Degree = tuple[int, ...]


@dataclass(frozen=True)
class PointedModule:
    n: int
    size: int
    action: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1 or self.size < 0:
            raise ValueError("need n >= 1 and size >= 0")
        if len(self.action) != self.n:
            raise ValueError(f"expected {self.n} action maps, got {len(self.action)}")
        for table in self.action:
            if len(table) != self.size + 1:
                raise ValueError(f"action map must have {self.size + 1} entries")
            if any(not 0 <= t <= self.size for t in table):
                raise ValueError("action value out of range")

    @classmethod
    def from_maps(cls, maps: Sequence[Sequence[int]]) -> PointedModule:
        maps = [tuple(int(t) for t in m) for m in maps]
        return cls(len(maps), len(maps[0]) - 1, tuple(maps))

    @classmethod
    def zero(cls, n: int) -> PointedModule:
        return cls(n, 0, ((0,),) * n)

    @property
    def dim(self) -> int:
        return self.size

    @property
    def flat(self) -> tuple[int, ...]:
        return tuple(t for table in self.action for t in table)

    def elements(self) -> range:
        return range(1, self.size + 1)

    def act(self, i: int, m: int) -> int:
        return self.action[i][m]

    def apply_monomial(self, exponent: Sequence[int], m: int) -> int:
        for i, e in enumerate(exponent):
            table = self.action[i]
            for _ in range(e):
                m = table[m]
        return m

    def to_literal(self) -> dict:
        return {"n": self.n, "size": self.size, "action": [list(t) for t in self.action]}

    @classmethod
    def from_literal(cls, data: dict) -> PointedModule:
        """Parse ``{n, size, action}``; rejects tables that are not module actions."""
        module = cls(int(data["n"]), int(data["size"]), tuple(tuple(int(t) for t in row) for row in data["action"]))
        problem = validate(module)
        if problem is not None:
            raise ValueError(f"not a module: {problem}")
        return module


@dataclass(frozen=True)
class Violation:
    identity: str
    witnesses: tuple

    def __str__(self) -> str:
        return f"{self.identity} fails at {self.witnesses}"


def validate(module: PointedModule) -> Violation | None:
    """First violated module axiom, or None when the action is well defined."""
    for i, table in enumerate(module.action):
        if table[0] != 0:
            return Violation("x_i . 0 = 0", (i, table[0]))
    for i in range(module.n):
        for j in range(i + 1, module.n):
            ai, aj = module.action[i], module.action[j]
            for m in module.elements():
                if ai[aj[m]] != aj[ai[m]]:
                    return Violation("x_i x_j = x_j x_i", (i, j, m, ai[aj[m]], aj[ai[m]]))
    return None


# ---------------------------------------------------------------- shapes


def module_from_shape(shape: SkewShape) -> PointedModule:
    """x_i moves a box one step along axis i, or to 0 if it leaves the shape.

    Element k is ``shape.boxes[k - 1]``, so the boxes themselves give the
    coordinate grading.
    """
    index = {b: k + 1 for k, b in enumerate(shape.boxes)}
    maps = []
    for i in range(shape.n):
        row = [0]
        for b in shape.boxes:
            moved = b[:i] + (b[i] + 1,) + b[i + 1 :]
            row.append(index.get(moved, 0))
        maps.append(tuple(row))
    return PointedModule(shape.n, len(shape.boxes), tuple(maps))


def ladder(k: int) -> PointedModule:
    """n = 1 nilpotent chain with k non-zero elements."""
    return module_from_shape(interval(k))


def polygon(k: int) -> PointedModule:
    """n = 1 module where t rotates k elements cyclically."""
    return PointedModule(1, k, ((0,) + tuple(m % k + 1 for m in range(1, k + 1)),))


# ---------------------------------------------------------------- predicates


def is_type_alpha(module: PointedModule) -> bool:
    """Every generator injective off its kernel.

    Enough for the whole monoid: a monomial is a composite of generator maps,
    and composites of maps that are injective away from the preimage of 0 are
    again injective away from the preimage of 0.
    """
    for table in module.action:
        hit = [t for t in table[1:] if t]
        if len(hit) != len(set(hit)):
            return False
    return True


def _nilpotent(table: Sequence[int], size: int) -> bool:
    for m in range(1, size + 1):
        x = m
        for _ in range(size):
            x = table[x]
            if not x:
                break
        if x:
            return False
    return True


def supported_at_origin(module: PointedModule) -> bool:
    """Support is the origin iff every generator acts nilpotently."""
    return all(_nilpotent(table, module.size) for table in module.action)


def annihilator(module: PointedModule) -> list[Degree]:
    """Minimal exponents e with x^e . M = 0, searching e_i <= dim M.

    The zero module is killed by 1, returned as the zero exponent. An empty
    list means the annihilator contains no monomial within the bound (it is
    the zero ideal when some generator is not nilpotent on every component
    along every axis).
    """
    d = module.size
    killers = []
    for e in sorted(product(range(d + 1), repeat=module.n), key=lambda e: (sum(e), e)):
        if any(all(a <= b for a, b in zip(k, e)) for k in killers):
            continue
        if all(module.apply_monomial(e, m) == 0 for m in module.elements()):
            killers.append(e)
    return killers


@dataclass(frozen=True)
class Grading:
    """Degree vector for every non-zero element (index 0 unused, None)."""

    degree: tuple[Degree | None, ...]

    def __getitem__(self, m: int) -> Degree:
        return self.degree[m]


def _undirected_adjacency(module: PointedModule) -> list[list[tuple[int, int, int]]]:
    """For each element, (neighbor, generator, +1 forward / -1 backward)."""
    adj: list[list[tuple[int, int, int]]] = [[] for _ in range(module.size + 1)]
    for i, table in enumerate(module.action):
        for m in module.elements():
            t = table[m]
            if t:
                adj[m].append((t, i, 1))
                adj[t].append((m, i, -1))
    return adj


def find_grading(module: PointedModule) -> Grading | None:
    """Z^n grading with deg(x_i m) = deg(m) + e_i, or None if none exists.

    Breadth-first potential assignment; each connected component is shifted
    so its minimum along every axis is 0.
    """
    n = module.n
    degree: list[Degree | None] = [None] * (module.size + 1)
    adj = _undirected_adjacency(module)
    for start in module.elements():
        if degree[start] is not None:
            continue
        degree[start] = (0,) * n
        comp = [start]
        queue = deque([start])
        while queue:
            m = queue.popleft()
            for nb, i, sign in adj[m]:
                want = tuple(c + (sign if k == i else 0) for k, c in enumerate(degree[m]))
                if degree[nb] is None:
                    degree[nb] = want
                    comp.append(nb)
                    queue.append(nb)
                elif degree[nb] != want:
                    return None
        lows = [min(degree[m][k] for m in comp) for k in range(n)]
        for m in comp:
            degree[m] = tuple(c - lo for c, lo in zip(degree[m], lows))
    return Grading(tuple(degree))


def is_gradable(module: PointedModule) -> bool:
    return find_grading(module) is not None


def in_category(module: PointedModule, cat) -> bool:
    if cat.n != module.n:
        return False
    if cat.require_type_alpha and not is_type_alpha(module):
        return False
    if cat.origin_support and not supported_at_origin(module):
        return False
    if cat.require_gradable and not is_gradable(module):
        return False
    return True


def is_skew_type(module: PointedModule) -> bool:
    return is_type_alpha(module) and supported_at_origin(module) and is_gradable(module)


# ---------------------------------------------------------------- submodules


def generated_submodule(module: PointedModule, gens: Iterable[int]) -> frozenset[int]:
    seen = {0}
    stack = [g for g in gens if g]
    seen.update(stack)
    while stack:
        m = stack.pop()
        for table in module.action:
            t = table[m]
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return frozenset(seen)


def is_cyclic(module: PointedModule) -> bool:
    if module.size == 0:
        return True
    everything = frozenset(range(module.size + 1))
    return any(generated_submodule(module, [m]) == everything for m in module.elements())


def minimal_generators(module: PointedModule) -> list[int]:
    """Elements outside (x_1, ..., x_n) . M; a generating set when M is nilpotent."""
    image = {table[m] for table in module.action for m in module.elements()}
    return [m for m in module.elements() if m not in image]


def submodule_masks(module: PointedModule) -> list[int]:
    return _kernels.closed_subsets(module.n, module.size, module.flat)


def submodules(module: PointedModule) -> list[frozenset[int]]:
    """All subsets containing 0 that are closed under every generator."""
    out = []
    for mask in submodule_masks(module):
        out.append(frozenset([0] + [m for m in module.elements() if (mask >> (m - 1)) & 1]))
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def is_submodule(module: PointedModule, subset: Iterable[int]) -> bool:
    sub = set(subset) | {0}
    if not sub <= set(range(module.size + 1)):
        return False
    return all(table[m] in sub for table in module.action for m in sub)


def _induced(module: PointedModule, keep: Sequence[int]) -> PointedModule:
    """Module on ``keep`` (sorted, relabelled 1..k); anything else maps to 0."""
    relabel = {m: k + 1 for k, m in enumerate(keep)}
    relabel[0] = 0
    maps = []
    for table in module.action:
        maps.append((0,) + tuple(relabel.get(table[m], 0) for m in keep))
    return PointedModule(module.n, len(keep), tuple(maps))


def restrict(module: PointedModule, subset: Iterable[int]) -> PointedModule:
    """The submodule on ``subset`` as a module in its own right."""
    sub = set(subset) | {0}
    if not is_submodule(module, sub):
        raise NotASubmodule(f"{sorted(sub)} is not closed under the action")
    return _induced(module, sorted(sub - {0}))


def quotient(module: PointedModule, subset: Iterable[int]) -> PointedModule:
    """Collapse a submodule to the basepoint."""
    sub = set(subset) | {0}
    if not is_submodule(module, sub):
        raise NotASubmodule(f"{sorted(sub)} is not closed under the action")
    return _induced(module, [m for m in module.elements() if m not in sub])


def quotient_mask(module: PointedModule, mask: int) -> tuple[PointedModule, PointedModule]:
    """(submodule, quotient) for a kernel bitmask, skipping the closure check."""
    inside = [m for m in module.elements() if (mask >> (m - 1)) & 1]
    outside = [m for m in module.elements() if not (mask >> (m - 1)) & 1]
    return _induced(module, inside), _induced(module, outside)


# ---------------------------------------------------------------- constructions


def _same_n(a: PointedModule, b: PointedModule) -> None:
    if a.n != b.n:
        raise DimensionMismatch(f"modules over {a.n} and {b.n} generators")


def direct_sum(*modules: PointedModule, n: int | None = None) -> PointedModule:
    """Wedge sum: disjoint union with the basepoints identified."""
    if not modules:
        if n is None:
            raise ValueError("need n for an empty direct sum")
        return PointedModule.zero(n)
    for other in modules[1:]:
        _same_n(modules[0], other)
    n = modules[0].n
    maps: list[list[int]] = [[0] for _ in range(n)]
    offset = 0
    for mod in modules:
        for i in range(n):
            maps[i].extend(t + offset if t else 0 for t in mod.action[i][1:])
        offset += mod.size
    return PointedModule(n, offset, tuple(tuple(m) for m in maps))


def smash_product(a: PointedModule, b: PointedModule) -> PointedModule:
    """Pairs of non-zero elements; diagonal action, 0 if either side dies."""
    _same_n(a, b)
    index = {(x, y): k + 1 for k, (x, y) in enumerate(product(a.elements(), b.elements()))}
    maps = []
    for i in range(a.n):
        row = [0]
        for x, y in index:
            row.append(index.get((a.action[i][x], b.action[i][y]), 0))
        maps.append(tuple(row))
    return PointedModule(a.n, len(index), tuple(maps))


class _UnionFind:
    def __init__(self, count: int):
        self.parent = list(range(count))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # keep the smaller root so the basepoint (0) stays a root
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx


def tensor_classes(a: PointedModule, b: PointedModule) -> tuple[list[int], int]:
    """Equivalence classes of the smash product under (x_i m, n) ~ (m, x_i n).

    Returns (class index for every smash element, number of non-zero classes);
    smash element k encodes the pair ``divmod(k - 1, b.size)`` shifted by one.
    Generators suffice: the relation for a monomial is a chain of generator steps.
    """
    _same_n(a, b)
    pairs = list(product(a.elements(), b.elements()))
    index = {p: k + 1 for k, p in enumerate(pairs)}
    uf = _UnionFind(len(pairs) + 1)
    for i in range(a.n):
        for x, y in pairs:
            left = index.get((a.action[i][x], y), 0)
            right = index.get((x, b.action[i][y]), 0)
            uf.union(left, right)
    roots: dict[int, int] = {uf.find(0): 0}
    labels = [0]
    for k in range(1, len(pairs) + 1):
        r = uf.find(k)
        if r not in roots:
            roots[r] = len(roots)
        labels.append(roots[r])
    return labels, len(roots) - 1


def tensor_product(a: PointedModule, b: PointedModule) -> PointedModule:
    """M ⊗ N with x_i (m ⊗ n) = (x_i m) ⊗ n, which equals m ⊗ (x_i n) by the relation.

    The diagonal action of the smash product would instead act by x_i^2.
    """
    labels, count = tensor_classes(a, b)
    index = {p: k for k, p in enumerate(product(a.elements(), b.elements()), start=1)}
    maps = []
    for i in range(a.n):
        row = [0] * (count + 1)
        for (x, y), k in index.items():
            c = labels[k]
            if c:
                row[c] = labels[index.get((a.action[i][x], y), 0)]
        maps.append(tuple(row))
    return PointedModule(a.n, count, tuple(maps))


def tensor_grading(a: PointedModule, b: PointedModule, ga: Grading, gb: Grading) -> dict[int, Degree]:
    """deg(m ⊗ n) = deg m + deg n; raises if that is not constant on a class."""
    labels, _ = tensor_classes(a, b)
    degrees: dict[int, Degree] = {}
    for k, (x, y) in enumerate(product(a.elements(), b.elements()), start=1):
        c = labels[k]
        if not c:
            continue
        deg = tuple(p + q for p, q in zip(ga[x], gb[y]))
        if degrees.setdefault(c, deg) != deg:
            raise ValueError(f"tensor degree not well defined on class {c}")
    return degrees


def permute_generators(module: PointedModule, sigma: Sequence[int]) -> PointedModule:
    """Module where generator i acts as generator ``sigma[i]`` did (0-based)."""
    if sorted(sigma) != list(range(module.n)):
        raise ValueError(f"{sigma} is not a permutation of 0..{module.n - 1}")
    return PointedModule(module.n, module.size, tuple(module.action[s] for s in sigma))


# ---------------------------------------------------------------- decomposition


def component_sets(module: PointedModule) -> list[list[int]]:
    adj = _undirected_adjacency(module)
    seen = [False] * (module.size + 1)
    parts = []
    for start in module.elements():
        if seen[start]:
            continue
        seen[start] = True
        part, stack = [start], [start]
        while stack:
            m = stack.pop()
            for nb, _, _ in adj[m]:
                if not seen[nb]:
                    seen[nb] = True
                    part.append(nb)
                    stack.append(nb)
        parts.append(sorted(part))
    return parts


def decompose(module: PointedModule) -> list[PointedModule]:
    """Indecomposable summands, ordered by their smallest element."""
    return [_induced(module, part) for part in component_sets(module)]


def is_indecomposable(module: PointedModule) -> bool:
    return module.size > 0 and len(component_sets(module)) == 1


# ---------------------------------------------------------------- isomorphism


def _element_invariant(module: PointedModule, m: int) -> tuple:
    ins = tuple(sum(1 for p in module.elements() if table[p] == m) for table in module.action)
    outs = tuple(bool(table[m]) for table in module.action)
    return ins, outs


def isomorphic(a: PointedModule, b: PointedModule) -> bool:
    """Backtracking search for a pointed bijection commuting with every generator."""
    if a.n != b.n or a.size != b.size:
        return False
    if a.size == 0:
        return True
    inv_a = [None] + [_element_invariant(a, m) for m in a.elements()]
    inv_b = [None] + [_element_invariant(b, m) for m in b.elements()]
    if sorted(inv_a[1:]) != sorted(inv_b[1:]):
        return False
    order = [m for part in component_sets(a) for m in part]
    phi = [0] * (a.size + 1)
    used = [False] * (b.size + 1)

    def assign(m: int, target: int, trail: list[int]) -> bool:
        queue = [(m, target)]
        while queue:
            x, y = queue.pop()
            if phi[x]:
                if phi[x] != y:
                    return False
                continue
            if used[y] or inv_a[x] != inv_b[y]:
                return False
            phi[x] = y
            used[y] = True
            trail.append(x)
            for i in range(a.n):
                tx, ty = a.action[i][x], b.action[i][y]
                if bool(tx) != bool(ty):
                    return False
                if tx:
                    queue.append((tx, ty))
        return True

    def undo(trail: list[int]) -> None:
        for x in trail:
            used[phi[x]] = False
            phi[x] = 0

    def search(pos: int) -> bool:
        while pos < len(order) and phi[order[pos]]:
            pos += 1
        if pos == len(order):
            return all(phi[a.action[i][x]] == b.action[i][phi[x]] for i in range(a.n) for x in a.elements())
        m = order[pos]
        for y in b.elements():
            if used[y] or inv_a[m] != inv_b[y]:
                continue
            trail: list[int] = []
            if assign(m, y, trail) and search(pos + 1):
                return True
            undo(trail)
        return False

    return search(0)


# ---------------------------------------------------------------- classes


@dataclass(frozen=True)
class Fingerprint:
    """Canonical action table of an indecomposable module outside the skew case."""

    n: int
    size: int
    form: tuple[int, ...]

    @property
    def sort_key(self):
        return (self.size, 1, self.form)

    def module(self) -> PointedModule:
        maps = []
        for i in range(self.n):
            maps.append((0,) + self.form[i * self.size : (i + 1) * self.size])
        return PointedModule(self.n, self.size, tuple(maps))

    def literal(self) -> dict:
        return self.module().to_literal()


Component = SkewShape | Fingerprint


def component_sort_key(c: Component):
    if isinstance(c, SkewShape):
        return (len(c), 0, c.boxes)
    return c.sort_key


def component_dim(c: Component) -> int:
    return len(c) if isinstance(c, SkewShape) else c.size


def component_module(c: Component) -> PointedModule:
    return module_from_shape(c) if isinstance(c, SkewShape) else c.module()


@dataclass(frozen=True)
class ModuleClass:
    """Isomorphism class: sorted multiset of indecomposable summand keys.

    Summands in the skew category are keyed by their connected shape, the
    rest by a canonical action table. The empty multiset is the zero class.
    """

    components: tuple[Component, ...] = ()

    @classmethod
    def of(cls, components: Iterable[Component]) -> ModuleClass:
        return cls(tuple(sorted(components, key=component_sort_key)))

    @classmethod
    def from_shape(cls, shape: SkewShape) -> ModuleClass:
        from .shapes import components as shape_components

        return cls.of(shape_components(shape))

    @property
    def dim(self) -> int:
        return sum(component_dim(c) for c in self.components)

    @property
    def is_zero(self) -> bool:
        return not self.components

    @property
    def is_indecomposable(self) -> bool:
        return len(self.components) == 1

    @property
    def sort_key(self):
        return (self.dim, len(self.components), tuple(component_sort_key(c) for c in self.components))

    def __lt__(self, other: ModuleClass) -> bool:
        return self.sort_key < other.sort_key

    def __add__(self, other: ModuleClass) -> ModuleClass:
        return ModuleClass.of(self.components + other.components)

    def multiplicities(self) -> Counter:
        return Counter(self.components)

    def is_skew(self) -> bool:
        return all(isinstance(c, SkewShape) for c in self.components)

    def representative(self, n: int | None = None) -> PointedModule:
        if not self.components:
            if n is None:
                raise ValueError("zero class needs n for a representative")
            return PointedModule.zero(n)
        return direct_sum(*(component_module(c) for c in self.components))

    def __str__(self) -> str:
        if not self.components:
            return "0"
        return " ⊕ ".join(c.literal() if isinstance(c, SkewShape) else f"M{c.literal()['action']}" for c in self.components)


ZERO = ModuleClass(())


def _shape_of_component(module: PointedModule) -> SkewShape:
    grading = find_grading(module)
    if grading is None:
        raise PreconditionFailed("admits a grading")
    degrees = [grading[m] for m in module.elements()]
    if len(set(degrees)) != len(degrees):
        raise PreconditionFailed("isomorphic to a shape module", "grading is not injective")
    try:
        shape = canonicalize(module.n, degrees)
    except NotConvex as exc:
        raise PreconditionFailed("isomorphic to a shape module", str(exc)) from None
    # the grading must be an isomorphism onto the shape module, zeros included
    lows = [min(d[k] for d in degrees) for k in range(module.n)]
    where = {tuple(c - lo for c, lo in zip(grading[m], lows)): m for m in module.elements()}
    for i, table in enumerate(module.action):
        for box, m in where.items():
            moved = box[:i] + (box[i] + 1,) + box[i + 1 :]
            if where.get(moved, 0) != table[m]:
                raise PreconditionFailed("isomorphic to a shape module", f"generator {i} at element {m}")
    return shape


def _require_skew(module: PointedModule) -> None:
    if not is_type_alpha(module):
        raise PreconditionFailed("type alpha")
    if not supported_at_origin(module):
        raise PreconditionFailed("supported at the origin")
    if not is_gradable(module):
        raise PreconditionFailed("admits a grading")


def shape_from_module(module: PointedModule) -> SkewShape:
    """The connected shape S with M ≅ M_S (empty shape for the zero module).

    Requires type alpha, origin support, a grading, and indecomposability;
    decomposable modules go through :func:`shape_class`.
    """
    _require_skew(module)
    if module.size == 0:
        return SkewShape(module.n, ())
    if not is_indecomposable(module):
        raise PreconditionFailed("indecomposable", "use shape_class for direct sums")
    return _shape_of_component(module)


def shape_class(module: PointedModule) -> ModuleClass:
    """Multiset of connected shapes of the summands of a skew-category module."""
    _require_skew(module)
    return ModuleClass.of(_shape_of_component(c) for c in decompose(module))


def fingerprint(module: PointedModule) -> Fingerprint:
    return Fingerprint(module.n, module.size, _kernels.canonical_form(module.n, module.size, module.flat))


@lru_cache(maxsize=1 << 18)
def _component_key(module: PointedModule) -> Component:
    if is_skew_type(module):
        return _shape_of_component(module)
    return fingerprint(module)


def canonical_class(module: PointedModule) -> ModuleClass:
    return _canonical_class(module)


@lru_cache(maxsize=1 << 18)
def _canonical_class(module: PointedModule) -> ModuleClass:
    return ModuleClass.of(_component_key(c) for c in decompose(module))


def class_in_category(cls: ModuleClass, cat) -> bool:
    for c in cls.components:
        if isinstance(c, SkewShape):
            if c.n != cat.n:
                return False
            continue
        if not _component_in_category(c, cat):
            return False
    return True


@lru_cache(maxsize=None)
def _component_in_category(c: Fingerprint, cat) -> bool:
    return in_category(c.module(), cat)


# ---------------------------------------------------------------- base change


def base_change_matrices(module: PointedModule) -> list[np.ndarray]:
    """0/1 matrices of the generators on the free module spanned by M minus 0.

    Column m has its single 1 in row act_i(m) (nothing when act_i(m) = 0).
    """
    mats = []
    for table in module.action:
        mat = np.zeros((module.size, module.size), dtype=np.int64)
        for m in module.elements():
            if table[m]:
                mat[table[m] - 1, m - 1] = 1
        mats.append(mat)
    return mats


__all__ = [
    "PointedModule",
    "Violation",
    "Grading",
    "Fingerprint",
    "ModuleClass",
    "ZERO",
    "validate",
    "module_from_shape",
    "ladder",
    "polygon",
    "is_type_alpha",
    "supported_at_origin",
    "annihilator",
    "find_grading",
    "is_gradable",
    "in_category",
    "is_skew_type",
    "is_cyclic",
    "minimal_generators",
    "submodules",
    "is_submodule",
    "restrict",
    "quotient",
    "direct_sum",
    "smash_product",
    "tensor_product",
    "tensor_grading",
    "permute_generators",
    "decompose",
    "is_indecomposable",
    "isomorphic",
    "canonical_class",
    "shape_from_module",
    "shape_class",
    "fingerprint",
    "base_change_matrices",
]
