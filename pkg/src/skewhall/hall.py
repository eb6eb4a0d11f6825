"""Hall algebra products, coproducts, brackets, antipode and Hopf duals.

Elements are finitely supported maps from isomorphism classes to exact
rationals. The product of two delta functions counts submodules:
``δ_M ⋆ δ_N = Σ_R P^R_{M,N} δ_R`` with ``P^R_{M,N}`` the number of
submodules L of a fixed R with L ≅ N and R/L ≅ M. Restricting to a
subcategory (type α, gradable, origin support) keeps only classes inside it;
sub-objects and quotients of a member are members, so this is the quotient
(or, for support, the subalgebra) on the nose.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product as cartesian

from .category import CategorySpec
from .enumeration import classes_of_degree
from .errors import ClassOutsideCategory
from .modules import (
    ZERO,
    ModuleClass,
    PointedModule,
    canonical_class,
    class_in_category,
    component_sort_key,
    permute_generators,
    quotient_mask,
    submodule_masks,
)
from .shapes import SkewShape, components_of_points, filters_of, is_convex, normalize, permute

__all__ = [
    "CategorySpec",
    "HallElement",
    "TensorElement",
    "DualElement",
    "AxiomReport",
    "delta",
    "structure_constant",
    "extensions",
    "product",
    "coproduct",
    "counit",
    "tensor_multiply",
    "bracket",
    "antipode",
    "dual_coproduct",
    "dual_coproduct_monomial",
    "pairing",
    "tensor_pairing",
    "sn_act",
    "verify_axioms",
    "is_commutative",
    "primitive_part",
    "basis",
]


class _Combination:
    """Sparse Q-linear combination; zero coefficients are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for key, coeff in items:
                coeff = Fraction(coeff)
                if coeff:
                    self.terms[key] = self.terms.get(key, 0) + coeff
            self.terms = {k: v for k, v in self.terms.items() if v}

    @staticmethod
    def _key_order(key):
        raise NotImplementedError

    def __getitem__(self, key) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator:
        return iter(sorted(self.terms, key=self._key_order))

    def items(self):
        return [(k, self.terms[k]) for k in self]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        return type(self) is type(other) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _combine(self, other, sign: int):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + sign * v
        return type(self)(out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return type(self)({k: -v for k, v in self.terms.items()})

    def __rmul__(self, scalar):
        return type(self)({k: scalar * v for k, v in self.terms.items()})

    def __repr__(self) -> str:
        if not self.terms:
            return f"{type(self).__name__}(0)"
        body = " + ".join(f"{v}·{self._show(k)}" for k, v in self.items())
        return f"{type(self).__name__}({body})"

    @staticmethod
    def _show(key) -> str:
        return str(key)


class HallElement(_Combination):
    __slots__ = ()

    @staticmethod
    def _key_order(key: ModuleClass):
        return key.sort_key

    @staticmethod
    def _show(key) -> str:
        return f"δ[{key}]"

    def degrees(self) -> set[int]:
        return {k.dim for k in self.terms}


class TensorElement(_Combination):
    """Keys are ordered pairs of classes (first leg, second leg)."""

    __slots__ = ()

    @staticmethod
    def _key_order(key):
        return (key[0].sort_key, key[1].sort_key)

    @staticmethod
    def _show(key) -> str:
        return f"[{key[0]}]⊗[{key[1]}]"

    def swap(self) -> TensorElement:
        return TensorElement({(b, a): v for (a, b), v in self.terms.items()})


class DualElement(_Combination):
    """Polynomial in indecomposable-class variables; a monomial is a ModuleClass."""

    __slots__ = ()

    @staticmethod
    def _key_order(key: ModuleClass):
        return key.sort_key

    @staticmethod
    def _show(key) -> str:
        return "1" if key.is_zero else "·".join(f"x[{ModuleClass((c,))}]" for c in key.components)

    def __mul__(self, other: DualElement) -> DualElement:
        out: dict = {}
        for a, u in self.terms.items():
            for b, v in other.terms.items():
                k = a + b
                out[k] = out.get(k, 0) + u * v
        return DualElement(out)


def delta(cls: ModuleClass) -> HallElement:
    return HallElement({cls: 1})


def _require(cat: CategorySpec, *classes: ModuleClass) -> None:
    for c in classes:
        if not class_in_category(c, cat):
            raise ClassOutsideCategory(f"class {c} is not in {cat}")


# ---------------------------------------------------------------- structure constants


def _split_counts(module: PointedModule) -> Counter:
    """(class of quotient, class of submodule) over all submodules of ``module``."""
    out: Counter = Counter()
    for mask in submodule_masks(module):
        sub, quo = quotient_mask(module, mask)
        out[(canonical_class(quo), canonical_class(sub))] += 1
    return out


def structure_constant(r: ModuleClass, m: ModuleClass, n: ModuleClass, cat: CategorySpec) -> int:
    """Number of submodules L of a representative of ``r`` with L ≅ n, r/L ≅ m.

    Always counted directly on a module representative; the fast paths in
    :func:`extensions` are checked against this.
    """
    _require(cat, r, m, n)
    if r.dim != m.dim + n.dim:
        return 0
    return _split_counts(r.representative(cat.n))[(m, n)]


@lru_cache(maxsize=None)
def _shape_splits(shape: SkewShape) -> tuple[tuple[tuple, tuple], ...]:
    """For each filter F of a shape: (components of S \\ F, components of F)."""
    out = []
    for f in filters_of(shape):
        rest = shape.box_set - f
        out.append((components_of_points(shape.n, rest), components_of_points(shape.n, f)))
    return tuple(out)


def _merge(a: tuple, b: tuple) -> tuple:
    return tuple(sorted(a + b, key=component_sort_key))


@lru_cache(maxsize=None)
def _skew_split_counts(r: ModuleClass) -> Counter:
    """Shape-level version of :func:`_split_counts` for a multiset of shapes.

    A submodule of a direct sum is the direct sum of its intersections with
    the summands, and for one shape the submodules are its filters.
    """
    acc: Counter = Counter({((), ()): 1})
    for comp in r.components:
        nxt: Counter = Counter()
        for (q, s), c in acc.items():
            for q2, s2 in _shape_splits(comp):
                nxt[(_merge(q, q2), _merge(s, s2))] += c
        acc = nxt
    return Counter({(ModuleClass(q), ModuleClass(s)): c for (q, s), c in acc.items()})


def _up_closed(part: set, union: set, n: int) -> bool:
    for b in part:
        for i in range(n):
            up = b[:i] + (b[i] + 1,) + b[i + 1 :]
            if up in union and up not in part:
                return False
    return True


def _stackings(s: SkewShape, t: SkewShape) -> set[tuple]:
    """Connected shapes made of a translate of ``s`` with a translate of ``t`` on top.

    A connected union needs some box of the t-copy adjacent to a box of the
    s-copy, so only offsets s - t ± e_i are tried.
    """
    n = s.n
    sb = s.box_set
    offsets = set()
    for a in s.boxes:
        for b in t.boxes:
            base = tuple(x - y for x, y in zip(a, b))
            for i in range(n):
                for step in (-1, 1):
                    offsets.add(base[:i] + (base[i] + step,) + base[i + 1 :])
    found = set()
    for w in offsets:
        moved = {tuple(x + y for x, y in zip(b, w)) for b in t.boxes}
        if moved & sb:
            continue
        union = sb | moved
        if not _up_closed(moved, union, n) or not is_convex(union):
            continue
        found.add(normalize(n, union))
    return found


@lru_cache(maxsize=None)
def _skew_pair_extensions(s: SkewShape, t: SkewShape) -> dict[ModuleClass, int]:
    qs, ss = ModuleClass((s,)), ModuleClass((t,))
    out = {}
    for boxes in _stackings(s, t):
        r = ModuleClass((SkewShape(s.n, boxes),))
        out[r] = _skew_split_counts(r)[(qs, ss)]
    split = ModuleClass.of([s, t])
    out[split] = _skew_split_counts(split)[(qs, ss)]
    return out


@lru_cache(maxsize=None)
def _degree_table(cat: CategorySpec, d: int) -> dict[tuple[ModuleClass, ModuleClass], dict[ModuleClass, int]]:
    """(quotient class, sub class) -> {R: P^R} for every R of dimension d in cat."""
    table: dict = {}
    for r in classes_of_degree(cat, d):
        counts = _skew_split_counts(r) if cat.is_skew else _split_counts(r.representative(cat.n))
        for key, c in counts.items():
            table.setdefault(key, {})[r] = c
    return table


def extensions(m: ModuleClass, n: ModuleClass, cat: CategorySpec) -> dict[ModuleClass, int]:
    """All classes R with P^R_{m,n} > 0, mapped to that count."""
    _require(cat, m, n)
    return dict(_extensions(m, n, cat))


@lru_cache(maxsize=None)
def _extensions(m: ModuleClass, n: ModuleClass, cat: CategorySpec) -> tuple:
    if m.is_zero:
        return ((n, 1),)
    if n.is_zero:
        return ((m, 1),)
    if cat.is_skew and m.is_indecomposable and n.is_indecomposable:
        found = _skew_pair_extensions(m.components[0], n.components[0])
    else:
        found = _degree_table(cat, m.dim + n.dim).get((m, n), {})
    return tuple(sorted(((r, c) for r, c in found.items() if c), key=lambda rc: rc[0].sort_key))


def product(f: HallElement, g: HallElement, cat: CategorySpec) -> HallElement:
    out: dict = {}
    for m, u in f.terms.items():
        for n, v in g.terms.items():
            for r, c in extensions(m, n, cat).items():
                out[r] = out.get(r, 0) + u * v * c
    return HallElement(out)


def bracket(s: ModuleClass, t: ModuleClass, cat: CategorySpec | None = None) -> HallElement:
    """Commutator δ_s ⋆ δ_t - δ_t ⋆ δ_s (defaults to the skew category)."""
    if cat is None:
        n = _class_n(s) or _class_n(t)
        cat = CategorySpec.skew(n)
    ds, dt = delta(s), delta(t)
    return product(ds, dt, cat) - product(dt, ds, cat)


def _class_n(cls: ModuleClass) -> int | None:
    for c in cls.components:
        return c.n
    return None


# ---------------------------------------------------------------- coproduct


def _splits(cls: ModuleClass) -> Iterator[tuple[ModuleClass, ModuleClass]]:
    """Each ordered pair (A, B) of classes with A ⊕ B ≅ cls, once."""
    counts = cls.multiplicities()
    comps = sorted(counts, key=component_sort_key)
    for take in cartesian(*(range(counts[c] + 1) for c in comps)):
        left, right = [], []
        for c, k in zip(comps, take):
            left += [c] * k
            right += [c] * (counts[c] - k)
        yield ModuleClass.of(left), ModuleClass.of(right)


def coproduct(f: HallElement) -> TensorElement:
    """Δ(f)(A, B) = f(A ⊕ B)."""
    out: dict = {}
    for r, v in f.terms.items():
        for pair in _splits(r):
            out[pair] = out.get(pair, 0) + v
    return TensorElement(out)


def counit(f: HallElement) -> Fraction:
    return f[ZERO]


def tensor_multiply(x: TensorElement, y: TensorElement, cat: CategorySpec) -> TensorElement:
    """Product in H ⊗ H, leg by leg."""
    out: dict = {}
    for (a, b), u in x.terms.items():
        for (c, d), v in y.terms.items():
            left = product(delta(a), delta(c), cat)
            right = product(delta(b), delta(d), cat)
            for p, s in left.terms.items():
                for q, t in right.terms.items():
                    out[(p, q)] = out.get((p, q), 0) + u * v * s * t
    return TensorElement(out)


# ---------------------------------------------------------------- antipode


def antipode(f: HallElement, cat: CategorySpec) -> HallElement:
    """Graded connected antipode: S(x) = -x - Σ S(x') ⋆ x'' over the reduced coproduct."""
    out = HallElement()
    for r, v in f.terms.items():
        out = out + v * _antipode_delta(r, cat)
    return out


@lru_cache(maxsize=None)
def _antipode_delta(r: ModuleClass, cat: CategorySpec) -> HallElement:
    if r.is_zero:
        return delta(ZERO)
    acc = -delta(r)
    for a, b in _splits(r):
        if a.is_zero or b.is_zero:
            continue
        acc = acc - product(_antipode_delta(a, cat), delta(b), cat)
    return acc


# ---------------------------------------------------------------- Hopf dual


def dual_coproduct(m: ModuleClass, n: int | None = None) -> TensorElement:
    """Δ(x_M) = Σ_{N ⊆ M} x_{M/N} ⊗ x_N over submodules of a representative."""
    n = n or _class_n(m)
    if n is None:
        return TensorElement({(ZERO, ZERO): 1})
    return TensorElement(_split_counts(m.representative(n)))


def dual_coproduct_monomial(x: ModuleClass, n: int | None = None) -> TensorElement:
    """Multiplicative extension of :func:`dual_coproduct` to a monomial."""
    out = TensorElement({(ZERO, ZERO): 1})
    for comp in x.components:
        piece = dual_coproduct(ModuleClass((comp,)), n)
        acc: dict = {}
        for (a, b), u in out.terms.items():
            for (c, d), v in piece.terms.items():
                key = (a + c, b + d)
                acc[key] = acc.get(key, 0) + u * v
        out = TensorElement(acc)
    return out


def pairing(x: DualElement, f: HallElement) -> Fraction:
    """⟨x_M, δ_N⟩ = 1 if M ≅ N else 0, extended bilinearly."""
    return sum((v * f[k] for k, v in x.terms.items()), Fraction(0))


def tensor_pairing(x: TensorElement, y: TensorElement) -> Fraction:
    return sum((v * y[k] for k, v in x.terms.items()), Fraction(0))


# ---------------------------------------------------------------- symmetric group


def _act_on_class(sigma, cls: ModuleClass) -> ModuleClass:
    comps = []
    for c in cls.components:
        if isinstance(c, SkewShape):
            comps.append(permute(c, sigma))
        else:
            comps.extend(canonical_class(permute_generators(c.module(), sigma)).components)
    return ModuleClass.of(comps)


def sn_act(sigma, f: HallElement) -> HallElement:
    """Relabel generators by ``sigma`` (0-based) in every class."""
    return HallElement({_act_on_class(sigma, k): v for k, v in f.terms.items()})


# ---------------------------------------------------------------- axioms


@dataclass
class AxiomReport:
    category: str
    degree_bound: int
    results: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, str] = field(default_factory=dict)
    basis_sizes: dict[int, int] = field(default_factory=dict)
    stats: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.results.values())

    def record(self, name: str, ok: bool, witness: str = "") -> None:
        if name not in self.results:
            self.results[name] = True
        if not ok and self.results[name]:
            self.results[name] = False
            self.witnesses[name] = witness

    def to_dict(self) -> dict:
        return {
            "title": self.category,
            "bound": self.degree_bound,
            "passed": self.passed,
            "results": dict(self.results),
            "witnesses": dict(self.witnesses),
            "basis_sizes": {str(k): v for k, v in sorted(self.basis_sizes.items())},
            "stats": dict(self.stats),
        }

    def summary(self) -> str:
        lines = [f"{self.category}, bound {self.degree_bound}"]
        if self.basis_sizes:
            lines.append("basis sizes: " + ", ".join(f"{d}:{k}" for d, k in sorted(self.basis_sizes.items())))
        for key, value in self.stats.items():
            lines.append(f"{key}: {value}")
        for name, ok in self.results.items():
            line = f"  {'PASS' if ok else 'FAIL'}  {name}"
            if not ok:
                line += f"  -- {self.witnesses[name]}"
            lines.append(line)
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


def _triple_coproduct(f: HallElement, left: bool) -> dict:
    out: dict = {}
    for (a, b), v in coproduct(f).terms.items():
        if left:
            for (p, q), u in coproduct(delta(a)).terms.items():
                out[(p, q, b)] = out.get((p, q, b), 0) + u * v
        else:
            for (p, q), u in coproduct(delta(b)).terms.items():
                out[(a, p, q)] = out.get((a, p, q), 0) + u * v
    return {k: v for k, v in out.items() if v}


def basis(cat: CategorySpec, degree_bound: int, jobs: int = 1) -> dict[int, list[ModuleClass]]:
    return {d: classes_of_degree(cat, d, jobs=jobs) for d in range(degree_bound + 1)}


def verify_axioms(cat: CategorySpec, degree_bound: int, jobs: int = 1) -> AxiomReport:
    """Check the graded connected cocommutative bialgebra axioms on the delta basis.

    Products are only formed when the total degree stays within the bound.
    """
    report = AxiomReport(f"bialgebra axioms {cat}", degree_bound)
    by_degree = basis(cat, degree_bound, jobs)
    report.basis_sizes = {d: len(v) for d, v in by_degree.items()}
    everything = [c for d in sorted(by_degree) for c in by_degree[d]]
    positive = [c for c in everything if not c.is_zero]
    unit = delta(ZERO)

    report.record("connected", by_degree[0] == [ZERO], f"degree 0 basis {by_degree[0]}")
    for b in everything:
        db = delta(b)
        report.record("unit", product(unit, db, cat) == db == product(db, unit, cat), str(b))
        cop = coproduct(db)
        report.record("cocommutativity", cop.swap() == cop, str(b))
        left = HallElement({q: v for (p, q), v in cop.terms.items() if p.is_zero})
        right = HallElement({p: v for (p, q), v in cop.terms.items() if q.is_zero})
        report.record("counit", left == db == right, str(b))
        report.record("coassociativity", _triple_coproduct(db, True) == _triple_coproduct(db, False), str(b))

    for a in positive:
        for b in positive:
            if a.dim + b.dim > degree_bound:
                continue
            ab = product(delta(a), delta(b), cat)
            report.record("grading", ab.degrees() <= {a.dim + b.dim}, f"{a} * {b}")
            report.record("closure", all(class_in_category(r, cat) for r in ab.terms), f"{a} * {b}")
            lhs = coproduct(ab)
            rhs = tensor_multiply(coproduct(delta(a)), coproduct(delta(b)), cat)
            report.record("compatibility", lhs == rhs, f"Δ({a} * {b})")
            for c in positive:
                if a.dim + b.dim + c.dim > degree_bound:
                    continue
                dc = delta(c)
                report.record(
                    "associativity",
                    product(ab, dc, cat) == product(delta(a), product(delta(b), dc, cat), cat),
                    f"({a}, {b}, {c})",
                )
    return report


def is_commutative(cat: CategorySpec, degree_bound: int) -> bool:
    classes = [c for d, cs in basis(cat, degree_bound).items() if d for c in cs]
    for a in classes:
        for b in classes:
            if a.dim + b.dim <= degree_bound and product(delta(a), delta(b), cat) != product(delta(b), delta(a), cat):
                return False
    return True


def primitive_part(f: HallElement) -> TensorElement:
    """Δf - f⊗1 - 1⊗f; zero exactly when f is primitive."""
    return coproduct(f) - TensorElement({(k, ZERO): v for k, v in f.terms.items()}) - TensorElement(
        {(ZERO, k): v for k, v in f.terms.items()}
    )


def classes(cat: CategorySpec, degree: int) -> Iterable[ModuleClass]:
    return classes_of_degree(cat, degree)
