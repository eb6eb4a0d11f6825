"""Exhaustive verification suites behind ``skewhall verify``.

Each returns an :class:`~skewhall.hall.AxiomReport` so the CLI can print or
serialise them uniformly.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product as cartesian

from .category import CategorySpec
from .enumeration import enumerate_modules
from .hall import (
    AxiomReport,
    HallElement,
    antipode,
    primitive_part,
    basis,
    coproduct,
    counit,
    delta,
    dual_coproduct,
    product,
    verify_axioms,
)
from .modules import ZERO, ModuleClass
from .shapes import SkewShape, enumerate_connected_shapes, is_convex, normalize
from .tableaux import count_standard_via_chains, enumerate_standard


def check_bialgebra(cat: CategorySpec, bound: int, jobs: int = 1) -> AxiomReport:
    return verify_axioms(cat, bound, jobs)


def check_classification(n: int, bound: int, jobs: int = 1) -> AxiomReport:
    """Indecomposable skew-type modules versus connected shapes, degree by degree."""
    cat = CategorySpec.skew(n)
    report = AxiomReport(f"classification {cat}", bound)
    for d in range(1, bound + 1):
        found = set(enumerate_modules(n, d, cat, indecomposable=True, jobs=jobs))
        expected = {ModuleClass.of([s]) for s in enumerate_connected_shapes(n, d)}
        report.basis_sizes[d] = len(found)
        extra = sorted(found - expected)
        missing = sorted(expected - found)
        witness = f"d={d}: extra {[str(c) for c in extra[:3]]}, missing {[str(c) for c in missing[:3]]}"
        report.record("modules = connected shapes", found == expected, witness)
    return report


def check_antipode(cat: CategorySpec, bound: int, jobs: int = 1) -> AxiomReport:
    """m∘(S⊗id)∘Δ = m∘(id⊗S)∘Δ = unit∘counit on every basis element."""
    report = AxiomReport(f"antipode {cat}", bound)
    by_degree = basis(cat, bound, jobs)
    report.basis_sizes = {d: len(v) for d, v in by_degree.items()}
    for d, classes in by_degree.items():
        for c in classes:
            expected = counit(delta(c)) * delta(ZERO)
            left = HallElement()
            right = HallElement()
            for (a, b), v in coproduct(delta(c)).items():
                left = left + v * product(antipode(delta(a), cat), delta(b), cat)
                right = right + v * product(delta(a), antipode(delta(b), cat), cat)
            report.record("S * id", left == expected, str(c))
            report.record("id * S", right == expected, str(c))
            if c.is_indecomposable:
                report.record("S(primitive) = -primitive", antipode(delta(c), cat) == -delta(c), str(c))
    return report


def check_pairing(cat: CategorySpec, bound: int, jobs: int = 1) -> AxiomReport:
    """⟨Δx_M, δ_A ⊗ δ_B⟩ = ⟨x_M, δ_A ⋆ δ_B⟩ for indecomposable M, dim A + dim B <= bound."""
    report = AxiomReport(f"Hopf pairing {cat}", bound)
    by_degree = basis(cat, bound, jobs)
    report.basis_sizes = {d: len(v) for d, v in by_degree.items()}
    indecomposables = [c for cs in by_degree.values() for c in cs if c.is_indecomposable]
    duals = {m: dual_coproduct(m, cat.n) for m in indecomposables}
    everything = [c for cs in by_degree.values() for c in cs]
    checked = 0
    for a in everything:
        for b in everything:
            if a.dim + b.dim > bound:
                continue
            ab = product(delta(a), delta(b), cat)
            for m in indecomposables:
                checked += 1
                report.record("pairing", duals[m][(a, b)] == ab[m], f"M={m}, A={a}, B={b}")
    report.stats["pairs checked"] = checked
    return report


def plane_shapes(max_boxes: int, window: int = 4) -> list[SkewShape]:
    """Every connected plane shape up to ``max_boxes``, plus every convex subset
    of a ``window`` x ``window`` square of that size (this adds the disconnected
    ones that fit), deduplicated up to translation."""
    found: set[SkewShape] = set()
    for k in range(max_boxes + 1):
        found |= set(enumerate_connected_shapes(2, k))
        cells = [(x, y) for x in range(window) for y in range(window)]
        for sub in combinations(cells, k):
            if is_convex(sub):
                found.add(SkewShape(2, normalize(2, sub)))
    return sorted(found, key=lambda s: s.sort_key)


def check_tableaux(max_boxes: int, window: int = 4) -> AxiomReport:
    report = AxiomReport("standard tableaux vs submodule flags", max_boxes)
    shapes = plane_shapes(max_boxes, window)
    report.stats["shapes"] = len(shapes)
    for s in shapes:
        a, b = len(enumerate_standard(s)), count_standard_via_chains(s)
        report.record("tableaux = flags", a == b, f"{s.literal()}: {a} tableaux, {b} flags")
    return report


def _partitions(d: int, largest: int | None = None):
    largest = d if largest is None else largest
    if d == 0:
        yield ()
        return
    for k in range(min(d, largest), 0, -1):
        for rest in _partitions(d - k, k):
            yield (k,) + rest


def exact_rank(rows: list[list[Fraction]]) -> int:
    """Rank over Q by fraction-exact Gaussian elimination."""
    rows = [list(r) for r in rows if any(r)]
    rank = 0
    width = len(rows[0]) if rows else 0
    for col in range(width):
        pivot = next((k for k in range(rank, len(rows)) if rows[k][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for k in range(len(rows)):
            if k != rank and rows[k][col]:
                f = rows[k][col] / rows[rank][col]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[rank])]
        rank += 1
    return rank


def check_commutative_ladders(bound: int) -> AxiomReport:
    """n = 1 skew algebra: commutative, connected classes primitive, ladder monomials independent."""
    cat = CategorySpec.skew(1)
    report = AxiomReport(f"ladder algebra {cat}", bound)
    by_degree = basis(cat, bound)
    report.basis_sizes = {d: len(v) for d, v in by_degree.items()}
    ladders = {}
    for d, cs in by_degree.items():
        connected = [c for c in cs if c.is_indecomposable]
        report.record("one connected class per degree", d == 0 or len(connected) == 1, f"d={d}: {len(connected)}")
        if connected:
            ladders[d] = connected[0]
        for c in cs:
            if not c.is_zero:
                primitive = not primitive_part(delta(c))
                report.record("primitive iff connected", primitive == c.is_indecomposable, str(c))
    for a, b in cartesian(range(1, bound + 1), repeat=2):
        if a + b <= bound:
            x, y = delta(ladders[a]), delta(ladders[b])
            report.record("commutative", product(x, y, cat) == product(y, x, cat), f"ladders {a}, {b}")
    for d in range(1, bound + 1):
        rows = []
        for parts in _partitions(d):
            elem = delta(ZERO)
            for k in parts:
                elem = product(elem, delta(ladders[k]), cat)
            rows.append([elem[c] for c in by_degree[d]])
        report.record("ladder monomials independent", exact_rank(rows) == len(rows), f"d={d}")
        report.record("ladder monomials span", len(rows) == len(by_degree[d]), f"d={d}")
    return report
