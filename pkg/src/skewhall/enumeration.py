"""Exhaustive enumeration of module isomorphism classes at small dimension.

Action tuples are generated generator by generator, keeping only maps that
commute with those already chosen. The first generator runs over one
representative per conjugacy class, which is enough because relabelling the
elements moves any module onto one whose first map is that representative.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import product

import numpy as np

from . import _kernels
from .category import CategorySpec
from .errors import check_cap, resource_cap
from .modules import (
    ZERO,
    ModuleClass,
    PointedModule,
    _nilpotent,
    canonical_class,
    component_sets,
    is_gradable,
)
from .shapes import enumerate_connected_shapes


@lru_cache(maxsize=None)
def candidate_maps(d: int, type_alpha: bool, nilpotent: bool) -> np.ndarray:
    """All pointed self-maps of {0..d} passing the per-generator filters."""
    rows = []
    for tail in product(range(d + 1), repeat=d):
        table = (0,) + tail
        if type_alpha:
            hit = [t for t in tail if t]
            if len(hit) != len(set(hit)):
                continue
        if nilpotent and not _nilpotent(table, d):
            continue
        rows.append(table)
    return np.array(rows, dtype=np.int64).reshape(-1, d + 1)


@lru_cache(maxsize=None)
def _first_generator_reps(d: int, type_alpha: bool, nilpotent: bool) -> np.ndarray:
    cands = candidate_maps(d, type_alpha, nilpotent)
    seen = set()
    keep = []
    for k, row in enumerate(cands):
        form = _kernels.canonical_form(1, d, tuple(int(t) for t in row))
        if form not in seen:
            seen.add(form)
            keep.append(k)
    return cands[keep]


def _commuting_mask(cands: np.ndarray, chosen: list[np.ndarray]) -> np.ndarray:
    mask = np.ones(len(cands), dtype=bool)
    for f in chosen:
        mask &= (cands[:, f] == f[cands]).all(axis=1)
    return mask


def _classes_from_reps(n: int, d: int, cat: CategorySpec, indecomposable: bool, rep_ids: list[int], cap: int) -> set[ModuleClass]:
    cands = candidate_maps(d, cat.require_type_alpha, cat.origin_support)
    reps = _first_generator_reps(d, cat.require_type_alpha, cat.origin_support)
    found: set[ModuleClass] = set()
    visited = 0

    def extend(chosen: list[np.ndarray]):
        nonlocal visited
        if len(chosen) == n:
            visited += 1
            check_cap(visited, cap, f"action tuples (n={n}, d={d})")
            module = PointedModule(n, d, tuple(tuple(int(t) for t in f) for f in chosen))
            if indecomposable and len(component_sets(module)) != 1:
                return
            if cat.require_gradable and not is_gradable(module):
                return
            found.add(canonical_class(module))
            return
        for g in cands[_commuting_mask(cands, chosen)]:
            extend(chosen + [g])

    for r in rep_ids:
        extend([reps[r]])
    return found


def enumerate_modules(
    n: int,
    d: int,
    cat: CategorySpec | None = None,
    indecomposable: bool = False,
    cap: int | None = None,
    jobs: int = 1,
) -> list[ModuleClass]:
    """Isomorphism classes of dimension ``d`` modules satisfying ``cat``'s predicates.

    Returned sorted; the order does not depend on ``jobs``.
    """
    cat = cat or CategorySpec(n)
    if cat.n != n:
        raise ValueError("category and n disagree")
    cap = resource_cap(cap)
    if d == 0:
        return [] if indecomposable else [ZERO]
    check_cap((d + 1) ** d, cap, f"candidate maps (d={d})")
    reps = _first_generator_reps(d, cat.require_type_alpha, cat.origin_support)
    ids = list(range(len(reps)))
    if jobs > 1 and len(ids) > 1:
        chunks = [ids[k::jobs] for k in range(jobs)]
        found: set[ModuleClass] = set()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_classes_from_reps, n, d, cat, indecomposable, chunk, cap) for chunk in chunks if chunk]
            for fut in futures:
                found |= fut.result()
    else:
        found = _classes_from_reps(n, d, cat, indecomposable, ids, cap)
    return sorted(found)


def skew_classes(n: int, d: int, cap: int | None = None) -> list[ModuleClass]:
    """All multisets of connected n-dimensional shapes with ``d`` boxes in total."""
    if d == 0:
        return [ZERO]
    pool = sorted((s for k in range(1, d + 1) for s in enumerate_connected_shapes(n, k, cap)), key=lambda s: s.sort_key)
    cap = resource_cap(cap)
    out: list[ModuleClass] = []

    def rec(start: int, remaining: int, picked: list):
        if remaining == 0:
            out.append(ModuleClass.of(picked))
            check_cap(len(out), cap, f"skew classes (n={n}, d={d})")
            return
        for k in range(start, len(pool)):
            s = pool[k]
            if len(s) <= remaining:
                rec(k, remaining - len(s), picked + [s])

    rec(0, d, [])
    return sorted(out)


def classes_of_degree(cat: CategorySpec, d: int, cap: int | None = None, jobs: int = 1) -> list[ModuleClass]:
    if cat.is_skew:
        return skew_classes(cat.n, d, cap)
    return enumerate_modules(cat.n, d, cat, cap=cap, jobs=jobs)
