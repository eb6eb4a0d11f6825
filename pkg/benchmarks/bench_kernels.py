"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py --repeat 3

Workloads: canonical forms of random commuting modules and of shape modules,
and submodule enumeration on shape modules. Outputs are compared before
timing so a speedup never hides a disagreement.
"""

from __future__ import annotations

import argparse
import random
import time

from skewhall import _pycore
from skewhall.modules import module_from_shape
from skewhall.shapes import enumerate_connected_shapes

try:
    from skewhall import _core
except ImportError:  # pragma: no cover - depends on the build
    _core = None


def random_module(rng: random.Random, n: int, size: int):
    """Disjoint union of shape modules, relabelled at random."""
    pool = [s for k in range(1, 6) for s in enumerate_connected_shapes(n, k)]
    parts, total = [], 0
    while total < size:
        s = rng.choice(pool)
        if total + len(s) > size:
            s = next(iter(enumerate_connected_shapes(n, 1)))
        parts.append(module_from_shape(s))
        total += len(s)
    perm = list(range(1, size + 1))
    rng.shuffle(perm)
    relabel = [0] + perm
    action = []
    for i in range(n):
        row = [0] * (size + 1)
        offset = 0
        for m in parts:
            for e in m.elements():
                t = m.action[i][e]
                row[relabel[offset + e]] = relabel[offset + t] if t else 0
            offset += m.size
        action.extend(row)
    return n, size, tuple(action)


def workloads(rng: random.Random):
    shapes = [module_from_shape(s) for k in (6, 7, 8) for s in sorted(enumerate_connected_shapes(2, k), key=lambda s: s.sort_key)]
    canon = [(m.n, m.size, m.flat) for m in shapes] + [random_module(rng, 2, 12) for _ in range(200)]
    closed = [(m.n, m.size, m.flat) for m in shapes]
    return {"canonical_form": canon, "closed_subsets": closed}


def bench(fn, inputs, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for args in inputs:
            fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main(argv=None) -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args(argv)
    if _core is None:
        print("compiled extension not built; nothing to compare")
        return
    loads = workloads(random.Random(args.seed))
    print(f"{'kernel':<16}{'inputs':>8}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, inputs in loads.items():
        py, cy = getattr(_pycore, name), getattr(_core, name)
        for a in inputs:
            if py(*a) != cy(*a):
                raise SystemExit(f"backends disagree on {name}{a}")
        t_py = bench(py, inputs, args.repeat)
        t_cy = bench(cy, inputs, args.repeat)
        print(f"{name:<16}{len(inputs):>8}{t_py:>12.4f}{t_cy:>12.4f}{t_py / t_cy:>9.1f}x")


if __name__ == "__main__":
    main()
