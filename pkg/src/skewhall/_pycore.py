"""Pure-Python kernels. Must stay output-identical to ``_core.pyx``.

A module is passed as ``(n, size, action)`` where ``action`` is a flat
sequence of length ``n * (size + 1)``: ``action[i * (size + 1) + m]`` is the
image of element ``m`` under generator ``i``; element 0 is the basepoint.
"""

from __future__ import annotations

MASK = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def _scramble(x: int) -> int:
    # splitmix64 finalizer
    x = (x + GOLDEN) & MASK
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK
    return x ^ (x >> 31)


def _mix(h: int, x: int) -> int:
    return _scramble(h ^ _scramble(x))


def _rank(keys: list) -> list[int]:
    """Dense ranks of keys (index 0 ignored, kept as 0)."""
    order = sorted(set(keys[1:]))
    pos = {k: r for r, k in enumerate(order)}
    return [0] + [pos[k] for k in keys[1:]]


def refine(n: int, size: int, action, colors: list[int]) -> list[int]:
    """Iterated colour refinement; never merges cells, cell order is invariant."""
    stride = size + 1
    ncolors = len(set(colors[1:]))
    while True:
        h = [0] * stride
        for m in range(1, stride):
            v = _scramble(colors[m] + 1)
            for i in range(n):
                t = action[i * stride + m]
                v = _mix(v, colors[t] + 2 if t else 1)
            h[m] = v
        for i in range(n):
            acc = [0] * stride
            for p in range(1, stride):
                t = action[i * stride + p]
                if t:
                    acc[t] = (acc[t] + _scramble(colors[p] + 7 + 131 * i)) & MASK
            for m in range(1, stride):
                h[m] = _mix(h[m], acc[m])
        new = _rank([None] + [(colors[m], h[m]) for m in range(1, stride)])
        count = len(set(new[1:]))
        colors = new
        if count == ncolors:
            return colors
        ncolors = count


def _individualize(colors: list[int], v: int) -> list[int]:
    return _rank([None] + [(colors[m], 0 if m == v else 1) for m in range(1, len(colors))])


def _relabel(n: int, size: int, action, colors: list[int]) -> tuple[int, ...]:
    stride = size + 1
    form = [0] * (n * size)
    for i in range(n):
        for m in range(1, stride):
            t = action[i * stride + m]
            form[i * size + colors[m]] = colors[t] + 1 if t else 0
    return tuple(form)


def canonical_form(n: int, size: int, action) -> tuple[int, ...]:
    """Lexicographically least relabelled action table over the search tree.

    Returns the table without the basepoint column: entry ``i * size + j`` is
    the image of element ``j + 1`` under generator ``i``.
    """
    if size == 0:
        return ()
    action = list(action)
    best: list = [None]

    def search(colors: list[int]):
        colors = refine(n, size, action, colors)
        counts: dict[int, int] = {}
        for c in colors[1:]:
            counts[c] = counts.get(c, 0) + 1
        if len(counts) == size:
            form = _relabel(n, size, action, colors)
            if best[0] is None or form < best[0]:
                best[0] = form
            return
        target = min(c for c, k in counts.items() if k > 1)
        for v in range(1, size + 1):
            if colors[v] == target:
                search(_individualize(colors, v))

    search([0] * (size + 1))
    return best[0]


def closed_subsets(n: int, size: int, action) -> list[int]:
    """Bitmasks (bit m-1 for element m) of all subsets closed under the action."""
    stride = size + 1
    up = [0] * stride
    for m in range(1, stride):
        seen = 1 << (m - 1)
        stack = [m]
        while stack:
            x = stack.pop()
            for i in range(n):
                t = action[i * stride + x]
                if t and not (seen >> (t - 1)) & 1:
                    seen |= 1 << (t - 1)
                    stack.append(t)
        up[m] = seen
    down = [0] * stride
    for m in range(1, stride):
        for p in range(1, stride):
            if (up[p] >> (m - 1)) & 1:
                down[m] |= 1 << (p - 1)
    out: list[int] = []

    def rec(idx: int, inside: int, outside: int):
        while idx <= size and ((inside | outside) >> (idx - 1)) & 1:
            idx += 1
        if idx > size:
            out.append(inside)
            return
        grown = inside | up[idx]
        if not grown & outside:
            rec(idx + 1, grown, outside)
        shrunk = outside | down[idx]
        if not shrunk & inside:
            rec(idx + 1, inside, shrunk)

    rec(1, 0, 0)
    return out
