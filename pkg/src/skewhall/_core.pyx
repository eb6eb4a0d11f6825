# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; mirrors ``_pycore`` exactly (same hashes, same search order)."""

from libc.stdlib cimport malloc, free
from libc.stdint cimport uint64_t

from skewhall import _pycore

cdef enum:
    MAXSIZE = 128

cdef uint64_t GOLDEN = 0x9E3779B97F4A7C15ULL


cdef inline uint64_t scramble(uint64_t x) nogil:
    x = x + GOLDEN
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL
    return x ^ (x >> 31)


cdef inline uint64_t mix(uint64_t h, uint64_t x) nogil:
    return scramble(h ^ scramble(x))


cdef int rank_pairs(int size, int *major, uint64_t *minor, int *out) nogil:
    """Dense-rank elements 1..size by (major, minor); returns the cell count."""
    cdef int order[MAXSIZE + 1]
    cdef int i, j, a, b, r
    for i in range(size):
        order[i] = i + 1
    for i in range(1, size):
        a = order[i]
        j = i - 1
        while j >= 0:
            b = order[j]
            if major[b] > major[a] or (major[b] == major[a] and minor[b] > minor[a]):
                order[j + 1] = b
                j -= 1
            else:
                break
        order[j + 1] = a
    r = 0
    out[order[0]] = 0
    for i in range(1, size):
        a = order[i]
        b = order[i - 1]
        if major[a] != major[b] or minor[a] != minor[b]:
            r += 1
        out[a] = r
    return r + 1


cdef int refine(int n, int size, int *action, int *colors) nogil:
    """In-place refinement of ``colors`` (length size+1); returns cell count."""
    cdef int stride = size + 1
    cdef uint64_t h[MAXSIZE + 1]
    cdef uint64_t acc[MAXSIZE + 1]
    cdef int new[MAXSIZE + 1]
    cdef int m, i, p, t, ncolors, count
    cdef uint64_t v
    # initial cell count
    ncolors = 0
    for m in range(1, stride):
        if colors[m] + 1 > ncolors:
            ncolors = colors[m] + 1
    while True:
        for m in range(1, stride):
            v = scramble(<uint64_t>(colors[m] + 1))
            for i in range(n):
                t = action[i * stride + m]
                if t:
                    v = mix(v, <uint64_t>(colors[t] + 2))
                else:
                    v = mix(v, 1)
            h[m] = v
        for i in range(n):
            for m in range(stride):
                acc[m] = 0
            for p in range(1, stride):
                t = action[i * stride + p]
                if t:
                    acc[t] += scramble(<uint64_t>(colors[p] + 7 + 131 * i))
            for m in range(1, stride):
                h[m] = mix(h[m], acc[m])
        count = rank_pairs(size, colors, h, new)
        for m in range(1, stride):
            colors[m] = new[m]
        if count == ncolors:
            return count
        ncolors = count


cdef void individualize(int size, int *colors, int v, int *out) nogil:
    cdef uint64_t flag[MAXSIZE + 1]
    cdef int m
    for m in range(1, size + 1):
        flag[m] = 0 if m == v else 1
    rank_pairs(size, colors, flag, out)


cdef class _Search:
    cdef int n, size
    cdef int *action
    cdef int *best
    cdef int *form
    cdef bint have

    cdef void leaf(self, int *colors):
        cdef int i, m, t, k, j
        cdef int stride = self.size + 1
        cdef int total = self.n * self.size
        for i in range(self.n):
            for m in range(1, stride):
                t = self.action[i * stride + m]
                self.form[i * self.size + colors[m]] = colors[t] + 1 if t else 0
        if not self.have:
            for k in range(self.n * self.size):
                self.best[k] = self.form[k]
            self.have = True
            return
        for k in range(total):
            if self.form[k] != self.best[k]:
                if self.form[k] < self.best[k]:
                    for j in range(k, total):
                        self.best[j] = self.form[j]
                return

    cdef void search(self, int *colors):
        cdef int local[MAXSIZE + 1]
        cdef int child[MAXSIZE + 1]
        cdef int counts[MAXSIZE + 1]
        cdef int m, c, target, cells
        for m in range(self.size + 1):
            local[m] = colors[m]
        cells = refine(self.n, self.size, self.action, local)
        if cells == self.size:
            self.leaf(local)
            return
        for c in range(self.size):
            counts[c] = 0
        for m in range(1, self.size + 1):
            counts[local[m]] += 1
        target = -1
        for c in range(self.size):
            if counts[c] > 1:
                target = c
                break
        for m in range(1, self.size + 1):
            if local[m] == target:
                individualize(self.size, local, m, child)
                child[0] = 0
                self.search(child)


def canonical_form(int n, int size, action):
    if size == 0:
        return ()
    if size > MAXSIZE:
        return _pycore.canonical_form(n, size, action)
    cdef int total = n * (size + 1)
    cdef _Search s = _Search()
    cdef int colors[MAXSIZE + 1]
    cdef int k
    s.n = n
    s.size = size
    s.have = False
    s.action = <int *> malloc(total * sizeof(int))
    s.best = <int *> malloc(n * size * sizeof(int))
    s.form = <int *> malloc(n * size * sizeof(int))
    try:
        for k in range(total):
            s.action[k] = action[k]
        for k in range(size + 1):
            colors[k] = 0
        s.search(colors)
        return tuple([s.best[k] for k in range(n * size)])
    finally:
        free(s.action)
        free(s.best)
        free(s.form)


cdef void _closed_rec(int size, unsigned long long *up, unsigned long long *down,
                      int idx, unsigned long long inside, unsigned long long outside, list out):
    cdef unsigned long long grown, shrunk
    while idx <= size and ((inside | outside) >> (idx - 1)) & 1ULL:
        idx += 1
    if idx > size:
        out.append(inside)
        return
    grown = inside | up[idx]
    if not (grown & outside):
        _closed_rec(size, up, down, idx + 1, grown, outside, out)
    shrunk = outside | down[idx]
    if not (shrunk & inside):
        _closed_rec(size, up, down, idx + 1, inside, shrunk, out)


def closed_subsets(int n, int size, action):
    if size > 63:
        return _pycore.closed_subsets(n, size, action)
    cdef int stride = size + 1
    cdef unsigned long long up[64]
    cdef unsigned long long down[64]
    cdef int stack[64]
    cdef int act[8 * 64]
    cdef int m, p, i, t, x, top
    cdef unsigned long long seen
    if n > 8:
        return _pycore.closed_subsets(n, size, action)
    for i in range(n * stride):
        act[i] = action[i]
    for m in range(1, stride):
        seen = 1ULL << (m - 1)
        top = 0
        stack[top] = m
        top += 1
        while top:
            top -= 1
            x = stack[top]
            for i in range(n):
                t = act[i * stride + x]
                if t and not ((seen >> (t - 1)) & 1ULL):
                    seen |= 1ULL << (t - 1)
                    stack[top] = t
                    top += 1
        up[m] = seen
    for m in range(1, stride):
        down[m] = 0
        for p in range(1, stride):
            if (up[p] >> (m - 1)) & 1ULL:
                down[m] |= 1ULL << (p - 1)
    out = []
    _closed_rec(size, up, down, 1, 0, 0, out)
    return out
