import random

import numpy as np
import pytest
from hypothesis import HealthCheck, settings, strategies as st

from skewhall.enumeration import _commuting_mask, candidate_maps
from skewhall.modules import PointedModule, module_from_shape
from skewhall.shapes import SkewShape, enumerate_connected_shapes

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def random_commuting_module(rng: random.Random, n: int, size: int, type_alpha=False, nilpotent=False) -> PointedModule:
    """First map uniform over candidates, each later map uniform over those commuting with it."""
    cands = candidate_maps(size, type_alpha, nilpotent)
    chosen: list[np.ndarray] = []
    for _ in range(n):
        pool = cands[_commuting_mask(cands, chosen)]
        chosen.append(pool[rng.randrange(len(pool))])
    return PointedModule(n, size, tuple(tuple(int(t) for t in f) for f in chosen))


def relabel(module: PointedModule, perm) -> PointedModule:
    """Move element m to perm[m - 1]."""
    to = [0] + list(perm)
    action = []
    for table in module.action:
        row = [0] * (module.size + 1)
        for m in module.elements():
            row[to[m]] = to[table[m]] if table[m] else 0
        action.append(tuple(row))
    return PointedModule(module.n, module.size, tuple(action))


@st.composite
def modules(draw, n=None, max_size=5, type_alpha=False, nilpotent=False):
    n = draw(st.integers(1, 2)) if n is None else n
    size = draw(st.integers(0, max_size))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_commuting_module(random.Random(seed), n, size, type_alpha, nilpotent)


@st.composite
def connected_shapes(draw, n=2, max_boxes=5):
    k = draw(st.integers(1, max_boxes))
    pool = sorted(enumerate_connected_shapes(n, k), key=lambda s: s.sort_key)
    return draw(st.sampled_from(pool))


@st.composite
def shape_modules(draw, n=2, max_boxes=5):
    return module_from_shape(draw(connected_shapes(n, max_boxes)))


@pytest.fixture
def rng():
    return random.Random(20261015)


SIX = SkewShape(2, ((0, 1), (0, 2), (1, 0), (1, 1), (2, 0), (3, 0)))
TEN = SkewShape(2, tuple(sorted([(0, 3), (0, 2), (1, 2), (2, 2), (1, 1), (2, 1), (3, 1), (2, 0), (3, 0), (4, 0)])))
TEN_FILTER = frozenset([(0, 3), (2, 2), (2, 1), (3, 1), (4, 0)])
L_SHAPE = SkewShape(2, ((0, 0), (0, 1), (1, 0)))
DOMINO = SkewShape(2, ((0, 0), (1, 0)))
