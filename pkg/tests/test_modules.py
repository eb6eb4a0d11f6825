import random
from itertools import permutations

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import DOMINO, L_SHAPE, SIX, TEN, TEN_FILTER, modules, random_commuting_module, relabel, shape_modules
from skewhall.errors import DimensionMismatch, NotASubmodule, PreconditionFailed
from skewhall.modules import (
    ZERO,
    Fingerprint,
    ModuleClass,
    PointedModule,
    annihilator,
    base_change_matrices,
    canonical_class,
    decompose,
    direct_sum,
    find_grading,
    generated_submodule,
    is_cyclic,
    is_gradable,
    is_indecomposable,
    is_submodule,
    is_type_alpha,
    isomorphic,
    ladder,
    minimal_generators,
    module_from_shape,
    polygon,
    quotient,
    restrict,
    shape_class,
    shape_from_module,
    smash_product,
    submodules,
    supported_at_origin,
    tensor_product,
    validate,
)
from skewhall.shapes import SkewShape, canonicalize, components_of_points, enumerate_connected_shapes, filters_of, interval


def t_module(table):
    """n = 1 module from the images of 1..size."""
    return PointedModule(1, len(table), ((0,) + tuple(table),))


class TestValidate:
    def test_zero(self):
        assert validate(PointedModule.zero(2)) is None

    def test_annihilated_box(self):
        assert validate(PointedModule(2, 1, ((0, 0), (0, 0)))) is None

    def test_non_commuting(self):
        # x1 x2 (1) = x1 (1) = 2 but x2 x1 (1) = x2 (2) = 0
        m = PointedModule.from_maps([(0, 2, 2), (0, 1, 0)])
        v = validate(m)
        assert v is not None and v.identity == "x_i x_j = x_j x_i"
        assert v.witnesses == (0, 1, 1, 2, 0)

    def test_moved_basepoint(self):
        v = validate(PointedModule(1, 1, ((1, 1),)))
        assert v is not None and v.identity == "x_i . 0 = 0"


class TestShapeModules:
    def test_single_box(self):
        m = module_from_shape(SkewShape(2, ((0, 0),)))
        assert m.size == 1 and m.action == ((0, 0), (0, 0))

    def test_six_box_generators(self):
        m = module_from_shape(SIX)
        gens = {SIX.boxes[e - 1] for e in minimal_generators(m)}
        assert gens == {(1, 0), (0, 1)}
        for i in range(2):
            for e in m.elements():
                box = SIX.boxes[e - 1]
                up = tuple(c + (k == i) for k, c in enumerate(box))
                target = m.act(i, e)
                assert (target == 0) == (up not in SIX.box_set)
                if target:
                    assert SIX.boxes[target - 1] == up

    def test_interval_is_ladder(self):
        for k in range(1, 6):
            assert isomorphic(module_from_shape(interval(k)), ladder(k))

    @pytest.mark.parametrize("k", range(1, 6))
    def test_round_trip(self, k):
        for s in enumerate_connected_shapes(2, k):
            assert shape_from_module(module_from_shape(s)) == s

    def test_ladder_to_interval(self):
        assert shape_from_module(ladder(3)) == interval(3)

    def test_not_type_alpha_rejected(self):
        with pytest.raises(PreconditionFailed) as info:
            shape_from_module(t_module((2, 2, 0)))
        assert info.value.predicate == "type alpha"

    def test_polygon_rejected(self):
        with pytest.raises(PreconditionFailed):
            shape_from_module(polygon(3))

    def test_shape_class_of_sum(self):
        m = direct_sum(module_from_shape(L_SHAPE), module_from_shape(DOMINO), module_from_shape(DOMINO))
        assert shape_class(m) == ModuleClass.of([DOMINO, L_SHAPE, DOMINO])


class TestPredicates:
    def test_type_alpha_examples(self):
        assert is_type_alpha(t_module((0, 1, 2)))
        assert not is_type_alpha(t_module((2, 2, 0)))

    @given(shape_modules(max_boxes=6))
    def test_shapes_are_skew_type(self, m):
        assert is_type_alpha(m) and supported_at_origin(m) and is_gradable(m)

    def test_cycle_not_gradable(self):
        for k in range(1, 5):
            assert find_grading(polygon(k)) is None
            assert not supported_at_origin(polygon(k))

    def test_tree_remark_module(self):
        m = t_module((3, 3, 4, 0))
        assert find_grading(m) is not None and not is_type_alpha(m)

    def test_grading_of_shape_is_coordinates(self):
        m = module_from_shape(SIX)
        g = find_grading(m)
        assert [g.degree[e] for e in m.elements()] == list(SIX.boxes)

    def test_annihilator(self):
        assert annihilator(PointedModule.zero(2)) == [(0, 0)]
        assert annihilator(ladder(3)) == [(3,)]
        assert annihilator(module_from_shape(L_SHAPE)) == [(0, 2), (1, 1), (2, 0)]
        assert annihilator(polygon(2)) == []


class TestSubmodules:
    def test_ladder(self):
        assert len(submodules(ladder(3))) == 4

    def test_two_boxes(self):
        box = module_from_shape(SkewShape(2, ((0, 0),)))
        assert len(submodules(direct_sum(box, box))) == 4

    @given(shape_modules(max_boxes=6))
    def test_match_filters(self, m):
        s = shape_from_module(m)
        as_boxes = {frozenset(s.boxes[e - 1] for e in sub if e) for sub in submodules(m)}
        assert as_boxes == set(filters_of(s))

    def test_ten_box_example(self):
        m = module_from_shape(TEN)
        sub = frozenset({0} | {TEN.boxes.index(b) + 1 for b in TEN_FILTER})
        assert sub in submodules(m)
        box = SkewShape(2, ((0, 0),))
        hook = SkewShape(2, ((0, 1), (1, 0), (1, 1)))
        assert canonical_class(restrict(m, sub)) == ModuleClass.of([box, box, L_SHAPE])
        assert canonical_class(quotient(m, sub)) == ModuleClass.of([hook, DOMINO])

    def test_quotient_extremes(self):
        m = module_from_shape(SIX)
        assert quotient(m, set(range(m.size + 1))).size == 0
        assert isomorphic(quotient(m, {0}), m)

    def test_not_a_submodule(self):
        m = ladder(3)
        bottom = 3 if m.act(0, 3) == 0 else 1
        top = [e for e in m.elements() if e != bottom][0]
        with pytest.raises(NotASubmodule):
            quotient(m, {0, top})

    @given(modules(max_size=5))
    def test_third_isomorphism(self, m):
        subs = submodules(m)
        for small in subs[:6]:
            for big in subs[:6]:
                if small <= big:
                    q_small = quotient(m, small)
                    keep = [e for e in m.elements() if e not in small]
                    image = {0} | {keep.index(e) + 1 for e in big if e and e not in small}
                    lhs = quotient(q_small, image)
                    assert isomorphic(lhs, quotient(m, big))

    def test_cyclic_iff_unique_minimal_box(self):
        for k in range(1, 6):
            for s in enumerate_connected_shapes(2, k):
                assert is_cyclic(module_from_shape(s)) == (len(s.minimal_boxes()) == 1)

    def test_generated(self):
        m = ladder(4)
        top = [e for e in m.elements() if e not in {m.act(0, x) for x in m.elements()}][0]
        assert generated_submodule(m, [top]) == frozenset(range(5))
        assert is_submodule(m, generated_submodule(m, [m.act(0, top)]))


class TestProducts:
    def test_sum_with_zero(self):
        m = module_from_shape(SIX)
        assert isomorphic(direct_sum(m, PointedModule.zero(2)), m)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            direct_sum(ladder(2), module_from_shape(DOMINO))

    @given(modules(n=2, max_size=3), modules(n=2, max_size=3))
    def test_smash_dimension(self, a, b):
        assert smash_product(a, b).size == a.size * b.size
        assert validate(smash_product(a, b)) is None
        assert validate(tensor_product(a, b)) is None

    @given(modules(n=2, max_size=3), modules(n=2, max_size=2), modules(n=2, max_size=2))
    def test_smash_distributes(self, a, b, c):
        lhs = smash_product(a, direct_sum(b, c))
        rhs = direct_sum(smash_product(a, b), smash_product(a, c))
        assert canonical_class(lhs) == canonical_class(rhs)

    def test_tensor_of_ladders(self):
        # x acts on the left factor, and (x m, n) ~ (m, x n) glues the two ladders
        t = tensor_product(ladder(2), ladder(2))
        assert validate(t) is None and t.size <= 4


class TestDecompose:
    def test_connected_shape(self):
        m = module_from_shape(SIX)
        assert len(decompose(m)) == 1 and is_indecomposable(m)

    def test_sum_of_shapes(self):
        m = direct_sum(module_from_shape(L_SHAPE), module_from_shape(DOMINO))
        parts = decompose(m)
        assert sorted(shape_from_module(p) for p in parts) == sorted([L_SHAPE, DOMINO])

    def test_zero(self):
        assert decompose(PointedModule.zero(1)) == []

    @given(modules(max_size=6))
    def test_krull_schmidt(self, m):
        parts = decompose(m)
        assert sum(p.size for p in parts) == m.size
        assert isomorphic(direct_sum(*parts, n=m.n), m)


class TestIsomorphism:
    @given(modules(max_size=6), st.randoms(use_true_random=False))
    def test_relabel(self, m, r):
        perm = list(range(1, m.size + 1))
        r.shuffle(perm)
        other = relabel(m, perm)
        assert isomorphic(m, other)
        assert canonical_class(m) == canonical_class(other)

    def test_dominoes_differ(self):
        assert not isomorphic(module_from_shape(DOMINO), module_from_shape(SkewShape(2, ((0, 0), (0, 1)))))

    def test_shapes_pairwise(self):
        pool = [s for k in range(1, 6) for s in enumerate_connected_shapes(2, k)]
        mods = {s: module_from_shape(s) for s in pool}
        for s in pool:
            for t in pool:
                if len(s) == len(t):
                    assert isomorphic(mods[s], mods[t]) == (s == t)

    def test_canonical_class_agrees_with_isomorphic(self):
        rng = random.Random(5)
        sample = [random_commuting_module(rng, 2, 4) for _ in range(40)]
        for a in sample:
            for b in sample:
                assert (canonical_class(a) == canonical_class(b)) == isomorphic(a, b)

    def test_fingerprint_for_polygons(self):
        cls = canonical_class(polygon(3))
        assert isinstance(cls.components[0], Fingerprint)
        assert isomorphic(cls.representative(1), polygon(3))


class TestMatrices:
    @given(modules(max_size=5))
    def test_columns_and_alpha(self, m):
        mats = base_change_matrices(m)
        assert all((a.sum(axis=0) <= 1).all() for a in mats)
        assert is_type_alpha(m) == all((a.sum(axis=1) <= 1).all() for a in mats)

    def test_ladder_shift(self):
        (a,) = base_change_matrices(ladder(4))
        assert not np.linalg.matrix_power(a, 4).any() and np.linalg.matrix_power(a, 3).any()


class TestClasses:
    def test_zero_class(self):
        assert ZERO.is_zero and ZERO.dim == 0 and canonical_class(PointedModule.zero(2)) == ZERO

    def test_multiset_order_irrelevant(self):
        assert ModuleClass.of([DOMINO, L_SHAPE]) == ModuleClass.of([L_SHAPE, DOMINO])

    def test_literal_round_trip(self):
        m = direct_sum(polygon(2), ladder(3))
        assert PointedModule.from_literal(m.to_literal()) == m

    def test_literal_rejects_non_module(self):
        with pytest.raises(ValueError, match="x_i x_j = x_j x_i"):
            PointedModule.from_literal({"n": 2, "size": 2, "action": [[0, 2, 2], [0, 1, 0]]})
