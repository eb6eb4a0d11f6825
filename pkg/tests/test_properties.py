"""Closure of type α, gradability and origin support under the module operations.

Exhaustive over one representative per isomorphism class (all classes with
dim <= 4 for n <= 2; the predicates are isomorphism invariant) and randomised
beyond that.
"""

import random
from functools import lru_cache
from itertools import product

import pytest
from hypothesis import given, settings

from conftest import modules, random_commuting_module
from skewhall.category import CategorySpec
from skewhall.enumeration import enumerate_modules
from skewhall.modules import (
    _nilpotent,
    canonical_class,
    direct_sum,
    find_grading,
    is_gradable,
    is_type_alpha,
    quotient,
    restrict,
    smash_product,
    submodules,
    supported_at_origin,
    tensor_grading,
    tensor_product,
)


@lru_cache(maxsize=None)
def representatives(n, max_dim):
    return [c.representative(n) for d in range(max_dim + 1) for c in enumerate_modules(n, d, CategorySpec(n))]


def pieces(m):
    """(submodule, quotient) for every submodule."""
    for sub in submodules(m):
        yield restrict(m, sub), quotient(m, sub)


def check_sub_quotient(m):
    alpha, graded, origin = is_type_alpha(m), is_gradable(m), supported_at_origin(m)
    for low, high in pieces(m):
        if alpha:
            assert is_type_alpha(low) and is_type_alpha(high)
        if graded:
            assert is_gradable(low) and is_gradable(high)
        assert origin == (supported_at_origin(low) and supported_at_origin(high))
        for i in range(m.n):
            whole = _nilpotent(m.action[i], m.size)
            parts = _nilpotent(low.action[i], low.size) and _nilpotent(high.action[i], high.size)
            assert whole == parts


def check_grading(m):
    g = find_grading(m)
    if g is None:
        return
    for i in range(m.n):
        for e in m.elements():
            t = m.act(i, e)
            if t:
                assert g[t] == tuple(c + (k == i) for k, c in enumerate(g[e]))


def check_pair(a, b):
    for op in (direct_sum, smash_product, tensor_product):
        c = op(a, b)
        if is_type_alpha(a) and is_type_alpha(b):
            assert is_type_alpha(c), op.__name__
        if is_gradable(a) and is_gradable(b):
            assert is_gradable(c), op.__name__
    ga, gb = find_grading(a), find_grading(b)
    if ga is not None and gb is not None:
        t = tensor_product(a, b)
        degrees = tensor_grading(a, b, ga, gb)
        for i in range(a.n):
            for c in t.elements():
                target = t.act(i, c)
                if target:
                    assert degrees[target] == tuple(x + (k == i) for k, x in enumerate(degrees[c]))


def check_filtration_bound(m):
    if not supported_at_origin(m):
        return
    r = m.size
    for exps in product(range(r + 1), repeat=m.n):
        if sum(exps) == r:
            assert all(m.apply_monomial(exps, e) == 0 for e in m.elements())


@pytest.mark.parametrize("n", [1, 2])
def test_sub_quotient_closure_exhaustive(n):
    for m in representatives(n, 4):
        check_sub_quotient(m)


@pytest.mark.parametrize("n", [1, 2])
def test_grading_and_filtration_exhaustive(n):
    for m in representatives(n, 4):
        check_grading(m)
        check_filtration_bound(m)


@pytest.mark.parametrize("n", [1, 2])
def test_pair_closure_exhaustive(n):
    reps = representatives(n, 2)
    for a in reps:
        for b in reps:
            check_pair(a, b)


@settings(max_examples=40)
@given(modules(max_size=7))
def test_sub_quotient_closure_random(m):
    check_sub_quotient(m)
    check_grading(m)
    check_filtration_bound(m)


@settings(max_examples=40)
@given(modules(n=2, max_size=4), modules(n=2, max_size=4))
def test_pair_closure_random(a, b):
    check_pair(a, b)


@settings(max_examples=30)
@given(modules(n=2, max_size=5, type_alpha=True), modules(n=2, max_size=4, type_alpha=True))
def test_pair_closure_type_alpha_random(a, b):
    check_pair(a, b)


def test_tensor_identities():
    rng = random.Random(3)
    for _ in range(30):
        a, b, c = (random_commuting_module(rng, 2, rng.randint(1, 3)) for _ in range(3))
        assert canonical_class(tensor_product(a, b)) == canonical_class(tensor_product(b, a))
        assert canonical_class(tensor_product(tensor_product(a, b), c)) == canonical_class(tensor_product(a, tensor_product(b, c)))
        assert canonical_class(tensor_product(a, direct_sum(b, c))) == canonical_class(
            direct_sum(tensor_product(a, b), tensor_product(a, c))
        )


def test_type_alpha_counterexample_from_extension():
    # t a = t b = c, t c = d: the submodule {c, d} and the quotient are type α, the whole is not
    from skewhall.modules import PointedModule, ladder

    m = PointedModule(1, 4, ((0, 3, 3, 4, 0),))
    sub = frozenset({0, 3, 4})
    assert not is_type_alpha(m)
    assert is_type_alpha(restrict(m, sub)) and is_type_alpha(quotient(m, sub))
    assert canonical_class(restrict(m, sub)) == canonical_class(ladder(2))
    assert canonical_class(quotient(m, sub)) == canonical_class(direct_sum(ladder(1), ladder(1)))
