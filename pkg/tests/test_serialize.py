import json
from fractions import Fraction

from conftest import DOMINO, L_SHAPE
from skewhall.category import CategorySpec
from skewhall.hall import HallElement, coproduct, delta, product
from skewhall.modules import ZERO, ModuleClass, canonical_class, polygon
from skewhall.serialize import (
    class_from_literal,
    class_literal,
    coeff_str,
    document,
    element_json,
    hall_from_json,
    parse_class,
    render_class,
    tensor_from_json,
)


def test_coefficients():
    assert coeff_str(Fraction(-3, 4)) == "-3/4"
    assert coeff_str(Fraction(2)) == "2/1"


def test_class_round_trip():
    cls = ModuleClass.of([L_SHAPE, DOMINO, L_SHAPE])
    assert class_from_literal(class_literal(cls)) == cls
    fp = canonical_class(polygon(3))
    assert class_from_literal(json.loads(json.dumps(class_literal(fp)))) == fp


def test_parse_class():
    assert parse_class("0") == ZERO
    assert parse_class("(0,0);(1,0) + (0,0);(1,0);(0,1)") == ModuleClass.of([DOMINO, L_SHAPE])
    assert parse_class("(1,0);(0,1)") == parse_class("(0,0) + (0,0)")
    assert parse_class('{"n": 1, "size": 2, "action": [[0, 2, 1]]}') == canonical_class(polygon(2))


def test_element_round_trip():
    cat = CategorySpec.skew(2)
    f = product(delta(ModuleClass.of([L_SHAPE])), delta(ModuleClass.of([DOMINO])), cat) - Fraction(1, 2) * delta(ZERO)
    assert hall_from_json(json.loads(json.dumps(element_json(f)))) == f
    t = coproduct(f)
    assert tensor_from_json(json.loads(json.dumps(element_json(t)))) == t


def test_stable_document():
    f = 2 * delta(ModuleClass.of([L_SHAPE])) + delta(ModuleClass.of([DOMINO]))
    a = document("product", {"n": 2}, element_json(f))
    b = document("product", {"n": 2}, element_json(HallElement(dict(reversed(list(f.terms.items()))))))
    assert a == b and json.loads(a)["version"] == 1


def test_render_side_by_side():
    pic = render_class(ModuleClass.of([DOMINO, L_SHAPE]))
    assert pic.split("\n") == ["       []", "[][] ⊕ [][]"]
