"""Text and JSON forms of shapes, classes and algebra elements.

Classes are written as lists of component literals: a shape component is an
array of integer boxes, any other component is a module dict
``{n, size, action}``. Coefficients are exact ``"p/q"`` strings.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .modules import ZERO, Fingerprint, ModuleClass, PointedModule, canonical_class
from .shapes import SkewShape, components, parse_shape, render_ascii, shape_from_json

FORMAT_VERSION = 1


def coeff_str(c: Fraction) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def parse_coeff(text: str) -> Fraction:
    return Fraction(text)


def component_literal(c):
    if isinstance(c, SkewShape):
        return [list(b) for b in c.boxes]
    return c.literal()


def class_literal(cls: ModuleClass) -> list:
    return [component_literal(c) for c in cls.components]


def class_from_literal(data: list, n: int | None = None) -> ModuleClass:
    comps = []
    for item in data:
        if isinstance(item, dict):
            comps.extend(canonical_class(PointedModule.from_literal(item)).components)
        else:
            comps.extend(components(shape_from_json(item, n)))
    return ModuleClass.of(comps)


def class_text(cls: ModuleClass) -> str:
    if cls.is_zero:
        return "0"
    return str(cls)


def parse_class(text: str, n: int | None = None) -> ModuleClass:
    """Read a class from the command line.

    Accepts ``0`` for the zero class, a JSON module dict or class list, or
    shape literals joined by ``+`` for a direct sum. A disconnected shape
    literal stands for the sum of its components.
    """
    text = text.strip()
    if text in ("0", ""):
        return ZERO
    if text[0] in "[{":
        data = json.loads(text)
        if isinstance(data, dict):
            return canonical_class(PointedModule.from_literal(data))
        return class_from_literal(data, n)
    comps = []
    for chunk in text.split("+"):
        comps.extend(components(parse_shape(chunk, n)))
    return ModuleClass.of(comps)


def render_class(cls: ModuleClass) -> str:
    """Components drawn side by side, bottom-aligned (n = 2 shapes only)."""
    pictures = []
    for c in cls.components:
        if not isinstance(c, SkewShape) or c.n != 2:
            return ""
        pictures.append(render_ascii(c).split("\n"))
    if not pictures:
        return ""
    height = max(len(p) for p in pictures)
    widths = [max(len(line) for line in p) for p in pictures]
    lines = []
    for row in range(height):
        parts = []
        for k, (pic, w) in enumerate(zip(pictures, widths)):
            idx = row - (height - len(pic))
            cell = pic[idx] if idx >= 0 else ""
            parts.append(cell.ljust(w))
            if k < len(pictures) - 1:
                parts.append(" ⊕ " if row == height - 1 else "   ")
        lines.append("".join(parts).rstrip())
    return "\n".join(lines)


def _signed(c: Fraction) -> str:
    c = Fraction(c)
    return f"+{c}" if c > 0 else str(c)


def element_json(elem) -> list:
    from .hall import DualElement, HallElement, TensorElement

    if isinstance(elem, TensorElement):
        return [{"coeff": coeff_str(v), "left": class_literal(a), "right": class_literal(b)} for (a, b), v in elem.items()]
    if isinstance(elem, DualElement):
        return [{"coeff": coeff_str(v), "monomial": class_literal(k)} for k, v in elem.items()]
    if isinstance(elem, HallElement):
        return [{"coeff": coeff_str(v), "class": class_literal(k)} for k, v in elem.items()]
    raise TypeError(type(elem))


def hall_from_json(data: list, n: int | None = None):
    from .hall import HallElement

    return HallElement({class_from_literal(t["class"], n): parse_coeff(t["coeff"]) for t in data})


def tensor_from_json(data: list, n: int | None = None):
    from .hall import TensorElement

    return TensorElement(
        {(class_from_literal(t["left"], n), class_from_literal(t["right"], n)): parse_coeff(t["coeff"]) for t in data}
    )


def element_text(elem, draw: bool = True, dual: bool = False) -> str:
    from .hall import TensorElement

    if not elem:
        return "0"
    blocks = []
    for key, v in elem.items():
        if isinstance(elem, TensorElement):
            a, b = key
            if dual:
                head = f"{_signed(v)}  x[{class_text(a)}] ⊗ x[{class_text(b)}]"
            else:
                head = f"{_signed(v)}  δ[{class_text(a)}] ⊗ δ[{class_text(b)}]"
            blocks.append(head)
            continue
        head = f"{_signed(v)}  δ[{class_text(key)}]"
        pic = render_class(key) if draw else ""
        blocks.append(head + ("\n" + _indent(pic) if pic else ""))
    return "\n".join(blocks)


def _indent(text: str, pad: str = "    ") -> str:
    return "\n".join(pad + line for line in text.split("\n"))


def document(command: str, params: dict, result) -> str:
    """One JSON document per run, with stable key order."""
    return json.dumps({"version": FORMAT_VERSION, "command": command, "params": params, "result": result}, indent=2, ensure_ascii=False)


def fingerprint_text(fp: Fingerprint) -> str:
    return json.dumps(fp.literal(), separators=(",", ":"))
