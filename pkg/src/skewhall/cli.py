"""``skewhall`` command line.

Exit status: 0 success, 1 domain error or failed verification, 2 usage
error, 3 resource cap reached.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks, hall
from .category import CategorySpec
from .enumeration import enumerate_modules, skew_classes
from .errors import ResourceCapExceeded, SkewHallError
from .modules import ModuleClass
from .serialize import (
    class_literal,
    class_text,
    document,
    element_json,
    element_text,
    parse_class,
    render_class,
)
from .shapes import enumerate_connected_shapes, parse_shape, render_ascii
from .tableaux import (
    Tableau,
    count_standard_via_chains,
    enumerate_semistandard,
    enumerate_standard,
    filtration_quotients,
)

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--n", type=int, default=None, help="number of generators (default: from literals, else 2)")
    p.add_argument("--cat", default="", help="category flags: any of a,gr,origin (default: full algebra)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--cap", type=int, default=None, help="element-count ceiling for enumerations")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for module enumeration")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="skewhall", description="Hall algebras of skew shapes and monoid modules")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("enumerate-shapes", parents=[common], help="connected skew shapes with k boxes")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--all", action="store_true", help="list every multiset of connected shapes instead")
    p.add_argument("--draw", action="store_true", help="ASCII drawings (n = 2)")

    p = sub.add_parser("enumerate-modules", parents=[common], help="module classes of dimension d")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--indecomposable", action="store_true")

    for verb, text in (("product", "δ_A ⋆ δ_B"), ("bracket", "δ_A ⋆ δ_B - δ_B ⋆ δ_A")):
        p = sub.add_parser(verb, parents=[common], help=text)
        p.add_argument("a", help="class literal, e.g. '(0,0);(1,0)' or '(0,0) + (0,0)'")
        p.add_argument("b")
        p.add_argument("--no-draw", action="store_true")

    p = sub.add_parser("coproduct", parents=[common], help="Δ(δ_A)")
    p.add_argument("a")

    p = sub.add_parser("dual-coproduct", parents=[common], help="Δ(x_A) in the dual")
    p.add_argument("a")

    p = sub.add_parser("antipode", parents=[common], help="S(δ_A)")
    p.add_argument("a")

    p = sub.add_parser("tableaux", parents=[common], help="standard (or semistandard) tableaux of a plane shape")
    p.add_argument("shape")
    p.add_argument("--semistandard", type=int, metavar="MAX", default=None)
    p.add_argument("--count", action="store_true", help="only print counts")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=["bialgebra", "classification", "antipode", "pairing", "tableaux", "ladders"])
    p.add_argument("--bound", type=int, default=4)

    p = sub.add_parser("render", parents=[common], help="draw a plane shape, optionally with entries")
    p.add_argument("shape")
    p.add_argument("--entries", default=None, help="comma-separated entries in sorted box order")
    return parser


def _infer_n(args, *texts: str) -> int:
    if args.n is not None:
        return args.n
    for text in texts:
        text = text.strip()
        if text.startswith("("):
            first = text.split(";")[0].split("+")[0].strip()
            return len([c for c in first.strip("()").split(",") if c.strip()])
        if text.startswith("{"):
            return int(json.loads(text)["n"])
    return 2


def _category(args, n: int) -> CategorySpec:
    try:
        return CategorySpec.parse(args.cat, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _params(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("format", "verb")}


def _emit(args, out, text: str, payload) -> None:
    if args.format == "json":
        out.write(document(args.verb, _params(args), payload) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def _class_arg(text: str, n: int) -> ModuleClass:
    try:
        return parse_class(text, n)
    except (ValueError, json.JSONDecodeError, KeyError) as exc:
        raise UsageError(f"cannot read class {text!r}: {exc}") from exc


def cmd_enumerate_shapes(args, out) -> int:
    n = args.n or 2
    if args.all:
        classes = skew_classes(n, args.k, args.cap)
        lines = [f"{len(classes)} classes"] + [class_text(c) for c in classes]
        _emit(args, out, "\n".join(lines), [class_literal(c) for c in classes])
        return EXIT_OK
    shapes = sorted(enumerate_connected_shapes(n, args.k, args.cap), key=lambda s: s.sort_key)
    lines = [f"{len(shapes)} shapes"]
    for s in shapes:
        lines.append(s.literal() or "(empty)")
        if args.draw and n == 2 and s.boxes:
            lines.append(render_ascii(s))
    _emit(args, out, "\n".join(lines), [[list(b) for b in s.boxes] for s in shapes])
    return EXIT_OK


def cmd_enumerate_modules(args, out) -> int:
    n = args.n or 2
    cat = _category(args, n)
    classes = enumerate_modules(n, args.d, cat, args.indecomposable, args.cap, args.jobs)
    lines = [f"{len(classes)} classes in {cat}, dimension {args.d}"] + [class_text(c) for c in classes]
    _emit(args, out, "\n".join(lines), [class_literal(c) for c in classes])
    return EXIT_OK


def cmd_product(args, out) -> int:
    n = _infer_n(args, args.a, args.b)
    cat = _category(args, n)
    a, b = _class_arg(args.a, n), _class_arg(args.b, n)
    if args.verb == "bracket":
        elem = hall.bracket(a, b, cat)
    else:
        elem = hall.product(hall.delta(a), hall.delta(b), cat)
    text = f"{len(elem)} terms\n" + element_text(elem, draw=not args.no_draw)
    _emit(args, out, text, element_json(elem))
    return EXIT_OK


def cmd_coproduct(args, out) -> int:
    n = _infer_n(args, args.a)
    a = _class_arg(args.a, n)
    elem = hall.coproduct(hall.delta(a))
    _emit(args, out, f"{len(elem)} terms\n" + element_text(elem), element_json(elem))
    return EXIT_OK


def cmd_dual_coproduct(args, out) -> int:
    n = _infer_n(args, args.a)
    a = _class_arg(args.a, n)
    elem = hall.dual_coproduct_monomial(a, n)
    payload = [{"coeff": t["coeff"], "left": t["left"], "right": t["right"]} for t in element_json(elem)]
    _emit(args, out, f"{len(elem)} terms\n" + element_text(elem, dual=True), payload)
    return EXIT_OK


def cmd_antipode(args, out) -> int:
    n = _infer_n(args, args.a)
    cat = _category(args, n)
    a = _class_arg(args.a, n)
    elem = hall.antipode(hall.delta(a), cat)
    _emit(args, out, f"{len(elem)} terms\n" + element_text(elem), element_json(elem))
    return EXIT_OK


def cmd_tableaux(args, out) -> int:
    shape = parse_shape(args.shape, 2)
    if args.semistandard is not None:
        found = enumerate_semistandard(shape, args.semistandard, args.cap)
        kind = f"semistandard tableaux with entries <= {args.semistandard}"
    else:
        found = enumerate_standard(shape, args.cap)
        kind = "standard tableaux"
    lines = [f"{len(found)} {kind}"]
    payload: dict = {"shape": [list(b) for b in shape.boxes], "count": len(found)}
    if args.semistandard is None:
        flags = count_standard_via_chains(shape, args.cap)
        lines.append(f"{flags} complete flags of submodules")
        payload["flags"] = flags
    if not args.count:
        for t in found:
            lines.append("")
            lines.append(t.render())
            lines.append("layers: " + ", ".join(class_text(q) for q in filtration_quotients(t)))
        payload["tableaux"] = [list(t.entries) for t in found]
    _emit(args, out, "\n".join(lines), payload)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    n = args.n or 2
    suite = args.suite
    if suite == "bialgebra":
        report = checks.check_bialgebra(_category(args, n), args.bound, args.jobs)
    elif suite == "classification":
        report = checks.check_classification(n, args.bound, args.jobs)
    elif suite == "antipode":
        report = checks.check_antipode(_category(args, n), args.bound, args.jobs)
    elif suite == "pairing":
        report = checks.check_pairing(_category(args, n), args.bound, args.jobs)
    elif suite == "tableaux":
        report = checks.check_tableaux(args.bound)
    else:
        report = checks.check_commutative_ladders(args.bound)
    _emit(args, out, report.summary(), report.to_dict())
    return EXIT_OK if report.passed else EXIT_DOMAIN


def cmd_render(args, out) -> int:
    if args.entries is not None:
        shape = parse_shape(args.shape, 2)
        entries = tuple(int(e) for e in args.entries.split(",") if e.strip())
        t = Tableau(shape, entries)
        _emit(args, out, t.render(), t.to_literal())
        return EXIT_OK
    n = _infer_n(args, args.shape)
    cls = _class_arg(args.shape, n)
    pic = render_class(cls)
    if not pic and not cls.is_zero:
        raise SkewHallError("only plane shapes can be drawn")
    _emit(args, out, pic, class_literal(cls))
    return EXIT_OK


COMMANDS = {
    "enumerate-shapes": cmd_enumerate_shapes,
    "enumerate-modules": cmd_enumerate_modules,
    "product": cmd_product,
    "bracket": cmd_product,
    "coproduct": cmd_coproduct,
    "dual-coproduct": cmd_dual_coproduct,
    "antipode": cmd_antipode,
    "tableaux": cmd_tableaux,
    "verify": cmd_verify,
    "render": cmd_render,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.verb](args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except ResourceCapExceeded as exc:
        err.write(f"resource cap: {exc}\n")
        return EXIT_CAP
    except SkewHallError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_DOMAIN
    except ValueError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
