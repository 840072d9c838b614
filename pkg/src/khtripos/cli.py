"""Command-line front end.

Exit status: 0 when everything holds, 1 when a law or sequent fails, 2 on
bad input (unreadable model, schema/validation errors, parse/type errors,
size caps).
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from .errors import TriposError
from .heyting import Predicate
from .laws import CheckOptions, run_laws
from .logic import (Atom, Evaluator, SpaceSort, parse, parse_context, parse_sequent, show)
from .logic.evaluate import eval_sequent
from .model import ModelFile, load_model, predicate_to_json, space_to_json
from .power import equality_predicate, power_object, two_power
from .topology import DEFAULT_POINT_CAP, alexandroff

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def default_model_path() -> str:
    return str(resources.files("khtripos") / "data" / "example_model.json")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)


def _show_predicate(phi: Predicate) -> str:
    if phi.is_top:
        return "top"
    if phi.is_bottom:
        return "bottom"
    return "{" + ", ".join(phi.labels()) + "}"


def _bare_atoms(f, out: list):
    if isinstance(f, Atom):
        if not f.args:
            out.append(f.name)
        return
    for value in vars(f).values():
        if hasattr(value, "__dataclass_fields__"):
            _bare_atoms(value, out)
        elif isinstance(value, tuple):
            for v in value:
                if hasattr(v, "__dataclass_fields__"):
                    _bare_atoms(v, out)


def infer_context(model: ModelFile, formulas) -> list:
    """Context for formulas that use bare predicates and no --context.

    If every bare predicate with positive arity lives on the same spaces,
    the context gets one fresh variable per space; otherwise it is empty.
    """
    names: list[str] = []
    for f in formulas:
        _bare_atoms(f, names)
    sorts = {model.predicate_sorts[n] for n in names if model.predicate_sorts.get(n)}
    if len(sorts) != 1:
        return []
    (spaces,) = sorts
    return [(f"x{i + 1}", SpaceSort(s)) for i, s in enumerate(spaces)]


def cmd_check(args) -> int:
    model = load_model(args.model)
    opts = CheckOptions(max_size=args.max_size, seed=args.seed,
                        verify_compact_open=args.verify_compact_open)
    results = run_laws(model, opts, args.law)
    if args.format == "json":
        print(_dump([r.to_dict() for r in results]))
    else:
        for r in results:
            print(r.text())
        bad = [r.law for r in results if not r.ok]
        print("all laws hold" if not bad else f"{len(bad)} law(s) violated: {', '.join(bad)}")
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def cmd_eval(args) -> int:
    model = load_model(args.model)
    spaces = model.spaces.keys()
    if (args.expr is None) == (args.sequent is None):
        raise TriposError("give exactly one of -e/--expr and --sequent")
    formulas = [parse(args.expr, spaces)] if args.expr is not None \
        else list(parse_sequent(args.sequent, spaces))
    if args.context is not None:
        ctx = parse_context(args.context, spaces)
    else:
        ctx = infer_context(model, formulas)
    ctx_text = ", ".join(f"{v} : {s}" for v, s in ctx)
    if args.expr is not None:
        phi = Evaluator(model, args.cap).evaluate(formulas[0], ctx)
        if args.format == "json":
            print(_dump({"formula": show(formulas[0]), "context": ctx_text,
                         "value": _show_predicate(phi), "extent": phi.points(),
                         "labels": phi.labels()}))
        else:
            print(_show_predicate(phi))
        return EXIT_OK
    result = eval_sequent(formulas[0], formulas[1], ctx, model, args.cap)
    if args.format == "json":
        cex = None if result.holds else {"index": result.counterexample, "label": result.label}
        print(_dump({"sequent": f"{show(formulas[0])} |- {show(formulas[1])}",
                     "context": ctx_text, "holds": result.holds, "counterexample": cex}))
    else:
        print("holds" if result.holds else f"fails at {result.label}")
    return EXIT_OK if result.holds else EXIT_FAIL


def _space(model: ModelFile, name: str):
    try:
        return model.spaces[name]
    except KeyError:
        raise TriposError(f"model has no space {name!r}") from None


def cmd_power(args) -> int:
    model = load_model(args.model)
    A = _space(model, args.space)
    F = two_power(A, args.cap, verify=args.verify_compact_open)
    b = power_object(A, args.cap)
    members = b.membership.labels()
    if args.format == "json":
        print(_dump({"base": space_to_json(A), "function_space_size": F.size,
                     "compact_open_verified": bool(args.verify_compact_open),
                     "power": [b.point_json(i) for i in range(b.power.size)],
                     "membership": predicate_to_json(b.membership)}))
    else:
        print(f"A = {A.name}: {A.size} points")
        verified = ", compact-open topology verified discrete" if args.verify_compact_open else ""
        print(f"2^A: {F.size} points (discrete{verified})")
        print(f"PA: {b.power.size} points: {', '.join(b.power.labels)}")
        print(f"membership ({len(members)} pairs): {', '.join(members)}")
    return EXIT_OK


def cmd_delta(args) -> int:
    model = load_model(args.model)
    X = _space(model, args.space)
    delta = equality_predicate(X, args.cap)
    diagonal = sum(1 << (i * X.size + i) for i in range(X.size))
    if args.format == "json":
        print(_dump({"delta": predicate_to_json(delta), "labels": delta.labels(),
                     "is_diagonal": delta.extent == diagonal}))
    else:
        print("{" + ", ".join(delta.labels()) + "}")
        print(f"equals the diagonal: {'yes' if delta.extent == diagonal else 'no'}")
    return EXIT_OK if delta.extent == diagonal else EXIT_FAIL


def cmd_compactify(args) -> int:
    model = load_model(args.model)
    B = _space(model, args.space)
    Binf, _, tag = alexandroff(B)
    if args.format == "json":
        out = space_to_json(Binf)
        out["opens"] = [[i for i in range(Binf.size) if o >> i & 1] for o in Binf.opens]
        out["infinity"] = tag.infinity_index
        print(_dump(out))
    else:
        print(f"points: {', '.join(Binf.labels)}")
        for o in Binf.opens:
            print("{" + ", ".join(Binf.subset_labels(o)) + "}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--model", default=None, help="model file (default: bundled example)")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--cap", type=int, default=DEFAULT_POINT_CAP, help="point cap")

    parser = argparse.ArgumentParser(prog="khtripos", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="run the law suites")
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--law", action="append", help="only laws matching this pattern")
    p.add_argument("--verify-compact-open", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("eval", parents=[common], help="evaluate a formula or sequent")
    p.add_argument("-e", "--expr")
    p.add_argument("--sequent", help='"φ |- ψ"')
    p.add_argument("--context", help='e.g. "x : X, s : P(X)"')
    p.set_defaults(func=cmd_eval)

    for cmd, func, what in (("power", cmd_power, "build the weak power object of a space"),
                            ("delta", cmd_delta, "compute the equality predicate of a space"),
                            ("compactify", cmd_compactify, "one-point compactification")):
        p = sub.add_parser(cmd, parents=[common], help=what)
        p.add_argument("--space", required=True)
        if cmd == "power":
            p.add_argument("--verify-compact-open", action="store_true")
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.model is None:
        args.model = default_model_path()
    try:
        return args.func(args)
    except TriposError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
