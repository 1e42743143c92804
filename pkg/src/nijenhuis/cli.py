"""Command line interface.

Exit codes: 0 for success or a passing check, 1 for a failing check or
an undetected membership, 2 for usage, syntax, or malformed input
errors.  The environment variable ``NF_MAX_SIZE``, when set to a
positive integer, caps the ``--max-size`` of the sweep subcommands.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .algebra import operator_n, product
from .envelope import (
    ArityMismatch,
    BoundTooSmall,
    InvalidInput,
    LinearMap,
    Membership,
    NSAlgebraFD,
    NijenhuisAlgebraFD,
    UnknownGenerator,
    check_morphism_kills_generators,
    check_ndendriform_axioms,
    check_nijenhuis_fd,
    check_ns_axioms,
    default_names,
    enveloping_generators,
    evaluate_hom,
    induced_ns,
    truncated_ideal_membership,
)
from .linalg import DimensionMismatch, LinComb, format_rational
from .parser import EvalError, ParseError, eval_expr, parse_expr, print_canonical
from .relations import (
    evaluate_relation,
    ndendriform_relation_set,
    ns_relation_set,
    relation_sets_span_equal,
    relation_space_contains,
    solve_relation_space,
)
from .words import (
    GeneratorSymbol,
    WordError,
    generators,
    letter_word,
    to_canonical,
    words_up_to_size,
)

__all__ = ["run_command", "main"]

_OP_NAMES = ("prec", "succ", "bullet")


class _UsageError(ValueError):
    pass


def _split_names(raw: str) -> tuple[GeneratorSymbol, ...]:
    parts = [p.strip() for p in raw.split(",") if p.strip()]
    if not parts:
        raise _UsageError(f"no generator names in {raw!r}")
    try:
        return generators(*parts)
    except WordError as exc:
        raise _UsageError(str(exc)) from exc


def _max_size_cap() -> int | None:
    raw = os.environ.get("NF_MAX_SIZE")
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        print(f"warning: ignoring non-integer NF_MAX_SIZE={raw!r}", file=sys.stderr)
        return None
    return value if value >= 1 else None


def _effective_size(requested: int) -> int:
    cap = _max_size_cap()
    if cap is not None and cap < requested:
        print(
            f"note: NF_MAX_SIZE caps the sweep at size {cap}",
            file=sys.stderr,
        )
        return cap
    return requested


def _lincomb_json(a: LinComb) -> dict:
    return {
        "terms": [
            {"coeff": format_rational(c), "word": to_canonical(w)} for w, c in a
        ]
    }


def _emit(args: argparse.Namespace, obj: dict, plain: str) -> None:
    if args.json:
        print(json.dumps(obj, indent=2))
    else:
        print(plain)


def _parse_element(text: str, names: Sequence[GeneratorSymbol]) -> LinComb:
    return eval_expr(parse_expr(text), names)


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    if not isinstance(data, dict):
        raise _UsageError(f"{path}: expected a JSON object")
    return data


def _load_algebra(path: str) -> NijenhuisAlgebraFD | NSAlgebraFD:
    obj = _load_json(path)
    try:
        if "mult" in obj:
            return NijenhuisAlgebraFD.from_json_obj(obj)
        if "prec" in obj:
            return NSAlgebraFD.from_json_obj(obj)
    except (KeyError, ValueError, TypeError) as exc:
        raise _UsageError(f"{path}: malformed algebra file: {exc}") from exc
    raise _UsageError(f"{path}: neither an operator algebra nor a split-operation algebra")


def _as_ns(alg: NijenhuisAlgebraFD | NSAlgebraFD) -> NSAlgebraFD:
    if isinstance(alg, NSAlgebraFD):
        return alg
    return induced_ns(alg)


def _report_json(report) -> dict:
    out: dict = {"ok": report.ok}
    if not report.ok:
        out["kind"] = report.kind
        out["indices"] = list(report.indices)
        if report.lhs is not None:
            out["lhs"] = [format_rational(x) for x in report.lhs]
        if report.rhs is not None:
            out["rhs"] = [format_rational(x) for x in report.rhs]
    return out


def _cmd_mul(args: argparse.Namespace) -> int:
    names = _split_names(args.generators)
    value = product(_parse_element(args.left, names), _parse_element(args.right, names))
    _emit(args, _lincomb_json(value), print_canonical(value))
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    names = _split_names(args.generators)
    value = _parse_element(args.expr, names)
    _emit(args, _lincomb_json(value), print_canonical(value))
    return 0


def _cmd_assoc_check(args: argparse.Namespace) -> int:
    alphabet = _split_names(args.alphabet)
    bound = _effective_size(args.max_size)
    pool = words_up_to_size(alphabet, bound)
    elements = [LinComb.from_word(w) for w in pool]
    for u in elements:
        for v in elements:
            for w in elements:
                left = product(product(u, v), w)
                right = product(u, product(v, w))
                if left != right:
                    _emit(
                        args,
                        {
                            "ok": False,
                            "triple": [print_canonical(u), print_canonical(v), print_canonical(w)],
                            "lhs": _lincomb_json(left),
                            "rhs": _lincomb_json(right),
                        },
                        f"associativity fails at ({print_canonical(u)}, {print_canonical(v)}, {print_canonical(w)})",
                    )
                    return 1
    _emit(
        args,
        {"ok": True, "words": len(pool), "max_size": bound},
        f"associativity holds on all {len(pool)}^3 word triples up to size {bound}",
    )
    return 0


def _cmd_nijenhuis_check(args: argparse.Namespace) -> int:
    alphabet = _split_names(args.alphabet)
    bound = _effective_size(args.max_size)
    pool = words_up_to_size(alphabet, bound)
    elements = [LinComb.from_word(w) for w in pool]
    for u in elements:
        nu = operator_n(u)
        for v in elements:
            nv = operator_n(v)
            left = product(nu, nv)
            right = (
                operator_n(product(nu, v))
                + operator_n(product(u, nv))
                - operator_n(operator_n(product(u, v)))
            )
            if left != right:
                _emit(
                    args,
                    {
                        "ok": False,
                        "pair": [print_canonical(u), print_canonical(v)],
                        "lhs": _lincomb_json(left),
                        "rhs": _lincomb_json(right),
                    },
                    f"operator identity fails at ({print_canonical(u)}, {print_canonical(v)})",
                )
                return 1
    _emit(
        args,
        {"ok": True, "words": len(pool), "max_size": bound},
        f"operator identity holds on all {len(pool)}^2 word pairs up to size {bound}",
    )
    return 0


def _relation_sweep(args: argparse.Namespace, rels, label: str) -> int:
    names = _split_names(args.generators)
    if len(names) < 3:
        raise _UsageError("relation checks need at least three generator names")
    x, y, z = (LinComb.from_word(letter_word(s)) for s in names[:3])
    failures = []
    for k, rel in enumerate(rels):
        residue = evaluate_relation(rel, x, y, z)
        if not residue.is_zero():
            failures.append((k, residue))
    if failures:
        k, residue = failures[0]
        _emit(
            args,
            {"ok": False, "relation": k, "residue": _lincomb_json(residue)},
            f"{label} relation {k + 1} fails: residue {print_canonical(residue)}",
        )
        return 1
    _emit(
        args,
        {"ok": True, "relations": len(rels)},
        f"all {len(rels)} {label} relations hold on free generators",
    )
    return 0


def _cmd_ns_check(args: argparse.Namespace) -> int:
    return _relation_sweep(args, ns_relation_set(), "four-family")


def _cmd_ndend_check(args: argparse.Namespace) -> int:
    return _relation_sweep(args, ndendriform_relation_set(), "five-family")


def _cmd_solve_relspace(args: argparse.Namespace) -> int:
    basis = solve_relation_space()
    matches = relation_sets_span_equal(basis, ndendriform_relation_set())
    contains_four = all(relation_space_contains(r) for r in ns_relation_set())
    obj = {
        "dimension": len(basis),
        "basis": [v.to_json_obj() for v in basis],
        "matches_five_family": matches,
        "contains_four_family": contains_four,
    }
    lines = [f"relation space dimension: {len(basis)}"]
    for k, v in enumerate(basis):
        lines.append(f"v{k + 1} left={v.to_json_obj()['left']} right={v.to_json_obj()['right']}")
    lines.append(f"spans the five-relation family: {matches}")
    lines.append(f"contains the four-relation family: {contains_four}")
    _emit(args, obj, "\n".join(lines))
    return 0 if (matches and contains_four) else 1


def _names_for_dim(args: argparse.Namespace, dim: int) -> tuple[GeneratorSymbol, ...]:
    if args.generators is None:
        return default_names(dim)
    names = _split_names(args.generators)
    if len(names) != dim:
        raise _UsageError(f"need exactly {dim} generator names, got {len(names)}")
    return names


def _cmd_env_generators(args: argparse.Namespace) -> int:
    ns_alg = _as_ns(_load_algebra(args.file))
    names = _names_for_dim(args, ns_alg.dim)
    gens = enveloping_generators(ns_alg, names)
    records = []
    lines = []
    idx = 0
    for i in range(ns_alg.dim):
        for j in range(ns_alg.dim):
            for op in _OP_NAMES:
                element = gens[idx]
                records.append(
                    {"i": i, "j": j, "op": op, "element": _lincomb_json(element)}
                )
                lines.append(f"({i},{j}) {op}: {print_canonical(element)}")
                idx += 1
    _emit(args, {"count": len(gens), "generators": records}, "\n".join(lines))
    return 0


def _cmd_fd_check(args: argparse.Namespace) -> int:
    alg = _load_algebra(args.file)
    if isinstance(alg, NijenhuisAlgebraFD):
        report = check_nijenhuis_fd(alg)
        _emit(
            args,
            {"type": "operator-algebra", **_report_json(report)},
            f"operator algebra: {report.describe()}",
        )
        return 0 if report.ok else 1
    ns_report = check_ns_axioms(alg)
    nd_report = check_ndendriform_axioms(alg)
    ok = ns_report.ok and nd_report.ok
    _emit(
        args,
        {
            "type": "split-operations",
            "four_family": _report_json(ns_report),
            "five_family": _report_json(nd_report),
        },
        "split operations: "
        f"four-family {ns_report.describe()}; five-family {nd_report.describe()}",
    )
    return 0 if ok else 1


def _cmd_induce_ns(args: argparse.Namespace) -> int:
    alg = _load_algebra(args.file)
    if not isinstance(alg, NijenhuisAlgebraFD):
        raise _UsageError(f"{args.file}: expected an operator algebra file")
    ns_alg = induced_ns(alg)
    obj = ns_alg.to_json_obj()
    _emit(args, obj, json.dumps(obj, indent=2))
    return 0


def _cmd_eval_hom(args: argparse.Namespace) -> int:
    alg = _load_algebra(args.file)
    if not isinstance(alg, NijenhuisAlgebraFD):
        raise _UsageError(f"{args.file}: expected an operator algebra file")
    map_obj = _load_json(args.mapfile)
    try:
        names = generators(*[str(n) for n in map_obj["names"]])
        matrix = LinearMap.from_json_obj(map_obj["matrix"])
    except (KeyError, ValueError, TypeError) as exc:
        raise _UsageError(f"{args.mapfile}: malformed map file: {exc}") from exc
    element = _parse_element(args.expr, names)
    image = evaluate_hom(alg, matrix, element, names)
    _emit(
        args,
        {"vector": [format_rational(x) for x in image]},
        ", ".join(format_rational(x) for x in image),
    )
    return 0


def _cmd_ideal_member(args: argparse.Namespace) -> int:
    ns_alg = _as_ns(_load_algebra(args.file))
    names = _names_for_dim(args, ns_alg.dim)
    gens = enveloping_generators(ns_alg, names)
    candidate = _parse_element(args.expr, names)
    verdict = truncated_ideal_membership(gens, candidate, args.bound)
    _emit(
        args,
        {"verdict": verdict.value, "bound": args.bound},
        f"{verdict.value} (bound {args.bound})",
    )
    return 0 if verdict is Membership.MEMBER else 1


def _cmd_morphism_check(args: argparse.Namespace) -> int:
    source = _as_ns(_load_algebra(args.source))
    target = _load_algebra(args.target)
    if not isinstance(target, NijenhuisAlgebraFD):
        raise _UsageError(f"{args.target}: expected an operator algebra file")
    map_obj = _load_json(args.mapfile)
    try:
        names = generators(*[str(n) for n in map_obj["names"]])
        matrix = LinearMap.from_json_obj(map_obj["matrix"])
    except (KeyError, ValueError, TypeError) as exc:
        raise _UsageError(f"{args.mapfile}: malformed map file: {exc}") from exc
    report = check_morphism_kills_generators(source, target, matrix, names)
    _emit(args, _report_json(report), f"morphism: {report.describe()}")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="nijenhuis",
        description="Exact computations in free Nijenhuis algebras and their split operations.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of plain text")
    common.add_argument(
        "--seed",
        type=int,
        default=0,
        help="seed for randomized sweeps (current subcommands are exhaustive)",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str, **kwargs):
        p = sub.add_parser(name, parents=[common], help=help_text, **kwargs)
        p.set_defaults(handler=handler)
        return p

    p = add("mul", _cmd_mul, "multiply two expressions")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--generators", default="x,y,z", help="declared generator names")

    p = add("eval", _cmd_eval, "evaluate an expression to canonical form")
    p.add_argument("expr")
    p.add_argument("--generators", default="x,y,z", help="declared generator names")

    p = add("assoc-check", _cmd_assoc_check, "sweep associativity on basis word triples")
    p.add_argument("--max-size", type=int, default=3)
    p.add_argument("--alphabet", default="x,y")

    p = add("nijenhuis-check", _cmd_nijenhuis_check, "sweep the operator identity on word pairs")
    p.add_argument("--max-size", type=int, default=3)
    p.add_argument("--alphabet", default="x,y")

    p = add("ns-check", _cmd_ns_check, "verify the four-relation family on free generators")
    p.add_argument("--generators", default="x,y,z")

    p = add("ndend-check", _cmd_ndend_check, "verify the five-relation family on free generators")
    p.add_argument("--generators", default="x,y,z")

    add("solve-relspace", _cmd_solve_relspace, "rederive the relation space from scratch")

    p = add("env-generators", _cmd_env_generators, "kernel generators for a structure-constant algebra")
    p.add_argument("file")
    p.add_argument("--generators", default=None, help="names for the free generators")

    p = add("fd-check", _cmd_fd_check, "run identity sweeps on a structure-constant file")
    p.add_argument("file")

    p = add("induce-ns", _cmd_induce_ns, "split an operator algebra into its three operations")
    p.add_argument("file")

    p = add("eval-hom", _cmd_eval_hom, "evaluate a free-algebra expression in a target algebra")
    p.add_argument("file")
    p.add_argument("mapfile")
    p.add_argument("expr")

    p = add("morphism-check", _cmd_morphism_check, "check a map intertwines operations and kills kernel generators")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("mapfile")

    p = add("ideal-member", _cmd_ideal_member, "truncated ideal membership for a candidate element")
    p.add_argument("file")
    p.add_argument("expr")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--generators", default=None, help="names for the free generators")

    return top


def run_command(argv: Sequence[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.handler(args)
    except (
        _UsageError,
        ParseError,
        EvalError,
        WordError,
        DimensionMismatch,
        ArityMismatch,
        UnknownGenerator,
        BoundTooSmall,
        OSError,
        json.JSONDecodeError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
