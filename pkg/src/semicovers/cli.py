"""
Command-line front end.

Every subcommand reads JSON documents, prints canonical JSON (DOT for
``tree --dot``) on stdout and returns the process exit code:
0 ok, 2 schema, 3 precondition, 4 overflow, 5 guard.
Errors are written to stderr as a JSON payload.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Sequence

from semicovers.config import configure_logging
from semicovers.core.orders import OrderKind, TotalOrderSpec, order_from_name
from semicovers.core.points import Point, parse_point
from semicovers.covers.dd import cover_enumeration
from semicovers.covers.tree import GraphFormat, build_tree, export_graph
from semicovers.errors import PostconditionError, SchemaError, SemicoversError
from semicovers.hilbert import hilbert_basis
from semicovers.irreducible import (
    Classification,
    classify_report,
    fourth_pseudo_symmetric,
    half_dichotomy,
    irreducible_iff_half_witness,
    pseudo_symmetric_cover,
    symmetric_double,
)
from semicovers.oracle import brute_Dd, brute_hilbert, brute_member, hilbert_search_box
from semicovers.quotient import Via, quotient
from semicovers.schema import (
    dumps,
    parse_cone,
    parse_generated,
    parse_modular,
    parse_order,
    parse_polytope,
    parse_semigroup,
    parse_system,
    read_json,
)
from semicovers.semigroup.models import CSemigroup, GeneratedSemigroup
from semicovers.semigroup.operations import (
    apery,
    equals,
    frobenius,
    fundamental_gaps,
    genus,
    member,
    minimal_generators,
    pseudo_frobenius,
    validate,
)
from semicovers.varieties.checks import arf_check, cm_check, saturated_check
from semicovers.varieties.convex import convex_member, convex_quotient_equal
from semicovers.varieties.modular import pm_intersect, pm_member, pm_quotient
from semicovers.varieties.predicates import VarietyName, named_variety

logger = logging.getLogger("semicovers.cli")

VIA_ALIASES = {"algorithm1": Via.HILBERT}


class _Parser(argparse.ArgumentParser):
    """Reports usage problems as SchemaError instead of exiting."""

    def error(self, message: str):
        raise SchemaError(f"{self.prog}: {message}")


def _points(value: Any) -> list:
    return [list(p) for p in value]


def _order(args: argparse.Namespace) -> TotalOrderSpec | None:
    return order_from_name(args.order) if args.order else None


def _semigroup(args: argparse.Namespace) -> CSemigroup:
    return parse_semigroup(read_json(args.semigroup), _order(args))


def _membership_source(args: argparse.Namespace) -> CSemigroup | GeneratedSemigroup:
    """Generator documents stay generated; membership then goes through the monoid."""
    doc = read_json(args.semigroup)
    if isinstance(doc, dict) and "generators" in doc:
        return parse_generated(doc, _order(args))
    return parse_semigroup(doc, _order(args))


def _verified(label: str, ok: bool, **details: Any) -> None:
    if not ok:
        raise PostconditionError(f"Verification against the brute-force oracle failed for {label}", **details)
    logger.info(f"Verified {label} against the brute-force oracle")


# -- semigroup basics ---------------------------------------------------------


def cmd_validate(args: argparse.Namespace) -> dict:
    s = _semigroup(args)
    violation = validate(s.cone, s.gaps)
    if violation is None:
        return {"valid": True, "semigroup": s.canonical()}
    return {"valid": False, "violation": violation.model_dump(mode="json")}


def cmd_member(args: argparse.Namespace) -> dict:
    s = _membership_source(args)
    x = parse_point(args.point, s.dim)
    result = member(s, x)
    if args.verify:
        _verified("membership", brute_member(minimal_generators(s), x) == result, point=list(x))
    return {"point": list(x), "member": result}


def cmd_gaps(args: argparse.Namespace) -> dict:
    return _semigroup(args).canonical()


def cmd_generators(args: argparse.Namespace) -> dict:
    s = _semigroup(args)
    gens = minimal_generators(s)
    return {"generators": _points(gens), "order": {"kind": s.order.kind.value, "perm": list(s.order.perm)}}


def cmd_frobenius(args: argparse.Namespace) -> dict:
    fb = frobenius(_semigroup(args))
    return {"frobenius": list(fb) if fb is not None else None}


def cmd_pf(args: argparse.Namespace) -> dict:
    return {"pseudo_frobenius": _points(pseudo_frobenius(_semigroup(args)))}


def cmd_apery(args: argparse.Namespace) -> dict:
    s = _semigroup(args)
    m = parse_point(args.m, s.dim)
    return {"m": list(m), "apery": _points(apery(s, m, classical=args.classical))}


def cmd_fg(args: argparse.Namespace) -> dict:
    return {"fundamental_gaps": _points(fundamental_gaps(_semigroup(args)))}


def cmd_genus(args: argparse.Namespace) -> dict:
    return {"genus": genus(_semigroup(args))}


def _via(name: str) -> Via:
    if name in VIA_ALIASES:
        return VIA_ALIASES[name]
    try:
        return Via(name)
    except ValueError as exc:
        raise SchemaError(f"Unknown quotient route {name!r}") from exc


def cmd_quotient(args: argparse.Namespace) -> dict:
    s = _semigroup(args)
    via = _via(args.via)
    q = quotient(s, args.d, via)
    if args.verify:
        other = quotient(s, args.d, Via.GAPS if via == Via.HILBERT else Via.HILBERT)
        _verified("quotient", equals(q, other), d=args.d)
    return q.canonical()


# -- covers ---------------------------------------------------------------------


def cmd_ddset(args: argparse.Namespace) -> dict | int:
    s = _semigroup(args)
    f = parse_point(args.f, s.dim)
    result = cover_enumeration(s, args.d, f)
    if args.verify:
        brute = brute_Dd(s, args.d, f)
        _verified(
            "D_d(S, f)",
            [t.canonical_key() for t in brute] == [t.canonical_key() for t in result.semigroups],
            oracle=len(brute),
            enumerated=len(result),
        )
    if args.count_only:
        return len(result)
    return {
        "count": len(result),
        "candidates": _points(result.candidates),
        "raw_subset_bound": result.raw_subset_bound,
        "admissible_subsets": result.admissible_subsets,
        "semigroups": [t.canonical() for t in result.semigroups],
    }


def _window(args: argparse.Namespace, dim: int) -> Point:
    if not args.window:
        raise SchemaError("This subcommand needs --window")
    return parse_point(args.window, dim)


def cmd_tree(args: argparse.Namespace) -> str | dict:
    cone = parse_cone(read_json(args.cone))
    order = _order(args) or parse_order(None)
    f = parse_point(args.f, cone.dim)
    variety = VarietyName(args.variety)
    window = _window(args, cone.dim) if variety != VarietyName.ALL else ()
    tree = build_tree(cone, order, args.d, f, named_variety(variety, window, args.coeff_bound))

    if args.dot or args.json:
        fmt, target = (GraphFormat.DOT, args.dot) if args.dot else (GraphFormat.JSON, args.json)
        text = export_graph(tree, fmt)
        if target == "-":
            return text
        Path(target).write_text(text if text.endswith("\n") else text + "\n")
        logger.info(f"Wrote {fmt.value} graph with {len(tree.vertices)} vertices to {target}")
        return {"vertices": len(tree.vertices), "edges": len(tree.edges), "output": target}
    return export_graph(tree, GraphFormat.JSON)


# -- irreducible ----------------------------------------------------------------


def cmd_classify(args: argparse.Namespace) -> dict:
    s = _semigroup(args)
    report = classify_report(s).model_dump(mode="json")
    if report["classification"] == Classification.PSEUDO_SYMMETRIC.value:
        report["half"] = half_dichotomy(s).model_dump(mode="json")
    return report


def cmd_double(args: argparse.Namespace) -> dict:
    s = _semigroup(args)
    return symmetric_double(s, parse_point(args.f, s.dim)).canonical()


def cmd_cover(args: argparse.Namespace) -> dict:
    return pseudo_symmetric_cover(_semigroup(args)).canonical()


def cmd_fourth(args: argparse.Namespace) -> dict:
    s = _semigroup(args)
    return fourth_pseudo_symmetric(s, parse_point(args.f, s.dim)).canonical()


def cmd_witness(args: argparse.Namespace) -> dict:
    t = irreducible_iff_half_witness(_semigroup(args))
    return {"irreducible": t is not None, "witness": t.canonical() if t is not None else None}


# -- varieties ----------------------------------------------------------------------


def cmd_pm(args: argparse.Namespace) -> dict:
    system = parse_modular(read_json(args.system))
    if args.member:
        x = parse_point(args.member, system.dim)
        return {"point": list(x), "member": pm_member(system, x)}
    if args.quotient is not None:
        return pm_quotient(system, args.quotient).model_dump(mode="json")
    if args.intersect:
        return pm_intersect(system, parse_modular(read_json(args.intersect))).model_dump(mode="json")
    raise SchemaError("pm needs one of --member, --quotient or --intersect")


def _checker_source(args: argparse.Namespace) -> tuple[Callable[[Point], bool] | CSemigroup | GeneratedSemigroup, int]:
    if args.system:
        system = parse_modular(read_json(args.system))
        return (lambda x: pm_member(system, x)), system.dim
    if not args.semigroup:
        raise SchemaError("Give --semigroup or --system")
    s = _membership_source(args)
    return s, s.dim


def _report(counterexample) -> dict:
    if counterexample is None:
        return {"counterexample": None, "holds_in_window": True}
    return {"counterexample": counterexample.model_dump(mode="json"), "holds_in_window": False}


def cmd_arf(args: argparse.Namespace) -> dict:
    source, dim = _checker_source(args)
    return _report(arf_check(source, _window(args, dim)))


def cmd_saturated(args: argparse.Namespace) -> dict:
    source, dim = _checker_source(args)
    return _report(saturated_check(source, _window(args, dim), args.coeff_bound, args.max_terms))


def cmd_cm(args: argparse.Namespace) -> dict:
    s = _membership_source(args)
    ns = [parse_point(n, s.dim) for n in args.n] if args.n else None
    return _report(cm_check(s, _window(args, s.dim), ns))


def cmd_convex(args: argparse.Namespace) -> dict:
    polytope = parse_polytope(read_json(args.polytope))
    if args.member:
        x = parse_point(args.member, polytope.dim)
        return {"point": list(x), "member": convex_member(polytope, x)}
    if args.quotient_d is not None:
        mismatch = convex_quotient_equal(polytope, args.quotient_d, _window(args, polytope.dim))
        return {"equal_in_window": mismatch is None, "mismatch": mismatch.model_dump(mode="json") if mismatch else None}
    raise SchemaError("convex needs --member or --quotient-d")


def cmd_hilbert(args: argparse.Namespace) -> dict:
    system = parse_system(read_json(args.system))
    basis = hilbert_basis(system)
    if args.verify:
        box = hilbert_search_box(system)
        _verified("Hilbert basis", brute_hilbert(system, box) == list(basis.solutions), box=list(box))
    return {"solutions": _points(basis.solutions)}


# -- parser -------------------------------------------------------------------------


def _add(sub, name: str, handler: Callable, help_text: str, *, semigroup: bool = True) -> argparse.ArgumentParser:
    p = sub.add_parser(name, help=help_text)
    if semigroup:
        p.add_argument("--semigroup", required=True, help='Semigroup JSON file, "-" for stdin')
    p.add_argument("--order", choices=[k.value for k in OrderKind], help="Override the document's order")
    p.add_argument("--verify", action="store_true", help="Cross-check against the brute-force oracle")
    p.set_defaults(handler=handler)
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="semicovers", description="Quotients and covers of C-semigroups")
    parser.add_argument("--log-level", help="Override LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    _add(sub, "validate", cmd_validate, "Check that the gap set is closed")
    _add(sub, "member", cmd_member, "Membership test").add_argument("--point", required=True)
    _add(sub, "gaps", cmd_gaps, "Canonical cone-and-gaps form")
    _add(sub, "generators", cmd_generators, "Minimal generating set")
    _add(sub, "frobenius", cmd_frobenius, "Frobenius element")
    _add(sub, "pf", cmd_pf, "Pseudo-Frobenius set")
    p = _add(sub, "apery", cmd_apery, "Apery set")
    p.add_argument("--m", required=True)
    p.add_argument("--classical", action="store_true", help="x - m outside S, for single-ray cones")
    _add(sub, "fg", cmd_fg, "Fundamental gaps")
    _add(sub, "genus", cmd_genus, "Number of gaps")

    p = _add(sub, "quotient", cmd_quotient, "S/d")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--via", default=Via.GAPS.value, choices=[v.value for v in Via] + list(VIA_ALIASES))

    p = _add(sub, "ddset", cmd_ddset, "Every T with T/d = S and Frobenius element below f")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--count-only", action="store_true")

    p = _add(sub, "tree", cmd_tree, "Cover tree rooted at the cone", semigroup=False)
    p.add_argument("--cone", required=True, help="Cone JSON file")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--f", required=True)
    out = p.add_mutually_exclusive_group()
    out.add_argument("--dot", metavar="PATH", help='Write DOT, "-" for stdout')
    out.add_argument("--json", metavar="PATH", help='Write JSON, "-" for stdout')
    p.add_argument("--variety", default=VarietyName.ALL.value, choices=[v.value for v in VarietyName])
    p.add_argument("--window")
    p.add_argument("--coeff-bound", type=int, default=2)

    _add(sub, "classify", cmd_classify, "Symmetric, pseudo-symmetric or neither")
    _add(sub, "double", cmd_double, "Symmetric T with T/2 = S").add_argument("--f", required=True)
    _add(sub, "cover", cmd_cover, "Pseudo-symmetric T with T/2 = S")
    _add(sub, "fourth", cmd_fourth, "Pseudo-symmetric T with T/4 = S").add_argument("--f", required=True)
    _add(sub, "witness", cmd_witness, "Pseudo-symmetric half witness, if irreducible")

    p = _add(sub, "pm", cmd_pm, "Proportionally modular systems", semigroup=False)
    p.add_argument("--system", required=True)
    action = p.add_mutually_exclusive_group()
    action.add_argument("--member")
    action.add_argument("--quotient", type=int)
    action.add_argument("--intersect", metavar="PATH")

    for name, handler, text in (
        ("arf", cmd_arf, "Arf refuter"),
        ("saturated", cmd_saturated, "Saturated refuter"),
    ):
        p = _add(sub, name, handler, text, semigroup=False)
        p.add_argument("--semigroup")
        p.add_argument("--system", help="Proportionally modular system instead of a semigroup")
        p.add_argument("--window", required=True)
        if name == "saturated":
            p.add_argument("--coeff-bound", type=int, default=2)
            p.add_argument("--max-terms", type=int, default=2)

    p = _add(sub, "cm", cmd_cm, "Cohen-Macaulay refuter")
    p.add_argument("--window", required=True)
    p.add_argument("--n", action="append", help="Ray element, repeat once per extremal ray")

    p = _add(sub, "convex", cmd_convex, "Convex-body semigroups", semigroup=False)
    p.add_argument("--polytope", required=True)
    p.add_argument("--member")
    p.add_argument("--quotient-d", type=int)
    p.add_argument("--window")

    _add(sub, "hilbert", cmd_hilbert, "Hilbert basis of A x = 0", semigroup=False).add_argument(
        "--system", required=True, help='JSON matrix, or {"matrix": [...]}'
    )
    return parser


def _emit(result: Any) -> None:
    if isinstance(result, str):
        sys.stdout.write(result if result.endswith("\n") else result + "\n")
    else:
        sys.stdout.write(dumps(result) + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    """Run one subcommand and return its exit code."""
    try:
        args = build_parser().parse_args(argv)
        configure_logging(args.log_level)
        logger.debug(f"Running {args.command}")
        _emit(args.handler(args))
        return 0
    except SemicoversError as exc:
        logger.error(f"{type(exc).__name__}: {exc.message}")
        sys.stderr.write(dumps(exc.to_payload()) + "\n")
        return exc.exit_code


__all__ = ["main", "build_parser"]
