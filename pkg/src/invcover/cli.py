"""Command-line interface.

One executable with subcommands for verification, construction, the
reduction pipelines, proof audits, bound tables, searches and the capped
cover solver, all speaking the JSON documents of :mod:`invcover.jsonio`.
Documents go to stdout, diagnostics to stderr.

Exit codes: 0 ok, 1 negative verification result, 2 usage or parse error,
3 time budget exhausted.  ``INVCOVER_BUDGET`` overrides the default search
budget in seconds.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

from . import audit as audit_mod
from . import bounds as bounds_mod
from . import constructions as cons
from . import search as search_mod
from .core import ContractError, DomainError
from .cover import (
    all_pairs_cover,
    is_edge_cover,
    is_minimal_edge_cover,
    part_degrees,
    prune_nonessential,
)
from .invertibility import (
    find_deficiency_set,
    find_inverting_permutation,
    is_invertibility_critical,
    is_invertible,
    non_critical_witness_edge,
)
from . import jsonio

OK, FAIL, PARTIAL = "ok", "fail", "partial"
_EXIT = {OK: 0, FAIL: 1, PARTIAL: 3}


@dataclass
class CommandResult:
    status: str
    payload: dict[str, Any]
    diagnostics: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return _EXIT[self.status]


def _load(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SystemExit(_usage_error(f"cannot read {path}: {exc}"))
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SystemExit(_usage_error(f"{path}: malformed JSON at byte {exc.pos}: {exc.msg}"))


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _default_budget() -> float | None:
    raw = os.environ.get("INVCOVER_BUDGET")
    if raw is None:
        return search_mod.DEFAULT_BUDGET_SECS
    try:
        return float(raw)
    except ValueError:
        raise SystemExit(_usage_error("INVCOVER_BUDGET must be a number"))


def _config(args: argparse.Namespace) -> search_mod.SearchConfig:
    budget = args.budget_secs if args.budget_secs is not None else _default_budget()
    return search_mod.SearchConfig(
        max_members=args.max_members,
        max_part_size=getattr(args, "max_part_size", None),
        max_vertices=getattr(args, "max_vertices", None),
        budget_secs=budget,
    )


# --- subcommand handlers --------------------------------------------------------


def _cmd_invert(args: argparse.Namespace) -> CommandResult:
    h = jsonio.hypergraph_from_doc(_load(args.file))
    if args.action == "verify":
        if args.permutation is None:
            raise jsonio.SchemaError("invert verify needs a permutation document")
        pi = jsonio.permutation_from_doc(_load(args.permutation))
        ok = pi.inverts(h)
        return CommandResult(OK if ok else FAIL, {"inverts": ok})
    if args.action == "check":
        pi = find_inverting_permutation(h)
        if pi is not None:
            return CommandResult(
                OK,
                {"invertible": True, "permutation": jsonio.permutation_to_doc(pi)},
            )
        witness = find_deficiency_set(h)
        assert witness is not None
        return CommandResult(
            FAIL,
            {
                "invertible": False,
                "deficiency_set": {
                    "vertices": sorted(witness.vertices),
                    "neighborhood": sorted(witness.neighborhood),
                },
            },
            [f"no perfect matching: {len(witness.vertices)} vertices see "
             f"{len(witness.neighborhood)} neighbors"],
        )
    critical = is_invertibility_critical(h)
    payload: dict[str, Any] = {"critical": critical}
    if not critical:
        edge = non_critical_witness_edge(h)
        if edge is not None:
            payload["witness_edge"] = sorted(edge)
    return CommandResult(OK if critical else FAIL, payload)


def _cmd_cover(args: argparse.Namespace) -> CommandResult:
    c = jsonio.cover_from_doc(_load(args.file))
    covering = is_edge_cover(c)
    minimal = is_minimal_edge_cover(c)
    payload: dict[str, Any] = {"edge_cover": covering, "minimal": minimal}
    if c.host.is_bipartite():
        payload["degrees"] = list(part_degrees(c))
    else:
        payload["degrees"] = [c.max_degree()]
    return CommandResult(OK if covering and minimal else FAIL, payload)


def _cmd_construct(args: argparse.Namespace) -> CommandResult:
    if args.action == "lower-bound":
        out = cons.lower_bound_cover(args.d)
    else:
        out = cons.double_cover(jsonio.cover_from_doc(_load(args.file)))
    return CommandResult(OK, jsonio.cover_to_doc(out))


def _cmd_reduce(args: argparse.Namespace) -> CommandResult:
    if args.action == "cover-to-critical":
        h = cons.cover_to_critical(jsonio.cover_from_doc(_load(args.file)))
        return CommandResult(OK, jsonio.hypergraph_to_doc(h))
    if args.action == "critical-to-cover":
        c = cons.critical_to_bipartite_cover(jsonio.hypergraph_from_doc(_load(args.file)))
        return CommandResult(OK, jsonio.cover_to_doc(c))
    c = cons.bipartite_to_complete_cover(jsonio.cover_from_doc(_load(args.file)))
    return CommandResult(OK, jsonio.cover_to_doc(c))


def _parse_element(item: Any) -> Any:
    if isinstance(item, str):
        return item
    if isinstance(item, list):
        return frozenset(_parse_element(x) for x in item)
    raise jsonio.SchemaError("family elements must be strings or nested lists")


def _family_from(doc_part: Any, what: str) -> list[frozenset]:
    if not isinstance(doc_part, list):
        raise jsonio.SchemaError(f"{what}: expected a list of sets")
    return [frozenset(_parse_element(x) for x in s) for s in doc_part]


def _element_doc(x: Any) -> Any:
    if isinstance(x, frozenset):
        return [_element_doc(e) for e in sorted(x, key=cons.element_key)]
    return x


def _family_doc(family) -> list:
    ordered = sorted(family, key=lambda s: (len(s), cons.element_key(frozenset(s))))
    return [_element_doc(frozenset(s)) for s in ordered]


def _cmd_covers(args: argparse.Namespace) -> CommandResult:
    doc = _load(args.file)
    if args.action == "to-edge-cover":
        if set(doc) - {"schema", "covered", "covers"}:
            raise jsonio.SchemaError("families: unknown keys present")
        f = _family_from(doc.get("covered"), "families.covered")
        hh = _family_from(doc.get("covers"), "families.covers")
        out = cons.covers_union_to_edge_cover(f, hh)
        return CommandResult(OK, jsonio.cover_to_doc(out))
    cover = jsonio.cover_from_doc(doc)
    f, hh = cons.edge_cover_to_cover_family(prune_nonessential(cover))
    payload = {
        "schema": "families/1",
        "covered": _family_doc(f),
        "covers": _family_doc(hh),
    }
    return CommandResult(OK, payload)


def _cmd_audit(args: argparse.Namespace) -> CommandResult:
    if args.action == "setpairs":
        families = jsonio.set_pairs_from_trace_doc(_load(args.file))
        report = []
        ok = True
        for i, fam in enumerate(families, start=1):
            crossing = audit_mod.verify_cross_intersection(fam)
            ok = ok and crossing
            entry: dict[str, Any] = {"level": i, "cross_intersecting": crossing}
            if crossing:
                total = audit_mod.bollobas_sum(fam)
                entry["sum"] = jsonio.fraction_str(total)
                ok = ok and total <= 1
            report.append(entry)
        return CommandResult(OK if ok else FAIL, {"levels": report})

    cover = jsonio.cover_from_doc(_load(args.file))
    cover = prune_nonessential(cover)
    d1, d2 = part_degrees(cover)
    roots = list(cover.host.part1) if args.all_roots else [None]
    traces = []
    for root in roots:
        trace = audit_mod.audit_upper_bound(cover, root=root)
        report = audit_mod.level_bounds_check(trace, d1, d2)
        traces.append((trace, report))
    trace, report = traces[0]
    payload = jsonio.trace_to_doc(trace)
    payload["bounds"] = {
        "members": report.total,
        "bound": report.final_bound,
        "tight": report.tight,
        "roots_checked": len(traces),
    }
    return CommandResult(OK, payload)


def _cmd_bounds(args: argparse.Namespace) -> CommandResult:
    if args.two_sided:
        d1, d2 = args.two_sided
        rep = bounds_mod.bounds_b2(d1, d2)
        payload = {
            "quantity": rep.quantity,
            "args": list(rep.args),
            "lower": rep.lower,
            "upper": rep.upper,
            "notes": list(rep.notes),
        }
        return CommandResult(OK, payload)
    rows = []
    for d in range(1, args.max_d + 1):
        b = bounds_mod.bounds_b(d)
        i = bounds_mod.bounds_i(d)
        rows.append(
            {
                "d": d,
                "b_lower": b.lower,
                "b_upper": b.upper,
                "i_lower": i.lower,
                "i_upper": i.upper,
                "i_known": i.known_exact,
            }
        )
    return CommandResult(OK, {"table": rows})


def _cmd_search(args: argparse.Namespace) -> CommandResult:
    cfg = _config(args)
    fn = {"b": search_mod.search_b, "c": search_mod.search_c, "i": search_mod.search_i}[
        args.quantity
    ]
    outcome = fn(args.d, cfg)
    if args.quantity == "i":
        witness_doc = (
            jsonio.hypergraph_to_doc(outcome.witness) if outcome.witness else None
        )
    else:
        witness_doc = jsonio.cover_to_doc(outcome.witness) if outcome.witness else None
    payload = {
        "quantity": outcome.quantity,
        "d": outcome.degree,
        "best": outcome.best,
        "exhaustive": outcome.exhaustive,
        "witness": witness_doc,
        "notes": list(outcome.notes),
    }
    partial = any("budget exhausted" in n for n in outcome.notes)
    return CommandResult(PARTIAL if partial else OK, payload)


def _cmd_solve(args: argparse.Namespace) -> CommandResult:
    inst = jsonio.instance_from_doc(_load(args.file))
    budget = args.budget_secs if args.budget_secs is not None else _default_budget()
    solution = search_mod.solve_general_cover(inst, budget_secs=budget)
    payload: dict[str, Any] = {"feasible": solution.feasible, "size": solution.size}
    if solution.feasible:
        payload["witness"] = [sorted(u) for u in solution.witness]
    return CommandResult(OK if solution.feasible else FAIL, payload)


def _cmd_repro(args: argparse.Namespace) -> CommandResult:
    del args
    checks: list[tuple[str, bool]] = []

    def record(name: str, value: bool) -> None:
        checks.append((name, value))

    rb1 = search_mod.search_b(1)
    record("b(1) = 1 exhaustively", rb1.best == 1 and rb1.exhaustive)
    rc1 = search_mod.search_c(1)
    record("c(1) = 1", rc1.best == 1)
    rb2 = search_mod.search_b(
        2, search_mod.SearchConfig(max_members=4, max_part_size=10)
    )
    record("b(2) = 4 exhaustively under the twin reduction", rb2.best == 4 and rb2.exhaustive)
    ri2 = search_mod.search_i(
        2, search_mod.SearchConfig(max_members=4, max_vertices=9)
    )
    record("i(2) best 3 within caps, not claimed exhaustive",
           ri2.best == 3 and not ri2.exhaustive)
    triangle = cons.cover_to_critical(all_pairs_cover(3))
    record("padded triangle is invertibility critical", is_invertibility_critical(triangle))
    record("bound table d=1", bounds_mod.bounds_b(1).upper == 1)
    record("bound table d=2 is tight", bounds_mod.bounds_b(2).lower == 4
           and bounds_mod.bounds_b(2).upper == 4)
    cover2 = prune_nonessential(cons.lower_bound_cover(2))
    trace = audit_mod.audit_upper_bound(cover2)
    report = audit_mod.level_bounds_check(trace, 2, 2)
    record("audit at degree 2 is tight (4 of 4)", report.tight and report.total == 4)
    chain = search_mod.chain_check(2, search_mod.SearchConfig(budget_secs=2.0))
    record("chain c(2) <= i(2) <= b(2) <= c(3)", chain.holds)

    ok = all(flag for _, flag in checks)
    diagnostics = [f"{'PASS' if flag else 'FAIL'}  {name}" for name, flag in checks]
    return CommandResult(
        OK if ok else FAIL,
        {"checks": [{"name": n, "pass": f} for n, f in checks]},
        diagnostics,
    )


# --- argument parsing -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invcover",
        description="hypergraph invertibility and minimal edge cover toolkit",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("json", "text"), default="json", help="output format"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invert", help="invertibility checks", parents=[common])
    p.add_argument("action", choices=("check", "critical", "verify"))
    p.add_argument("file")
    p.add_argument("permutation", nargs="?", help="permutation document for verify")
    p.set_defaults(handler=_cmd_invert)

    p = sub.add_parser("cover", help="cover verification", parents=[common])
    p.add_argument("action", choices=("verify",))
    p.add_argument("file")
    p.set_defaults(handler=_cmd_cover)

    p = sub.add_parser("construct", help="explicit constructions", parents=[common])
    p.add_argument("action", choices=("lower-bound", "double"))
    p.add_argument("--d", type=int, help="level for lower-bound")
    p.add_argument("file", nargs="?", help="cover document for double")
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser(
        "reduce", help="reductions between covers and hypergraphs", parents=[common]
    )
    p.add_argument(
        "action",
        choices=("cover-to-critical", "critical-to-cover", "bipartite-to-complete"),
    )
    p.add_argument("file")
    p.set_defaults(handler=_cmd_reduce)

    p = sub.add_parser(
        "covers", help="minimal-cover family correspondence", parents=[common]
    )
    p.add_argument("action", choices=("to-edge-cover", "from-edge-cover"))
    p.add_argument("file")
    p.set_defaults(handler=_cmd_covers)

    p = sub.add_parser(
        "audit", help="replay the upper-bound argument", parents=[common]
    )
    p.add_argument("action", choices=("upper-bound", "setpairs"))
    p.add_argument("file")
    p.add_argument("--all-roots", action="store_true")
    p.set_defaults(handler=_cmd_audit)

    p = sub.add_parser("bounds", help="closed-form bound tables", parents=[common])
    p.add_argument("action", choices=("table",))
    p.add_argument("--max-d", type=int, default=4)
    p.add_argument("--two-sided", type=int, nargs=2, metavar=("D1", "D2"))
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("search", help="bounded exhaustive searches", parents=[common])
    p.add_argument("quantity", choices=("b", "c", "i"))
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--max-members", type=int)
    p.add_argument("--max-part-size", type=int)
    p.add_argument("--max-vertices", type=int)
    p.add_argument("--budget-secs", type=float)
    p.set_defaults(handler=_cmd_search)

    p = sub.add_parser("solve", help="exact capped cover solver", parents=[common])
    p.add_argument("action", choices=("general",))
    p.add_argument("file")
    p.add_argument("--budget-secs", type=float)
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser(
        "repro", help="reproduce the known small values", parents=[common]
    )
    p.add_argument("action", choices=("known-values",))
    p.set_defaults(handler=_cmd_repro)

    return parser


def _validate(args: argparse.Namespace, parser: argparse.ArgumentParser) -> None:
    if args.command == "construct":
        if args.action == "lower-bound" and args.d is None:
            parser.error("construct lower-bound requires --d")
        if args.action == "double" and args.file is None:
            parser.error("construct double requires a cover document")


def _render_text(payload: dict[str, Any]) -> str:
    if "table" in payload:
        lines = ["d  b_lower  b_upper  i_lower  i_upper"]
        for row in payload["table"]:
            lines.append(
                f"{row['d']:<2} {row['b_lower']:<8} {row['b_upper']:<8} "
                f"{row['i_lower']:<8} {row['i_upper']:<8}"
            )
        return "\n".join(lines) + "\n"
    if "checks" in payload:
        return "\n".join(
            f"{'PASS' if c['pass'] else 'FAIL'}  {c['name']}" for c in payload["checks"]
        ) + "\n"
    return "\n".join(f"{k}: {v}" for k, v in payload.items()) + "\n"


def run(argv: Sequence[str]) -> CommandResult:
    """Parse and execute; raises SystemExit(2) on usage or parse errors."""
    result, _ = _run_parsed(argv)
    return result


def _run_parsed(argv: Sequence[str]) -> tuple[CommandResult, argparse.Namespace]:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(args, parser)
    try:
        return args.handler(args), args
    except search_mod.BudgetExhausted as exc:
        return CommandResult(PARTIAL, {"error": str(exc)}, [str(exc)]), args
    except (jsonio.SchemaError, DomainError, ContractError) as exc:
        raise SystemExit(_usage_error(str(exc)))
    except audit_mod.AuditFailure as exc:
        return CommandResult(FAIL, {"error": str(exc)}, [str(exc)]), args


def main(argv: Sequence[str] | None = None) -> int:
    result, args = _run_parsed(sys.argv[1:] if argv is None else list(argv))
    if getattr(args, "format", "json") == "text":
        sys.stdout.write(_render_text(result.payload))
    else:
        sys.stdout.write(jsonio.dumps(result.payload))
        for line in result.diagnostics:
            print(line, file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
