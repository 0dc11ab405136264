"""Command line surface.

Subcommands: construct, verify, classify, search, catalog.  JSON output is
the canonical interchange format and round-trips through the design-file
codec; text output is for human eyes and deliberately not re-parseable.

Exit codes: 0 success, 1 verification failure or nonexistence, 2 bad usage
or unparseable input, 3 search stopped by its node budget.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from .catalog import CatalogKey, CatalogKind
from .catalog import get as catalog_get
from .catalog import keys as catalog_keys
from .constructions import (
    InfeasibleOrderError,
    max_multipack,
    min_multicover,
    multidecompose,
)
from .core import Complete, CompleteBipartite, Design, host_vertices
from .designfile import (
    DesignFileError,
    dumps_design,
    load_design,
    render_text,
    save_design,
)
from .feasibility import FeasibilityReport, UnsupportedOrderError, classify
from .search import SearchConfig, SearchOutcome, Status, search_multidecomposition
from .verifier import VerificationReport, verify_design

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

# hosts beyond the small-host limit need some budget; this default keeps
# interactive use from hanging while staying generous for catalog-scale runs
DEFAULT_BUDGET = 200_000

_CONSTRUCTORS = {
    "decomposition": multidecompose,
    "packing": max_multipack,
    "covering": min_multicover,
}


def _fail(message: str, code: int) -> int:
    print(message, file=sys.stderr)
    return code


def _emit_design(design: Design, fmt: str, output: str | None) -> None:
    text = dumps_design(design) if fmt == "json" else render_text(design)
    if output is None:
        sys.stdout.write(text)
    elif fmt == "json":
        save_design(design, output)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _feasibility_obj(report: FeasibilityReport) -> dict:
    return {
        "n": report.n,
        "decomposition_exists": report.decomposition_exists,
        "min_leave": report.min_leave,
        "min_padding": report.min_padding,
        "block_solutions": sorted(map(list, report.block_solutions)),
        "degree_solutions": sorted(map(list, report.degree_solutions)),
        "annotation": report.annotation,
    }


def _feasibility_text(report: FeasibilityReport) -> str:
    lines = [
        f"order {report.n}",
        f"decomposition exists: {'yes' if report.decomposition_exists else 'no'}",
        f"minimum leave size: {report.min_leave}",
        f"minimum padding size: {report.min_padding}",
        "block count solutions (hexagons, prisms): "
        + (", ".join(str(s) for s in sorted(report.block_solutions)) or "none"),
        f"degree solutions (p, q) at degree {report.n - 1}: "
        + (", ".join(str(s) for s in sorted(report.degree_solutions)) or "none"),
    ]
    if report.annotation:
        lines.append(f"note: {report.annotation}")
    return "\n".join(lines) + "\n"


def _print_feasibility(report: FeasibilityReport, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(_feasibility_obj(report), indent=2))
    else:
        sys.stdout.write(_feasibility_text(report))


def _verification_obj(report: VerificationReport) -> dict:
    return {
        "valid": report.valid,
        "failures": [
            {
                "code": f.code,
                "message": f.message,
                "blocks": list(f.blocks),
                "edges": [list(e) for e in f.edges],
            }
            for f in report.failures
        ],
        "hexagon_count": report.hexagon_count,
        "prism_count": report.prism_count,
        "leave": [list(e) for e in sorted(report.leave)],
        "padding": [list(e) for e in report.padding],
        "incidence": {str(v): list(pq) for v, pq in sorted(report.incidence.items())},
    }


def _verification_text(report: VerificationReport) -> str:
    lines = [
        f"valid: {'yes' if report.valid else 'no'}",
        f"hexagons: {report.hexagon_count}",
        f"prisms: {report.prism_count}",
        "leave: " + (", ".join(str(e) for e in sorted(report.leave)) or "none"),
        "padding: " + (", ".join(str(e) for e in report.padding) or "none"),
    ]
    for f in report.failures:
        lines.append(f"failure [{f.code}]: {f.message}")
    return "\n".join(lines) + "\n"


def cmd_construct(args) -> int:
    try:
        design = _CONSTRUCTORS[args.kind](args.n)
    except InfeasibleOrderError as exc:
        print(exc, file=sys.stderr)
        _print_feasibility(exc.report, args.format)
        return EXIT_FAIL
    except UnsupportedOrderError as exc:
        return _fail(str(exc), EXIT_USAGE)
    report = verify_design(design)
    if not report.valid:
        codes = ", ".join(f.code for f in report.failures)
        return _fail(f"constructed design failed verification: {codes}", EXIT_FAIL)
    try:
        _emit_design(design, args.format, args.output)
    except OSError as exc:
        return _fail(f"cannot write {args.output}: {exc}", EXIT_USAGE)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        design = load_design(args.input)
    except OSError as exc:
        return _fail(f"cannot read {args.input}: {exc}", EXIT_USAGE)
    except DesignFileError as exc:
        return _fail(f"cannot parse {args.input}: {exc}", EXIT_USAGE)
    report = verify_design(design)
    if args.format == "json":
        print(json.dumps(_verification_obj(report), indent=2))
    else:
        sys.stdout.write(_verification_text(report))
    return EXIT_OK if report.valid else EXIT_FAIL


def cmd_classify(args) -> int:
    try:
        report = classify(args.n)
    except UnsupportedOrderError as exc:
        return _fail(str(exc), EXIT_USAGE)
    _print_feasibility(report, args.format)
    return EXIT_OK


def _parse_host(args):
    if args.host is None:
        if args.n is None:
            raise ValueError("search needs --host or --n")
        return Complete(args.n)
    tag, _, rest = args.host.partition(":")
    if tag == "complete":
        return Complete(int(rest))
    if tag == "bipartite":
        m_str, _, n_str = rest.partition("x")
        m, n = int(m_str), int(n_str)
        if m < 1 or n < 1:
            raise ValueError("bipartite sides must be positive")
        return CompleteBipartite(frozenset(range(m)), frozenset(range(m, m + n)))
    raise ValueError(f"unknown host {args.host!r}; use complete:N or bipartite:MxN")


def _outcome_obj(outcome: SearchOutcome) -> dict:
    obj = {
        "status": outcome.status.value,
        "nodes": outcome.stats.nodes,
        "placements": outcome.stats.placements,
        "max_depth": outcome.stats.max_depth,
        "design": None,
    }
    if outcome.design is not None:
        obj["design"] = json.loads(dumps_design(outcome.design))
    return obj


def cmd_search(args) -> int:
    try:
        host = _parse_host(args)
    except ValueError as exc:
        return _fail(str(exc), EXIT_USAGE)
    both = args.blocks == "both"
    config = SearchConfig(
        hexagons=args.blocks in ("both", "hexagon"),
        prisms=args.blocks in ("both", "prism"),
        min_hexagons=1 if both else 0,
        min_prisms=1 if both else 0,
        node_budget=args.budget,
        symmetry_breaking=True,
    )
    if config.node_budget is None and len(host_vertices(host)) > 10:
        config = dataclasses.replace(config, node_budget=DEFAULT_BUDGET)
    outcome = search_multidecomposition(host, config)
    if args.format == "json":
        print(json.dumps(_outcome_obj(outcome), indent=2))
    else:
        print(f"status: {outcome.status.value}")
        print(
            f"nodes: {outcome.stats.nodes}  placements: {outcome.stats.placements}"
            f"  max depth: {outcome.stats.max_depth}"
        )
        if outcome.design is not None:
            sys.stdout.write(render_text(outcome.design))
    if outcome.status is Status.FOUND:
        if args.output is not None:
            try:
                save_design(outcome.design, args.output)
            except OSError as exc:
                return _fail(f"cannot write {args.output}: {exc}", EXIT_USAGE)
        return EXIT_OK
    if outcome.status is Status.BUDGET:
        return EXIT_INCONCLUSIVE
    return EXIT_FAIL


def _key_string(key: CatalogKey) -> str:
    if isinstance(key.order, tuple):
        return f"{key.kind.value}:{key.order[0]}x{key.order[1]}"
    return f"{key.kind.value}:{key.order}"


def _parse_key(text: str) -> CatalogKey:
    tag, _, rest = text.partition(":")
    kind = CatalogKind(tag)
    if kind is CatalogKind.BIPARTITE_HEXAGONS:
        m_str, _, n_str = rest.partition("x")
        return CatalogKey(kind, (int(m_str), int(n_str)))
    return CatalogKey(kind, int(rest))


def cmd_catalog(args) -> int:
    if args.key is None:
        for key in catalog_keys():
            print(_key_string(key))
        return EXIT_OK
    try:
        key = _parse_key(args.key)
        design = catalog_get(key)
    except (ValueError, KeyError):
        known = ", ".join(_key_string(k) for k in catalog_keys())
        return _fail(f"unknown catalog key {args.key!r}; known keys: {known}", EXIT_USAGE)
    try:
        _emit_design(design, args.format, args.output)
    except OSError as exc:
        return _fail(f"cannot write {args.output}: {exc}", EXIT_USAGE)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hexprism",
        description="Construct, verify, and search hexagon/prism designs on complete graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format",
            choices=["json", "text"],
            default="json",
            help="json is canonical and machine-readable; text is for reading",
        )

    p = sub.add_parser("construct", help="build a decomposition, packing, or covering of K_n")
    p.add_argument("--n", type=int, required=True, help="number of vertices")
    p.add_argument(
        "--kind", choices=sorted(_CONSTRUCTORS), required=True, help="what to construct"
    )
    add_format(p)
    p.add_argument("--output", help="write the design file here instead of stdout")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a design file independently of how it was made")
    p.add_argument("input", help="path to a JSON design file")
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="report feasibility bounds for an order")
    p.add_argument("--n", type=int, required=True, help="number of vertices")
    add_format(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("search", help="exhaustive backtracking search for a decomposition")
    p.add_argument("--n", type=int, help="shorthand for --host complete:N")
    p.add_argument("--host", help="complete:N or bipartite:MxN")
    p.add_argument(
        "--blocks",
        choices=["both", "hexagon", "prism"],
        default="both",
        help="allowed block shapes; 'both' also requires one of each in the result",
    )
    p.add_argument(
        "--budget",
        type=int,
        help=f"node budget; hosts over 10 vertices default to {DEFAULT_BUDGET}",
    )
    add_format(p)
    p.add_argument("--output", help="write the found design file here")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("catalog", help="list bundled designs, or export one by key")
    p.add_argument("key", nargs="?", help="e.g. decomposition:13, packing:9, bipartite:4x6")
    add_format(p)
    p.add_argument("--output", help="write the design file here instead of stdout")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
