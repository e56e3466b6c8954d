"""Batch command-line surface.

Three subcommands, each a thin wrapper around one library call chain:

    globflow realize INPUT [--pv] [-o OUT]      complex (or PV source) -> flow file
    globflow analyze INPUT --deadlocks | --classes SRC TGT | --germs STATE
                           [--minus|--plus] | --t-check FILE | --s-equiv FILE
    globflow dot INPUT [-o OUT]                 complex or flow -> DOT text

Exit codes: 0 success, 1 input error, 2 axiom violation, 3 search budget
exhausted.  The environment variable GLOBFLOW_SEARCH_BUDGET overrides the
default candidate budget of the --s-equiv search.  All output is sorted,
so repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import os
import sys

from .complexes import GlobularComplex, validate_complex
from .equivalence import (
    BUDGET_ENV_VAR,
    DEFAULT_SEARCH_BUDGET,
    check_t_dihomotopy,
    s_equivalent,
)
from .errors import (
    FormatError,
    GlobflowError,
    InvalidComplexError,
    InvalidFlowError,
    SearchBudgetExceeded,
)
from .flows import (
    FiniteFlow,
    deadlocks,
    dihomotopy_classes,
    germs,
    validate_flow,
)
from .formats import (
    dumps_flow,
    loads_complex,
    loads_flow,
    loads_morphism,
    _parse_json,
)
from .pv import parse_pv, pv_to_complex
from .realization import realize


# ---------------------------------------------------------------------------
# report formatting (stable, machine-diffable)


def deadlocks_report(states) -> str:
    return "\n".join([f"{len(states)} deadlocks"] + [f"  {s}" for s in states])


def classes_report(blocks) -> str:
    lines = [f"{len(blocks)} classes"]
    for i, block in enumerate(blocks):
        lines.append(f"  class {i}: " + " ".join(block))
    return "\n".join(lines)


def germs_report(germ_set) -> str:
    lines = [f"{len(germ_set.classes)} germs"]
    for i, block in enumerate(germ_set.classes):
        lines.append(f"  germ {i}: " + " ".join(block))
    return "\n".join(lines)


def t_check_report(report) -> str:
    def mark(ok):
        return "ok" if ok else "fail"

    head = (
        f"T-dihomotopy: {'yes' if report.holds else 'no'} "
        f"(1 {mark(report.restriction_isomorphism)}, "
        f"2 {mark(report.singleton_germs)}, "
        f"3 {mark(report.image_extension)})"
    )
    return "\n".join([head] + [f"  {d}" for d in report.details])


def s_equiv_report(witness) -> str:
    if witness is None:
        return "S-equivalent: no"
    f, g = witness
    lines = ["S-equivalent: yes"]
    for name, morphism in (("f", f), ("g", g)):
        lines.append(
            f"  {name} state_map: "
            + " ".join(f"{a}->{b}" for a, b in sorted(morphism.state_map.items()))
        )
        lines.append(
            f"  {name} path_map: "
            + " ".join(f"{a}->{b}" for a, b in sorted(morphism.path_map.items()))
        )
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# DOT export


def _quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(obj) -> str:
    """Render a complex or flow as deterministic DOT text.

    States become nodes (finals doubly circled, the init bold); edges or
    paths become labeled arrows; squares and adjacency pairs become dashed
    links between the shared endpoints.
    """
    if isinstance(obj, GlobularComplex):
        lines = ["digraph complex {"]
        finals = set(obj.finals)
        for s in sorted(obj.states):
            attrs = []
            if s in finals:
                attrs.append("peripheries=2")
            if s == obj.init:
                attrs.append("style=bold")
            lines.append(f"  {_quote(s)}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
        for e in sorted(obj.edges, key=lambda e: e.id):
            label = e.id if e.label is None else f"{e.id}: {e.label}"
            lines.append(f"  {_quote(e.src)} -> {_quote(e.tgt)} [label={_quote(label)}];")
        for q in sorted(obj.squares, key=lambda q: q.id):
            src, tgt = obj.path_source(q.left), obj.path_target(q.left)
            lines.append(
                f"  {_quote(src)} -> {_quote(tgt)} "
                f"[label={_quote(q.id)}, style=dashed, constraint=false];"
            )
        lines.append("}")
        return "\n".join(lines) + "\n"

    if isinstance(obj, FiniteFlow):
        lines = ["digraph flow {"]
        for s in sorted(obj.skeleton):
            lines.append(f"  {_quote(s)};")
        for p in obj.sorted_paths:
            src, tgt = obj.path_ends[p]
            lines.append(f"  {_quote(src)} -> {_quote(tgt)} [label={_quote(p)}];")
        for a, b in sorted(obj.adjacency):
            src, tgt = obj.path_ends[a]
            lines.append(
                f"  {_quote(src)} -> {_quote(tgt)} "
                f"[label={_quote(f'{a} ~ {b}')}, style=dashed, constraint=false];"
            )
        lines.append("}")
        return "\n".join(lines) + "\n"

    raise TypeError(f"cannot export {type(obj).__name__} as DOT")


# ---------------------------------------------------------------------------
# subcommands


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def cmd_realize(args) -> int:
    text = _read(args.input)
    if args.pv:
        complex_ = pv_to_complex(parse_pv(text))
    else:
        complex_ = loads_complex(text)
    report = validate_complex(complex_)
    for warning in report.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    if not report.ok:
        raise InvalidComplexError(report.violations)
    flow = realize(complex_)
    _write(args.output, dumps_flow(flow, init=complex_.init, finals=complex_.finals))
    return 0


def _load_checked_flow(text: str):
    flow, annotations = loads_flow(text)
    report = validate_flow(flow)
    if not report.ok:
        raise InvalidFlowError(report.violations)
    return flow, annotations


def _resolve_state(name: str, flow: FiniteFlow, annotations) -> str:
    """Allow the literals "init" and "final" when annotations pin them down."""
    if name in flow.skeleton:
        return name
    if name == "init" and "init" in annotations:
        return annotations["init"]
    if name == "final" and len(annotations.get("finals", ())) == 1:
        return annotations["finals"][0]
    return name


def cmd_analyze(args) -> int:
    flow, annotations = _load_checked_flow(_read(args.input))

    if args.deadlocks:
        init = args.init or annotations.get("init")
        if init is None:
            raise FormatError(
                "deadlock analysis needs --init or an init annotation in the flow file"
            )
        if args.finals is not None:
            finals = [s for s in args.finals.split(",") if s]
        else:
            finals = annotations.get("finals", [])
        print(deadlocks_report(deadlocks(flow, init, finals)))
    elif args.classes is not None:
        src, tgt = (_resolve_state(s, flow, annotations) for s in args.classes)
        print(classes_report(dihomotopy_classes(flow, src, tgt)))
    elif args.germs is not None:
        state = _resolve_state(args.germs, flow, annotations)
        sign = "plus" if args.plus else "minus"
        print(germs_report(germs(flow, state, sign)))
    elif args.t_check is not None:
        morphism, codomain, _ = loads_morphism(_read(args.t_check))
        print(t_check_report(check_t_dihomotopy(morphism, flow, codomain)))
    elif args.s_equiv is not None:
        other, _ = _load_checked_flow(_read(args.s_equiv))
        budget = int(os.environ.get(BUDGET_ENV_VAR, DEFAULT_SEARCH_BUDGET))
        print(s_equiv_report(s_equivalent(flow, other, budget=budget)))
    return 0


def cmd_dot(args) -> int:
    doc = _parse_json(_read(args.input), "input document")
    if isinstance(doc, dict) and "states" in doc:
        from .formats import complex_from_doc

        _write(args.output, export_dot(complex_from_doc(doc)))
    elif isinstance(doc, dict) and "skeleton" in doc:
        from .formats import flow_from_doc

        _write(args.output, export_dot(flow_from_doc(doc)[0]))
    else:
        raise FormatError("input document: neither a complex nor a flow")
    return 0


# ---------------------------------------------------------------------------
# argument parsing and dispatch


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="globflow",
        description="Globular-complex and flow analyses for concurrent programs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    realize_p = sub.add_parser("realize", help="realize a complex (or PV program) as a flow")
    realize_p.add_argument("input", help="complex JSON file, or PV source with --pv ('-' = stdin)")
    realize_p.add_argument("--pv", action="store_true", help="treat input as PV source")
    realize_p.add_argument("-o", "--output", default="-", help="flow JSON output ('-' = stdout)")
    realize_p.set_defaults(func=cmd_realize)

    analyze_p = sub.add_parser("analyze", help="run one analysis on a flow file")
    analyze_p.add_argument("input", help="flow JSON file ('-' = stdin)")
    what = analyze_p.add_mutually_exclusive_group(required=True)
    what.add_argument("--deadlocks", action="store_true", help="reachable stuck states")
    what.add_argument("--classes", nargs=2, metavar=("SRC", "TGT"),
                      help="dihomotopy classes of paths SRC -> TGT")
    what.add_argument("--germs", metavar="STATE", help="germ classes at STATE")
    what.add_argument("--t-check", metavar="FILE", dest="t_check",
                      help="check the morphism in FILE (domain = input flow) for T-dihomotopy")
    what.add_argument("--s-equiv", metavar="FILE", dest="s_equiv",
                      help="search for an S-equivalence with the flow in FILE")
    sign = analyze_p.add_mutually_exclusive_group()
    sign.add_argument("--minus", action="store_true", help="backward germs (default)")
    sign.add_argument("--plus", action="store_true", help="forward germs")
    analyze_p.add_argument("--init", help="initial state for --deadlocks")
    analyze_p.add_argument("--finals", help="comma-separated final states for --deadlocks")
    analyze_p.set_defaults(func=cmd_analyze)

    dot_p = sub.add_parser("dot", help="export a complex or flow as DOT")
    dot_p.add_argument("input", help="complex or flow JSON file ('-' = stdin)")
    dot_p.add_argument("-o", "--output", default="-", help="DOT output ('-' = stdout)")
    dot_p.set_defaults(func=cmd_dot)

    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1

    try:
        return args.func(args)
    except SearchBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InvalidComplexError, InvalidFlowError) as exc:
        for violation in exc.violations:
            print(f"violation: {violation}", file=sys.stderr)
        return 2
    except (GlobflowError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
