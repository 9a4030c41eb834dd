"""Command-line front end.

    maxsym max --kind EA° --alpha 19
    maxsym max --kind E --range 2..50 --json
    maxsym verify --suite facts
    maxsym construct --model platonic:I --twist all --format obj -o ico.obj

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterator

from . import classify
from .classify import MaxActionResult, UnboundedOrder

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def canonical_kind(kind: str) -> str:
    """Accept both ``EA°`` and ``EAo`` spellings."""
    k = kind.strip().replace("°", "o").replace("^o", "o")
    if k not in classify.KINDS:
        raise UsageError(f"unknown kind {kind!r}; choose from {', '.join(display_kind(x) for x in classify.KINDS)}")
    return k


def display_kind(kind: str) -> str:
    return kind[:-1] + "°" if kind.endswith("o") else kind


def parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError:
        raise UsageError(f"range must look like lo..hi, got {text!r}") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return lo, hi


# ------------------------------------------------------------------------- rendering


def render_surface(s) -> str:
    return f"{s.sigma_notation} [{s}]"


def render_witness(w) -> str:
    parts = [w.group]
    if w.rs:
        parts.append(f"({w.rs[0]},{w.rs[1]})")
    if w.pair:
        parts.append("{" + ", ".join(w.pair) + "}")
    if w.case:
        parts.append(w.case)
    if w.boundary is not None:
        parts.append(f"b={w.boundary}")
    return " ".join(parts)


def render_text(res: MaxActionResult) -> str:
    surfaces = ", ".join(render_surface(s) for s in res.surfaces) or "-"
    wit = "; ".join(render_witness(w) for w in res.witnesses)
    flags = f"  [{', '.join(res.flags)}]" if res.flags else ""
    return f"{display_kind(res.kind):<13}{res.input:>8}{res.order:>10}  {surfaces}  | {wit}{flags}"


def render_json(res: MaxActionResult) -> str:
    return json.dumps(res.to_json(), ensure_ascii=False, sort_keys=True)


def results(kind: str, inputs: range) -> Iterator[MaxActionResult]:
    for n in inputs:
        yield classify.max_order(kind, n)


# -------------------------------------------------------------------------- commands


def cmd_max(args, out) -> int:
    kind = canonical_kind(args.kind)
    if args.faithful:
        if kind != "CEA":
            raise UsageError("--faithful only applies to CEA")
        kind = "CEA-faithful"
    closed = kind in classify.CLOSED_KINDS
    if args.genus is not None and not closed:
        raise UsageError(f"{display_kind(kind)} takes --alpha, not --genus")
    if args.alpha is not None and closed:
        raise UsageError(f"{display_kind(kind)} takes --genus, not --alpha")
    value = args.genus if args.genus is not None else args.alpha
    lo, hi = parse_range(args.range) if args.range else (value, value)
    if lo <= 1:
        raise UnboundedOrder(classify.UNBOUNDED)
    render = render_json if args.json else render_text
    if not args.json:
        label = "g" if closed else "alpha"
        print(f"{'kind':<13}{label:>8}{'order':>10}  surfaces  | witnesses", file=out)
    for res in results(kind, range(lo, hi + 1)):
        print(render(res), file=out, flush=True)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    from .verify import run_suite
    lo = hi = None
    if args.range:
        lo, hi = parse_range(args.range)
        if lo <= 1:
            raise UnboundedOrder(classify.UNBOUNDED)
    try:
        reports = run_suite(args.suite, lo, hi)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ok = True
    for rep in reports:
        for c in rep.checks:
            mark = "PASS" if c.ok else "FAIL"
            print(f"[{mark}] {rep.suite}: {c.name}" + (f"  ({c.detail})" if c.detail else ""), file=out)
        print(rep.summary(), file=out)
        ok &= rep.ok
    if not ok:
        print("failures:", file=out)
        for rep in reports:
            for c in rep.failures():
                print(f"  {rep.suite}: {c.name}: {c.detail}", file=out)
    return EXIT_OK if ok else EXIT_FAIL


def build_model(model: str):
    """Graph for a model string, or raise UsageError."""
    from .constructions import build_dipole, build_genus21, build_platonic, build_triacontahedron
    parts = model.split(":")
    try:
        if parts[0] == "dipole" and len(parts) == 3:
            return build_dipole(int(parts[1]), int(parts[2]))[0]
        if parts[0] == "platonic" and len(parts) == 2 and parts[1] in ("T", "C", "O", "D", "I"):
            return build_platonic(parts[1])[0]
        if parts == ["genus21"]:
            return build_genus21()[0]
        if parts == ["triacontahedron"]:
            return build_triacontahedron()[0]
    except ValueError as exc:
        raise UsageError(f"invalid model {model!r}: {exc}") from None
    raise UsageError(f"invalid model {model!r}; expected dipole:g:variant, platonic:T|C|O|D|I, "
                     "genus21 or triacontahedron")


def cmd_construct(args, out) -> int:
    from .constructions import (RibbonError, export_geometry, fixtures, ribbon_from_embedding,
                                ribbon_surface_type)
    graph = build_model(args.model)
    obj = graph
    if args.twist is not None:
        try:
            if args.twist.startswith("fixture:"):
                name = args.twist.split(":", 1)[1]
                fx = fixtures.FIXTURES.get(name)
                if fx is None:
                    raise UsageError(f"unknown fixture {name!r}; known: {', '.join(fixtures.FIXTURES)}")
                if fx.model != args.model:
                    raise UsageError(f"fixture {name!r} belongs to model {fx.model!r}")
                obj = fixtures.load(name)
            elif args.twist in ("none", "all"):
                obj = ribbon_from_embedding(graph, [int(args.twist == "all")] * graph.E)
            else:
                raise UsageError("twist must be none, all or fixture:<name>")
        except RibbonError as exc:
            raise UsageError(f"cannot thicken {args.model}: {exc}") from None
    data = export_geometry(obj, args.format)
    with open(args.output, "wb") as fh:
        fh.write(data)
    if obj is graph:
        print(f"{args.model}: V={graph.V} E={graph.E} genus={graph.genus} -> {args.output}", file=out)
    else:
        st = ribbon_surface_type(obj)
        print(f"{st.sigma_notation} [{st}] alpha={st.algebraic_genus} -> {args.output}", file=out)
    return EXIT_OK


# ------------------------------------------------------------------------------ main


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="maxsym", description="Maximum orders of extendable finite group actions on surfaces in R^3.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    m = sub.add_parser("max", help="maximum order for one input or a range")
    m.add_argument("--kind", required=True, help="CE°, CE, E°, E, CEA°, CEA, CEA-faithful, EA°, EA, CEG°, CEG, EG°, EG")
    src = m.add_mutually_exclusive_group(required=True)
    src.add_argument("--genus", type=int)
    src.add_argument("--alpha", type=int)
    src.add_argument("--range", help="inclusive lo..hi, one result per line")
    m.add_argument("--json", action="store_true")
    m.add_argument("--faithful", action="store_true", help="with CEA: faithful actions only")
    m.set_defaults(func=cmd_max)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True, choices=["facts", "tables", "ribbon", "constructions", "all"])
    v.add_argument("--range", help="lo..hi for the tables suite")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("construct", help="build and export an equivariant graph or ribbon")
    c.add_argument("--model", required=True)
    c.add_argument("--twist", help="none, all or fixture:<name>; thickens the graph to a ribbon")
    c.add_argument("--format", required=True, choices=["json", "obj"])
    c.add_argument("-o", "--output", required=True)
    c.set_defaults(func=cmd_construct)
    return p


def _check_tol_env() -> None:
    raw = os.environ.get("MAXSYM_TOL")
    if raw is None:
        return
    try:
        tol = float(raw)
    except ValueError:
        raise UsageError(f"MAXSYM_TOL must be a number, got {raw!r}") from None
    if not tol > 0:
        raise UsageError("MAXSYM_TOL must be positive")


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        _check_tol_env()
        args = make_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"maxsym: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnboundedOrder as exc:
        print(f"maxsym: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
