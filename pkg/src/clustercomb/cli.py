"""Command-line front end.

Subcommands: count (value tables), enumerate (exhaustive generation as JSON
lines), map (apply a named bijection to a JSON object on stdin), induct
(apply a step list to a tree), orbit (induction equivalence class), verify
(run a named check suite), export (DOT output).

Exit codes: 0 ok, 1 usage error, 2 verification mismatch, 3 validation error.
Set CLUSTERCOMB_MAX_WORK to raise the enumeration work ceiling.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import bijections as bij
from . import counting as cnt
from . import verify as ver
from .angulations import (
    ColouredAngulation,
    LabelledAngulation,
    MAngulation,
    RootedAngulation,
    dual_tree_dot,
)
from .core import CircularOrder, ColouredForest, ColouredTree, tree_to_dot
from .diagrams import RnaDiagram
from .errors import ClustercombError, ValidationError
from .induction import InductionStep, apply_steps, orbit
from .tables import S_TABLE, T_TABLE, U_TABLE


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        sys.exit(1)


def _count_row(family: str, m: int, kmax: int) -> list[int]:
    if family == "T":
        return [cnt.t_count(k, m) for k in range(kmax + 1)]
    if family == "S":
        return [cnt.s_count(k, m) for k in range(kmax + 1)]
    if family == "U":
        return [cnt.u_count(k, m) for k in range(1, kmax + 1)]
    if family == "fuss":
        return [cnt.fuss_catalan(k, m) for k in range(kmax + 1)]
    raise ValueError(family)


def _cmd_count(args) -> int:
    tables = {"T": T_TABLE, "S": S_TABLE, "U": U_TABLE}
    status = 0
    for m in args.m:
        row = _count_row(args.family, m, args.kmax)
        print("\t".join(str(v) for v in row))
        if args.check and args.family in tables:
            table = tables[args.family].get(m)
            if table is None:
                continue
            if args.family == "U":
                ref = list(table[: args.kmax])
            else:
                ref = list(table[: args.kmax + 1])
            if row[: len(ref)] != ref:
                print(f"mismatch against reference table at m={m}", file=sys.stderr)
                status = 2
    return status


def _cmd_enumerate(args) -> int:
    if args.family == "trees":
        order = None
        if args.order == "desc":
            order = CircularOrder.descending(args.k)
        elif args.order and args.order.startswith("cycle:"):
            cyc = [int(x) for x in args.order.split(":", 1)[1].split(",")]
            order = CircularOrder.from_cycle(cyc)
        elif args.order:
            order = CircularOrder(tuple(int(x) for x in args.order.split(",")))
        for t in cnt.enumerate_trees(args.k, args.m, order):
            print(t.to_json())
    elif args.family == "diagrams":
        for d in cnt.enumerate_diagrams(args.k, args.m, args.connected, args.noncrossing):
            print(d.to_json())
    elif args.family == "angulations":
        for a in cnt.enumerate_angulations(args.k, args.m):
            print(a.to_json())
    return 0


def _load_object(text: str):
    d = json.loads(text)
    if "edges" in d and "root" in d:
        bare = json.dumps({k: v for k, v in d.items() if k != "root"})
        return bij.RootedTree.from_tree(ColouredTree.from_json(bare), d["root"])
    if "edges" in d:
        return ColouredTree.from_json(text) if len(d["edges"]) == d["k"] - 1 else ColouredForest.from_json(text)
    if "arcs" in d:
        return RnaDiagram.from_json(text)
    if "plane" in d:
        return bij.PlaneTree.from_json(text)
    if "diagonals" in d:
        if "labels" in d:
            return LabelledAngulation.from_json(text)
        if "root" in d:
            return RootedAngulation.from_json(text)
        if "colours" in d:
            return ColouredAngulation.from_json(text)
        return MAngulation.from_json(text)
    raise ValidationError("unrecognized object JSON")


def _dump_object(obj) -> str:
    if isinstance(obj, bij.RootedTree):
        d = json.loads(obj.tree.to_json())
        d["root"] = obj.root
        return json.dumps(d, separators=(",", ":"))
    if isinstance(obj, bij.PlaneTree):
        return obj.to_json()
    if isinstance(obj, tuple):  # decomposition results
        return json.dumps([json.loads(_dump_object(x)) for x in obj], separators=(",", ":"))
    return obj.to_json()


_MAPS = {
    "diagram->forest": lambda x: bij.diagram_to_forest(x),
    "forest->diagram": lambda x: bij.forest_to_diagram(x),
    "tree->rooted": lambda x: bij.tree_to_rooted(x),
    "rooted->tree": lambda x: bij.rooted_to_tree(x),
    "tree->angulation": lambda x: bij.tree_to_angulation(x),
    "angulation->tree": lambda x: bij.angulation_to_tree(x).tree,
    "tree->rooted-angulation": lambda x: bij.labelled_tree_to_rooted_angulation(x),
    "rooted-angulation->tree": lambda x: bij.rooted_angulation_to_tree(x),
    "tree->labelled-angulation": lambda x: bij.labelled_tree_to_labelled_angulation(x),
    "labelled-angulation->tree": lambda x: bij.labelled_angulation_to_tree(x),
}


def _cmd_map(args) -> int:
    text = sys.stdin.read()
    obj = _load_object(text)
    if args.name.startswith("families:"):
        route = args.name.split(":", 1)[1]
        frm, to = route.split("->")
        out = bij.family_chain(obj, int(frm), int(to))
    elif args.name in _MAPS:
        out = _MAPS[args.name](obj)
    else:
        raise ValidationError(f"unknown map {args.name!r}; known: "
                              + ", ".join(sorted(_MAPS)) + ", families:A->B")
    print(_dump_object(out))
    return 0


def _cmd_induct(args) -> int:
    tree = ColouredTree.from_json(sys.stdin.read())
    text = args.steps
    if text.startswith("@"):
        with open(text[1:]) as fh:
            text = fh.read()
    steps = [InductionStep.from_dict(d) for d in json.loads(text)]
    print(apply_steps(tree, steps).to_json())
    return 0


def _cmd_orbit(args) -> int:
    tree = ColouredTree.from_json(sys.stdin.read())
    orb = sorted(orbit(tree), key=lambda t: t.edges)
    print(
        json.dumps(
            {"size": len(orb), "orbit": [json.loads(t.to_json()) for t in orb]},
            separators=(",", ":"),
        )
    )
    return 0


def _cmd_verify(args) -> int:
    checks = ver.run_suite(args.suite, args.k, args.m)
    status = 0
    for name, ok, detail in checks:
        print(f"{'ok  ' if ok else 'FAIL'} {name}: {detail}")
        if not ok:
            status = 2
    return status


def _cmd_export(args) -> int:
    obj = _load_object(sys.stdin.read())
    if args.format != "dot":
        raise ValidationError(f"unsupported format {args.format!r}")
    if isinstance(obj, (ColouredTree, ColouredForest)):
        print(tree_to_dot(obj))
    elif isinstance(obj, bij.RootedTree):
        print(tree_to_dot(obj.tree))
    elif isinstance(obj, ColouredAngulation):
        print(dual_tree_dot(obj))
    elif isinstance(obj, (RootedAngulation, LabelledAngulation)):
        print(dual_tree_dot(obj.base))
    else:
        raise ValidationError("export supports trees and coloured angulations")
    return 0


def build_parser() -> _Parser:
    p = _Parser(prog="clustercomb", description=__doc__)
    sub = p.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("count", help="print count tables")
    c.add_argument("family", choices=["T", "S", "U", "fuss"])
    c.add_argument("--kmax", type=int, default=6)
    c.add_argument("--m", type=lambda s: [int(x) for x in s.split(",")], default=[3])
    c.add_argument("--check", action="store_true", help="compare against reference tables")
    c.set_defaults(fn=_cmd_count)

    e = sub.add_parser("enumerate", help="exhaustive generation, one JSON per line")
    e.add_argument("family", choices=["trees", "diagrams", "angulations"])
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--m", type=int, required=True)
    e.add_argument(
        "--order",
        help="trees only: 'desc', 'cycle:a,b,...' (cycle notation), or "
        "comma-separated sigma values",
    )
    e.add_argument("--connected", action="store_true")
    e.add_argument("--noncrossing", action="store_true")
    e.set_defaults(fn=_cmd_enumerate)

    mp = sub.add_parser("map", help="apply a named bijection to stdin JSON")
    mp.add_argument("name")
    mp.set_defaults(fn=_cmd_map)

    ind = sub.add_parser("induct", help="apply a JSON step list to a tree on stdin")
    ind.add_argument("steps", help="JSON array of steps, or @file")
    ind.set_defaults(fn=_cmd_induct)

    orb = sub.add_parser("orbit", help="induction equivalence class of a tree on stdin")
    orb.set_defaults(fn=_cmd_orbit)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=["formulas", "bijections", "induction", "angulation", "all"])
    v.add_argument("--k", type=int)
    v.add_argument("--m", type=int)
    v.set_defaults(fn=_cmd_verify)

    ex = sub.add_parser("export", help="export stdin JSON object")
    ex.add_argument("--format", default="dot")
    ex.set_defaults(fn=_cmd_export)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 3
    except ClustercombError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except json.JSONDecodeError as exc:
        print(f"validation error: bad JSON input: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
