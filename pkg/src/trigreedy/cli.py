"""Command-line front end: reproducible generate/draw/verify/route pipelines.

Every run is fully determined by its argument set, which is echoed into
all JSON reports; reports carry no wall-clock data, so identical runs
produce byte-identical files.  Exit codes are a stable contract:
0 success, 1 check or delivery failure, 2 usage or input error.

    trigreedy gen -n 50 --seed 9 --flips 200 -o g.tri
    trigreedy realize g.tri -o g.sat
    trigreedy draw g.tri -o g.bary --svg g.svg
    trigreedy verify g.tri --json report.json
    trigreedy route g.tri --from 7 --to A3
    trigreedy allpairs g.tri --strategy both --json ap.json
    trigreedy compare -n 10,25 --seeds 0..4 --json cmp.json
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .drawing import Drawing, compute_drawing, to_cartesian, validate_drawing
from .formats import ParseError, _atomic_write, read_tri, write_bary, write_sat, write_tri
from .generate import generate_stacked, randomize_flips
from .geometry import validate_enclosing_triangle, validate_planarity, validate_three_wedge
from .realizer import Realizer, compute_realizer, validate_realizer
from .routing import Outcome, Strategy, route, verify_all_pairs, compare_strategies
from .sectors import SaturatedGraph, check_saturated, extract_saturated, saturated_equals_realizer
from .svg import render_svg
from .triangulation import Triangulation, TriangulationError, validate_triangulation

#: planarity is a brute-force pairwise test; skip above this size
PLANARITY_CAP = 60

#: pipeline stages of cmd_verify, in execution order
_CHECK_ORDER = (
    "triangulation",
    "realizer",
    "drawing",
    "three-wedge",
    "enclosing-triangle",
    "planarity",
    "saturation",
    "saturated-equals-realizer",
    "sector-delivery",
)

_CORNER_ALIASES = {"a1": 0, "a2": 1, "a3": 2}


class _UsageError(Exception):
    pass


def _vertex_id(text: str, n: int) -> int:
    v = _CORNER_ALIASES.get(text.lower(), None)
    if v is None:
        try:
            v = int(text)
        except ValueError:
            raise _UsageError(f"vertex id {text!r} is neither an integer nor A1/A2/A3")
    if not 0 <= v < n:
        raise _UsageError(f"vertex id {v} out of range for n={n}")
    return v


def _parse_seeds(text: str) -> list[int]:
    if ".." in text:
        lo, _, hi = text.partition("..")
        try:
            return list(range(int(lo), int(hi) + 1))
        except ValueError:
            raise _UsageError(f"bad seed range {text!r}; expected LO..HI")
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise _UsageError(f"bad seed list {text!r}; expected comma-separated integers")


def _parse_sizes(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise _UsageError(f"bad size list {text!r}; expected comma-separated integers")


def _config(args: argparse.Namespace) -> dict[str, Any]:
    skip = {"func"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _emit_json(path: str, payload: dict[str, Any]) -> None:
    _atomic_write(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _load_tri(path: str) -> Triangulation:
    return read_tri(path)


# --- fault injection -------------------------------------------------------
#
# Hidden test hook: deterministic corruptions applied mid-pipeline so the
# validators' failure paths stay testable end to end.


def _parse_faults(specs: list[str]) -> list[tuple[str, tuple[int, ...]]]:
    faults = []
    for spec in specs:
        kind, _, rest = spec.partition(":")
        try:
            if kind == "swap-coords":
                u, v = (int(x) for x in rest.split(","))
                faults.append((kind, (u, v)))
            elif kind == "set-coord":
                vtx, _, triple = rest.partition(":")
                a, b, c = (int(x) for x in triple.split(","))
                faults.append((kind, (int(vtx), a, b, c)))
            elif kind in ("relabel", "drop-sat"):
                u, k = (int(x) for x in rest.split(","))
                if k not in (1, 2, 3):
                    raise ValueError(k)
                faults.append((kind, (u, k)))
            else:
                raise ValueError(kind)
        except ValueError:
            raise _UsageError(f"bad fault spec {spec!r}")
    return faults


def _fault_realizer(tri: Triangulation, real: Realizer, faults) -> Realizer:
    parents = [list(row) for row in real.parents]
    for kind, payload in faults:
        if kind == "relabel":
            u, k = payload
            parents[u][k - 1] = tri.succ(u, parents[u][k - 1])
    return Realizer(tuple(tuple(row) for row in parents))


def _fault_drawing(drawing: Drawing, faults) -> Drawing:
    rows = [tuple(row) for row in drawing.coords]
    for kind, payload in faults:
        if kind == "swap-coords":
            u, v = payload
            rows[u], rows[v] = rows[v], rows[u]
        elif kind == "set-coord":
            v, a, b, c = payload
            rows[v] = (a, b, c)
    return Drawing(tuple(rows), drawing.denom)


def _fault_sat(tri: Triangulation, sat: SaturatedGraph, faults) -> SaturatedGraph:
    entries = [None if row is None else list(row) for row in sat.entries]
    for kind, payload in faults:
        if kind == "drop-sat":
            u, k = payload
            entries[u][k - 1] = tri.succ(u, entries[u][k - 1])
    return SaturatedGraph(
        tuple(None if row is None else tuple(row) for row in entries), sat.boundary_labels
    )


# --- subcommands -----------------------------------------------------------


def cmd_gen(args: argparse.Namespace) -> int:
    tri = generate_stacked(args.n, args.seed)
    if args.flips:
        tri = randomize_flips(tri, args.flips, args.seed)
    write_tri(tri, args.output)
    print(f"wrote {args.output}: n={tri.n} edges={tri.num_edges} faces={2 * tri.n - 4}")
    return 0


def cmd_realize(args: argparse.Namespace) -> int:
    tri = _load_tri(args.tri)
    real = compute_realizer(tri)
    report = validate_realizer(tri, real)
    out = args.output or args.tri.rsplit(".", 1)[0] + ".sat"
    write_sat({u: real.parents[u] for u in tri.internal_vertices()}, out)
    print(f"wrote {out}: {3 * (tri.n - 3)} labeled edges; {report.summary()}")
    return 0 if report.ok else 1


def cmd_draw(args: argparse.Namespace) -> int:
    tri = _load_tri(args.tri)
    real = compute_realizer(tri)
    drawing = compute_drawing(tri, real)
    out = args.output or args.tri.rsplit(".", 1)[0] + ".bary"
    write_bary(drawing, out)
    print(f"wrote {out}: denom={drawing.denom}")
    if args.svg:
        placement = to_cartesian(drawing)
        text = render_svg(
            tri,
            placement,
            realizer=None if args.no_tree_colors else real,
            scale=args.scale,
        )
        _atomic_write(args.svg, text)
        print(f"wrote {args.svg}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    faults = _parse_faults(args.inject_fault)
    tri = _load_tri(args.tri)
    checks: list[dict[str, Any]] = []
    payload: dict[str, Any] = {"config": _config(args), "checks": checks}
    counterexample: dict[str, Any] = {}

    def record(name: str, report=None, status: str | None = None) -> bool:
        ok = report.ok if report is not None else status == "pass"
        entry = {"check": name, "status": status or ("pass" if ok else "fail")}
        if report is not None:
            data = report.to_dict()
            data.pop("check", None)
            data.pop("ok", None)
            entry.update(data)
        checks.append(entry)
        if not ok and report is not None and name not in counterexample:
            counterexample[name] = report.to_dict()
        return ok

    ok = record("triangulation", validate_triangulation(tri))
    real = drawing = sat = None
    if ok:
        real = _fault_realizer(tri, compute_realizer(tri), faults)
        ok = record("realizer", validate_realizer(tri, real))
    if ok and real is not None:
        drawing = _fault_drawing(compute_drawing(tri, real), faults)
        record("drawing", validate_drawing(tri, drawing))
        record("three-wedge", validate_three_wedge(tri, real, drawing))
        record("enclosing-triangle", validate_enclosing_triangle(tri, real, drawing))
        if tri.n <= PLANARITY_CAP:
            record("planarity", validate_planarity(tri, drawing))
        else:
            checks.append(
                {
                    "check": "planarity",
                    "status": "skipped",
                    "notes": [f"n={tri.n} exceeds the brute-force cap {PLANARITY_CAP}"],
                }
            )
        try:
            sat = _fault_sat(tri, extract_saturated(tri, drawing), faults)
        except ValueError as exc:
            checks.append({"check": "saturation", "status": "fail", "error": str(exc)})
            counterexample["saturation"] = {"error": str(exc)}
        if sat is not None:
            record("saturation", check_saturated(tri, drawing, sat))
            diff = saturated_equals_realizer(sat, real)
            checks.append(
                {
                    "check": "saturated-equals-realizer",
                    "status": "pass" if diff.equal else "fail",
                    "mismatches": [list(m) for m in diff.mismatches],
                }
            )
            if not diff.equal:
                counterexample["saturated-equals-realizer"] = {
                    "mismatches": [list(m) for m in diff.mismatches]
                }
            report = verify_all_pairs(
                tri,
                drawing,
                Strategy.SECTOR,
                sat=sat,
                max_hops=args.max_hops,
                instance={"source": args.tri, "n": tri.n},
                backend=args.backend,
            )
            delivery = report.to_dict()
            delivery["counterexamples"] = [tr.to_dict() for tr in report.counterexamples]
            checks.append(
                {
                    "check": "sector-delivery",
                    "status": "pass" if report.failed == 0 else "fail",
                    "pairs": report.pairs,
                    "delivered": report.delivered,
                }
            )
            payload["delivery"] = {
                k: v for k, v in delivery.items() if k != "counterexamples"
            }
            if report.failed:
                counterexample["sector-delivery"] = delivery

    seen = {c["check"] for c in checks}
    for name in _CHECK_ORDER:
        if name not in seen:
            checks.append({"check": name, "status": "skipped", "notes": ["prerequisite failed"]})
    checks.sort(key=lambda c: _CHECK_ORDER.index(c["check"]))
    payload["ok"] = all(c["status"] != "fail" for c in checks)
    if not payload["ok"]:
        counterexample["instance"] = {
            "source": args.tri,
            "n": tri.n,
            "denom": drawing.denom if drawing is not None else None,
            "coords": [list(row) for row in drawing.coords] if drawing is not None else None,
            "sat": [None if e is None else list(e) for e in sat.entries] if sat is not None else None,
        }
        cx_path = args.counterexample or args.tri.rsplit(".", 1)[0] + ".counterexample.json"
        _emit_json(cx_path, {"config": _config(args), **counterexample})
        print(f"counterexample written to {cx_path}", file=sys.stderr)
    if args.json:
        _emit_json(args.json, payload)
    for c in checks:
        print(f"{c['check']:26s} {c['status']}")
    print("ok" if payload["ok"] else "FAILED")
    return 0 if payload["ok"] else 1


def cmd_route(args: argparse.Namespace) -> int:
    tri = _load_tri(args.tri)
    s = _vertex_id(getattr(args, "from"), tri.n)
    t = _vertex_id(args.to, tri.n)
    if s == t:
        raise _UsageError("source and destination must differ")
    real = compute_realizer(tri)
    drawing = compute_drawing(tri, real)
    strategy = Strategy(args.strategy)
    trace = route(tri, drawing, s, t, strategy, max_hops=args.max_hops)
    if args.json:
        _emit_json(args.json, {"config": _config(args), "trace": trace.to_dict()})
    arrow = " -> ".join(str(v) for v in trace.path)
    print(f"{trace.strategy.value}: {arrow}")
    print(f"outcome: {trace.outcome.value} ({trace.hops} hops){': ' + trace.reason if trace.reason else ''}")
    return 0 if trace.outcome is Outcome.DELIVERED else 1


def cmd_allpairs(args: argparse.Namespace) -> int:
    tri = _load_tri(args.tri)
    real = compute_realizer(tri)
    drawing = compute_drawing(tri, real)
    sat = extract_saturated(tri, drawing)
    strategies = (
        [Strategy.SECTOR, Strategy.EUCLIDEAN] if args.strategy == "both" else [Strategy(args.strategy)]
    )
    reports = {}
    for strategy in strategies:
        report = verify_all_pairs(
            tri,
            drawing,
            strategy,
            sat=sat,
            max_hops=args.max_hops,
            instance={"source": args.tri, "n": tri.n},
            backend=args.backend,
        )
        reports[strategy.value] = report
        print(
            f"{strategy.value}: delivered {report.delivered}/{report.pairs}"
            f" (max hops {report.max_hops}, max stretch {report.max_stretch:.3f})"
        )
    if args.json:
        _emit_json(
            args.json,
            {
                "config": _config(args),
                "reports": {k: r.to_dict() for k, r in sorted(reports.items())},
            },
        )
    sector = reports.get(Strategy.SECTOR.value)
    return 1 if sector is not None and sector.failed else 0


def cmd_compare(args: argparse.Namespace) -> int:
    sizes = _parse_sizes(args.n)
    seeds = _parse_seeds(args.seeds)
    instances = []
    for n in sizes:
        for seed in seeds:
            tri = randomize_flips(generate_stacked(n, seed), args.flips_factor * n, seed)
            drawing = compute_drawing(tri, compute_realizer(tri))
            instances.append(({"n": n, "seed": seed, "flips": args.flips_factor * n}, tri, drawing))
    report = compare_strategies(instances, max_hops=args.max_hops, backend=args.backend)
    agg = report.aggregate()
    for strategy, row in sorted(agg.items()):
        print(
            f"{strategy}: {row['delivered']}/{row['pairs']} delivered over {row['instances']}"
            f" instances (rate {row['delivery_rate']:.4f})"
        )
    if args.json:
        _emit_json(args.json, {"config": _config(args), **report.to_dict()})
    sector = agg.get(Strategy.SECTOR.value)
    return 1 if sector and sector["delivered"] < sector["pairs"] else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trigreedy",
        description="Schnyder drawings, saturated graphs, and greedy routing on planar triangulations.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("gen", help="generate a random planar triangulation")
    p.add_argument("-n", type=int, required=True, help="vertex count (>= 4)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--flips", type=int, default=0, help="random legal edge flips after stacking")
    p.add_argument("-o", "--output", required=True, help="output .tri path")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("realize", help="compute the realizer and write saturated entries")
    p.add_argument("tri", help="input .tri path")
    p.add_argument("-o", "--output", help="output .sat path (default: alongside input)")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("draw", help="compute the drawing; write .bary and optional SVG")
    p.add_argument("tri")
    p.add_argument("-o", "--output", help="output .bary path (default: alongside input)")
    p.add_argument("--svg", help="also render an SVG to this path")
    p.add_argument("--scale", type=float, default=400.0)
    p.add_argument("--no-tree-colors", action="store_true")
    p.set_defaults(func=cmd_draw)

    p = sub.add_parser("verify", help="run the full validation pipeline")
    p.add_argument("tri")
    p.add_argument("--json", help="write the JSON report here")
    p.add_argument("--counterexample", help="failure dump path (default: alongside input)")
    p.add_argument("--max-hops", type=int, default=None)
    p.add_argument("--backend", choices=("pure", "compiled"), default=None)
    p.add_argument("--inject-fault", action="append", default=[], help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("route", help="route one source/destination pair")
    p.add_argument("tri")
    p.add_argument("--from", required=True, help="source vertex id or A1/A2/A3")
    p.add_argument("--to", required=True, help="destination vertex id or A1/A2/A3")
    p.add_argument("--strategy", choices=("sector", "euclidean"), default="sector")
    p.add_argument("--max-hops", type=int, default=None)
    p.add_argument("--json", help="write the trace as JSON here")
    p.set_defaults(func=cmd_route)

    p = sub.add_parser("allpairs", help="verify delivery over all ordered pairs")
    p.add_argument("tri")
    p.add_argument("--strategy", choices=("sector", "euclidean", "both"), default="sector")
    p.add_argument("--max-hops", type=int, default=None)
    p.add_argument("--backend", choices=("pure", "compiled"), default=None)
    p.add_argument("--json", help="write the delivery report(s) as JSON here")
    p.set_defaults(func=cmd_allpairs)

    p = sub.add_parser("compare", help="compare both strategies over generated instances")
    p.add_argument("-n", required=True, help="comma-separated sizes, e.g. 10,25,50")
    p.add_argument("--seeds", required=True, help="seed list 0,1,2 or range 0..99")
    p.add_argument("--flips-factor", type=int, default=10, help="flips = factor * n")
    p.add_argument("--max-hops", type=int, default=None)
    p.add_argument("--backend", choices=("pure", "compiled"), default=None)
    p.add_argument("--json", help="write the comparison report as JSON here")
    p.set_defaults(func=cmd_compare)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, TriangulationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
