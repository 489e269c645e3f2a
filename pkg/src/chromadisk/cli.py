"""Command-line front end.

Subcommands: analyze, bounds, table1, verify-scheme, roots. Exit codes:
0 success, 1 usage or parse error, 2 size cap exceeded, 3 verification
failure (scheme mismatch, reference-table deviation, or a root outside its
disk). Every command accepts --json for a machine-readable document with
sorted keys and 6-decimal floats; identical inputs give byte-identical
output.
"""

import argparse
import json
import os
import sys

from .bounds import (
    TABLE_CHECK_TOL,
    REFERENCE_TABLE,
    c_of_a,
    constants_table,
    kappa_for_bounds,
    minimize_c,
    solve_x,
    z_of_a,
)
from .chromatic import (
    DEFAULT_ORACLE_CAP,
    chromatic_deletion_contraction,
    polynomial_roots,
)
from .errors import (
    ContractViolationError,
    DegenerateDegreeError,
    DomainError,
    EnumerationCapError,
    GraphFormatError,
)
from .graphs import Graph, classify, neighborhood_stats, parse_graph
from .penrose import (
    DEFAULT_FOREST_CAP,
    VertexOrdering,
    chromatic_via_penrose,
    verify_partition_scheme,
)

ROOT_RESIDUAL_ACCEPT = 1e-8
ENV_CAP = "CHROMADISK_MAX_ENUM"
_IDENTITY_SHUFFLE_SEED = 1789


def _cap_override(flag_value: int | None) -> int | None:
    """Explicit flag wins, then the environment variable, then None."""
    if flag_value is not None:
        return flag_value
    raw = os.environ.get(ENV_CAP)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"{ENV_CAP} must be an integer, got {raw!r}")


def _r6(x: float) -> float:
    v = round(float(x), 6)
    return 0.0 if v == 0 else v


def _load(path: str) -> Graph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc.strerror}")
    return parse_graph(text)


def _emit(doc: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)


def cmd_analyze(args) -> int:
    g = _load(args.file)
    cap = _cap_override(args.max_enum)
    oracle_cap = cap if cap is not None else DEFAULT_ORACLE_CAP
    cm = classify(g)
    doc: dict = {"n": g.n, "m": g.m, "max_degree": g.max_degree()}
    lines = [f"graph: n={g.n} m={g.m} max_degree={g.max_degree()}"]
    for w in g.parse_warnings:
        doc.setdefault("warnings", []).append(w)
        lines.append(f"warning: {w}")
    doc["claw_free"] = cm.claw_free
    doc["square_free"] = cm.square_free
    doc["diamond_free"] = cm.diamond_free
    doc["class_index"] = cm.class_index
    lines.append(
        "class: claw_free={} square_free={} diamond_free={} index={}".format(
            cm.claw_free, cm.square_free, cm.diamond_free, cm.class_index
        )
    )

    kappa_note = None
    try:
        stats = neighborhood_stats(g)
        kappa = stats.kappa
    except DegenerateDegreeError:
        kappa = None
        kappa_note = "max degree <= 1, ratio degenerate; reported as 0"
    if kappa is None:
        doc["kappa"] = {"exact": "0", "decimal": 0.0, "note": kappa_note}
        lines.append(f"kappa: 0 ({kappa_note})")
    else:
        entry = {"exact": str(kappa), "decimal": _r6(float(kappa))}
        if kappa > 1:
            entry["note"] = "outside [0, 1]; the graph is not claw-free"
        doc["kappa"] = entry
        note = f" ({entry['note']})" if "note" in entry else ""
        lines.append(f"kappa: {kappa} = {_r6(float(kappa)):.6f}{note}")

    bound = None
    delta = g.max_degree()
    if not cm.claw_free:
        doc["bound"] = {"applicable": False, "reason": "graph is not claw-free"}
        lines.append("bound: not applicable (graph is not claw-free)")
    elif delta < 3:
        doc["bound"] = {"applicable": False, "reason": "theorem requires max degree >= 3"}
        lines.append("bound: not applicable (theorem requires max degree >= 3)")
    else:
        kf = kappa_for_bounds(kappa if kappa is not None else 0)
        bound = minimize_c(cm.class_index, kf)
        radius = bound.disk_radius(delta)
        doc["bound"] = {
            "applicable": True,
            "class_index": cm.class_index,
            "c_star": _r6(bound.c_star),
            "a_star": _r6(bound.a_star),
            "radius": _r6(radius),
        }
        lines.append(
            f"bound: C={bound.c_star:.6f} a*={bound.a_star:.6f}"
            f" radius=C*delta={radius:.6f}"
        )

    verdict = "not-computed"
    try:
        poly = chromatic_deletion_contraction(g, max_vertices=oracle_cap)
    except EnumerationCapError as exc:
        doc["chromatic"] = {"computed": False, "reason": str(exc)}
        lines.append(f"chromatic: not computed ({exc})")
        poly = None
    if poly is not None:
        doc["chromatic"] = {"computed": True, "coefficients": list(poly.coeffs)}
        lines.append(f"chromatic: coefficients by degree {list(poly.coeffs)}")
        roots = polynomial_roots(poly)
        doc["roots"] = [
            {"re": _r6(r.value.real), "im": _r6(r.value.imag), "residual": float(f"{r.residual:.3e}")}
            for r in roots
        ]
        for r in roots:
            lines.append(
                f"root: {r.value.real:+.6f}{r.value.imag:+.6f}i residual {r.residual:.3e}"
            )
        if bound is not None:
            radius = bound.disk_radius(delta)
            ok = all(
                abs(r.value) < radius and radius - abs(r.value) > 10 * r.residual
                for r in roots
            )
            verdict = "yes" if ok else "no"
    doc["disk_verdict"] = verdict
    lines.append(f"disk verdict: {verdict}")
    _emit(doc, args.json, lines)
    return 3 if verdict == "no" else 0


def cmd_bounds(args) -> int:
    i = args.class_index
    kappa = kappa_for_bounds(args.kappa)
    doc: dict = {"class_index": i, "kappa": _r6(kappa)}
    lines = []
    if args.a is not None:
        x = solve_x(i, kappa, args.a)
        c = c_of_a(i, kappa, args.a)
        doc.update({"a": _r6(args.a), "x": _r6(x), "c": _r6(c)})
        lines.append(f"a={args.a:.6f} x={x:.6f} C={c:.6f}")
        if args.delta is not None:
            z = z_of_a(i, kappa, args.a, args.delta)
            doc.update({"delta": args.delta, "z": _r6(z), "radius": _r6(c * args.delta)})
            lines.append(f"z={z:.6f} radius={c * args.delta:.6f}")
    else:
        res = minimize_c(i, kappa)
        doc.update(
            {"c_star": _r6(res.c_star), "a_star": _r6(res.a_star), "x_star": _r6(res.x_star)}
        )
        lines.append(f"C={res.c_star:.6f} a*={res.a_star:.6f} x*={res.x_star:.6f}")
        if args.delta is not None:
            z = res.z_star(args.delta)
            radius = res.disk_radius(args.delta)
            doc.update({"delta": args.delta, "z_star": _r6(z), "radius": _r6(radius)})
            lines.append(f"z*={z:.6f} radius={radius:.6f}")
    _emit(doc, args.json, lines)
    return 0


def cmd_table1(args) -> int:
    rows = constants_table(args.step)
    doc_rows = [
        {
            "kappa": _r6(r.kappa),
            "c0": _r6(r.c_class0),
            "c1": _r6(r.c_class1),
            "a0": _r6(r.a_star0),
            "a1": _r6(r.a_star1),
        }
        for r in rows
    ]
    lines = ["kappa      C0         C1         a*0        a*1"]
    for r in rows:
        lines.append(
            f"{r.kappa:<10.6f} {r.c_class0:<10.6f} {r.c_class1:<10.6f}"
            f" {r.a_star0:<10.6f} {r.a_star1:<10.6f}"
        )
    doc: dict = {"step": _r6(args.step), "rows": doc_rows}
    status = 0
    if args.check:
        if abs(args.step - 0.1) > 1e-12:
            raise DomainError("--check requires --step 0.1")
        worst = 0.0
        for got, ref in zip(rows, REFERENCE_TABLE):
            for attr in ("c_class0", "c_class1", "a_star0", "a_star1"):
                worst = max(worst, abs(getattr(got, attr) - getattr(ref, attr)))
        passed = worst <= TABLE_CHECK_TOL
        doc["check"] = {"max_deviation": float(f"{worst:.3e}"), "passed": passed}
        lines.append(f"check: max deviation {worst:.3e} -> {'pass' if passed else 'FAIL'}")
        status = 0 if passed else 3
    _emit(doc, args.json, lines)
    return status


def cmd_verify_scheme(args) -> int:
    g = _load(args.file)
    cap = _cap_override(args.max_enum)
    forest_cap = cap if cap is not None else DEFAULT_FOREST_CAP
    oracle_cap = max(DEFAULT_ORACLE_CAP, forest_cap)
    if g.n > forest_cap:
        raise EnumerationCapError("scheme verification", g.n, forest_cap)
    report = verify_partition_scheme(g, r_max=args.rmax)
    doc: dict = {
        "n": g.n,
        "m": g.m,
        "r_max": args.rmax,
        "partition": {
            "passed": report.passed,
            "subsets_checked": report.subsets_checked,
            "edge_sets_checked": report.edge_sets_checked,
        },
    }
    lines = [
        "partition check: {} (subsets {}, connected edge sets {})".format(
            "pass" if report.passed else "FAIL",
            report.subsets_checked,
            report.edge_sets_checked,
        )
    ]
    if report.counterexample is not None:
        ce = report.counterexample
        doc["partition"]["counterexample"] = {
            "subset": sorted(ce.subset),
            "edge_set": sorted(ce.edge_set),
            "containing_trees": ce.containing_trees,
        }
        lines.append(
            f"counterexample: subset {sorted(ce.subset)} edge set {sorted(ce.edge_set)}"
            f" hit {ce.containing_trees} tree intervals"
        )

    oracle = chromatic_deletion_contraction(g, max_vertices=oracle_cap)
    identity_ok = True
    orderings = [VertexOrdering.natural(g.n)]
    import random as _random

    shuffled = list(range(g.n))
    _random.Random(_IDENTITY_SHUFFLE_SEED + g.n).shuffle(shuffled)
    orderings.append(VertexOrdering.from_order(shuffled))
    for ordering in orderings:
        if chromatic_via_penrose(g, ordering, max_vertices=forest_cap) != oracle:
            identity_ok = False
            break
    doc["identity"] = {"passed": identity_ok, "orderings_checked": len(orderings)}
    lines.append(
        "forest identity check: {} ({} orderings)".format(
            "pass" if identity_ok else "FAIL", len(orderings)
        )
    )
    _emit(doc, args.json, lines)
    return 0 if report.passed and identity_ok else 3


def cmd_roots(args) -> int:
    g = _load(args.file)
    cap = _cap_override(args.max_enum)
    oracle_cap = cap if cap is not None else DEFAULT_ORACLE_CAP
    poly = chromatic_deletion_contraction(g, max_vertices=oracle_cap)
    roots = polynomial_roots(poly)
    ill = any(r.residual >= ROOT_RESIDUAL_ACCEPT for r in roots)
    doc = {
        "n": g.n,
        "m": g.m,
        "coefficients": list(poly.coeffs),
        "roots": [
            {
                "re": _r6(r.value.real),
                "im": _r6(r.value.imag),
                "residual": float(f"{r.residual:.3e}"),
                "accepted": r.residual < ROOT_RESIDUAL_ACCEPT,
            }
            for r in roots
        ],
        "ill_conditioned": ill,
    }
    lines = [f"chromatic coefficients by degree: {list(poly.coeffs)}"]
    for r in roots:
        flag = "" if r.residual < ROOT_RESIDUAL_ACCEPT else "  REJECTED"
        lines.append(
            f"root: {r.value.real:+.6f}{r.value.imag:+.6f}i residual {r.residual:.3e}{flag}"
        )
    if ill:
        lines.append("warning: polynomial ill-conditioned, at least one residual >= 1e-8")
    _emit(doc, args.json, lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="chromadisk",
        description="Zero-free disks for chromatic polynomials of claw-free graphs.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="classify a graph file and certify its roots")
    pa.add_argument("file")
    pa.add_argument("--max-enum", type=int, default=None, help="vertex cap override")
    pa.add_argument("--json", action="store_true")
    pa.set_defaults(func=cmd_analyze)

    pb = sub.add_parser("bounds", help="disk constants for a class and kappa")
    pb.add_argument("--class", dest="class_index", type=int, choices=(0, 1), required=True)
    pb.add_argument("--kappa", type=float, required=True)
    pb.add_argument("--a", type=float, default=None)
    pb.add_argument("--delta", type=int, default=None)
    pb.add_argument("--json", action="store_true")
    pb.set_defaults(func=cmd_bounds)

    pt = sub.add_parser("table1", help="constants table on a kappa grid")
    pt.add_argument("--step", type=float, default=0.1)
    pt.add_argument("--check", action="store_true")
    pt.add_argument("--json", action="store_true")
    pt.set_defaults(func=cmd_table1)

    pv = sub.add_parser("verify-scheme", help="partition and identity checks on a file")
    pv.add_argument("file")
    pv.add_argument("--rmax", type=int, default=6)
    pv.add_argument("--max-enum", type=int, default=None, help="vertex cap override")
    pv.add_argument("--json", action="store_true")
    pv.set_defaults(func=cmd_verify_scheme)

    pr = sub.add_parser("roots", help="chromatic roots of a graph file")
    pr.add_argument("file")
    pr.add_argument("--max-enum", type=int, default=None, help="vertex cap override")
    pr.add_argument("--json", action="store_true")
    pr.set_defaults(func=cmd_roots)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (DomainError, ContractViolationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except EnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
