"""Command-line interface.

Subcommands: roots, poset, grading, periodic, iso, table1, verify.
Exit codes: 0 success (all checks pass), 1 verification failure,
2 usage or domain error (one-line diagnostic on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog_verify import SUITES, reproduce_table1, verify_theorem
from .gradings import grading_report, periodic_grading, z_grading
from .isomorphism import are_isomorphic
from .root_system import (
    RootSystemError,
    SimpleType,
    build_root_system,
    root_order_edges,
)
from .weight_poset import (
    build_poset,
    is_wmf,
    tensor_poset,
    weyl_dimension,
)


def parse_weight_spec(text: str):
    """Parse 'C3:0,0,1xA2:1,0' into ((SimpleType, weight), ...)."""
    factors = []
    for part in text.split("x"):
        if ":" not in part:
            raise RootSystemError(
                f"bad weight spec {part!r}: expected TYPE:c1,c2,..."
            )
        head, _, tail = part.partition(":")
        stype = SimpleType.parse(head)
        try:
            lam = tuple(int(c) for c in tail.split(","))
        except ValueError:
            raise RootSystemError(
                f"bad coefficient list {tail!r} in weight spec"
            ) from None
        if len(lam) != stype.rank:
            raise RootSystemError(
                f"weight {lam} has {len(lam)} coefficients, "
                f"{stype} needs {stype.rank}"
            )
        factors.append((stype, lam))
    return tuple(factors)


def parse_colors(text: str):
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        raise RootSystemError(f"bad coloring {text!r}: expected i,j,...") from None


def _emit(args, text_fn, json_obj, csv_fn=None):
    if args.format == "json":
        print(json.dumps(json_obj, indent=2, default=str))
    elif args.format == "csv":
        if csv_fn is None:
            raise RootSystemError("csv output is not defined for this command")
        sys.stdout.write(csv_fn())
    else:
        print(text_fn())


def cmd_roots(args) -> int:
    rs = build_root_system(SimpleType.parse(args.type))
    edges = root_order_edges(rs)
    counts = {i: 0 for i in range(1, rs.rank + 1)}
    for _, _, i in edges:
        counts[i] += 1
    obj = {
        "type": str(rs.stype),
        "rank": rs.rank,
        "coxeter": rs.coxeter,
        "dual_coxeter": rs.dual_coxeter,
        "num_positive_roots": len(rs.positive_roots),
        "highest_root": list(rs.highest_root),
        "positive_roots": [list(g) for g in rs.positive_roots],
        "hasse_edges_by_label": counts,
    }

    def text():
        lines = [
            f"{rs.stype}: {len(rs.positive_roots)} positive roots, "
            f"h = {rs.coxeter}, h* = {rs.dual_coxeter}",
            f"highest root {rs.highest_root}",
            "edges by label: "
            + " ".join(f"{i}:{counts[i]}" for i in sorted(counts)),
            "positive roots (coords, by height):",
        ]
        lines += [f"  {g}" for g in rs.positive_roots]
        return "\n".join(lines)

    def csv_out():
        import csv
        import io

        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow([f"c{i}" for i in range(1, rs.rank + 1)] + ["height"])
        for g in rs.positive_roots:
            w.writerow(list(g) + [sum(g)])
        return buf.getvalue()

    _emit(args, text, obj, csv_out)
    return 0


def cmd_poset(args) -> int:
    factors = parse_weight_spec(args.weight)
    wmf = all(is_wmf(build_root_system(t), lam) for t, lam in factors)
    dim = 1
    for t, lam in factors:
        dim *= weyl_dimension(build_root_system(t), lam)
    if not wmf:
        print(
            f"error: {args.weight} is not weight multiplicity free "
            f"(dim {dim} exceeds the number of distinct weights)",
            file=sys.stderr,
        )
        return 2
    p = tensor_poset(factors)
    obj = p.to_json_dict()
    obj.update({
        "weight": args.weight,
        "wmf": True,
        "dim": len(p),
        "num_edges": p.num_edges,
        "edges_by_label": p.edge_count_by_label(),
        "upper_covering_polynomial": list(p.covering_polynomial("upper")),
        "lower_covering_polynomial": list(p.covering_polynomial("lower")),
        "ratio": str(p.ratio()),
    })

    def text():
        counts = p.edge_count_by_label()
        return "\n".join([
            f"{args.weight}: wmf, {len(p)} weights, {p.num_edges} edges, "
            f"ratio {p.ratio()}",
            "edges by label: "
            + " ".join(f"{i}:{counts[i]}" for i in sorted(counts)),
            f"upper covering polynomial {p.covering_polynomial('upper')}",
            f"lower covering polynomial {p.covering_polynomial('lower')}",
        ])

    def csv_out():
        import csv
        import io

        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["u", "v", "label"])
        for u, v, lab in p.edges:
            w.writerow([u, v, lab])
        return buf.getvalue()

    _emit(args, text, obj, csv_out)
    return 0


def _grading_text(obj) -> str:
    lines = [
        f"{obj['diagram']} diagram of {obj['type']}, "
        f"colored {obj['colored']}",
        "ideals: " + ", ".join(
            f"{c['type']}{c['vertices']}" for c in obj["ideals"]
        ),
    ]
    if "order" in obj:
        lines.append(f"order m = {obj['order']}")
    else:
        lines.append(
            f"max degree {obj['max_degree']}, defect sum {obj['sum']}"
        )
    for d in obj["degrees"]:
        lines.append(
            f"  degree {d['degree']}: dim {d['dim']}, edges {d['edges']}, "
            f"defect {d['defect']}, K = {d['covering_polynomial']}"
        )
    return "\n".join(lines)


def _grading_csv(obj) -> str:
    import csv
    import io

    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["degree", "dim", "edges", "defect"])
    for d in obj["degrees"]:
        w.writerow([d["degree"], d["dim"], d["edges"], d["defect"]])
    return buf.getvalue()


def cmd_grading(args) -> int:
    rs = build_root_system(SimpleType.parse(args.type))
    zg = z_grading(rs, parse_colors(args.color))
    obj = grading_report(zg)
    _emit(args, lambda: _grading_text(obj), obj, lambda: _grading_csv(obj))
    return 0


def cmd_periodic(args) -> int:
    rs = build_root_system(SimpleType.parse(args.type))
    pg = periodic_grading(rs, parse_colors(args.color))
    obj = grading_report(pg)
    _emit(args, lambda: _grading_text(obj), obj, lambda: _grading_csv(obj))
    return 0


def cmd_iso(args) -> int:
    p1 = tensor_poset(parse_weight_spec(args.spec1))
    p2 = tensor_poset(parse_weight_spec(args.spec2))
    ok, witness = are_isomorphic(p1, p2)
    obj = {
        "spec1": args.spec1,
        "spec2": args.spec2,
        "isomorphic": ok,
        "witness": witness,
    }

    def text():
        if ok:
            return (f"{args.spec1} ~ {args.spec2}: isomorphic "
                    f"({len(p1)} elements, {p1.num_edges} edges)")
        return (f"{args.spec1} !~ {args.spec2}: not isomorphic "
                f"({len(p1)}/{p1.num_edges} vs {len(p2)}/{p2.num_edges})")

    _emit(args, text, obj)
    return 0 if ok else 1


def cmd_table1(args) -> int:
    rep = reproduce_table1(args.max_rank)
    _emit(args, rep.to_text, rep.to_json_dict(), rep.to_csv)
    return 0 if rep.passed else 1


# which keyword the --max-rank flag maps to, per suite
_RANK_KWARG = {
    "poset-isoms": "max_sum",
    "sum-identity": "sl_standard_rank",
    "classification": "first_rank",
    "classical-defects": "n_max",
}


def cmd_verify(args) -> int:
    if args.suite == "all":
        ids = list(SUITES)
    elif args.suite in SUITES:
        ids = [args.suite]
    else:
        raise RootSystemError(
            f"unknown suite id {args.suite!r}; known: "
            + ", ".join(sorted(SUITES)) + ", all"
        )
    reports = []
    for sid in ids:
        kwargs = {}
        if args.max_rank is not None:
            kwargs[_RANK_KWARG.get(sid, "max_rank")] = args.max_rank
        reports.append(verify_theorem(sid, **kwargs))
    all_pass = all(r.passed for r in reports)
    if args.format == "json":
        print(json.dumps([r.to_json_dict() for r in reports], indent=2,
                         default=str))
    elif args.format == "csv":
        for r in reports:
            sys.stdout.write(r.to_csv())
    else:
        for r in reports:
            print(r.to_text())
        print(f"overall: {'PASS' if all_pass else 'FAIL'} "
              f"({len(reports)} suites)")
    return 0 if all_pass else 1


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="wmfposets",
        description="Exact combinatorics of weight posets of simple Lie algebras",
    )
    ap.add_argument("--format", choices=("text", "json", "csv"),
                    default="text")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="positive roots and Hasse edge counts")
    p.add_argument("type")
    p.set_defaults(fn=cmd_roots)

    p = sub.add_parser("poset", help="weight poset of a wmf representation")
    p.add_argument("type")
    p.add_argument("coeffs", nargs="?", default=None,
                   help="comma-separated weight coefficients")
    p.set_defaults(fn=cmd_poset)

    p = sub.add_parser("grading", help="Z-grading from a colored diagram")
    p.add_argument("type")
    p.add_argument("--color", required=True, help="colored vertices i,j,...")
    p.set_defaults(fn=cmd_grading)

    p = sub.add_parser("periodic",
                       help="periodic grading from a colored extended diagram")
    p.add_argument("type")
    p.add_argument("--color", required=True,
                   help="colored vertices i,j,... (0 = affine node)")
    p.set_defaults(fn=cmd_periodic)

    p = sub.add_parser("iso", help="decide weight-poset isomorphism")
    p.add_argument("spec1")
    p.add_argument("spec2")
    p.set_defaults(fn=cmd_iso)

    p = sub.add_parser("table1", help="reproduce the catalog table")
    p.add_argument("--max-rank", type=int, default=12)
    p.set_defaults(fn=cmd_table1)

    p = sub.add_parser("verify", help="run theorem verification suites")
    p.add_argument("--suite", default="all")
    p.add_argument("--max-rank", type=int, default=None)
    p.set_defaults(fn=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = make_parser()
    args = ap.parse_args(argv)
    if args.command == "poset":
        # accept both "C3:0,0,1xA2:1,0" and "C3 0,0,1"
        if args.coeffs is not None:
            args.weight = f"{args.type}:{args.coeffs}"
        else:
            args.weight = args.type
    try:
        return args.fn(args)
    except RootSystemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
