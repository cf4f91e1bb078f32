"""Command-line front end.

Thin adapters only: every subcommand parses flags, calls one library
function, and prints CSV or JSON. Exit codes: 0 success, 1 for a violated
structural invariant (a counterexample, not a bug in the invocation), 2 for
usage or input-file errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .counting import (
    experiment_csv,
    gen_grid,
    gen_lattice_section,
    gen_parallel_lines,
    gen_random,
    count_brute,
    count_pairline,
    scaling_experiment,
    tally_by_richness,
)
from .curves import (
    BivariateCubic,
    NonSimpleFactorUnsupported,
    asymptotes,
    bezout_scan,
    k310_scan,
    match_curve,
    reconstruct_generators,
)
from .geometry import (
    GeometryError,
    InvariantViolation,
    find_shear,
    parse_rational,
    shear,
)
from .incidence import incidence_pairs, incidence_stats, rich_lines
from .matching import IncidencePairParam, count_matching_pairs
from .pointset import PointFileError, read_points, write_points

log = logging.getLogger("equiarea")


def _parse_pair(text: str) -> IncidencePairParam:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"expected 'a,b,kappa', got {text!r}")
    a, b, kappa = (parse_rational(p) for p in parts)
    return IncidencePairParam.from_triple(a, b, kappa)


def _write_output(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "lattice":
        points = gen_lattice_section(args.n)
    elif args.kind == "random":
        points = gen_random(args.n, args.bound, args.seed)
    elif args.kind == "grid":
        points = gen_grid(args.rows, args.cols)
    else:
        points = gen_parallel_lines(args.lines, args.per_line, args.spacing)
    if args.out is None or args.out == "-":
        sys.stdout.write("".join(f"{p.x} {p.y}\n" for p in points))
    else:
        write_points(args.out, points)
    return 0


def cmd_count(args: argparse.Namespace) -> int:
    points = read_points(args.input)
    area = parse_rational(args.area)
    counter = count_brute if args.method == "brute" else count_pairline
    print(counter(points, area))
    return 0


def cmd_rich_lines(args: argparse.Namespace) -> int:
    points = read_points(args.input)
    print("A,B,C,members")
    for sl in rich_lines(points, args.k):
        print(f"{sl.line.A},{sl.line.B},{sl.line.C},{len(sl.members)}")
    return 0


def cmd_stats(args: argparse.Namespace) -> int:
    points = read_points(args.input)
    st = incidence_stats(points, args.k)
    print("n,k,m,N,ratio_m,ratio_N")
    print(f"{st.n},{st.k},{st.m},{st.N},{float(st.ratio_m)!r},{float(st.ratio_N)!r}")
    return 0


def cmd_matching(args: argparse.Namespace) -> int:
    points = read_points(args.input)
    area = parse_rational(args.area)
    # M is invariant under shears, so vertical rich lines are sheared away
    # rather than reported as errors.
    sheared = shear(points, find_shear(points))
    pairs = incidence_pairs(sheared, args.k)
    m = count_matching_pairs(
        pairs, area, require_q_in_s=args.require_q_in_s, points=sheared
    )
    print("n,k,A,N,M")
    print(f"{len(points)},{args.k},{area},{len(pairs)},{m}")
    return 0


def cmd_tally(args: argparse.Namespace) -> int:
    points = read_points(args.input)
    area = parse_rational(args.area)
    t = tally_by_richness(points, args.k, area)
    print("n,k,area,total,T0,T1,T2,T3")
    print(f"{len(points)},{args.k},{area},{t.total},{t.T0},{t.T1},{t.T2},{t.T3}")
    return 0


def _curve_document(pair1: IncidencePairParam, pair2: IncidencePairParam) -> dict:
    case = match_curve(pair1, pair2)
    doc: dict = {"case": case.tag.value, "coefficients": None, "bundle": None, "asymptotes": None}
    if case.curve is None:
        return doc
    doc["coefficients"] = case.curve.coefficient_list()
    b = case.bundle
    doc["bundle"] = {
        **{
            name: [str(form.cx), str(form.cy), str(form.c0)]
            for name, form in zip(
                ("L1", "L2", "L3", "L4", "L5", "L6"),
                (b.L1, b.L2, b.L3, b.L4, b.L5, b.L6),
            )
        },
        "C": str(b.C),
        "D": str(b.D),
        "E": str(b.E),
        "F": str(b.F),
        "s": str(b.s),
    }
    try:
        doc["asymptotes"] = [[l.A, l.B, l.C] for l in asymptotes(case.curve)]
    except NonSimpleFactorUnsupported as exc:
        log.warning("asymptotes unavailable: %s", exc)
    return doc


def cmd_curve(args: argparse.Namespace) -> int:
    pair1 = _parse_pair(args.pair1)
    pair2 = _parse_pair(args.pair2)
    doc = _curve_document(pair1, pair2)
    _write_output(json.dumps(doc, indent=2) + "\n", args.out)
    return 0


def cmd_reconstruct(args: argparse.Namespace) -> int:
    with open(args.input, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    entries = doc["coefficients"] if isinstance(doc, dict) else doc
    if entries is None:
        raise ValueError("document holds no curve coefficients")
    cubic = BivariateCubic.from_coefficient_list(entries)
    q1, q2 = reconstruct_generators(cubic)
    for q in (q1, q2):
        print(f"{q.a} {q.b} {q.kappa}")
    return 0


def cmd_bezout(args: argparse.Namespace) -> int:
    report = bezout_scan(args.trials, args.seed, args.threads)
    print("trials,max_upper_bound,violations")
    print(f"{report.trials},{report.max_value},{report.violations}")
    if report.violations:
        raise InvariantViolation(f"{report.violations} curve pairs exceeded 9 intersections")
    return 0


def cmd_k310(args: argparse.Namespace) -> int:
    report = k310_scan(args.trials, args.seed, args.threads)
    print("trials,max_common_points,violations")
    print(f"{report.trials},{report.max_value},{report.violations}")
    if report.violations:
        raise InvariantViolation(f"{report.violations} surface triples exceeded 9 common points")
    return 0


def cmd_scaling(args: argparse.Namespace) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    area = None if args.area is None else parse_rational(args.area)
    rows = scaling_experiment(args.kind, sizes, k=args.k, area=area, seed=args.seed)
    _write_output(experiment_csv(rows), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equiarea",
        description="Exact counting and curve machinery for fixed-area triangles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a point set")
    p.add_argument("--kind", choices=("lattice", "random", "grid", "parallel"), required=True)
    p.add_argument("--n", type=int, default=16)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=12)
    p.add_argument("--rows", type=int, default=3)
    p.add_argument("--cols", type=int, default=3)
    p.add_argument("--lines", type=int, default=3)
    p.add_argument("--per-line", type=int, default=5)
    p.add_argument("--spacing", type=int, default=1)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("count", help="count fixed-area triangles")
    p.add_argument("--input", required=True)
    p.add_argument("--area", default="1")
    p.add_argument("--method", choices=("brute", "pairline"), default="pairline")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("rich-lines", help="list lines holding at least k points")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, default=2)
    p.set_defaults(func=cmd_rich_lines)

    p = sub.add_parser("stats", help="rich-line and incidence statistics")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, default=2)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("matching", help="count ordered matching pairs")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--area", default="1")
    p.add_argument("--require-q-in-s", action="store_true")
    p.set_defaults(func=cmd_matching)

    p = sub.add_parser("tally", help="richness tally of fixed-area triangles")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--area", default="1")
    p.set_defaults(func=cmd_tally)

    p = sub.add_parser("curve", help="derive the match curve of two pairs")
    p.add_argument("--pair1", required=True, metavar="a,b,kappa")
    p.add_argument("--pair2", required=True, metavar="a,b,kappa")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("reconstruct", help="recover the generators of a curve")
    p.add_argument("--in", dest="input", required=True)
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("bezout", help="random curve-pair intersection scan")
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_bezout)

    p = sub.add_parser("k310-scan", help="random surface-triple incidence scan")
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_k310)

    p = sub.add_parser("scaling", help="size sweep with the pair-line counter")
    p.add_argument("--kind", choices=("lattice", "random", "grid", "parallel"), default="lattice")
    p.add_argument("--sizes", default="100,200,400,800")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--area", default=None, help="target area; defaults to 1/2 for lattice, 1 otherwise")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_scaling)

    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return 1
    except PointFileError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except (GeometryError, ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
