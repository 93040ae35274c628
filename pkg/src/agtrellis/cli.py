"""``agtrellis`` command line.

Exit status: 0 on success, 1 on bad input, 2 when an exact computation is
refused for exceeding its budget.
"""
from __future__ import annotations

import argparse
import sys

from . import curves
from .bounds import AgDescriptor, best_lower_bound, prop2_1, prop2_2
from .code import (
    BudgetExceeded,
    DegenerateCode,
    LinearCode,
    dual,
    ghw_hierarchy,
    greedy_order,
    is_mds,
    min_distance_bruteforce,
    min_state_complexity_exhaustive,
    permute,
    random_order_search,
    state_profile_msgm,
    wolf,
)
from .codefile import CodeFileError, read_code
from .gf import FieldError, field_of_order, parse_field
from .report import base_document, render, table_document
from .semigroup import GonalitySequence, NumericalSemigroup, gonality_from_plane_degree
from .tables import bound_table
from .trellis import build_minimal_trellis, viterbi_decode


class InputError(ValueError):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def parse_curve(designator: str) -> tuple[LinearCode, AgDescriptor | None, dict]:
    """Build the code named by ``rs:q,n,k``, ``hermitian:q0,m`` or
    ``elliptic:p^m,a1,a2,a3,a4,a6,m``."""
    kind, _, rest = designator.partition(":")
    parts = rest.split(",")
    try:
        if kind == "rs":
            q, n, k = (int(x) for x in parts)
            F = field_of_order(q)
            C = curves.reed_solomon(F, n, k)
            rational = NumericalSemigroup((1,))
            desc = AgDescriptor.one_point(n, k - 1, rational, GonalitySequence(0, (0,)))
            return C, desc, {"curve": "rational", "q": q, "n": n, "k": k}
        if kind == "hermitian":
            q0, m = (int(x) for x in parts)
            C = curves.hermitian_code(q0, m)
            H = NumericalSemigroup((q0, q0 + 1))
            desc = AgDescriptor.one_point(q0**3, m, H, gonality_from_plane_degree(q0 + 1))
            return C, desc, {"curve": "hermitian", "q0": q0, "m": m}
        if kind == "elliptic":
            F = parse_field(parts[0])
            a1, a2, a3, a4, a6, m = (int(x) for x in parts[1:])
            E = curves.elliptic_create(F, a1, a2, a3, a4, a6)
            C = curves.elliptic_one_point_code(E, m)
            n = len(E.affine_points)
            desc = AgDescriptor(
                n=n, deg_G=m, g=1, a=0, k=m,
                gonality=GonalitySequence(1, (0, 2)),
                ell_2G_minus_D=curves.ell_one_point(E, 2 * m, E.affine_points),
            )
            info = {"curve": "elliptic", "field": str(F), "coefficients": [a1, a2, a3, a4, a6],
                    "m": m, "group_order": E.order, "idempotents": curves.idempotent_count(E)}
            return C, desc, info
    except (ValueError, FieldError) as exc:
        raise InputError(f"bad designator {designator!r}: {exc}") from None
    raise InputError(f"unknown curve designator {designator!r}")


def _apply_order(C: LinearCode, order: str | None, report: dict) -> LinearCode:
    if order is None or order == "identity":
        return C
    if order == "exhaustive":
        s, best = min_state_complexity_exhaustive(C)
        report["ordering"] = {"mode": "exhaustive", "s(C)": s, "order": list(best)}
        return permute(C, best)
    if order.startswith("random"):
        _, _, seed = order.partition(":")
        s, best = random_order_search(C, seed=int(seed or 0))
        report["ordering"] = {"mode": order, "upper bound on s(C)": s, "order": list(best)}
        return permute(C, best)
    if order == "greedy":
        s, best = greedy_order(C)
        report["ordering"] = {"mode": "greedy", "upper bound on s(C)": s, "order": list(best)}
        return permute(C, best)
    perm = _int_list(order)
    try:
        C = permute(C, perm)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    report["ordering"] = {"mode": "given", "order": perm}
    return C


def analyze(C: LinearCode, order=None, distance=False, ghw=None, bounds=False,
            desc: AgDescriptor | None = None, command="analyze", inputs=None) -> dict:
    doc = base_document(command, **(inputs or {}))
    doc["code"] = {"q": str(C.field), "n": C.n, "k": C.k}
    C = _apply_order(C, order, doc)
    prof = state_profile_msgm(C)
    doc["profile"] = list(prof.values)
    doc["s_T"] = prof.s_T
    doc["wolf"] = wolf(C)

    d = d_dual = ghw_C = ghw_D = None
    if distance or bounds or ghw:
        dist = {}
        d = min_distance_bruteforce(C)
        dist["d"] = d
        if C.k < C.n:
            d_dual = min_distance_bruteforce(dual(C))
            dist["d_dual"] = d_dual
        dist["singleton"] = C.n - C.k + 1
        dist["mds"] = is_mds(C, d)
        if ghw or bounds:
            ghw_C = ghw_hierarchy(C)
            dist["ghw"] = ghw_C[: ghw] if ghw else ghw_C
            if C.k < C.n:
                ghw_D = ghw_hierarchy(dual(C))
        doc["distance"] = dist
    if bounds and desc is None:
        b = {"wolf": wolf(C)}
        if d_dual is not None:
            b["prop2_1"] = prop2_1(C.n, C.k, d, d_dual)
        b["prop2_2"] = prop2_2(C.n, C.k, ghw_C, d, ghw_D, d_dual)
        b["best"] = max(v for key, v in b.items() if key != "wolf")
        doc["bounds"] = b
    if desc is not None:
        report = best_lower_bound(desc, d=d, d_dual=d_dual, ghw=ghw_C, ghw_dual=ghw_D)
        doc["bounds"] = report.to_dict()
        doc["s_T >= best lower bound"] = prof.s_T >= report.best
    return doc


def cmd_tables(args) -> dict:
    generators = tuple(_int_list(args.semigroup)) if args.semigroup else None
    try:
        return table_document(bound_table(args.curve, generators))
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_analyze(args) -> dict:
    C = read_code(args.file)
    return analyze(C, args.order, args.distance, args.ghw, args.bounds,
                   inputs={"file": args.file})


def cmd_curve(args) -> dict:
    C, desc, info = parse_curve(args.designator)
    return analyze(C, args.order, args.distance, args.ghw, args.bounds, desc=desc,
                   command="curve", inputs={"designator": args.designator, **info})


def cmd_decode(args) -> dict:
    C = read_code(args.file)
    received = _int_list(args.received)
    T = build_minimal_trellis(C)
    try:
        word, dist = viterbi_decode(T, received)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    doc = base_document("decode", file=args.file, received=received)
    doc["codeword"] = [int(x) for x in word]
    doc["distance"] = dist
    return doc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="agtrellis", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("tables", help="bound tables for Hermitian / Suzuki one-point codes")
    p.add_argument("--curve", required=True, choices=("hermitian", "suzuki"))
    p.add_argument("--semigroup", help="Weierstrass semigroup generators, e.g. 8,10,13,14")
    common(p)
    p.set_defaults(func=cmd_tables)

    order_help = "identity | exhaustive | greedy | random:SEED | comma-separated permutation"
    for name, func, target in (("analyze", cmd_analyze, "file"), ("curve", cmd_curve, "designator")):
        p = sub.add_parser(name)
        p.add_argument(target)
        p.add_argument("--order", help=order_help)
        p.add_argument("--distance", action="store_true")
        p.add_argument("--ghw", type=int, metavar="R")
        p.add_argument("--bounds", action="store_true")
        common(p)
        p.set_defaults(func=func)

    p = sub.add_parser("decode", help="maximum-likelihood (Hamming) decoding on the minimal trellis")
    p.add_argument("file")
    p.add_argument("--received", required=True)
    common(p)
    p.set_defaults(func=cmd_decode)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = args.func(args)
    except BudgetExceeded as exc:
        print(f"agtrellis: refused ({exc.budget} budget): {exc}", file=sys.stderr)
        return 2
    except (InputError, CodeFileError, FieldError, DegenerateCode, OSError) as exc:
        print(f"agtrellis: error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(render(doc, args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
