"""Command-line front end.

Exit status: 0 on success, 1 when a verification or balancing check fails,
2 on bad input.
"""

from __future__ import annotations

import argparse
import sys

from . import io
from .csm import KOutOfRange, csm_cycle, csm_intersection, verify_main_theorem
from .flags import FlagOfFlats, beta_expansion, increasing_flags, proper_flags
from .matroid import LoopPresent, Matroid, MatroidError, set_str
from .tropical import FanError, WeightedFan, balancing_check, bergman_fan, intersection_report
from .tutte import reduced_char_poly, render_poly, tutte

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _load(args) -> tuple[Matroid, list[int] | None]:
    M, order = io.resolve_matroid(args.matroid)
    cli_order = io.parse_order(getattr(args, "order", None))
    order = cli_order if cli_order is not None else order
    if order is not None and sorted(order) != M.elements:
        raise io.InputError(f"order {order} is not a permutation of {M.elements}")
    return M, order


def _emit(args, doc, text_lines):
    if args.json:
        print(io.dumps(doc))
    else:
        print("\n".join(text_lines))


def _name(M: Matroid) -> str:
    return M.name or "matroid"


def cmd_tutte(args) -> int:
    M, order = _load(args)
    T = tutte(M, order)
    doc = {"matroid": _name(M), "tutte": T.to_json(), "beta": T[1, 0]}
    lines = [f"T({_name(M)}; x, y) = {T.render()}", f"beta = {T[1, 0]}", "t_ij:"]
    for (i, j), c in T.coeffs.items():
        lines.append(f"  t[{i},{j}] = {c}")
    if M.loops:
        doc["reduced_char_poly_shifted"] = None
        lines.append(f"notice: loops {set_str(M.loops)} present; reduced characteristic polynomial skipped")
    else:
        chi = reduced_char_poly(M, shifted=True)
        doc["reduced_char_poly_shifted"] = chi
        lines.append(f"reduced chi(q+1) = {render_poly(chi)}")
    _emit(args, doc, lines)
    return EXIT_OK


def _ks(M: Matroid, k):
    d = M.rank() - 1
    if k is None:
        return range(d + 1)
    if not 0 <= k <= d:
        raise KOutOfRange(f"k = {k} outside 0..{d}")
    return [k]


def cmd_csm(args) -> int:
    M, _ = _load(args)
    M.require_loopless()
    cycles = []
    lines = []
    for k in _ks(M, args.k):
        cyc = csm_cycle(M, k)
        cycles.append({"k": k, "fan": cyc.fan.to_json()})
        lines.append(f"csm_{k}({_name(M)}): dimension {k}, {len(cyc.fan)} weighted cones")
        for wc in sorted(cyc.fan.cones, key=lambda c: c.flag.flats):
            lines.append(f"  {wc.weight:+d}  {wc.flag}")
    _emit(args, {"matroid": _name(M), "cycles": cycles}, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    M, order = _load(args)
    if order is not None:
        # relabel so that the requested order becomes the natural one
        perm = [0] * len(order)
        for pos, e in enumerate(order):
            perm[e] = pos
        M = M.relabel(perm)
    report = verify_main_theorem(M, args.seeds, args.chamber)
    lines = [f"{report.name}: rank {report.rank}",
             "   k  seed  geometric  combinatorial  tutte  ok"]
    for r in report.rows:
        lines.append(f"  {r.k:2d}  {r.seed:4d}  {r.geometric:9d}  {r.combinatorial:13d}  "
                     f"{r.tutte:5d}  {'pass' if r.passed else 'FAIL'}")
    _emit(args, report.to_json(), lines)
    return EXIT_OK if report.passed else EXIT_FAIL


def _balance_lines(label, report):
    status = "balanced" if report.balanced else "NOT balanced"
    out = [f"{label}: {status} ({report.ridges_checked} ridges)"]
    for f in report.failures:
        out.append(f"  failing ridge {list(map(list, f.ridge))}: residual {list(f.residual)}")
    return out


def _balance_doc(label, report):
    return {"fan": label, "balanced": report.balanced, "ridges": report.ridges_checked,
            "failures": [{"ridge": [list(r) for r in f.ridge], "residual": list(f.residual)}
                         for f in report.failures]}


def cmd_balance(args) -> int:
    checks = []
    if args.fan:
        fan = WeightedFan.from_json(io.read_document(args.fan))
        checks.append((args.fan, balancing_check(fan)))
    else:
        if not args.matroid:
            raise io.InputError("give a matroid spec or --fan FILE")
        M, _ = _load(args)
        M.require_loopless()
        checks.append((f"Bergman fan of {_name(M)}", balancing_check(bergman_fan(M))))
        for k in range(M.rank()):
            checks.append((f"csm_{k}", balancing_check(csm_cycle(M, k).fan)))
    lines = [line for label, rep in checks for line in _balance_lines(label, rep)]
    _emit(args, {"checks": [_balance_doc(label, rep) for label, rep in checks]}, lines)
    return EXIT_OK if all(rep.balanced for _, rep in checks) else EXIT_FAIL


def cmd_flags(args) -> int:
    M, order = _load(args)
    M.require_loopless()
    ks = [args.k] if args.k is not None else range(1, M.rank() + 1)
    found: list[FlagOfFlats] = []
    for k in ks:
        found += increasing_flags(M, k, order) if args.increasing else proper_flags(M, k)
    lines = [str(f) for f in found]
    if args.increasing and args.k is None:
        lines.append(f"beta expansion of T(x,0): {render_poly(beta_expansion(M, order), 'x')}")
    _emit(args, [f.to_json() for f in found], lines)
    return EXIT_OK


def cmd_degree(args) -> int:
    M, _ = _load(args)
    M.require_loopless()
    docs, lines = [], []
    for k in _ks(M, args.k):
        pts = csm_intersection(M, k, args.seed, args.chamber)
        rep = intersection_report(pts)
        docs.append({"k": k, **rep})
        lines.append(f"csm_{k}: degree {rep['degree']} from {len(pts)} points")
        for p in rep["points"]:
            lines.append(f"  ({', '.join(p['coords'])})  mult {p['mult']}")
    _emit(args, {"matroid": _name(M), "intersections": docs}, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matroid-csm",
        description="CSM cycles of matroids as tropical fans, and their degrees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, matroid_required=True):
        p = sub.add_parser(name, help=help_text)
        if matroid_required:
            p.add_argument("matroid", help="'uniform R M', a catalog name, a JSON file, or - for stdin")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("tutte", cmd_tutte, "Tutte polynomial, beta invariant and reduced chi")
    p.add_argument("--order", help="element order as a comma separated permutation")

    p = add("csm", cmd_csm, "list the weighted cones of csm_k")
    p.add_argument("-k", type=int)

    p = add("verify", cmd_verify, "check the three degree routes agree for every k")
    p.add_argument("--seeds", type=int, nargs="+", default=[0])
    p.add_argument("--chamber", choices=["decreasing", "random"], default="decreasing")
    p.add_argument("--order", help="relabel so this order becomes the natural one")

    p = add("balance", cmd_balance, "balancing check for the Bergman fan and csm cycles", False)
    p.add_argument("matroid", nargs="?")
    p.add_argument("--fan", help="check a fan JSON document instead")

    p = add("flags", cmd_flags, "enumerate proper or increasing flags of flats")
    p.add_argument("-k", type=int, help="number of steps")
    p.add_argument("--increasing", action="store_true")
    p.add_argument("--order")

    p = add("degree", cmd_degree, "stable intersection points of csm_k with a generic linear space")
    p.add_argument("-k", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--chamber", choices=["decreasing", "random"], default="decreasing")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (io.InputError, FanError, LoopPresent, KOutOfRange, MatroidError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
