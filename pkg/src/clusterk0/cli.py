"""Command-line interface: ``clusterk0 <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 invalid tilting set, 4 resource limit, 5 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import k0engine as k0
from .homoracle import ext_c, rigid_via_ext
from .intlattice import AbelianGroupType
from .polygon import (
    Angulation,
    InvalidDiagonal,
    PolygonModel,
    ResourceLimit,
    count_angulations,
    enumerate_angulations,
    fan_tilting,
    format_diagonals,
    is_angulation,
    is_d_rigid,
    parse_diagonals,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_TILTING, EXIT_LIMIT, EXIT_IO = range(6)

MAX_NODES_ENV = "CLUSTERK0_MAX_NODES"
MAX_W_ENV = "CLUSTERK0_MAX_W"
DEFAULT_MAX_NODES = 5_000_000
DEFAULT_MAX_W = 60


class UsageError(Exception):
    pass


def _range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if sep else lo_i
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo..hi, got {text!r}") from None
    if lo_i < 1 or hi_i < lo_i:
        raise argparse.ArgumentTypeError(f"empty or invalid range {text!r}")
    return list(range(lo_i, hi_i + 1))


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a value >= 1, got {v}")
    return v


def _max_nodes(args) -> int:
    if args.max_nodes is not None:
        return args.max_nodes
    return int(os.environ.get(MAX_NODES_ENV, DEFAULT_MAX_NODES))


def _group_json(G: AbelianGroupType) -> dict:
    return G.to_json()


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=False))


def _tilting(model: PolygonModel, text: str | None) -> Angulation:
    if text is None:
        return fan_tilting(model)
    diags = parse_diagonals(model, text)
    if not is_angulation(model, diags):
        raise k0.NotGenerating(f"{format_diagonals(diags)} is not a maximal noncrossing set")
    return Angulation(tuple(diags))


def cmd_k0(args) -> int:
    model = PolygonModel(args.d, args.n)
    if args.method == "mesh":
        G = k0.k0_mesh(model)
    elif args.method == "fan":
        G = k0.cokernel(k0.fan_relations(model))
    else:
        if args.tilting is None:
            raise UsageError("--method tilting needs --tilting")
        try:
            T = _tilting(model, args.tilting)
        except k0.NotGenerating as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_TILTING
        G = k0.k0_index_group(model, T)
    print(G)
    _emit({"d": args.d, "n": args.n, "method": args.method, "group": _group_json(G), "human": str(G)})
    return EXIT_OK


def cmd_verify(args) -> int:
    max_w = int(os.environ.get(MAX_W_ENV, DEFAULT_MAX_W)) if args.max_w is None else args.max_w
    widest = max(args.d) * (max(args.n) + 1) + 2
    if widest > max_w:
        print(f"error: W={widest} exceeds the cap {max_w}", file=sys.stderr)
        return EXIT_LIMIT
    report = k0.verify_range(args.d, args.n, workers=args.workers)
    print(k0.report_json(report, timings=args.timings))
    failed = [cell for cell in report if not cell["agree"]]
    for cell in failed:
        print(f"disagreement at d={cell['d']} n={cell['n']}: {cell['routes']}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_angulations(args) -> int:
    model = PolygonModel(args.d, args.n)
    try:
        if args.count_only:
            print(count_angulations(model, max_nodes=_max_nodes(args)))
            return EXIT_OK
        found = enumerate_angulations(model, limit=args.limit, max_nodes=_max_nodes(args))
    except ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    if args.json:
        _emit([[[u.a, u.b] for u in T] for T in found])
    else:
        for T in found:
            print(format_diagonals(T))
    return EXIT_OK


def cmd_arquiver(args) -> int:
    from .arquiver import build_quiver, to_dot

    q = build_quiver(PolygonModel(args.d, args.n))
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(to_dot(q))
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"vertices={len(q.vertices)} arrows={len(q.arrows)}")
    return EXIT_OK


def cmd_index(args) -> int:
    model = PolygonModel(args.d, args.n)
    try:
        T = _tilting(model, args.tilting)
    except k0.NotGenerating as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TILTING
    (u,) = parse_diagonals(model, args.object)
    iv = k0.index_in_quotient(model, T, u)
    # echo-check: sum x_i [T_i] must equal [u] in K0(C)
    P = k0.tilting_map(model, T)
    mesh_gens = k0.mesh_presentation(model).generators
    combo = P.vecmul(list(iv.coords))
    combo[mesh_gens.index(u)] -= 1
    ok = k0._mesh_quotient(model)[1].is_zero(combo)
    _emit({
        "d": args.d,
        "n": args.n,
        "tilting": format_diagonals(T),
        "object": f"{u.a},{u.b}",
        "index": list(iv.coords),
        "lattice": iv.modulus.tolist(),
        "verified": ok,
    })
    return EXIT_OK if ok else EXIT_FAIL


def cmd_rigid(args) -> int:
    model = PolygonModel(args.d, args.n)
    diags = parse_diagonals(model, args.set)
    by_cross = is_d_rigid(model, diags)
    by_ext = rigid_via_ext(model, diags)
    verdict = "rigid" if by_cross else "not rigid"
    if by_cross != by_ext:
        print(f"DISAGREE: crossing says {verdict}, ext says {'rigid' if by_ext else 'not rigid'}")
        return EXIT_FAIL
    print(f"{verdict} (crossing and ext routes agree)")
    return EXIT_OK


def cmd_hom(args) -> int:
    model = PolygonModel(args.d, args.n)
    (u,) = parse_diagonals(model, args.source)
    (v,) = parse_diagonals(model, args.target)
    if not 0 <= args.degree <= model.d + 1:
        raise UsageError(f"degree must lie in 0..{model.d + 1}")
    print(ext_c(model, u, v, args.degree))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="clusterk0", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def model_args(sp):
        sp.add_argument("--d", type=_positive, required=True)
        sp.add_argument("--n", type=_positive, required=True)

    sp = sub.add_parser("k0", help="Grothendieck group by one route")
    model_args(sp)
    sp.add_argument("--method", choices=["mesh", "fan", "tilting"], default="mesh")
    sp.add_argument("--tilting", help='angulation as "a,b;c,e;..."')
    sp.set_defaults(func=cmd_k0)

    sp = sub.add_parser("verify", help="compare all routes with the closed form over a grid")
    sp.add_argument("--d", type=_range, required=True, help="lo..hi")
    sp.add_argument("--n", type=_range, required=True, help="lo..hi")
    sp.add_argument("--workers", type=_positive, default=1)
    sp.add_argument("--timings", action="store_true", help="record per-cell milliseconds")
    sp.add_argument("--max-w", type=_positive, default=None,
                    help=f"largest polygon allowed (env {MAX_W_ENV}, default {DEFAULT_MAX_W})")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("angulations", help="list or count (d+2)-angulations")
    model_args(sp)
    sp.add_argument("--count-only", action="store_true")
    sp.add_argument("--limit", type=_positive)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--max-nodes", type=_positive, default=None,
                    help=f"search node cap (env {MAX_NODES_ENV}, default {DEFAULT_MAX_NODES})")
    sp.set_defaults(func=cmd_angulations)

    sp = sub.add_parser("arquiver", help="write the AR quiver as DOT")
    model_args(sp)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_arquiver)

    sp = sub.add_parser("index", help="index of a diagonal with respect to a tilting object")
    model_args(sp)
    sp.add_argument("--tilting", help="angulation (default: the fan)")
    sp.add_argument("--object", required=True)
    sp.set_defaults(func=cmd_index)

    sp = sub.add_parser("rigid", help="d-rigidity by crossing and by Ext")
    model_args(sp)
    sp.add_argument("--set", required=True)
    sp.set_defaults(func=cmd_rigid)

    sp = sub.add_parser("hom", help="dim Ext^k between two diagonals (k = 0 is Hom)")
    model_args(sp)
    sp.add_argument("--from", dest="source", required=True)
    sp.add_argument("--to", dest="target", required=True)
    sp.add_argument("--degree", type=int, default=0)
    sp.set_defaults(func=cmd_hom)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidDiagonal, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
