"""Command-line interface.

Subcommands: classify, explore, render, rank2, pair, verify.  Exit codes:
0 success, 1 invariant failure, 2 parse error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .exchange import (
    ExchangeMatrix,
    NotCyclic,
    NotSkewSymmetrizable,
    NotTotallyInfinite,
    is_cluster_cyclic,
    is_totally_infinite,
    markov_constant,
)
from .explorer import (
    ResourceCapExceeded,
    explore,
    find_negative_orthant,
    load_fan_file,
    save_fan_file,
)
from .rank2 import g_sequence, limit_vectors
from .rank3 import PairNotInfinite, fan_type, limit_rays, pair_asymptotics
from .render import RenderOptions, render_svg
from .seeds import apply_word, initial_seed, verify_seed

EXIT_OK = 0
EXIT_INVARIANT = 1
EXIT_PARSE = 2
EXIT_RESOURCE = 3


def _load_matrix(path: str) -> ExchangeMatrix:
    with open(path) as fh:
        doc = json.load(fh)
    return ExchangeMatrix.from_json(doc)


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _surd(q) -> str:
    return repr(q)


def _cmd_classify(args) -> int:
    B = _load_matrix(args.matrix)
    report = fan_type(B)
    rays = {i: limit_rays(B, i) for i in (1, 2, 3)}
    try:
        constant = markov_constant(B)
        cyclic_verdict = is_cluster_cyclic(B)
    except NotCyclic:
        constant = None
        cyclic_verdict = False
    doc = {
        "triplet": list(report.triplet),
        "case": report.case_label,
        "markov_constant": constant,
        "cluster_cyclic": cyclic_verdict,
        "swap_applied": report.swap_applied,
        "vertices": [
            {
                "vertex": r.vertex,
                "type": r.tag,
                "c0_d0": list(r.c0_d0),
                "pair_ab": list(r.pair_ab),
                "band_index": r.band_index,
                "boundary_equality": r.boundary_equality,
                "swap_applied": r.swap_applied,
            }
            for r in report.reports
        ],
        "limit_rays": {
            str(i): {
                "v": [[str(c.x), str(c.y), c.delta] for c in rays[i][0]],
                "v_prime": [[str(c.x), str(c.y), c.delta] for c in rays[i][1]],
            }
            for i in rays
        },
    }
    if args.format == "json":
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        lines = [
            f"type of fan: ({', '.join(report.triplet)})   case {report.case_label}",
            f"markov constant: {constant}",
            f"cluster-cyclic: {cyclic_verdict}",
        ]
        for r in report.reports:
            extra = ""
            if r.band_index is not None:
                eq = " (boundary equality)" if r.boundary_equality else ""
                extra = f", N={r.band_index}{eq}"
            lines.append(
                f"  v{r.vertex}: type {r.tag[1:]} with (c0,d0)={r.c0_d0}, "
                f"(a,b)={r.pair_ab}{extra}"
            )
        for i in (1, 2, 3):
            v, vp = rays[i]
            lines.append(f"  limit rays at v{i}:")
            lines.append("    v  = (" + ", ".join(_surd(c) for c in v) + ")")
            lines.append("    v' = (" + ", ".join(_surd(c) for c in vp) + ")")
            lines.append(
                "    decimal v  = ("
                + ", ".join(f"{float(c):.6f}" for c in v) + ")"
            )
            lines.append(
                "    decimal v' = ("
                + ", ".join(f"{float(c):.6f}" for c in vp) + ")"
            )
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _cmd_explore(args) -> int:
    B = _load_matrix(args.matrix)
    fan = explore(B, args.depth, max_cones=args.max_cones)
    if args.out:
        save_fan_file(fan, args.out)
    else:
        from .explorer import save_fan

        sys.stdout.write(json.dumps(save_fan(fan)) + "\n")
    word = find_negative_orthant(fan)
    sys.stderr.write(
        f"{len(fan.cones)} cones, {len(fan.adjacency)} adjacencies, "
        f"{len(fan.frontier)} frontier; negative orthant: "
        f"{list(word) if word is not None else 'not found'}\n"
    )
    return EXIT_OK


def _cmd_render(args) -> int:
    fan = load_fan_file(args.fan)
    opts = RenderOptions(
        arc_resolution=args.arc_resolution,
        shade_frontier=not args.no_shade,
        label_normals=args.label_normals,
    )
    _emit(render_svg(fan, opts), args.out)
    return EXIT_OK


def _cmd_rank2(args) -> int:
    lines = [f"(a,b)=({args.a},{args.b})", "m    g_m           g'_m"]
    for m in range(1, args.steps + 1):
        g = g_sequence("forward", m, args.a, args.b)
        gp = g_sequence("backward", m, args.a, args.b)
        lines.append(f"{m:<4} {str(g):<13} {gp}")
    v, vp = limit_vectors(args.a, args.b)
    lines.append(f"limit slope v2  = {v[1]!r} = {float(v[1]):.8f}")
    lines.append(f"limit slope v'2 = {vp[1]!r} = {float(vp[1]):.8f}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _cmd_pair(args) -> int:
    B = _load_matrix(args.matrix)
    v, vp = pair_asymptotics(B, args.i, args.j)
    doc = {
        "i": args.i,
        "j": args.j,
        "v": [[str(c.x), str(c.y), c.delta] for c in v],
        "v_prime": [[str(c.x), str(c.y), c.delta] for c in vp],
        "v_decimal": [float(c) for c in v],
        "v_prime_decimal": [float(c) for c in vp],
    }
    if args.format == "json":
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        lines = [
            f"pair ({args.i},{args.j})",
            "v  = (" + ", ".join(_surd(c) for c in v) + ")",
            "v' = (" + ", ".join(_surd(c) for c in vp) + ")",
            "decimal v  = (" + ", ".join(f"{float(c):.6f}" for c in v) + ")",
            "decimal v' = (" + ", ".join(f"{float(c):.6f}" for c in vp) + ")",
        ]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    B = _load_matrix(args.matrix)
    rng = random.Random(args.seed)
    sys.stdout.write(f"seed: {args.seed}\n")
    counts = {"seeds": 0}
    failures = []
    s0 = initial_seed(B)
    level = [s0]
    for name, ok in verify_seed(s0).items():
        if not ok:
            failures.append(f"initial seed: {name}")
    counts["seeds"] += 1
    for _ in range(args.depth):
        nxt = []
        for s in level:
            last = s.word[-1] if s.word else 0
            for k in range(1, B.n + 1):
                if k == last:
                    continue
                child = s.mutate(k)
                counts["seeds"] += 1
                for name, ok in verify_seed(child).items():
                    if not ok:
                        failures.append(f"word {child.word}: {name}")
                nxt.append(child)
        level = nxt
    # a few random word replays double as involution checks
    for _ in range(10):
        word = [rng.randrange(1, B.n + 1) for _ in range(args.depth)]
        s = apply_word(initial_seed(B), word + word[::-1])
        if s.b.entries != B.entries:
            failures.append(f"word {word} is not undone by its reverse")
    checks = ["det_c", "det_g", "sign_coherence", "duality", "d_pairing"]
    for name in checks:
        status = "FAIL" if any(name in f for f in failures) else "ok"
        sys.stdout.write(f"{name}: {status}\n")
    sys.stdout.write(
        f"verified {counts['seeds']} seeds to depth {args.depth}\n"
    )
    if failures:
        for f in failures[:20]:
            sys.stdout.write(f"failure: {f}\n")
        return EXIT_INVARIANT
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gfans",
        description="Exact engine for rank-3 G-fans of totally-infinite type",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="vertex types and fan case label")
    p.add_argument("matrix")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("explore", help="depth-bounded fan construction")
    p.add_argument("matrix")
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--max-cones", type=int, default=100_000)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_explore)

    p = sub.add_parser("render", help="fan document to SVG")
    p.add_argument("fan")
    p.add_argument("--out")
    p.add_argument("--arc-resolution", type=float, default=2.0)
    p.add_argument("--no-shade", action="store_true")
    p.add_argument("--label-normals", action="store_true")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("rank2", help="rank-2 g-vector tables and limits")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_rank2)

    p = sub.add_parser("pair", help="limit rays for one alternating pair")
    p.add_argument("matrix")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_pair)

    p = sub.add_parser("verify", help="invariant suite on one matrix")
    p.add_argument("matrix")
    p.add_argument("--depth", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceCapExceeded as exc:
        sys.stderr.write(f"resource cap: {exc}\n")
        return EXIT_RESOURCE
    except (json.JSONDecodeError, FileNotFoundError, KeyError,
            NotSkewSymmetrizable, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PARSE
    except (NotCyclic, NotTotallyInfinite, PairNotInfinite) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
