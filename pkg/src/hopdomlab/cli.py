"""Command-line interface: solve, check, reduce, embed, layout, verify.

Exit status: 0 on success / overall PASS, 1 on FAIL / infeasible / invalid,
2 on usage or input parse errors. Results go to stdout (or --out), diagnostics
to stderr. Every emitted graph, offset and report value is an exact integer
or rational; no floating point.
"""

from __future__ import annotations

import argparse
import sys

from .graph import Graph, GraphError, ParseError, parse_graph, serialize_graph
from .solvers import PROBLEM_BY_FLAG, Problem, solve_minimum, CHECKERS
from .reductions import (ReductionError, ReductionFamily, ReductionKind,
                         reduce as reduce_graph, write_reduction_report)
from .geometry import (EmbeddingError, PlacementError, embed_orthogonal,
                       intersection_graph, layout_dot, layout_svg,
                       printed_closed_form, read_embedding, reduce_unit_disk,
                       validate_embedding, write_embedding, write_layout_csv)
from .verify import CorpusSpec, enumerate_corpus, run_verification

KIND_FLAGS = {
    "hd-3reg": (Problem.HOP_DOM, ReductionFamily.THREE_REGULAR),
    "2sd-3reg": (Problem.TWO_STEP_DOM, ReductionFamily.THREE_REGULAR),
    "hd-dreg": (Problem.HOP_DOM, ReductionFamily.D_REGULAR),
    "2sd-dreg": (Problem.TWO_STEP_DOM, ReductionFamily.D_REGULAR),
    "hd-claw": (Problem.HOP_DOM, ReductionFamily.CLAW_FREE),
    "2sd-claw": (Problem.TWO_STEP_DOM, ReductionFamily.CLAW_FREE),
    "hd-ud": (Problem.HOP_DOM, ReductionFamily.UNIT_DISK),
    "2sd-ud": (Problem.TWO_STEP_DOM, ReductionFamily.UNIT_DISK),
}


def _read_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_kind(flag: str, d: int | None) -> ReductionKind:
    if flag not in KIND_FLAGS:
        raise ReductionError(f"unknown kind {flag!r}; choose from {sorted(KIND_FLAGS)}")
    problem, family = KIND_FLAGS[flag]
    if family is ReductionFamily.D_REGULAR:
        if d is None:
            raise ReductionError(f"kind {flag} needs --d")
        return ReductionKind(problem, family, d)
    return ReductionKind(problem, family)


def _cmd_solve(args) -> int:
    g = _read_graph(args.infile)
    problem = PROBLEM_BY_FLAG[args.problem]
    res = solve_minimum(g, problem, budget=args.budget,
                        deterministic=args.deterministic, time_limit=args.time_limit)
    if res.status == "infeasible":
        _emit("INFEASIBLE\n", args.out)
        return 1
    if res.status == "timeout":
        _emit("TIMEOUT\n", args.out)
        return 1
    tag = "" if res.status == "optimal" else " (feasible, optimality not proven)"
    body = f"optimum {res.optimum}{tag}\n" + " ".join(map(str, res.witness)) + "\n"
    _emit(body, args.out)
    return 0


def _cmd_check(args) -> int:
    g = _read_graph(args.infile)
    problem = PROBLEM_BY_FLAG[args.problem]
    s = tuple(int(x) for x in args.set.split())
    ok = CHECKERS[problem](g, s)
    _emit(("valid" if ok else "invalid") + "\n", args.out)
    return 0 if ok else 1


def _cmd_reduce(args) -> int:
    g1 = _read_graph(args.infile)
    kind = _parse_kind(args.kind, args.d)
    if kind.family is ReductionFamily.UNIT_DISK:
        raise ReductionError("use the 'layout' subcommand for unit-disk constructions")
    red = reduce_graph(kind, g1)
    if args.out:
        _emit(serialize_graph(red.output), args.out)
    if args.roles:
        _emit("".join(f"{v}\t{r}\n" for v, r in enumerate(red.roles)), args.roles)
    if args.report:
        _emit(write_reduction_report(red), args.report)
    sys.stdout.write(f"vertices {red.output.n} edges {red.output.m} offset {red.offset}\n")
    return 0


def _cmd_embed(args) -> int:
    g = _read_graph(args.infile)
    emb = embed_orthogonal(g, scale=args.scale)
    _emit(write_embedding(emb), args.out)
    ks = " ".join(str(k) for k in emb.grid_lengths())
    sys.stderr.write(f"embedded {g.n} vertices; grid lengths {ks}\n")
    return 0


def _cmd_layout(args) -> int:
    problem = PROBLEM_BY_FLAG[args.problem]
    if problem is Problem.VERTEX_COVER:
        raise ReductionError("layout targets hd or 2sd")
    if args.embedding:
        with open(args.embedding, encoding="utf-8") as fh:
            emb = read_embedding(fh.read())
        check = validate_embedding(emb)
        if not check:
            sys.stderr.write("\n".join(check.diagnostics) + "\n")
            return 1
    else:
        if not args.infile:
            raise ReductionError("layout needs --embedding or --in")
        emb = embed_orthogonal(_read_graph(args.infile), scale=args.scale)
    layout = reduce_unit_disk(problem, emb)
    if args.out:
        _emit(write_layout_csv(layout), args.out)
    if args.svg:
        _emit(layout_svg(layout), args.svg)
    if args.dot:
        _emit(layout_dot(layout), args.dot)
    if args.graph_out:
        _emit(serialize_graph(intersection_graph(layout)), args.graph_out)
    line = f"disks {len(layout.disks)} offset {layout.offset}"
    printed = printed_closed_form(problem, emb.grid_lengths())
    if printed != layout.offset:
        line += (f" (printed closed form {printed} disagrees with the"
                 f" structural certificate count)")
    sys.stdout.write(line + "\n")
    return 0


def _parse_corpus(spec: str, default_seed: int | None = None) -> CorpusSpec:
    mode, _, rest = spec.partition(":")
    if mode == "named":
        return CorpusSpec(mode="named", names=tuple(rest.split(",")))
    if mode == "exhaustive":
        return CorpusSpec(mode="exhaustive", n_max=int(rest))
    if mode == "random-regular":
        kv = dict(part.split("=") for part in rest.split(","))
        seed = int(kv["seed"]) if "seed" in kv else default_seed
        return CorpusSpec(mode="random-regular", n=int(kv["n"]), d=int(kv["d"]),
                          count=int(kv["count"]), seed=seed)
    raise ValueError(f"unknown corpus spec {spec!r}")


def _parse_seconds(text: str | None) -> float | None:
    if text is None:
        return None
    return float(text[:-1] if text.endswith("s") else text)


def _cmd_verify(args) -> int:
    corpus = enumerate_corpus(_parse_corpus(args.corpus, default_seed=args.seed))
    kinds = []
    ds = [int(x) for x in args.d.split(",")] if args.d else [4]
    for flag in args.kinds.split(","):
        problem, family = KIND_FLAGS[flag]
        if family is ReductionFamily.D_REGULAR:
            kinds.extend(ReductionKind(problem, family, d) for d in ds)
        else:
            kinds.append(ReductionKind(problem, family))
    report = run_verification(corpus, kinds, time_budget_per_row=_parse_seconds(args.budget),
                              deterministic=args.deterministic, scale=args.scale,
                              threads=args.threads)
    if args.out:
        _emit(report.to_tsv(), args.out)
    sys.stdout.write(report.to_text())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hopdomlab")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--out", default=None)

    p = sub.add_parser("solve", help="exact minimum vc / hd / 2sd")
    p.add_argument("--problem", required=True, choices=sorted(PROBLEM_BY_FLAG))
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--time-limit", type=float, default=None)
    p.add_argument("--deterministic", action=argparse.BooleanOptionalAction, default=True)
    add_common(p)
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("check", help="validate a candidate solution set")
    p.add_argument("--problem", required=True, choices=sorted(PROBLEM_BY_FLAG))
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--set", required=True, help="space-separated vertex ids")
    add_common(p)
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("reduce", help="build G2 for a gadget family")
    p.add_argument("--kind", required=True, choices=sorted(KIND_FLAGS))
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--roles", default=None)
    p.add_argument("--report", default=None)
    add_common(p)
    p.set_defaults(fn=_cmd_reduce)

    p = sub.add_parser("embed", help="orthogonal grid embedding")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--scale", type=int, default=4)
    add_common(p)
    p.set_defaults(fn=_cmd_embed)

    p = sub.add_parser("layout", help="unit-disk construction")
    p.add_argument("--problem", required=True, choices=["hd", "2sd"])
    p.add_argument("--in", dest="infile", default=None)
    p.add_argument("--embedding", default=None)
    p.add_argument("--scale", type=int, default=4)
    p.add_argument("--svg", default=None)
    p.add_argument("--dot", default=None)
    p.add_argument("--graph-out", default=None)
    add_common(p)
    p.set_defaults(fn=_cmd_layout)

    p = sub.add_parser("verify", help="corpus-driven identity verification")
    p.add_argument("--corpus", required=True,
                   help="named:K2,P3 | exhaustive:5 | random-regular:n=8,d=3,count=5,seed=7")
    p.add_argument("--kinds", required=True, help="comma list of reduction kinds")
    p.add_argument("--d", default=None, help="comma list of d values for dreg kinds")
    p.add_argument("--budget", default=None, help="seconds per row, e.g. 300 or 300s")
    p.add_argument("--scale", type=int, default=2)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--deterministic", action=argparse.BooleanOptionalAction, default=True)
    add_common(p)
    p.set_defaults(fn=_cmd_verify)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return 2 if ex.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (ParseError, GraphError, ReductionError, EmbeddingError,
            PlacementError, ValueError, OSError) as ex:
        sys.stderr.write(f"error: {ex}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
