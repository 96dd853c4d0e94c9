"""Corpus-driven verification harness.

For every (source graph, reduction kind) pair this module builds the
transformed instance, computes the exact vertex cover optimum of the source
and the exact target optimum of the output, and checks the additive identity
gamma = tau + offset, alongside the certificate round trip and the structural
invariants of the output family. Every failing row carries enough data to
replay it standalone.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .graph import Graph, is_claw_free, is_regular
from .solvers import Problem, solve_minimum
from . import reductions
from .reductions import (Reduction, ReductionError, ReductionFamily, ReductionKind,
                         build_regular_graph, extract_vertex_cover, forward_certificate)
from .geometry import (embed_orthogonal, intersection_graph, reduce_unit_disk,
                       template_edges, unit_disk_extract_cover,
                       unit_disk_forward_certificate, EmbeddingError, PlacementError)

EXHAUSTIVE_MAX = 8


@dataclass(frozen=True)
class CorpusSpec:
    """Which source graphs to verify against.

    mode "exhaustive": all non-isomorphic connected graphs with n <= n_max;
    mode "named": builtin graphs by name; mode "random-regular": seeded
    Havel-Hakimi realizations randomized by edge switching.
    """

    mode: str
    n_max: int | None = None
    names: tuple[str, ...] = ()
    n: int | None = None
    d: int | None = None
    count: int | None = None
    seed: int | None = None
    filters: tuple[str, ...] = ()

    def __post_init__(self):
        if self.mode == "exhaustive":
            if self.n_max is None or not 1 <= self.n_max <= EXHAUSTIVE_MAX:
                raise ValueError(f"exhaustive corpus needs 1 <= n_max <= {EXHAUSTIVE_MAX}")
        elif self.mode == "named":
            if not self.names:
                raise ValueError("named corpus needs at least one graph name")
        elif self.mode == "random-regular":
            if None in (self.n, self.d, self.count):
                raise ValueError("random-regular corpus needs n, d and count")
            if self.seed is None:
                raise ValueError("random-regular corpus needs an explicit seed")
        else:
            raise ValueError(f"unknown corpus mode {self.mode!r}")


def _cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def _complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def _complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def _petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return Graph.from_edges(10, edges)


def _cube() -> Graph:
    edges = []
    for v in range(8):
        for bit in (1, 2, 4):
            w = v ^ bit
            if v < w:
                edges.append((v, w))
    return Graph.from_edges(8, edges)


def named_graph(name: str) -> Graph:
    """Builtin graphs: K<n>, P<n>, C<n>, K<a>,<b>, petersen, Q3."""
    key = name.strip()
    low = key.lower()
    if low == "petersen":
        return _petersen()
    if low == "q3" or low == "cube":
        return _cube()
    if key.startswith(("K", "k")) and "," in key:
        a, b = key[1:].split(",")
        return _complete_bipartite(int(a), int(b))
    if key[0] in "KkCcPp" and key[1:].isdigit():
        n = int(key[1:])
        if key[0] in "Kk":
            return _complete(n)
        if key[0] in "Cc":
            if n < 3:
                raise ValueError(f"cycle needs >= 3 vertices, got {name!r}")
            return _cycle(n)
        return _path(n)
    raise ValueError(f"unknown graph name {name!r}")


def _canonical_key(g: Graph):
    degs = tuple(sorted(len(a) for a in g.adjacency))
    tri = 0
    for u, v in g.edges():
        tri += len(set(g.adjacency[u]) & set(g.adjacency[v]))
    return (g.n, g.m, degs, tri)


def _isomorphic(a: Graph, b: Graph) -> bool:
    import networkx as nx

    ga = nx.Graph(a.edges())
    ga.add_nodes_from(range(a.n))
    gb = nx.Graph(b.edges())
    gb.add_nodes_from(range(b.n))
    return nx.is_isomorphic(ga, gb)


def connected_graphs(n_max: int) -> list[Graph]:
    """All non-isomorphic connected graphs with 1 <= n <= n_max.

    Grown by vertex augmentation: every connected graph on n vertices arises
    from a connected graph on n-1 vertices plus a new vertex attached to a
    nonempty neighborhood (delete any non-cutvertex to see this). Duplicates
    are removed with an invariant bucket plus exact isomorphism checks.
    """
    levels: list[list[Graph]] = [[Graph.from_edges(1, [])]]
    for n in range(2, n_max + 1):
        buckets: dict = {}
        for parent in levels[-1]:
            base_edges = parent.edges()
            for nbhd in range(1, 1 << (n - 1)):
                edges = list(base_edges)
                for i in range(n - 1):
                    if nbhd >> i & 1:
                        edges.append((i, n - 1))
                cand = Graph.from_edges(n, edges)
                key = _canonical_key(cand)
                group = buckets.setdefault(key, [])
                if not any(_isomorphic(cand, seen) for seen in group):
                    group.append(cand)
        level = [g for key in sorted(buckets) for g in buckets[key]]
        levels.append(level)
    out = []
    for level in levels[:n_max]:
        out.extend(level)
    return out


def random_regular_graph(n: int, d: int, seed: int, switches: int | None = None) -> Graph:
    """Seeded edge-switch randomization of the Havel-Hakimi realization."""
    g = build_regular_graph(n, d)
    rng = random.Random(seed)
    edges = set(g.edges())
    if switches is None:
        switches = 20 * len(edges)
    done = 0
    attempts = 0
    while done < switches and attempts < 100 * switches:
        attempts += 1
        (a, b), (c, e) = rng.sample(sorted(edges), 2)
        if len({a, b, c, e}) < 4:
            continue
        p1 = (min(a, c), max(a, c))
        p2 = (min(b, e), max(b, e))
        if p1 in edges or p2 in edges:
            continue
        edges.discard((a, b))
        edges.discard((c, e))
        edges.add(p1)
        edges.add(p2)
        done += 1
    return Graph.from_edges(n, sorted(edges))


FILTERS = {
    "connected": lambda g: len(_components(g)) <= 1,
    "3-regular": lambda g: is_regular(g, 3),
    "planar-deg4": lambda g: _planar_deg4(g),
}


def _components(g: Graph) -> list[set[int]]:
    seen: set[int] = set()
    comps = []
    for root in range(g.n):
        if root in seen:
            continue
        comp = {root}
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(comp)
    return comps


def _planar_deg4(g: Graph) -> bool:
    import networkx as nx

    if any(len(a) > 4 for a in g.adjacency):
        return False
    nxg = nx.Graph(g.edges())
    nxg.add_nodes_from(range(g.n))
    return nx.check_planarity(nxg)[0]


def enumerate_corpus(spec: CorpusSpec) -> list[tuple[str, Graph]]:
    """Deterministic (name, graph) list for a corpus specification."""
    if spec.mode == "exhaustive":
        counts: dict[int, int] = {}
        out = []
        for g in connected_graphs(spec.n_max):
            counts[g.n] = counts.get(g.n, 0) + 1
            out.append((f"g{g.n}_{counts[g.n]}", g))
    elif spec.mode == "named":
        out = [(name, named_graph(name)) for name in spec.names]
    else:
        out = [(f"rr{spec.n}_{spec.d}_s{spec.seed}_{i}",
                random_regular_graph(spec.n, spec.d, spec.seed + i))
               for i in range(spec.count)]
    for f in spec.filters:
        out = [(name, g) for name, g in out if FILTERS[f](g)]
    return out


@dataclass(frozen=True)
class VerifyRow:
    """One (graph, kind) verification record; passed means the identity
    gamma = tau + offset held exactly."""

    graph_name: str
    kind: str
    n1: int
    m1: int
    status: str  # PASS / FAIL / TIMEOUT / SKIPPED
    tau: int | None = None
    gamma: int | None = None
    offset: int | None = None
    expected: int | None = None
    cert_ok: bool | None = None
    extract_ok: bool | None = None
    structure_ok: bool | None = None
    nodes: int = 0
    wall_ms: int = 0
    detail: str = ""
    source_edges: str = ""

    @property
    def passed(self) -> bool:
        return self.gamma is not None and self.expected is not None \
            and self.gamma == self.expected


@dataclass(frozen=True)
class VerifyReport:
    rows: tuple[VerifyRow, ...]

    @property
    def counts(self) -> dict[str, int]:
        out = {"PASS": 0, "FAIL": 0, "TIMEOUT": 0, "SKIPPED": 0}
        for row in self.rows:
            out[row.status] += 1
        return out

    @property
    def passed(self) -> bool:
        return self.counts["FAIL"] == 0

    def to_tsv(self) -> str:
        header = ("# hopdomlab-verify v1\n"
                  "# graph\tkind\tn1\tm1\tstatus\ttau\tgamma\toffset\texpected\t"
                  "cert\textract\tstructure\tnodes\twall_ms\tdetail\tsource_edges\n")

        def s(x):
            return "-" if x is None else (str(int(x)) if isinstance(x, bool) else str(x))

        lines = []
        for r in self.rows:
            lines.append("\t".join([
                r.graph_name, r.kind, str(r.n1), str(r.m1), r.status,
                s(r.tau), s(r.gamma), s(r.offset), s(r.expected),
                s(r.cert_ok), s(r.extract_ok), s(r.structure_ok),
                str(r.nodes), str(r.wall_ms), r.detail or "-", r.source_edges or "-",
            ]))
        return header + "\n".join(lines) + "\n"

    def to_text(self) -> str:
        cols = ["graph", "kind", "status", "tau", "gamma", "expected", "cert", "wall_ms"]
        rows = [[r.graph_name, r.kind, r.status,
                 "-" if r.tau is None else str(r.tau),
                 "-" if r.gamma is None else str(r.gamma),
                 "-" if r.expected is None else str(r.expected),
                 "-" if r.cert_ok is None else ("ok" if r.cert_ok else "BAD"),
                 str(r.wall_ms)] for r in self.rows]
        widths = [max(len(c), *(len(row[i]) for row in rows)) if rows else len(c)
                  for i, c in enumerate(cols)]
        out = ["  ".join(c.ljust(w) for c, w in zip(cols, widths))]
        for row in rows:
            out.append("  ".join(v.ljust(w) for v, w in zip(row, widths)))
        c = self.counts
        out.append(f"summary: {c['PASS']} pass, {c['FAIL']} fail, "
                   f"{c['TIMEOUT']} timeout, {c['SKIPPED']} skipped")
        return "\n".join(out) + "\n"


def _compact_edges(g: Graph) -> str:
    return ";".join(f"{u}-{v}" for u, v in g.edges()) or "(none)"


def _structure_checks(kind: ReductionKind, g1: Graph, red: Reduction) -> tuple[bool, str]:
    problems = []
    if kind.family is ReductionFamily.THREE_REGULAR and is_regular(g1, 3):
        if not is_regular(red.output, 3):
            problems.append("output not 3-regular")
    if kind.family is ReductionFamily.D_REGULAR:
        if is_regular(g1, kind.d) and not is_regular(red.output, kind.d):
            problems.append(f"output not {kind.d}-regular")
        for v in range(g1.n, red.output.n):
            if red.output.degree(v) != kind.d:
                problems.append(f"gadget vertex {v} has degree {red.output.degree(v)}")
                break
    if kind.family is ReductionFamily.CLAW_FREE and not is_claw_free(red.output):
        problems.append("output contains a claw")
    return (not problems, "; ".join(problems))


def verify_pair(name: str, g1: Graph, kind: ReductionKind,
                time_budget: float | None = None,
                deterministic: bool = True,
                scale: int = 2) -> VerifyRow:
    """Run the full check battery for one (graph, kind) pair."""
    start = time.monotonic()
    base = dict(graph_name=name, kind=kind.label, n1=g1.n, m1=g1.m,
                source_edges=_compact_edges(g1))

    def done(**kw):
        kw.setdefault("wall_ms", int((time.monotonic() - start) * 1000))
        return VerifyRow(**base, **kw)

    if kind.family is ReductionFamily.UNIT_DISK:
        if not _planar_deg4(g1):
            return done(status="SKIPPED", detail="not planar with max degree <= 4")
        try:
            emb = embed_orthogonal(g1, scale=scale)
            layout = reduce_unit_disk(kind.problem, emb)
        except (EmbeddingError, PlacementError) as ex:
            return done(status="SKIPPED", detail=f"embedding failed: {ex}")
        g2 = intersection_graph(layout)
        offset = layout.offset
        structure_ok = set(g2.edges()) == template_edges(layout)
        struct_detail = "" if structure_ok else "intersection graph differs from template"
        cert_fn = lambda vc: unit_disk_forward_certificate(layout, vc)
        extract_fn = lambda sol: unit_disk_extract_cover(layout, sol)
    else:
        red = reductions.reduce(kind, g1)
        g2 = red.output
        offset = red.offset
        structure_ok, struct_detail = _structure_checks(kind, g1, red)
        cert_fn = lambda vc: forward_certificate(red, vc)
        extract_fn = lambda sol: extract_vertex_cover(red, sol)

    tau_res = solve_minimum(g1, Problem.VERTEX_COVER, deterministic=deterministic)
    tau = tau_res.optimum
    gamma_res = solve_minimum(g2, kind.problem, deterministic=deterministic,
                              time_limit=time_budget)
    nodes = tau_res.nodes_explored + gamma_res.nodes_explored
    details = [struct_detail] if struct_detail else []

    cert_ok = extract_ok = None
    try:
        cert = cert_fn(tau_res.witness)
        cert_ok = True
        back = extract_fn(cert)
        extract_ok = len(back) <= tau
        if not extract_ok:
            details.append(f"extracted cover size {len(back)} > tau {tau}")
    except (ReductionError, ValueError) as ex:
        if cert_ok is None:
            cert_ok = False
        else:
            extract_ok = False
        details.append(str(ex).splitlines()[0])

    if gamma_res.status == "timeout":
        return done(status="TIMEOUT", tau=tau, offset=offset,
                    expected=tau + offset, cert_ok=cert_ok, extract_ok=extract_ok,
                    structure_ok=structure_ok, nodes=nodes,
                    detail="; ".join(details) or "solver hit the time budget")
    if gamma_res.status == "infeasible":
        details.append("target problem infeasible on output graph")
        return done(status="FAIL", tau=tau, offset=offset, expected=tau + offset,
                    cert_ok=cert_ok, extract_ok=extract_ok,
                    structure_ok=structure_ok, nodes=nodes, detail="; ".join(details))
    gamma = gamma_res.optimum
    identity = gamma == tau + offset
    ok = identity and structure_ok and cert_ok is not False and extract_ok is not False
    if not identity:
        details.insert(0, f"identity fails: gamma={gamma}, tau+offset={tau + offset}")
    return done(status="PASS" if ok else "FAIL", tau=tau, gamma=gamma, offset=offset,
                expected=tau + offset, cert_ok=cert_ok, extract_ok=extract_ok,
                structure_ok=structure_ok, nodes=nodes, detail="; ".join(details))


def worker_count(requested: int | None = None) -> int:
    if requested is not None:
        return max(1, requested)
    env = os.environ.get("HOPDOMLAB_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def run_verification(corpus, kinds, time_budget_per_row: float | None = None,
                     deterministic: bool = True, scale: int = 2,
                     threads: int | None = None) -> VerifyReport:
    """Verify every (graph, kind) pair; rows come back in corpus order
    regardless of worker scheduling."""
    jobs = [(name, g, kind) for name, g in corpus for kind in kinds]
    workers = worker_count(threads)
    if workers == 1 or len(jobs) <= 1:
        rows = [verify_pair(name, g, kind, time_budget=time_budget_per_row,
                            deterministic=deterministic, scale=scale)
                for name, g, kind in jobs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(
                lambda job: verify_pair(job[0], job[1], job[2],
                                        time_budget=time_budget_per_row,
                                        deterministic=deterministic, scale=scale),
                jobs))
    return VerifyReport(rows=tuple(rows))
