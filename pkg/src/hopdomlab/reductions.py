"""Gadget transformations from Vertex Cover instances.

For each target problem (hop domination, 2-step domination) and each graph
family (3-regular, d-regular with d >= 4, claw-free) this module builds the
transformed graph G2 from a source graph G1, together with:

  * the additive offset relating the two optima (a fixed constant per edge),
  * a forward certificate turning any vertex cover of G1 into a valid
    solution of G2 of size |cover| + offset,
  * a backward extraction turning any valid solution of G2 into a vertex
    cover of G1 of size at most |solution| - offset.

Both directions verify their output and raise loudly when the claimed
relation does not hold on the given instance, so a failure here is a
reproducible counterexample rather than a silent repair.

Unit-disk transformations are geometric and live in ``geometry``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import Graph, GraphBuilder, VertexSet, validate_vertex_set
from .solvers import CHECKERS, Problem, is_vertex_cover


class ReductionError(ValueError):
    """Invalid reduction request."""


class RealizationError(ReductionError):
    """Degree sequence not realizable as a simple graph."""


class CertificateError(ReductionError):
    """Forward certificate failed validation: lemma falsified on this instance."""


class ExtractionError(ReductionError):
    """Extraction could not certify the size bound: lemma falsified."""


class ReductionFamily(Enum):
    THREE_REGULAR = "3reg"
    D_REGULAR = "dreg"
    CLAW_FREE = "claw"
    UNIT_DISK = "ud"


@dataclass(frozen=True)
class ReductionKind:
    problem: Problem
    family: ReductionFamily
    d: int | None = None

    def __post_init__(self):
        if self.problem not in (Problem.HOP_DOM, Problem.TWO_STEP_DOM):
            raise ReductionError("reductions target hop domination or 2-step domination")
        if self.family is ReductionFamily.D_REGULAR:
            if self.d is None:
                raise ReductionError("d-regular reduction needs the regularity parameter d")
            if self.d < 4:
                raise ReductionError(f"d-regular reduction requires d >= 4, got {self.d}")
        elif self.d is not None:
            raise ReductionError("d is only meaningful for the d-regular family")

    @property
    def label(self) -> str:
        base = f"{self.problem.value}-{self.family.value}"
        return f"{base}{self.d}" if self.d is not None else base


@dataclass(frozen=True)
class Reduction:
    """A transformed instance: G2, its offset, and full vertex traceability.

    roles maps every output vertex id to a human-readable role; gadgets maps
    each source edge to its gadget's named vertex ids plus the contiguous id
    block ("_block") holding the gadget.
    """

    kind: ReductionKind
    source: Graph
    output: Graph
    offset: int
    roles: tuple[str, ...]
    gadgets: dict

    @property
    def per_edge_offset(self) -> int:
        m = self.source.m
        return self.offset // m if m else 0


def build_regular_graph(n: int, d: int) -> Graph:
    """Deterministic Havel-Hakimi realization of a d-regular graph on n vertices.

    Requires n*d even and d < n; raises RealizationError otherwise.
    """
    if n <= 0:
        raise RealizationError(f"need at least one vertex, got n={n}")
    if d < 0 or d >= n:
        raise RealizationError(f"regularity d={d} requires 0 <= d < n={n}")
    if (n * d) % 2 != 0:
        raise RealizationError(f"n*d = {n * d} is odd, not realizable")
    residual = [d] * n
    b = GraphBuilder(n)
    while True:
        order = sorted(range(n), key=lambda v: (-residual[v], v))
        v = order[0]
        if residual[v] == 0:
            break
        targets = [u for u in order[1:] if residual[u] > 0 and not b.has_edge(v, u)]
        if len(targets) < residual[v]:
            raise RealizationError(f"degree sequence stalled at vertex {v}")
        for u in targets[: residual[v]]:
            b.add_edge(v, u)
            residual[u] -= 1
        residual[v] = 0
    return b.build()


# per-edge solution cost of each gadget family, also offset/m
PER_EDGE_OFFSET = {
    (Problem.HOP_DOM, ReductionFamily.THREE_REGULAR): 6,
    (Problem.TWO_STEP_DOM, ReductionFamily.THREE_REGULAR): 3,
    (Problem.HOP_DOM, ReductionFamily.D_REGULAR): 1,
    (Problem.TWO_STEP_DOM, ReductionFamily.D_REGULAR): 2,
    (Problem.HOP_DOM, ReductionFamily.CLAW_FREE): 2,
    (Problem.TWO_STEP_DOM, ReductionFamily.CLAW_FREE): 4,
}

# gadget picks of the forward certificate, by registry key
CERTIFICATE_PICKS = {
    (Problem.HOP_DOM, ReductionFamily.THREE_REGULAR): (
        "b", "c", "d^{23}", "d^{24}", "e^{23}", "e^{24}"),
    (Problem.TWO_STEP_DOM, ReductionFamily.THREE_REGULAR): ("a", "b", "c"),
    (Problem.HOP_DOM, ReductionFamily.D_REGULAR): ("u_ij",),
    (Problem.TWO_STEP_DOM, ReductionFamily.D_REGULAR): ("u_ij", "u^{1}"),
    (Problem.HOP_DOM, ReductionFamily.CLAW_FREE): ("b^{1}", "b^{2}"),
    (Problem.TWO_STEP_DOM, ReductionFamily.CLAW_FREE): ("b", "b^{1}", "b^{3}", "b^{6}"),
}


class _Assembler:
    """Shared bookkeeping while laying out G2: source vertices first, then one
    contiguous gadget block per source edge in ascending edge order."""

    def __init__(self, g1: Graph):
        self.g1 = g1
        self.roles: list[str] = [f"u_{i}" for i in range(g1.n)]
        self.edges: list[tuple[int, int]] = []
        self.gadgets: dict = {}

    def new_vertex(self, role: str) -> int:
        self.roles.append(role)
        return len(self.roles) - 1

    def add_edge(self, u: int, v: int) -> None:
        self.edges.append((u, v) if u < v else (v, u))

    def start_gadget(self, edge) -> dict:
        reg = {"_start": len(self.roles)}
        self.gadgets[edge] = reg
        return reg

    def gadget_vertex(self, reg: dict, edge, key: str) -> int:
        i, j = edge
        role = f"u_{{{i},{j}}}" if key == "u_ij" else f"{key}_{{{i},{j}}}"
        vid = self.new_vertex(role)
        reg[key] = vid
        return vid

    def finish_gadget(self, reg: dict) -> None:
        reg["_block"] = (reg.pop("_start"), len(self.roles))

    def build(self, kind: ReductionKind) -> Reduction:
        n2 = len(self.roles)
        out = Graph.from_edges(n2, set(self.edges), labels=self.roles)
        m = self.g1.m
        offset = PER_EDGE_OFFSET[(kind.problem, kind.family)] * m
        return Reduction(kind=kind, source=self.g1, output=out, offset=offset,
                         roles=tuple(self.roles), gadgets=self.gadgets)


def _ladder(asm: _Assembler, reg, edge, root: int, prefix: str) -> None:
    """Two 6-paths off root with rungs at levels 1..4, crossings at 5/6, and a
    closing edge between the two tips to keep the gadget 3-regular."""
    row1 = [asm.gadget_vertex(reg, edge, f"{prefix}^{{1{k}}}") for k in range(1, 7)]
    row2 = [asm.gadget_vertex(reg, edge, f"{prefix}^{{2{k}}}") for k in range(1, 7)]
    asm.add_edge(root, row1[0])
    asm.add_edge(root, row2[0])
    for k in range(5):
        asm.add_edge(row1[k], row1[k + 1])
        asm.add_edge(row2[k], row2[k + 1])
    for k in range(4):
        asm.add_edge(row1[k], row2[k])
    asm.add_edge(row2[4], row1[5])
    asm.add_edge(row1[4], row2[5])
    asm.add_edge(row1[5], row2[5])


def _hd_three_regular(asm: _Assembler) -> None:
    for edge in asm.g1.edges():
        i, j = edge
        reg = asm.start_gadget(edge)
        u_ij = asm.gadget_vertex(reg, edge, "u_ij")
        asm.add_edge(u_ij, i)
        asm.add_edge(u_ij, j)
        a = asm.gadget_vertex(reg, edge, "a")
        b = asm.gadget_vertex(reg, edge, "b")
        c = asm.gadget_vertex(reg, edge, "c")
        d = asm.gadget_vertex(reg, edge, "d")
        e = asm.gadget_vertex(reg, edge, "e")
        for x, y in ((a, u_ij), (a, b), (a, c), (b, c), (b, d), (c, e)):
            asm.add_edge(x, y)
        _ladder(asm, reg, edge, d, "d")
        _ladder(asm, reg, edge, e, "e")
        asm.finish_gadget(reg)


def _fan(asm: _Assembler, reg, edge, root: int, prefix: str) -> None:
    """Four leaves in two 2-paths off root, cross-linked and closed so every
    leaf reaches degree 3."""
    l11 = asm.gadget_vertex(reg, edge, f"{prefix}^{{11}}")
    l12 = asm.gadget_vertex(reg, edge, f"{prefix}^{{12}}")
    l21 = asm.gadget_vertex(reg, edge, f"{prefix}^{{21}}")
    l22 = asm.gadget_vertex(reg, edge, f"{prefix}^{{22}}")
    for x, y in ((root, l11), (root, l21), (l11, l12), (l21, l22),
                 (l11, l22), (l21, l12), (l12, l22)):
        asm.add_edge(x, y)


def _2sd_three_regular(asm: _Assembler) -> None:
    for edge in asm.g1.edges():
        i, j = edge
        reg = asm.start_gadget(edge)
        u_ij = asm.gadget_vertex(reg, edge, "u_ij")
        asm.add_edge(u_ij, i)
        asm.add_edge(u_ij, j)
        a = asm.gadget_vertex(reg, edge, "a")
        b = asm.gadget_vertex(reg, edge, "b")
        c = asm.gadget_vertex(reg, edge, "c")
        for x, y in ((a, u_ij), (a, b), (a, c)):
            asm.add_edge(x, y)
        _fan(asm, reg, edge, b, "b")
        _fan(asm, reg, edge, c, "c")
        asm.finish_gadget(reg)


def _hd_d_regular(asm: _Assembler, d: int) -> None:
    # the leaf layer is wired (d-1)-regular among itself so every leaf ends
    # at degree d; (d-2)(d-1)*(d-1) is even for every d, so this always exists
    pattern = build_regular_graph((d - 2) * (d - 1), d - 1)
    for edge in asm.g1.edges():
        i, j = edge
        reg = asm.start_gadget(edge)
        u_ij = asm.gadget_vertex(reg, edge, "u_ij")
        asm.add_edge(u_ij, i)
        asm.add_edge(u_ij, j)
        mids = []
        for k in range(1, d - 1):
            uk = asm.gadget_vertex(reg, edge, f"u^{{{k}}}")
            asm.add_edge(u_ij, uk)
            mids.append(uk)
        leaves = []
        for k, uk in enumerate(mids, start=1):
            for mm in range(1, d):
                leaf = asm.gadget_vertex(reg, edge, f"u^{{{k},{mm}}}")
                asm.add_edge(uk, leaf)
                leaves.append(leaf)
        reg["H1"] = tuple(mids)
        reg["H2"] = tuple(leaves)
        for x, y in pattern.edges():
            asm.add_edge(leaves[x], leaves[y])
        asm.finish_gadget(reg)


def _2sd_d_regular(asm: _Assembler, d: int) -> None:
    for edge in asm.g1.edges():
        i, j = edge
        reg = asm.start_gadget(edge)
        u_ij = asm.gadget_vertex(reg, edge, "u_ij")
        asm.add_edge(u_ij, i)
        asm.add_edge(u_ij, j)
        mids = []
        for k in range(1, d - 1):
            uk = asm.gadget_vertex(reg, edge, f"u^{{{k}}}")
            asm.add_edge(u_ij, uk)
            mids.append(uk)
        wide = []
        for k in range(1, d):
            wk = asm.gadget_vertex(reg, edge, f"w^{{{k}}}")
            wide.append(wk)
        for uk in mids:
            for wk in wide:
                asm.add_edge(uk, wk)
        p = asm.gadget_vertex(reg, edge, "p")
        q = asm.gadget_vertex(reg, edge, "q")
        for wk in wide:
            asm.add_edge(p, wk)
            asm.add_edge(q, wk)
        asm.add_edge(p, q)
        reg["H1"] = tuple(mids)
        reg["H2"] = tuple(wide)
        reg["H3"] = (p, q)
        asm.finish_gadget(reg)


def _close_source_neighborhoods(asm: _Assembler, attachments: dict[int, list[int]]) -> None:
    """Turn N[u_i] into a clique for every source vertex."""
    for i in range(asm.g1.n):
        att = attachments[i]
        for x in range(len(att)):
            for y in range(x + 1, len(att)):
                asm.add_edge(att[x], att[y])


def _hd_claw_free(asm: _Assembler) -> None:
    attachments: dict[int, list[int]] = {i: [] for i in range(asm.g1.n)}
    for edge in asm.g1.edges():
        i, j = edge
        reg = asm.start_gadget(edge)
        a = asm.gadget_vertex(reg, edge, "a")
        b = asm.gadget_vertex(reg, edge, "b")
        c = asm.gadget_vertex(reg, edge, "c")
        b1 = asm.gadget_vertex(reg, edge, "b^{1}")
        b2 = asm.gadget_vertex(reg, edge, "b^{2}")
        b3 = asm.gadget_vertex(reg, edge, "b^{3}")
        b4 = asm.gadget_vertex(reg, edge, "b^{4}")
        for x, y in ((i, a), (a, b), (b, c), (c, j),
                     (b, b1), (b1, b2), (b2, b3), (b3, b4), (b, b2),
                     (a, c), (a, b1), (c, b1)):
            asm.add_edge(x, y)
        attachments[i].append(a)
        attachments[j].append(c)
        asm.finish_gadget(reg)
    _close_source_neighborhoods(asm, attachments)


def _2sd_claw_free(asm: _Assembler) -> None:
    attachments: dict[int, list[int]] = {i: [] for i in range(asm.g1.n)}
    for edge in asm.g1.edges():
        i, j = edge
        reg = asm.start_gadget(edge)
        a = asm.gadget_vertex(reg, edge, "a")
        b = asm.gadget_vertex(reg, edge, "b")
        c = asm.gadget_vertex(reg, edge, "c")
        bs = [asm.gadget_vertex(reg, edge, f"b^{{{k}}}") for k in range(1, 9)]
        b1, b2, b3, b4, b5, b6, b7, b8 = bs
        # (a, c) keeps b's neighborhood {a, c, b1} from inducing a claw;
        # (b3, b6) does the same for b2's neighborhood {b1, b3, b6}
        for x, y in ((i, a), (a, b), (b, c), (c, j), (a, c),
                     (b, b1), (b1, b2),
                     (b2, b3), (b2, b6), (b3, b4), (b4, b5), (b3, b6),
                     (b6, b7), (b7, b8)):
            asm.add_edge(x, y)
        attachments[i].append(a)
        attachments[j].append(c)
        asm.finish_gadget(reg)
    _close_source_neighborhoods(asm, attachments)


def reduce(kind: ReductionKind, g1: Graph) -> Reduction:
    """Build G2 from G1 for the requested non-geometric gadget family."""
    if kind.family is ReductionFamily.UNIT_DISK:
        raise ReductionError("unit-disk reductions are geometric; use the geometry module")
    asm = _Assembler(g1)
    if kind.family is ReductionFamily.THREE_REGULAR:
        if kind.problem is Problem.HOP_DOM:
            _hd_three_regular(asm)
        else:
            _2sd_three_regular(asm)
    elif kind.family is ReductionFamily.D_REGULAR:
        if kind.problem is Problem.HOP_DOM:
            _hd_d_regular(asm, kind.d)
        else:
            _2sd_d_regular(asm, kind.d)
    else:
        if kind.problem is Problem.HOP_DOM:
            _hd_claw_free(asm)
        else:
            _2sd_claw_free(asm)
    return asm.build(kind)


def forward_certificate(r: Reduction, vc) -> VertexSet:
    """Solution of G2 built from a vertex cover of G1: the cover's vertices
    plus the fixed per-edge gadget picks. Verified before returning."""
    vc = validate_vertex_set(r.source, vc)
    if not is_vertex_cover(r.source, vc):
        raise ValueError("forward certificate requires a vertex cover of the source graph")
    picks = set(vc)
    keys = CERTIFICATE_PICKS[(r.kind.problem, r.kind.family)]
    for reg in r.gadgets.values():
        for key in keys:
            picks.add(reg[key])
    witness = tuple(sorted(picks))
    expected = len(vc) + r.offset
    if len(witness) != expected:
        raise CertificateError(f"certificate size {len(witness)} != |vc| + offset = {expected}")
    if not CHECKERS[r.kind.problem](r.output, witness):
        raise CertificateError(
            f"certificate for {r.kind.label} is not a valid solution on this instance "
            f"(|vc|={len(vc)}, offset={r.offset}); the size relation fails here")
    return witness


def extract_vertex_cover(r: Reduction, sol) -> VertexSet:
    """Vertex cover of G1 recovered from any valid solution of G2.

    Keeps the source vertices already present in the solution, then sweeps
    source edges in ascending order adding the lower endpoint where needed.
    Certifies |cover| <= |sol| - offset and raises ExtractionError otherwise,
    since that would contradict the size relation on this instance.
    """
    sol = validate_vertex_set(r.output, sol)
    if not CHECKERS[r.kind.problem](r.output, sol):
        raise ValueError("extraction requires a valid solution of the output graph")
    solset = set(sol)
    cover = {v for v in range(r.source.n) if v in solset}
    for i, j in r.source.edges():
        if i not in cover and j not in cover:
            cover.add(i)
    bound = len(sol) - r.offset
    if len(cover) > bound:
        counts = {e: len(solset & set(range(*reg["_block"])))
                  for e, reg in r.gadgets.items()}
        raise ExtractionError(
            f"extracted cover of size {len(cover)} exceeds |sol| - offset = {bound} "
            f"for {r.kind.label}; per-edge gadget picks: {counts}")
    return tuple(sorted(cover))


def write_reduction_report(r: Reduction) -> str:
    """Versioned reduction document: G2 edge list, offset, and the role map."""
    lines = ["hopdomlab-reduction v1",
             f"kind {r.kind.label}",
             f"offset {r.offset}",
             f"graph {r.output.n} {r.output.m}"]
    lines.extend(f"{u} {v}" for u, v in r.output.edges())
    lines.append("roles")
    lines.extend(f"{vid}\t{role}" for vid, role in enumerate(r.roles))
    return "\n".join(lines) + "\n"
