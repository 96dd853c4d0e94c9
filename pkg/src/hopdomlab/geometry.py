"""Unit-disk constructions over orthogonal grid embeddings.

A planar max-degree-4 graph is drawn on the integer lattice with axis-parallel
edge paths (``embed_orthogonal`` / ``validate_embedding``). Every edge path of
grid length k is then replaced by k edge gadgets (one per unit segment) and
k-1 grid-vertex gadgets, giving a set of radius-1/2 disks whose intersection
graph carries the hop / 2-step domination instance. All disk centers are exact
rationals with power-of-two denominators, and every center pair is kept out of
the ambiguity band: adjacent disks sit at distance <= 7/8, non-adjacent ones
at >= 9/8, so intersection decisions never depend on rounding.

Geometry summary (one lattice unit maps to PITCH disk units):

  * a chain of 7 (hop) or 8 (2-step) disks spans each unit segment; the disk
    next to a graph vertex sits 7/8 from it, the disk next to a grid vertex
    sits 5/4 from it, interior spacing fills the remainder;
  * each grid vertex carries two bridge disks at +-3/8 along the segment and
    a two-disk tail hanging off both bridges (corners use a rotated variant);
  * hop gadgets hang two 2-disk forks off the chain disk facing a grid
    vertex; for the last segment of a path that disk is the one facing the
    preceding grid vertex, never a graph vertex, so forks stay clear of
    vertex junctions of degree up to 4;
  * 2-step gadgets hang 3-disk tails off chain positions 2 and 7 and a
    2-disk bridge tail between positions 4 and 5.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, GraphBuilder, VertexSet, validate_vertex_set
from .solvers import CHECKERS, Problem, is_vertex_cover
from .reductions import CertificateError, ExtractionError

Point = tuple[int, int]


class EmbeddingError(ValueError):
    """Input not embeddable here: nonplanar, degree > 4, or routing failed."""


class PlacementError(ValueError):
    """Disk placement violated its own template or separation band: a bug."""


# half-unit disks: centers <= 1 apart intersect
ADJ_MAX = Fraction(7, 8)
NONADJ_MIN = Fraction(9, 8)

PITCH = {Problem.HOP_DOM: Fraction(7), Problem.TWO_STEP_DOM: Fraction(31, 4)}
GAP_VERTEX = Fraction(7, 8)
GAP_GRID = Fraction(5, 4)
PENDANT_FIRST = Fraction(27, 32)
PENDANT_STEP = Fraction(3, 4)

CHAIN_LEN = {Problem.HOP_DOM: 7, Problem.TWO_STEP_DOM: 8}

# straight grid gadget, in local (axis, perp) coordinates of the incoming
# direction; the tail hangs below both bridge disks
STRAIGHT_GADGET = (
    (Fraction(-3, 8), Fraction(0)),   # bridge toward the incoming chain
    (Fraction(3, 8), Fraction(0)),    # bridge toward the outgoing chain
    (Fraction(0), Fraction(-3, 4)),   # tail disk, adjacent to both bridges
    (Fraction(0), Fraction(-3, 2)),   # tail tip
)

# left-turn corner gadget (outgoing direction = ccw of incoming); right turns
# mirror the perp coordinate
CORNER_GADGET = (
    (Fraction(-1, 2), Fraction(0)),
    (Fraction(1, 16), Fraction(1, 2)),
    (Fraction(5, 32), Fraction(-5, 32)),
    (Fraction(11, 16), Fraction(-3, 4)),
)


def _interior_gaps(problem: Problem, start: str, end: str) -> tuple[Fraction, ...]:
    if problem is Problem.HOP_DOM:
        if start == "D" and end == "D":
            return (Fraction(3, 4),) * 6
        return (Fraction(13, 16),) * 6
    if start == "D" and end == "D":
        return (Fraction(3, 4),) * 7
    return tuple(Fraction(x, 16) for x in (13, 13, 13, 12, 13, 13, 13))


def _end_gap(kind: str) -> Fraction:
    return GAP_VERTEX if kind == "V" else GAP_GRID


def _ccw(d: Point) -> Point:
    return (-d[1], d[0])


@dataclass(frozen=True)
class GridEmbedding:
    """Integer-coordinate orthogonal drawing: one lattice point per vertex and
    one axis-parallel unit-step path per edge (endpoints included)."""

    n: int
    edges: tuple[tuple[int, int], ...]
    coords: tuple[Point, ...]
    paths: tuple[tuple[Point, ...], ...]
    scale: int = 1

    def grid_length(self, edge_index: int) -> int:
        return len(self.paths[edge_index]) - 1

    def grid_lengths(self) -> tuple[int, ...]:
        return tuple(len(p) - 1 for p in self.paths)


@dataclass(frozen=True)
class EmbeddingCheck:
    ok: bool
    diagnostics: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def validate_embedding(e: GridEmbedding) -> EmbeddingCheck:
    """Check every structural invariant of an orthogonal grid embedding."""
    problems: list[str] = []
    if len(e.coords) != e.n:
        problems.append(f"{len(e.coords)} coordinates for {e.n} vertices")
    if len(set(e.coords)) != len(e.coords):
        problems.append("vertex coordinates are not distinct")
    if len(e.paths) != len(e.edges):
        problems.append(f"{len(e.paths)} paths for {len(e.edges)} edges")
    coord_set = set(e.coords)
    seen_interior: dict[Point, int] = {}
    for idx, (edge, path) in enumerate(zip(e.edges, e.paths)):
        u, v = edge
        if len(path) < 3:
            problems.append(f"edge {edge}: grid length {len(path) - 1} < 2")
        if path[0] != e.coords[u] or path[-1] != e.coords[v]:
            problems.append(f"edge {edge}: path endpoints do not match vertex coordinates")
        for a, b in zip(path, path[1:]):
            if abs(a[0] - b[0]) + abs(a[1] - b[1]) != 1:
                problems.append(f"edge {edge}: step {a}->{b} is not a unit axis step")
                break
        if len(set(path)) != len(path):
            problems.append(f"edge {edge}: path visits a point twice")
        for p in path[1:-1]:
            if p in coord_set:
                problems.append(f"edge {edge}: interior point {p} hits a vertex")
            if p in seen_interior:
                problems.append(
                    f"edge {edge}: interior point {p} shared with edge index {seen_interior[p]}")
            seen_interior[p] = idx
    return EmbeddingCheck(ok=not problems, diagnostics=tuple(problems))


# ---------------------------------------------------------------------------
# embedding construction: greedy placement plus BFS edge routing
# ---------------------------------------------------------------------------


def _bfs_order(g: Graph) -> list[int]:
    order = []
    seen = [False] * g.n
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        while queue:
            u = queue.pop(0)
            order.append(u)
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def _place_vertices(g: Graph, spacing: int) -> dict[int, Point]:
    pos: dict[int, Point] = {}
    used: set[Point] = set()
    for v in _bfs_order(g):
        if not pos:
            pos[v] = (0, 0)
            used.add((0, 0))
            continue
        anchors = [pos[u] for u in g.neighbors(v) if u in pos] or list(pos.values())
        xs = [p[0] for p in pos.values()]
        ys = [p[1] for p in pos.values()]
        reach = 2 * spacing
        best = None
        for x in range(min(xs) - reach, max(xs) + reach + 1, spacing):
            for y in range(min(ys) - reach, max(ys) + reach + 1, spacing):
                p = (x, y)
                if p in used:
                    continue
                score = sum(abs(x - a[0]) + abs(y - a[1]) for a in anchors)
                key = (score, x, y)
                if best is None or key < best[0]:
                    best = (key, p)
        pos[v] = best[1]
        used.add(best[1])
    return pos


def _route_edges(g: Graph, pos: dict[int, Point], spacing: int):
    """BFS-route every edge on the lattice, point-disjoint; None on failure."""
    xs = [p[0] for p in pos.values()]
    ys = [p[1] for p in pos.values()]
    margin = 2 * spacing + 2
    lo = (min(xs) - margin, min(ys) - margin)
    hi = (max(xs) + margin, max(ys) + margin)
    vertex_points = set(pos.values())
    used: set[Point] = set()
    paths = []
    for u, v in g.edges():
        start, goal = pos[u], pos[v]
        prev: dict[Point, Point] = {start: start}
        queue = [start]
        found = False
        while queue and not found:
            cur = queue.pop(0)
            for d in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                np = (cur[0] + d[0], cur[1] + d[1])
                if np in prev:
                    continue
                if not (lo[0] <= np[0] <= hi[0] and lo[1] <= np[1] <= hi[1]):
                    continue
                if np != goal and (np in vertex_points or np in used):
                    continue
                prev[np] = cur
                if np == goal:
                    found = True
                    break
                queue.append(np)
        if not found:
            return None
        path = [goal]
        while path[-1] != start:
            path.append(prev[path[-1]])
        path.reverse()
        used.update(path[1:-1])
        paths.append(tuple(path))
    return paths


def embed_orthogonal(g: Graph, scale: int = 4) -> GridEmbedding:
    """Orthogonal grid embedding of a planar max-degree-4 graph.

    Vertices are placed greedily near their neighbors and edges are BFS-routed
    as point-disjoint lattice paths; the drawing is then stretched by
    ``scale`` (>= 2) so every edge has interior grid vertices and bends stay
    at least two segments away from path ends.
    """
    if scale < 2:
        raise EmbeddingError(f"scale must be >= 2, got {scale}")
    if g.n == 0:
        raise EmbeddingError("cannot embed the empty graph")
    if any(len(a) > 4 for a in g.adjacency):
        raise EmbeddingError("maximum degree exceeds 4")
    import networkx as nx

    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    planar, _ = nx.check_planarity(nxg)
    if not planar:
        raise EmbeddingError("graph is not planar")

    for spacing in (1, 2, 4, 8):
        pos = _place_vertices(g, spacing)
        routed = _route_edges(g, pos, spacing)
        if routed is not None:
            break
    else:
        raise EmbeddingError("edge routing failed at every tried spacing")

    coords = tuple((pos[v][0] * scale, pos[v][1] * scale) for v in range(g.n))
    paths = []
    for path in routed:
        fine: list[Point] = []
        for a, b in zip(path, path[1:]):
            dx = (b[0] - a[0], b[1] - a[1])
            for t in range(scale):
                fine.append((a[0] * scale + t * dx[0], a[1] * scale + t * dx[1]))
        fine.append((path[-1][0] * scale, path[-1][1] * scale))
        paths.append(tuple(fine))
    emb = GridEmbedding(n=g.n, edges=tuple(g.edges()), coords=coords,
                        paths=tuple(paths), scale=scale)
    check = validate_embedding(emb)
    if not check:
        raise EmbeddingError("embedder produced an invalid drawing: "
                             + "; ".join(check.diagnostics))
    return emb


# ---------------------------------------------------------------------------
# disk layouts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Disk:
    center: tuple[Fraction, Fraction]
    role: str


@dataclass(frozen=True)
class RunStructure:
    """One edge gadget: the chain along a unit segment plus its hangers.

    chain lists disk ids in path order (source-u side first). For hop
    domination ``pendant_base`` is the chain index carrying the two forks and
    pendants holds C8..C11; for 2-step domination pendants holds C9..C16.
    """

    edge: tuple[int, int]
    index: int
    start_type: str
    end_type: str
    chain: tuple[int, ...]
    pendant_base: int | None
    pendants: dict


@dataclass(frozen=True)
class GridGadget:
    edge: tuple[int, int]
    index: int
    kind: str  # "straight" or "corner"
    d1: int    # bridge adjacent to the incoming chain
    d2: int    # bridge adjacent to the outgoing chain
    d3: int    # tail disk adjacent to both bridges
    d4: int    # tail tip


@dataclass(frozen=True)
class EdgeStructure:
    edge: tuple[int, int]
    grid_length: int
    runs: tuple[RunStructure, ...]
    grids: tuple[GridGadget, ...]

    def all_disk_ids(self) -> list[int]:
        ids: list[int] = []
        for run in self.runs:
            ids.extend(run.chain)
            ids.extend(run.pendants.values())
        for gg in self.grids:
            ids.extend((gg.d1, gg.d2, gg.d3, gg.d4))
        return ids


@dataclass(frozen=True)
class DiskLayout:
    problem: Problem
    disks: tuple[Disk, ...]
    vertex_disks: tuple[int, ...]
    structure: tuple[EdgeStructure, ...]
    embedding: GridEmbedding
    offset: int


def structural_offset(problem: Problem, grid_lengths) -> int:
    """Certificate size above the cover: 3 (hop) or 7 (2-step) picks per unit
    segment plus one per grid vertex, i.e. 4k-1 resp. 8k-1 per edge."""
    per_run = 3 if problem is Problem.HOP_DOM else 7
    return sum(per_run * k + (k - 1) for k in grid_lengths)


def printed_closed_form(problem: Problem, grid_lengths) -> int:
    """Offset closed form as printed in the source text; for 2-step domination
    it reads 7(k+1)+k per edge and disagrees with the structural count 8k-1
    (the certificate picks 7 disks per segment, not 7 per segment plus 7)."""
    if problem is Problem.HOP_DOM:
        return sum(3 * k + k - 1 for k in grid_lengths)
    return sum(7 * (k + 1) + k for k in grid_lengths)


class _LayoutBuilder:
    def __init__(self, problem: Problem):
        self.problem = problem
        self.disks: list[Disk] = []

    def add(self, center, role: str) -> int:
        self.disks.append(Disk(center=center, role=role))
        return len(self.disks) - 1


def _scaled(p: Point, pitch: Fraction):
    return (pitch * p[0], pitch * p[1])


def _at(anchor, axis: Point, perp: Point, a: Fraction, b: Fraction):
    return (anchor[0] + a * axis[0] + b * perp[0],
            anchor[1] + a * axis[1] + b * perp[1])


def _place_edge(builder: _LayoutBuilder, edge, path, pitch) -> EdgeStructure:
    problem = builder.problem
    u, v = edge
    k = len(path) - 1
    chain_len = CHAIN_LEN[problem]
    tag = f"{{{u},{v}}}"

    runs: list[RunStructure] = []
    for i in range(k):
        a, b = path[i], path[i + 1]
        axis = (b[0] - a[0], b[1] - a[1])
        perp = _ccw(axis)
        start_type = "V" if i == 0 else "D"
        end_type = "V" if i == k - 1 else "D"
        gaps = (_end_gap(start_type),) + _interior_gaps(problem, start_type, end_type)
        anchor = _scaled(a, pitch)
        positions = []
        dist = Fraction(0)
        for gap in gaps:
            dist += gap
            positions.append(dist)
        if dist + _end_gap(end_type) != pitch:
            raise PlacementError(f"gap profile does not span a segment for {problem}")
        chain = tuple(
            builder.add(_at(anchor, axis, perp, positions[j], Fraction(0)),
                        f"C^{j + 1}_{tag}r{i + 1}")
            for j in range(chain_len))

        pendants: dict = {}
        pendant_base = None
        if problem is Problem.HOP_DOM:
            # forks live at the chain end facing a grid vertex; the last run
            # faces one at its start
            pendant_base = chain_len - 1 if i < k - 1 else 0
            base_pos = positions[pendant_base]
            for key, side, steps in (("C8", 1, 1), ("C9", 1, 2), ("C10", -1, 1), ("C11", -1, 2)):
                off = (PENDANT_FIRST + (steps - 1) * PENDANT_STEP) * side
                pendants[key] = builder.add(
                    _at(anchor, axis, perp, base_pos, off), f"C^{key[1:]}_{tag}r{i + 1}")
        else:
            # the start-side tail takes the clockwise side of the outgoing
            # direction, the end-side tail the clockwise side of the reverse;
            # at a shared graph vertex every incident tail then occupies a
            # distinct quadrant (one edge per compass direction)
            for key, j, side, steps in (("C9", 1, -1, 1), ("C10", 1, -1, 2), ("C11", 1, -1, 3),
                                        ("C14", 6, 1, 1), ("C15", 6, 1, 2), ("C16", 6, 1, 3)):
                off = (PENDANT_FIRST + (steps - 1) * PENDANT_STEP) * side
                pendants[key] = builder.add(
                    _at(anchor, axis, perp, positions[j], off), f"C^{key[1:]}_{tag}r{i + 1}")
            mid = (positions[3] + positions[4]) / 2
            pendants["C12"] = builder.add(
                _at(anchor, axis, perp, mid, Fraction(-1, 2)), f"C^12_{tag}r{i + 1}")
            pendants["C13"] = builder.add(
                _at(anchor, axis, perp, mid, Fraction(-5, 4)), f"C^13_{tag}r{i + 1}")
        runs.append(RunStructure(edge=edge, index=i, start_type=start_type,
                                 end_type=end_type, chain=chain,
                                 pendant_base=pendant_base, pendants=pendants))

    grids: list[GridGadget] = []
    for i in range(1, k):
        d = path[i]
        in_dir = (d[0] - path[i - 1][0], d[1] - path[i - 1][1])
        out_dir = (path[i + 1][0] - d[0], path[i + 1][1] - d[1])
        anchor = _scaled(d, pitch)
        perp = _ccw(in_dir)
        if in_dir == out_dir:
            kind = "straight"
            template = STRAIGHT_GADGET
            mirror = 1
        else:
            kind = "corner"
            if not 2 <= i <= k - 2:
                raise PlacementError(
                    f"edge {edge}: bend at interior point {i} of {k} is too close to a "
                    f"path end for gadget placement (needs 2 <= {i} <= {k - 2})")
            template = CORNER_GADGET
            mirror = 1 if out_dir == _ccw(in_dir) else -1
        ids = []
        for p, (ax, pp) in enumerate(template, start=1):
            ids.append(builder.add(_at(anchor, in_dir, perp, ax, pp * mirror),
                                   f"C^{p}_d{tag}g{i}"))
        grids.append(GridGadget(edge=edge, index=i, kind=kind,
                                d1=ids[0], d2=ids[1], d3=ids[2], d4=ids[3]))
    return EdgeStructure(edge=edge, grid_length=k, runs=tuple(runs), grids=tuple(grids))


def template_edges(layout: DiskLayout) -> set[tuple[int, int]]:
    """Intended adjacency of the layout, derived purely combinatorially."""
    out: set[tuple[int, int]] = set()

    def link(a: int, b: int):
        out.add((a, b) if a < b else (b, a))

    for es in layout.structure:
        u, v = es.edge
        k = es.grid_length
        for run in es.runs:
            for a, b in zip(run.chain, run.chain[1:]):
                link(a, b)
            i = run.index
            if run.start_type == "V":
                link(layout.vertex_disks[u], run.chain[0])
            else:
                link(es.grids[i - 1].d2, run.chain[0])
            if run.end_type == "V":
                link(run.chain[-1], layout.vertex_disks[v])
            else:
                link(run.chain[-1], es.grids[i].d1)
            p = run.pendants
            if layout.problem is Problem.HOP_DOM:
                base = run.chain[run.pendant_base]
                link(base, p["C8"])
                link(p["C8"], p["C9"])
                link(base, p["C10"])
                link(p["C10"], p["C11"])
            else:
                link(run.chain[1], p["C9"])
                link(p["C9"], p["C10"])
                link(p["C10"], p["C11"])
                link(run.chain[3], p["C12"])
                link(run.chain[4], p["C12"])
                link(p["C12"], p["C13"])
                link(run.chain[6], p["C14"])
                link(p["C14"], p["C15"])
                link(p["C15"], p["C16"])
        for gg in es.grids:
            link(gg.d1, gg.d2)
            link(gg.d3, gg.d1)
            link(gg.d3, gg.d2)
            link(gg.d4, gg.d3)
    return out


def _check_separation(layout: DiskLayout) -> None:
    expected = template_edges(layout)
    adj_max_sq = ADJ_MAX * ADJ_MAX
    nonadj_min_sq = NONADJ_MIN * NONADJ_MIN
    disks = layout.disks
    for i in range(len(disks)):
        xi, yi = disks[i].center
        for j in range(i + 1, len(disks)):
            xj, yj = disks[j].center
            d2 = (xi - xj) ** 2 + (yi - yj) ** 2
            if (i, j) in expected:
                if d2 > adj_max_sq:
                    raise PlacementError(
                        f"template pair {disks[i].role} ~ {disks[j].role} at squared "
                        f"distance {d2} > (7/8)^2")
            elif d2 < nonadj_min_sq:
                raise PlacementError(
                    f"non-template pair {disks[i].role} / {disks[j].role} at squared "
                    f"distance {d2} < (9/8)^2")


def reduce_unit_disk(problem: Problem, e: GridEmbedding) -> DiskLayout:
    """Build the unit-disk instance over a validated embedding.

    Raises ValueError when the embedding is invalid, PlacementError when a
    bend sits too close to a path end, or when the produced disk set violates
    its own template or separation band (an internal bug, never data).
    """
    if problem not in (Problem.HOP_DOM, Problem.TWO_STEP_DOM):
        raise ValueError("unit-disk construction targets hop or 2-step domination")
    check = validate_embedding(e)
    if not check:
        raise ValueError("invalid embedding: " + "; ".join(check.diagnostics))
    pitch = PITCH[problem]
    builder = _LayoutBuilder(problem)
    vertex_disks = tuple(builder.add(_scaled(e.coords[v], pitch), f"v_{v}")
                         for v in range(e.n))
    structure = tuple(_place_edge(builder, edge, path, pitch)
                      for edge, path in zip(e.edges, e.paths))
    offset = structural_offset(problem, e.grid_lengths())
    layout = DiskLayout(problem=problem, disks=tuple(builder.disks),
                        vertex_disks=vertex_disks, structure=structure,
                        embedding=e, offset=offset)
    _check_separation(layout)
    return layout


def disk_intersection_edges(disks) -> set[tuple[int, int]]:
    """Exact unit-disk adjacency: squared center distance <= 1."""
    out: set[tuple[int, int]] = set()
    for i in range(len(disks)):
        xi, yi = disks[i].center
        for j in range(i + 1, len(disks)):
            xj, yj = disks[j].center
            if (xi - xj) ** 2 + (yi - yj) ** 2 <= 1:
                out.add((i, j))
    return out


def intersection_graph(layout: DiskLayout) -> Graph:
    """The unit-disk graph of the layout, labeled by disk roles."""
    b = GraphBuilder(len(layout.disks))
    for i, j in disk_intersection_edges(layout.disks):
        b.add_edge(i, j)
    return b.build(labels=[d.role for d in layout.disks])


# certificate chain picks by 0-based path position
_HD_SIDE_PICKS = {"u": (0, 5, 6), "v": (0, 1, 6)}
_2SD_SIDE_PICKS = {"u": (0, 1, 4, 5, 6), "v": (0, 1, 3, 5, 6)}


def unit_disk_forward_certificate(layout: DiskLayout, vc) -> VertexSet:
    """Solution of the intersection graph built from a source vertex cover.

    Per unit segment the covered side picks chain positions {1,6,7} (hop) or
    {1,2,5,6,7} plus the first disks of both tails (2-step); the uncovered
    side mirrors to {1,2,7} / {1,2,4,6,7}; each grid vertex contributes the
    bridge disk facing away from the covered endpoint. Verified before
    returning.
    """
    src = _source_graph(layout)
    vc = validate_vertex_set(src, vc)
    if not is_vertex_cover(src, vc):
        raise ValueError("unit-disk certificate requires a vertex cover of the source graph")
    covered = set(vc)
    picks = {layout.vertex_disks[w] for w in covered}
    for es in layout.structure:
        u, v = es.edge
        side = "u" if u in covered else "v"
        chain_picks = (_HD_SIDE_PICKS if layout.problem is Problem.HOP_DOM
                       else _2SD_SIDE_PICKS)[side]
        for run in es.runs:
            for pos in chain_picks:
                picks.add(run.chain[pos])
            if layout.problem is Problem.TWO_STEP_DOM:
                picks.add(run.pendants["C9"])
                picks.add(run.pendants["C14"])
        for gg in es.grids:
            picks.add(gg.d2 if side == "u" else gg.d1)
    witness = tuple(sorted(picks))
    expected = len(vc) + layout.offset
    if len(witness) != expected:
        raise CertificateError(
            f"unit-disk certificate size {len(witness)} != |vc| + offset = {expected}")
    g2 = intersection_graph(layout)
    if not CHECKERS[layout.problem](g2, witness):
        raise CertificateError(
            f"unit-disk certificate is not a valid solution (|vc|={len(vc)}, "
            f"offset={layout.offset})")
    return witness


def _source_graph(layout: DiskLayout) -> Graph:
    e = layout.embedding
    return Graph.from_edges(e.n, e.edges)


def unit_disk_extract_cover(layout: DiskLayout, sol) -> VertexSet:
    """Vertex cover of the source graph recovered from any valid solution of
    the intersection graph; certifies |cover| <= |sol| - offset."""
    g2 = intersection_graph(layout)
    sol = validate_vertex_set(g2, sol)
    if not CHECKERS[layout.problem](g2, sol):
        raise ValueError("extraction requires a valid solution of the intersection graph")
    solset = set(sol)
    src = _source_graph(layout)
    cover = {v for v in range(src.n) if layout.vertex_disks[v] in solset}
    for i, j in src.edges():
        if i not in cover and j not in cover:
            cover.add(i)
    bound = len(sol) - layout.offset
    if len(cover) > bound:
        raise ExtractionError(
            f"extracted cover of size {len(cover)} exceeds |sol| - offset = {bound}")
    return tuple(sorted(cover))


# ---------------------------------------------------------------------------
# file formats and drawings
# ---------------------------------------------------------------------------


def write_embedding(e: GridEmbedding) -> str:
    lines = ["hopdomlab-embedding v1"]
    for v, (x, y) in enumerate(e.coords):
        lines.append(f"V {v} {x} {y}")
    for (u, v), path in zip(e.edges, e.paths):
        flat = " ".join(f"{x} {y}" for x, y in path)
        lines.append(f"E {u} {v} {flat}")
    return "\n".join(lines) + "\n"


def read_embedding(text: str) -> GridEmbedding:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines or lines[0] != "hopdomlab-embedding v1":
        raise ValueError("missing 'hopdomlab-embedding v1' header")
    coords: dict[int, Point] = {}
    edges: list[tuple[int, int]] = []
    paths: list[tuple[Point, ...]] = []
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] == "V":
            if len(parts) != 4:
                raise ValueError(f"bad vertex line: {ln!r}")
            coords[int(parts[1])] = (int(parts[2]), int(parts[3]))
        elif parts[0] == "E":
            nums = [int(x) for x in parts[1:]]
            if len(nums) < 2 or len(nums) % 2 != 0:
                raise ValueError(f"bad edge line: {ln!r}")
            u, v = nums[0], nums[1]
            pts = list(zip(nums[2::2], nums[3::2]))
            edges.append((u, v))
            paths.append(tuple(pts))
        else:
            raise ValueError(f"unknown record {parts[0]!r}")
    n = max(coords) + 1 if coords else 0
    if set(coords) != set(range(n)):
        raise ValueError("vertex ids must be dense 0..n-1")
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) references a vertex without a V line")
    return GridEmbedding(n=n, edges=tuple(edges),
                         coords=tuple(coords[v] for v in range(n)),
                         paths=tuple(paths), scale=1)


def write_layout_csv(layout: DiskLayout) -> str:
    lines = ["id,role,cx_num,cx_den,cy_num,cy_den"]
    for i, d in enumerate(layout.disks):
        x, y = d.center
        lines.append(f"{i},{d.role},{x.numerator},{x.denominator},{y.numerator},{y.denominator}")
    return "\n".join(lines) + "\n"


def _role_color(role: str) -> str:
    if role.startswith("v_"):
        return "#d62728"
    if "_d{" in role:
        return "#2ca02c"
    p = role[2:role.index("_")]
    if p.isdigit() and int(p) > CHAIN_LEN[Problem.HOP_DOM]:
        return "#9467bd"
    return "#1f77b4"


def layout_svg(layout: DiskLayout) -> str:
    """Presentation-only drawing of the disks, colored by role class."""
    px = 24.0
    xs = [float(d.center[0]) for d in layout.disks]
    ys = [float(d.center[1]) for d in layout.disks]
    pad = 1.5
    w = (max(xs) - min(xs) + 2 * pad) * px
    h = (max(ys) - min(ys) + 2 * pad) * px
    ox, oy = min(xs) - pad, min(ys) - pad
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0f}" height="{h:.0f}">']
    for d in layout.disks:
        cx = (float(d.center[0]) - ox) * px
        cy = h - (float(d.center[1]) - oy) * px
        color = _role_color(d.role)
        out.append(f'<circle cx="{cx:.1f}" cy="{cy:.1f}" r="{px / 2:.1f}" '
                   f'fill="{color}" fill-opacity="0.45" stroke="{color}">'
                   f'<title>{d.role}</title></circle>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def layout_dot(layout: DiskLayout) -> str:
    """DOT document of the intersection graph with role labels."""
    g = intersection_graph(layout)
    lines = ["graph layout {"]
    for v in range(g.n):
        lines.append(f'  {v} [label="{g.label(v)}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
