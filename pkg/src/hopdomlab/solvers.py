"""Validity checkers and exact minimum-cardinality solvers.

Vertex Cover, Hop Domination and 2-Step Domination are all solved through one
covering engine: choosing vertex u discharges a fixed set of constraint
elements (edges for VC; vertices for the domination variants, where a vertex
at distance exactly 2 discharges a vertex's constraint, and for hop domination
selecting a vertex also discharges its own constraint).

Exhaustive enumeration by increasing size is used while C(n, upper_bound)
stays below 2^24; branch and bound on the covering system otherwise. In
deterministic mode the returned witness is the lexicographically smallest
optimal set.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum
from math import comb

from .graph import Graph, VertexSet, distance2_sets, validate_vertex_set

BRUTE_FORCE_LIMIT = 1 << 24


class Problem(Enum):
    VERTEX_COVER = "vc"
    HOP_DOM = "hd"
    TWO_STEP_DOM = "2sd"


PROBLEM_BY_FLAG = {p.value: p for p in Problem}


@dataclass(frozen=True)
class SolveResult:
    """Outcome of an exact solve.

    status is one of "optimal", "feasible" (budget-mode early exit with a
    witness of its exact reported size), "infeasible" (only 2-step
    domination, when some vertex has an empty distance-2 neighborhood) and
    "timeout" (best known witness, optimality unproven).
    """

    optimum: int | None
    witness: VertexSet | None
    nodes_explored: int
    method: str
    status: str

    @property
    def feasible(self) -> bool:
        return self.witness is not None


def is_vertex_cover(g: Graph, s) -> bool:
    sset = set(validate_vertex_set(g, s))
    return all(u in sset or v in sset for u, v in g.edges())


def is_hop_dominating(g: Graph, s) -> bool:
    sset = set(validate_vertex_set(g, s))
    n2 = distance2_sets(g)
    return all(v in sset or any(u in sset for u in n2[v]) for v in range(g.n))


def is_two_step_dominating(g: Graph, s) -> bool:
    sset = set(validate_vertex_set(g, s))
    n2 = distance2_sets(g)
    return all(any(u in sset for u in n2[v]) for v in range(g.n))


CHECKERS = {
    Problem.VERTEX_COVER: is_vertex_cover,
    Problem.HOP_DOM: is_hop_dominating,
    Problem.TWO_STEP_DOM: is_two_step_dominating,
}


def _cover_system(g: Graph, problem: Problem):
    """Return (element count, per-vertex coverage bitmasks)."""
    if problem is Problem.VERTEX_COVER:
        edges = g.edges()
        masks = [0] * g.n
        for idx, (u, v) in enumerate(edges):
            masks[u] |= 1 << idx
            masks[v] |= 1 << idx
        return len(edges), masks
    n2 = distance2_sets(g)
    masks = [0] * g.n
    for v in range(g.n):
        for u in n2[v]:
            masks[u] |= 1 << v
    if problem is Problem.HOP_DOM:
        for v in range(g.n):
            masks[v] |= 1 << v
    return g.n, masks


class _Timeout(Exception):
    pass


class _BudgetHit(Exception):
    pass


class _Search:
    """Shared state for the covering search over one instance."""

    def __init__(self, n_vertices, num_elements, masks, time_limit):
        self.n = n_vertices
        self.num_elements = num_elements
        self.masks = masks
        self.full = (1 << num_elements) - 1
        self.nodes = 0
        self.deadline = None if time_limit is None else time.monotonic() + time_limit
        # candidates per element, ascending vertex id
        self.candidates = [[] for _ in range(num_elements)]
        for u in range(n_vertices):
            m = masks[u]
            while m:
                low = m & -m
                self.candidates[low.bit_length() - 1].append(u)
                m ^= low
        # union of candidate coverage per element, for the packing lower bound
        self.reach = [0] * num_elements
        for e in range(num_elements):
            r = 0
            for u in self.candidates[e]:
                r |= masks[u]
            self.reach[e] = r
        # union of masks[u..n-1], for completion pruning in lexicographic search
        self.suffix_union = [0] * (n_vertices + 1)
        for u in range(n_vertices - 1, -1, -1):
            self.suffix_union[u] = self.suffix_union[u + 1] | masks[u]

    def tick(self):
        self.nodes += 1
        if self.deadline is not None and self.nodes % 1024 == 0:
            if time.monotonic() > self.deadline:
                raise _Timeout

    def lower_bound(self, covered: int) -> int:
        """Greedy packing of elements no single vertex can share."""
        uncovered = self.full & ~covered
        blocked = 0
        lb = 0
        m = uncovered & ~blocked
        while m:
            low = m & -m
            e = low.bit_length() - 1
            lb += 1
            blocked |= self.reach[e]
            m = uncovered & ~blocked & ~((low << 1) - 1)
        return lb

    def greedy_cover(self, base: list[int], covered: int) -> list[int] | None:
        """Feasible cover extending base, greediest-first; None if impossible."""
        chosen = list(base)
        chosen_set = set(base)
        while covered != self.full:
            best_u = -1
            best_gain = 0
            for u in range(self.n):
                if u in chosen_set:
                    continue
                gain = (self.masks[u] & ~covered).bit_count()
                if gain > best_gain:
                    best_gain = gain
                    best_u = u
            if best_u < 0:
                return None
            chosen.append(best_u)
            chosen_set.add(best_u)
            covered |= self.masks[best_u]
        return sorted(chosen)


def _forced_vertices(search: _Search) -> list[int] | None:
    """Vertices that every feasible cover must contain; None if infeasible."""
    forced = set()
    for e in range(search.num_elements):
        cands = search.candidates[e]
        if not cands:
            return None
        if len(cands) == 1:
            forced.add(cands[0])
    return sorted(forced)


def _search_lex(search: _Search, forced: list[int], k: int, budget=None):
    """First size-k cover in lexicographic order (it is the lex-smallest).

    Returns the witness list or None if no size-k cover exists.
    """
    forced_arr = forced
    masks = search.masks
    full = search.full

    def dfs(start: int, covered: int, chosen: list[int], left: int):
        search.tick()
        if covered == full:
            # smaller-than-k covers are impossible here: k iterates upward
            return list(chosen) if left == 0 else None
        if left == 0:
            return None
        if covered | search.suffix_union[start] != full:
            return None
        if search.lower_bound(covered) > left:
            return None
        # every forced vertex below the scan point must already be chosen
        for f in forced_arr:
            if f >= start:
                break
            if f not in chosen_set:
                return None
        for u in range(start, search.n - left + 1):
            if masks[u] & ~covered or (forced_arr and u in forced_lookup):
                chosen.append(u)
                chosen_set.add(u)
                res = dfs(u + 1, covered | masks[u], chosen, left - 1)
                chosen.pop()
                chosen_set.discard(u)
                if res is not None:
                    return res
        return None

    chosen_set: set[int] = set()
    forced_lookup = set(forced_arr)
    return dfs(0, 0, [], k)


def _decision_probe(search: _Search, included: list[int], excluded: set[int], k: int):
    """Any cover of size <= k containing `included` and avoiding `excluded`,
    or None. Element-branching with the packing lower bound."""
    masks = search.masks
    full = search.full
    covered0 = 0
    for u in included:
        covered0 |= masks[u]

    def dfs(chosen: list[int], chosen_set: set[int], covered: int):
        search.tick()
        if covered == full:
            return sorted(chosen)
        if len(chosen) + search.lower_bound(covered) > k:
            return None
        pick_cands = None
        m = full & ~covered
        while m:
            low = m & -m
            e = low.bit_length() - 1
            cands = [u for u in search.candidates[e]
                     if u not in chosen_set and u not in excluded]
            if pick_cands is None or len(cands) < len(pick_cands):
                pick_cands = cands
                if len(cands) <= 1:
                    break
            m ^= low
        if not pick_cands:
            return None
        order = sorted(pick_cands, key=lambda u: (-(masks[u] & ~covered).bit_count(), u))
        for u in order:
            chosen.append(u)
            chosen_set.add(u)
            res = dfs(chosen, chosen_set, covered | masks[u])
            chosen.pop()
            chosen_set.discard(u)
            if res is not None:
                return res
        return None

    return dfs(list(included), set(included), covered0)


def _lex_min_optimal(search: _Search, forced: list[int], some_optimum: list[int]):
    """Lexicographically smallest cover of optimal size.

    Walks vertex ids in order keeping a witness optimum: ids already in the
    witness are committed for free; for any other id a single decision probe
    asks whether some optimum contains the committed prefix plus that id.
    """
    k = len(some_optimum)
    witness = list(some_optimum)
    included: list[int] = []
    excluded: set[int] = set()
    forced_set = set(forced)
    for v in range(search.n):
        if len(included) == k:
            break
        if v in forced_set or v in witness:
            included.append(v)
            continue
        probe = _decision_probe(search, included + [v], excluded, k)
        if probe is not None:
            included.append(v)
            witness = probe
        else:
            excluded.add(v)
    return sorted(included)


def _search_bnb(search: _Search, forced: list[int], ub_set: list[int], budget=None):
    """Branch and bound on the covering system; returns a minimum cover.

    Branches on an uncovered element with the fewest candidate coverers.
    Exploration prunes strictly dominated sizes only, so the optimum size is
    exact; the lexicographically smallest optimal witness is recovered
    afterwards by a targeted lexicographic pass.
    """
    best = list(ub_set)
    masks = search.masks
    full = search.full

    base_cov = 0
    for u in forced:
        base_cov |= masks[u]

    def dfs(chosen: list[int], chosen_set: set[int], covered: int):
        nonlocal best
        search.tick()
        if covered == full:
            if len(chosen) < len(best):
                best = sorted(chosen)
                if budget is not None and len(best) <= budget:
                    raise _BudgetHit
            return
        if len(chosen) + search.lower_bound(covered) >= len(best):
            return
        # element with fewest remaining candidates
        pick_e = -1
        pick_cands = None
        m = full & ~covered
        while m:
            low = m & -m
            e = low.bit_length() - 1
            cands = [u for u in search.candidates[e] if u not in chosen_set]
            if pick_cands is None or len(cands) < len(pick_cands):
                pick_e, pick_cands = e, cands
                if len(cands) <= 1:
                    break
            m ^= low
        if not pick_cands:
            return
        # try high-gain candidates first so good incumbents arrive early
        order = sorted(pick_cands, key=lambda u: (-(masks[u] & ~covered).bit_count(), u))
        for u in order:
            chosen.append(u)
            chosen_set.add(u)
            dfs(chosen, chosen_set, covered | masks[u])
            chosen.pop()
            chosen_set.discard(u)

    try:
        dfs(list(forced), set(forced), base_cov)
    except _BudgetHit:
        return best, False
    return best, True


def solve_minimum(
    g: Graph,
    problem: Problem,
    budget: int | None = None,
    deterministic: bool = True,
    time_limit: float | None = None,
    method: str | None = None,
) -> SolveResult:
    """Exact minimum solver for the three problems.

    budget, when given, allows an early return with any feasible witness of
    size <= budget (status "feasible", optimum = witness size). With
    deterministic=True the witness is the lexicographically smallest optimal
    set. method forces "BRUTE" or "BNB"; by default the brute-force path is
    taken while C(n, upper_bound) <= 2^24.
    """
    num_elements, masks = _cover_system(g, problem)
    search = _Search(g.n, num_elements, masks, time_limit)

    if num_elements == 0:
        return SolveResult(0, (), 0, method or "BRUTE", "optimal")

    forced = _forced_vertices(search)
    if forced is None:
        # only 2SD can lack a coverer: some vertex has N(v,2) empty
        assert problem is Problem.TWO_STEP_DOM
        return SolveResult(None, None, 0, method or "BRUTE", "infeasible")

    base_cov = 0
    for u in forced:
        base_cov |= masks[u]
    ub_set = search.greedy_cover(forced, base_cov)
    assert ub_set is not None

    if method is None:
        method = "BRUTE" if comb(g.n, len(ub_set)) <= BRUTE_FORCE_LIMIT else "BNB"

    try:
        if method == "BRUTE":
            lb0 = max(len(forced), search.lower_bound(0))
            for k in range(lb0, len(ub_set) + 1):
                witness = _search_lex(search, forced, k)
                if witness is not None:
                    return SolveResult(k, tuple(witness), search.nodes, method, "optimal")
            witness = ub_set  # greedy set is optimal if nothing smaller exists
            return SolveResult(len(witness), tuple(witness), search.nodes, method, "optimal")
        best, proven = _search_bnb(search, forced, ub_set, budget=budget)
        if not proven:
            return SolveResult(len(best), tuple(best), search.nodes, method, "feasible")
        if deterministic:
            best = _lex_min_optimal(search, forced, best)
        return SolveResult(len(best), tuple(best), search.nodes, method, "optimal")
    except _Timeout:
        return SolveResult(None, None, search.nodes, method, "timeout")
