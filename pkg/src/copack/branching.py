"""Branch-and-search drivers for co-path/cycle packing and co-path packing.

Both drivers run reductions to a fixpoint at every node, fire the first
applicable branching step, and hand proper graphs to the decomposition DPs.
Cases the earlier fixpoints provably rule out raise InternalSolverError: a
silent fallback there would mask a broken reduction, not recover from one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import cutcount, decomp, graph as graphlib
from .bdd import bdd_dp_solve
from .errors import DpDisabledError, InternalSolverError
from .graph import Graph
from .oracles import verify


@dataclass
class Instance:
    graph: Graph
    k: int
    deleted: set[int]

    @property
    def exhausted(self) -> bool:
        return self.k < 0


@dataclass(frozen=True)
class BranchChild:
    delete: frozenset
    edge_deletes: tuple = ()

    @property
    def decrement(self) -> int:
        return len(self.delete)


@dataclass
class BranchSet:
    rule: str
    children: list[BranchChild]


@dataclass
class SolveStats:
    nodes: int = 0
    reductions: int = 0
    dp_calls: int = 0
    dp_width: int = -1
    repeats_used: int = 0
    guard_rejects: int = 0


@dataclass
class SolveOutcome:
    answer: bool
    witness: set[int] | None
    stats: SolveStats


def _children(delete_sets) -> list[BranchChild]:
    out = [BranchChild(frozenset(s)) for s in delete_sets]
    assert all(ch.decrement >= 1 for ch in out)
    return out


def _assert_decrements(children, expected):
    got = sorted(ch.decrement for ch in children)
    if got != sorted(expected):
        raise InternalSolverError("branch decrements %s, expected %s" % (got, expected))


# ------------------------------------------------------------ branching rules


def branch_b1(g: Graph, v: int) -> BranchSet:
    """Delete v, or keep it and delete all but one pair of its neighbors."""
    if g.degree(v) < 3:
        raise ValueError("B1 needs degree >= 3, vertex %d has %d" % (v, g.degree(v)))
    nbrs = sorted(g.neighbors(v))
    sets = [{v}]
    for u, w in combinations(nbrs, 2):
        sets.append(set(nbrs) - {u, w})
    ch = _children(sets)
    d = len(nbrs)
    _assert_decrements(ch, [1] + [d - 2] * (d * (d - 1) // 2))
    return BranchSet("b1", ch)


def branch_b2(g: Graph, v: int, u: int) -> BranchSet:
    """v dominates u: delete v, or keep both and delete all but one other neighbor."""
    if g.degree(v) < 3:
        raise ValueError("B2 needs degree >= 3, vertex %d has %d" % (v, g.degree(v)))
    if not g.dominates(v, u):
        raise ValueError("vertex %d does not dominate %d" % (v, u))
    nbrs = sorted(g.neighbors(v))
    sets = [{v}]
    for w in nbrs:
        if w != u:
            sets.append(set(nbrs) - {u, w})
    ch = _children(sets)
    d = len(nbrs)
    _assert_decrements(ch, [1] + [d - 2] * (d - 1))
    return BranchSet("b2", ch)


# ------------------------------------------------------------------ reductions


def _component_min_deletions(g: Graph, comp, acyclic: bool) -> tuple[int, ...]:
    """Smallest deletion set inside a component (<= 6 vertices, all 2^c masks)."""
    verts = sorted(comp)
    c = len(verts)
    adj = [0] * c
    idx = {v: i for i, v in enumerate(verts)}
    for v in verts:
        for u in g._adj[v]:
            adj[idx[v]] |= 1 << idx[u]
    full = (1 << c) - 1
    best_mask, best_size = full, c
    for mask in range(1 << c):
        size = mask.bit_count()
        if size >= best_size:
            continue
        keep = full ^ mask
        ok = True
        edges = 0
        for i in range(c):
            if not (keep >> i) & 1:
                continue
            deg = (adj[i] & keep).bit_count()
            if deg > 2:
                ok = False
                break
            edges += deg
        if ok and acyclic:
            edges //= 2
            seen = 0
            comps = 0
            for i in range(c):
                bit = 1 << i
                if not keep & bit or seen & bit:
                    continue
                comps += 1
                stack = [i]
                seen |= bit
                while stack:
                    x = stack.pop()
                    avail = adj[x] & keep & ~seen
                    while avail:
                        nb = avail & -avail
                        avail ^= nb
                        seen |= nb
                        stack.append(nb.bit_length() - 1)
            ok = edges == keep.bit_count() - comps
        if ok:
            best_mask, best_size = mask, size
    return tuple(verts[i] for i in range(c) if (best_mask >> i) & 1)


def reduce_cpcp(inst: Instance, stats: SolveStats | None = None) -> Instance:
    """Fixpoint of: brute-force small components; drop edges joining two
    degree-<=2 vertices; resolve triangles with a single outside neighbor by
    deleting that neighbor (the triangle itself then costs nothing)."""
    g = inst.graph
    while not inst.exhausted:
        comp = graphlib.find_small_component(g)
        if comp is not None:
            sol = _component_min_deletions(g, comp, acyclic=False)
            g.remove_vertices(comp)
            inst.deleted.update(sol)
            inst.k -= len(sol)
            if stats:
                stats.reductions += 1
            continue
        edge = graphlib.find_low_degree_edge(g)
        if edge is not None:
            g.remove_edge(*edge)
            if stats:
                stats.reductions += 1
            continue
        tri = graphlib.find_triangle_single_neighbor(g)
        if tri is not None:
            u, v, w, x = tri
            g.remove_vertices((u, v, w, x))
            inst.deleted.add(x)
            inst.k -= 1
            if stats:
                stats.reductions += 1
            continue
        break
    return inst


def reduce_cpp(inst: Instance, stats: SolveStats | None = None) -> Instance:
    """Fixpoint of: brute-force small components; contract one interior vertex
    out of any all-degree-2 path with >= 3 interior vertices; shorten pendant
    degree-2 chains the same way; break pure cycle components by deleting one
    vertex (they cost exactly one deletion and no other rule ever reaches
    them)."""
    g = inst.graph
    while not inst.exhausted:
        comp = graphlib.find_small_component(g)
        if comp is not None:
            sol = _component_min_deletions(g, comp, acyclic=True)
            g.remove_vertices(comp)
            inst.deleted.update(sol)
            inst.k -= len(sol)
            if stats:
                stats.reductions += 1
            continue
        path = graphlib.find_degree_two_path(g)
        if path is not None:
            v1, v2, v3 = path[1], path[2], path[3]
            g.remove_vertex(v2)
            g.add_edge(v1, v3)
            if stats:
                stats.reductions += 1
            continue
        chain = graphlib.find_pendant_chain(g)
        if chain is not None:
            # x - c1 - c2 - ...: some minimum solution intersects the chain in
            # nothing or exactly the vertex next to its anchor, so dropping c1
            # preserves the answer just like the long-path contraction
            x, c1, c2 = chain
            g.remove_vertex(c1)
            g.add_edge(x, c2)
            if stats:
                stats.reductions += 1
            continue
        cyc = graphlib.find_cycle_component(g)
        if cyc is not None:
            g.remove_vertex(cyc[0])
            inst.deleted.add(cyc[0])
            inst.k -= 1
            if stats:
                stats.reductions += 1
            continue
        break
    return inst


# ------------------------------------------------------------------- steps


def step1_children(g: Graph, v: int) -> BranchSet:
    bs = branch_b1(g, v)
    bs.rule = "step1"
    return bs


def step2_children(g: Graph, v: int, u: int) -> BranchSet:
    bs = branch_b2(g, v, u)
    bs.rule = "step2"
    _assert_decrements(bs.children, [1, 2, 2, 2])
    return bs


def step3_children(g: Graph, v: int, u1: int, u2: int) -> BranchSet:
    """Degree-4 v in a heavy triangle {v, u1, u2}: the keep-the-triangle
    branch must delete its whole outside neighborhood."""
    nbrs = sorted(g.neighbors(v))
    u3, u4 = [x for x in nbrs if x not in (u1, u2)]
    outside = g.neighborhood_of((v, u1, u2))
    if len(outside) < 4:
        raise InternalSolverError("triangle is not heavy: |N| = %d" % len(outside))
    sets = [{v}, {u1, u2}, {u1, u3}, {u1, u4}, {u2, u3}, {u2, u4}, set(outside)]
    ch = _children(sets)
    _assert_decrements(ch, [1, 2, 2, 2, 2, 2, len(outside)])
    return BranchSet("step3", ch)


def step4_children(g: Graph, v: int, u1: int, u2: int) -> BranchSet:
    """Degree-4 v in a (non-heavy) triangle {v, u1, u2}.

    The earlier fixpoints force the triangle's outside neighborhood to be
    exactly {u3, u4, u5}; the partner degrees then admit only a handful of
    shapes, each with a dedicated improved branch set.
    """
    nbrs = sorted(g.neighbors(v))
    u3, u4 = [x for x in nbrs if x not in (u1, u2)]
    outside = g.neighborhood_of((v, u1, u2))
    if len(outside) != 3:
        raise InternalSolverError(
            "triangle outside neighborhood has size %d; earlier rules make"
            " anything but 3 impossible here" % len(outside)
        )
    extra = outside - {u3, u4}
    if len(extra) != 1:
        raise InternalSolverError("no single third outside vertex: %s" % sorted(extra))
    u5 = extra.pop()
    d1, d2 = g.degree(u1), g.degree(u2)

    if 4 in (d1, d2):
        # Case 1: renumber so u1 is the degree-4 partner.
        if d1 != 4:
            u1, u2 = u2, u1
            d1, d2 = d2, d1
        if u5 not in g._adj[u1]:
            raise InternalSolverError("degree-4 partner not adjacent to the third outside vertex")
        inner = [x for x in (u3, u4) if x in g._adj[u1]]
        if len(inner) != 1:
            raise InternalSolverError("degree-4 partner adjacent to %d of the two other neighbors" % len(inner))
        u3 = inner[0]
        u4 = (set(nbrs) - {u1, u2, u3}).pop()
        da, db = g.degree(u2), g.degree(u3)
        if (da, db) == (2, 2):
            # v dominates both degree-2 vertices: delete v, or keep all three
            # and delete the remaining neighbors.
            ch = _children([{v}, {u1, u4}])
            _assert_decrements(ch, [1, 2])
            return BranchSet("step4_case1.1", ch)
        if (da, db) == (4, 4):
            if u3 not in g._adj[u2]:
                raise InternalSolverError(
                    "closed six-vertex component survived the small-component rule"
                )
            raise InternalSolverError("degree-4 partner dominated; the domination step must fire first")
        raise InternalSolverError("partner degrees (%d, %d) are impossible here" % (da, db))

    if d1 == 3 and d2 == 3:
        # Case 2: both partners degree 3; they must share their third neighbor.
        z1 = g._adj[u1] - {v, u2}
        z2 = g._adj[u2] - {v, u1}
        if len(z1) != 1 or z1 != z2 or z1 != {u5}:
            raise InternalSolverError("degree-3 partners must both attach to the third outside vertex")
        d5 = g.degree(u5)
        pair_sets = [set(nbrs) - set(pair) for pair in combinations(nbrs, 2)]
        if d5 == 2:
            raise InternalSolverError("triangle with one outside neighbor survived reduction")
        if d5 == 3:
            z = (g._adj[u5] - {u1, u2}).pop()
            ch = _children([{v, z}] + pair_sets)
            _assert_decrements(ch, [2] + [2] * 6)
            return BranchSet("step4_case2.2", ch)
        if d5 == 4:
            za, zb = sorted(g._adj[u5] - {u1, u2})
            ch = _children([{v, u5}, {v, za, zb}] + pair_sets)
            _assert_decrements(ch, [2, 3] + [2] * 6)
            return BranchSet("step4_case2.3", ch)
        raise InternalSolverError("third outside vertex has degree %d" % d5)

    if sorted((d1, d2)) == [2, 3]:
        # Not covered by the two shapes above: the degree-2 partner has both
        # neighbors inside the triangle, so v dominates it and the domination
        # branch applies with factor 2.3028.
        low = u1 if d1 == 2 else u2
        if not g.dominates(v, low):
            raise InternalSolverError("degree-2 triangle partner must be dominated by v")
        bs = branch_b2(g, v, low)
        bs.rule = "step4_dominated_deg2"
        return bs

    if (d1, d2) == (2, 2):
        raise InternalSolverError("adjacent degree-2 pair survived the edge reduction")
    raise InternalSolverError("partner degrees (%d, %d) are impossible here" % (d1, d2))


def step5_children(g: Graph, v: int, u1: int) -> BranchSet:
    """Degree-4 v (in no triangle) adjacent to u1 of degree >= 3: nested
    branching on v then u1."""
    nbrs = sorted(g.neighbors(v))
    others = [x for x in nbrs if x != u1]
    d1 = g.degree(u1)
    if d1 not in (3, 4):
        raise InternalSolverError("step-5 partner has degree %d" % d1)
    n1 = sorted(g._adj[u1] - {v})
    if set(n1) & set(nbrs):
        raise InternalSolverError("degree-4 vertex still sits in a triangle")
    sets = [{v}]
    for x in others:
        sets.append({u1, x})
    for pair in combinations(others, 2):
        for w in n1:
            sets.append(set(pair) | (set(n1) - {w}))
    ch = _children(sets)
    _assert_decrements(ch, [1, 2, 2, 2] + [d1] * (3 * (d1 - 1)))
    return BranchSet("step5", ch)


def step_star3_children(g: Graph, v: int, u1: int, u2: int) -> BranchSet:
    """Degree-4 v in any triangle, co-path packing: the branch keeping the
    whole triangle can never lead to a path packing, so it is dropped."""
    nbrs = sorted(g.neighbors(v))
    u3, u4 = [x for x in nbrs if x not in (u1, u2)]
    sets = [{v}, {u1, u2}, {u1, u3}, {u1, u4}, {u2, u3}, {u2, u4}]
    ch = _children(sets)
    _assert_decrements(ch, [1, 2, 2, 2, 2, 2])
    return BranchSet("step*3", ch)


def _pick_step_cpcp(g: Graph):
    w = graphlib.find_degree_ge5(g)
    if w:
        return step1_children(g, w[0])
    w = graphlib.find_dominating_deg4(g)
    if w:
        return step2_children(g, *w)
    w = graphlib.find_deg4_heavy_triangle(g)
    if w:
        return step3_children(g, *w)
    w = graphlib.find_deg4_in_triangle(g)
    if w:
        return step4_children(g, *w)
    w = graphlib.find_deg4_adjacent_deg3(g)
    if w:
        return step5_children(g, *w)
    return None


def _pick_step_cpp(g: Graph):
    w = graphlib.find_degree_ge5(g)
    if w:
        return step1_children(g, w[0])
    w = graphlib.find_dominating_deg4(g)
    if w:
        return step2_children(g, *w)
    w = graphlib.find_deg4_in_triangle(g)
    if w:
        return step_star3_children(g, *w)
    w = graphlib.find_deg4_adjacent_deg3(g)
    if w:
        bs = step5_children(g, *w)
        bs.rule = "step*4"
        return bs
    return None


# ------------------------------------------------------------------- drivers


def _assert_proper(g: Graph):
    if not decomp.is_proper(g):
        raise InternalSolverError("branching left a non-proper graph: %s" % (g.edges(),))


def _apply_child(inst: Instance, child: BranchChild) -> Instance:
    g = inst.graph.copy()
    g.remove_vertices(child.delete)
    for u, v in child.edge_deletes:
        g.remove_edge(u, v)
    return Instance(g, inst.k - child.decrement, inst.deleted | child.delete)


class _Driver:
    def __init__(self, problem: str, pw_limit: int, dp_allowed: bool, repeats: int = 0, seed: int = 0):
        self.problem = problem
        self.pw_limit = pw_limit
        self.dp_allowed = dp_allowed
        self.repeats = repeats
        self.seed = seed
        self.stats = SolveStats()
        self._leaf_counter = 0

    def run(self, inst: Instance):
        reduce_fn = reduce_cpcp if self.problem == "cpcp" else reduce_cpp
        reduce_fn(inst, self.stats)
        if inst.exhausted:
            return False, None
        g = inst.graph
        if g.alive_count == 0:
            return True, set(inst.deleted)
        bs = _pick_step_cpcp(g) if self.problem == "cpcp" else _pick_step_cpp(g)
        if bs is None:
            return self._leaf(inst)
        self.stats.nodes += 1
        for child in bs.children:
            if child.decrement > inst.k:
                continue
            ans, wit = self.run(_apply_child(inst, child))
            if ans:
                return True, wit
        return False, None

    def _leaf(self, inst: Instance):
        g = inst.graph
        _assert_proper(g)
        if not self.dp_allowed:
            raise DpDisabledError(
                "a proper %d-vertex graph needs the decomposition DP" % g.alive_count
            )
        guard = decomp.guard_check(g, inst.k)
        if not guard.ok:
            self.stats.guard_rejects += 1
            return False, None
        pd = decomp.decomposition_for(g, self.pw_limit)
        events = decomp.to_nice(pd)
        self.stats.dp_calls += 1
        self.stats.dp_width = max(self.stats.dp_width, events.width)
        if self.problem == "cpcp":
            size, wit = bdd_dp_solve(g, events, 2)
            if size <= inst.k:
                return True, inst.deleted | wit
            return False, None
        leaf_seed = cutcount.derive_seed(self.seed, self._leaf_counter)
        self._leaf_counter += 1
        for t in range(self.repeats):
            self.stats.repeats_used += 1
            if cutcount.decide_cpp_once(g, inst.k, events, cutcount.derive_seed(leaf_seed, t)):
                return True, None
        return False, None


def solve_cpcp(g: Graph, k: int, pw_limit: int = decomp.EXACT_PATHWIDTH_LIMIT,
               dp_allowed: bool = True) -> SolveOutcome:
    """Decide whether deleting at most k vertices leaves maximum degree <= 2;
    on yes, return a verifying deletion set of size <= k."""
    driver = _Driver("cpcp", pw_limit, dp_allowed)
    if k < 0:
        return SolveOutcome(False, None, driver.stats)
    ans, wit = driver.run(Instance(g.copy(), k, set()))
    if ans:
        if len(wit) > k or not verify(g, wit, "cpcp"):
            raise InternalSolverError("produced witness fails verification")
        return SolveOutcome(True, wit, driver.stats)
    return SolveOutcome(False, None, driver.stats)


def solve_cpp(g: Graph, k: int, repeats: int = 10, seed: int = 0,
              pw_limit: int = decomp.EXACT_PATHWIDTH_LIMIT,
              dp_allowed: bool = True) -> SolveOutcome:
    """Decide whether deleting at most k vertices leaves disjoint paths.

    Decision only. A yes is always correct; a no is wrong with probability at
    most (1/3)^repeats per cut & count leaf on yes-instances.
    """
    driver = _Driver("cpp", pw_limit, dp_allowed, repeats=repeats, seed=seed)
    if k < 0:
        return SolveOutcome(False, None, driver.stats)
    ans, _ = driver.run(Instance(g.copy(), k, set()))
    return SolveOutcome(ans, None, driver.stats)
