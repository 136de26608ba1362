"""Path decompositions: validation, nice event form, exact and heuristic width."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GraphFormatError, SizeLimitError
from .graph import Graph

EXACT_PATHWIDTH_LIMIT = 22


class PathDecomposition:
    """Ordered bag list X1..Xr over a host graph's alive vertices."""

    __slots__ = ("bags",)

    def __init__(self, bags):
        self.bags = [frozenset(b) for b in bags]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def normalized(self) -> "PathDecomposition":
        """Drop consecutive duplicate bags; keeps length <= 2n."""
        out = []
        for b in self.bags:
            if not out or out[-1] != b:
                out.append(b)
        return PathDecomposition(out)

    def __eq__(self, other):
        return isinstance(other, PathDecomposition) and self.bags == other.bags

    def __repr__(self):
        return "PathDecomposition(%r)" % ([sorted(b) for b in self.bags],)


@dataclass(frozen=True)
class Violation:
    prop: str  # "P1" | "P2" | "P3"
    witness: tuple
    message: str


def validate(g: Graph, pd: PathDecomposition):
    """None when all three decomposition properties hold, else the first Violation."""
    alive = set(g.vertices())
    union = set().union(*pd.bags) if pd.bags else set()
    for v in sorted(union - alive):
        return Violation("P1", (v,), "bag vertex %d is not an alive vertex" % v)
    for v in sorted(alive - union):
        return Violation("P1", (v,), "vertex %d appears in no bag" % v)
    for u, v in g.edges():
        if not any(u in b and v in b for b in pd.bags):
            return Violation("P2", (u, v), "edge (%d, %d) is covered by no bag" % (u, v))
    for v in sorted(alive):
        idx = [i for i, b in enumerate(pd.bags) if v in b]
        if idx and idx[-1] - idx[0] + 1 != len(idx):
            return Violation("P3", (v,), "bag indices of vertex %d are not contiguous" % v)
    return None


class NiceEventSequence:
    """Introduce/forget event list; replaying it yields bags that grow or
    shrink by exactly one vertex and start/end empty."""

    __slots__ = ("events", "width")

    def __init__(self, events, width):
        self.events = list(events)
        self.width = width

    def __len__(self):
        return len(self.events)

    def replay_bags(self) -> list[frozenset]:
        cur: set[int] = set()
        bags = []
        for op, v in self.events:
            if op == "introduce":
                if v in cur:
                    raise ValueError("vertex %d introduced while present" % v)
                cur.add(v)
            elif op == "forget":
                if v not in cur:
                    raise ValueError("vertex %d forgotten while absent" % v)
                cur.remove(v)
            else:
                raise ValueError("unknown event %r" % (op,))
            bags.append(frozenset(cur))
        if cur:
            raise ValueError("vertices never forgotten: %s" % sorted(cur))
        return bags

    def to_decomposition(self) -> PathDecomposition:
        return PathDecomposition(self.replay_bags())


def to_nice(pd: PathDecomposition) -> NiceEventSequence:
    """Turn a bag list into events of identical width.

    Between consecutive bags the departing vertices are forgotten before the
    arriving ones are introduced, so no intermediate bag exceeds the larger
    of its two neighbors.
    """
    events = []
    prev: frozenset = frozenset()
    peak = 0
    cur = 0
    for bag in list(pd.bags) + [frozenset()]:
        for v in sorted(prev - bag):
            events.append(("forget", v))
            cur -= 1
        for v in sorted(bag - prev):
            events.append(("introduce", v))
            cur += 1
            peak = max(peak, cur)
        prev = bag
    return NiceEventSequence(events, peak - 1)


def validate_events(g: Graph, ev: NiceEventSequence):
    """Raise unless replaying the events gives a valid decomposition of g."""
    bad = validate(g, ev.to_decomposition())
    if bad is not None:
        raise ValueError("event sequence invalid: %s" % (bad.message,))


# ----------------------------------------------------------- exact width
#
# Pathwidth equals the vertex separation number: minimize, over vertex
# layouts, the maximum number of placed vertices that still have an
# unplaced neighbor. h(S) below is the best achievable maximum over all
# completions of the prefix set S; boundary sizes come from a vectorized
# precomputation.


def _boundary_sizes(adj_masks: list[int], n: int) -> list[int]:
    s = np.arange(1 << n, dtype=np.uint32)
    b = np.zeros(1 << n, dtype=np.uint8)
    for i, am in enumerate(adj_masks):
        if not am:
            continue
        inside = ((s >> np.uint32(i)) & np.uint32(1)).astype(bool)
        has_out = (np.bitwise_and(np.bitwise_not(s), np.uint32(am)) != 0)
        b += inside & has_out
    return b.tolist()


def exact_pathwidth(g: Graph, limit: int = EXACT_PATHWIDTH_LIMIT):
    """(pathwidth, optimal decomposition) by subset DP; exponential in alive count."""
    verts = g.vertices()
    n = len(verts)
    if n > limit:
        raise SizeLimitError("exact pathwidth limited to %d vertices, got %d" % (limit, n))
    if n == 0:
        return -1, PathDecomposition([])
    pos = {v: i for i, v in enumerate(verts)}
    adj_masks = [0] * n
    for v in verts:
        m = 0
        for u in g._adj[v]:
            m |= 1 << pos[u]
        adj_masks[pos[v]] = m
    full = (1 << n) - 1
    b = _boundary_sizes(adj_masks, n)

    h = [0] * (1 << n)
    for smask in range(full - 1, -1, -1):
        rem = full ^ smask
        best = n + 1
        mm = rem
        while mm:
            bit = mm & -mm
            mm ^= bit
            t = smask | bit
            cand = b[t]
            if h[t] > cand:
                cand = h[t]
            if cand < best:
                best = cand
        h[smask] = best
    width = h[0]

    # lexicographically smallest optimal layout
    order = []
    smask = 0
    for _ in range(n):
        target = h[smask]
        for i in range(n):
            bit = 1 << i
            if smask & bit:
                continue
            t = smask | bit
            if max(b[t], h[t]) == target:
                order.append(i)
                smask = t
                break
    assert len(order) == n

    bags = []
    pm = 0
    for i in order:
        bag = {verts[j] for j in range(n) if (pm >> j) & 1 and adj_masks[j] & (full ^ pm)}
        bag.add(verts[i])
        bags.append(bag)
        pm |= 1 << i
    pd = PathDecomposition(bags).normalized()
    assert pd.width == width
    return width, pd


def _layout_to_decomposition(g: Graph, order: list[int]) -> PathDecomposition:
    """Bags from a vertex layout: placed vertices with unplaced neighbors, plus the newcomer."""
    placed: set[int] = set()
    bags = []
    for v in order:
        bag = {u for u in placed if g._adj[u] - placed}
        bag.add(v)
        bags.append(bag)
        placed.add(v)
    return PathDecomposition(bags).normalized()


def heuristic_pd(g: Graph) -> PathDecomposition:
    """Greedy layout-based decomposition; always valid, no width guarantee."""
    remaining = set(g.vertices())
    placed: set[int] = set()
    order = []
    boundary: set[int] = set()
    while remaining:
        best_v, best_cost = None, None
        for v in sorted(remaining):
            nb = {u for u in boundary if g._adj[u] - (placed | {v})}
            if g._adj[v] - (placed | {v}):
                nb.add(v)
            cost = len(nb)
            if best_cost is None or cost < best_cost:
                best_v, best_cost = v, cost
        order.append(best_v)
        placed.add(best_v)
        remaining.discard(best_v)
        boundary = {u for u in boundary if g._adj[u] - placed}
        if g._adj[best_v] - placed:
            boundary.add(best_v)
    return _layout_to_decomposition(g, order)


def decomposition_for(g: Graph, pw_limit: int = EXACT_PATHWIDTH_LIMIT) -> PathDecomposition:
    """Best decomposition we can afford: exact below the limit, greedy above."""
    if g.alive_count <= pw_limit:
        return exact_pathwidth(g, pw_limit)[1]
    return heuristic_pd(g)


# ----------------------------------------------------------- proper graphs


def is_proper(g: Graph) -> bool:
    """Max degree <= 4; degree-4 vertices have only degree-<=2 neighbors;
    every degree-2 vertex has a degree->=3 neighbor; components >= 6."""
    for v in g.vertices():
        d = len(g._adj[v])
        if d > 4:
            return False
        if d == 4 and any(len(g._adj[u]) > 2 for u in g._adj[v]):
            return False
        if d == 2 and all(len(g._adj[u]) < 3 for u in g._adj[v]):
            return False
    return all(len(c) >= 6 for c in g.components())


@dataclass(frozen=True)
class GuardReport:
    n3: int
    n4: int
    n_ge5: int
    vertex_bound_ok: bool  # |V| <= 100 k
    weight_bound_ok: bool  # n3/6 + n4/3 <= 2k/3

    @property
    def ok(self) -> bool:
        return self.vertex_bound_ok and self.weight_bound_ok


def guard_check(g: Graph, k: int) -> GuardReport:
    """Fast no-instance test for proper graphs: any deletion set of size <= k
    forces |V| <= 100k and n3/6 + n4/3 <= 2k/3 (compared in integers as
    n3 + 2*n4 <= 4k)."""
    n3 = n4 = n_ge5 = 0
    for v in g.vertices():
        d = len(g._adj[v])
        if d == 3:
            n3 += 1
        elif d == 4:
            n4 += 1
        elif d >= 5:
            n_ge5 += 1
    return GuardReport(
        n3=n3,
        n4=n4,
        n_ge5=n_ge5,
        vertex_bound_ok=g.alive_count <= 100 * k,
        weight_bound_ok=n3 + 2 * n4 <= 4 * k,
    )


# ----------------------------------------------------------- text format
#
# Header `p pd <n_bags> <max_bag_size> <n_vertices>`, then one `b <index>
# <v1> <v2> ...` line per bag, vertices 1-based in files.


def write_decomposition(pd: PathDecomposition) -> str:
    n_bags = len(pd.bags)
    max_size = max((len(b) for b in pd.bags), default=0)
    n_verts = len(set().union(*pd.bags)) if pd.bags else 0
    lines = ["p pd %d %d %d" % (n_bags, max_size, n_verts)]
    for i, bag in enumerate(pd.bags, start=1):
        lines.append(" ".join(["b", str(i)] + [str(v + 1) for v in sorted(bag)]))
    return "\n".join(lines) + "\n"


def parse_decomposition(text: str) -> PathDecomposition:
    header = None
    bags = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise GraphFormatError("duplicate header", ln)
            if len(parts) != 5 or parts[1] != "pd":
                raise GraphFormatError("expected 'p pd <n_bags> <max_bag_size> <n_vertices>'", ln)
            try:
                header = tuple(int(x) for x in parts[2:])
            except ValueError:
                raise GraphFormatError("non-integer header field", ln)
        elif parts[0] == "b":
            if header is None:
                raise GraphFormatError("bag before header", ln)
            try:
                idx = int(parts[1])
                vs = [int(x) for x in parts[2:]]
            except (ValueError, IndexError):
                raise GraphFormatError("malformed bag line", ln)
            if idx != len(bags) + 1:
                raise GraphFormatError("bag index %d out of order" % idx, ln)
            if any(v < 1 for v in vs):
                raise GraphFormatError("vertices are 1-based", ln)
            bags.append(frozenset(v - 1 for v in vs))
        else:
            raise GraphFormatError("unrecognized line %r" % line, ln)
    if header is None:
        raise GraphFormatError("missing header")
    n_bags, max_size, _ = header
    if n_bags != len(bags):
        raise GraphFormatError("header declares %d bags, found %d" % (n_bags, len(bags)))
    if bags and max(len(b) for b in bags) != max_size:
        raise GraphFormatError("header max bag size %d does not match bags" % max_size)
    return PathDecomposition(bags)
