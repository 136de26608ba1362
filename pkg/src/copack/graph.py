"""Undirected simple graphs with stable vertex ids and deletion masking."""

from __future__ import annotations

from itertools import combinations

STRUCTURE_KINDS = (
    "degree_ge5",
    "dominating_deg4",
    "triangle_single_neighbor",
    "heavy_triangle",
    "deg4_heavy_triangle",
    "deg4_in_triangle",
    "deg4_adjacent_deg3",
    "low_degree_edge",
    "degree_two_path",
    "pendant_chain",
    "small_component",
    "cycle_component",
)


class Graph:
    """Simple undirected graph on vertex ids 0..size-1.

    Ids are never re-indexed: deleting a vertex marks it dead and detaches it
    from the alive adjacency sets, so certificates produced deep inside a
    search always refer to the original instance. Branch siblings work on
    copies, never on shared mutable state.
    """

    __slots__ = ("size", "_alive", "_adj", "_m", "_alive_count")

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.size = n
        self._alive = [True] * n
        self._adj: list[set[int]] = [set() for _ in range(n)]
        self._m = 0
        self._alive_count = n

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        g = cls(n)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    def copy(self) -> "Graph":
        g = Graph.__new__(Graph)
        g.size = self.size
        g._alive = list(self._alive)
        g._adj = [set(s) for s in self._adj]
        g._m = self._m
        g._alive_count = self._alive_count
        return g

    # ------------------------------------------------------------- queries

    def is_alive(self, v: int) -> bool:
        return 0 <= v < self.size and self._alive[v]

    def _check(self, v: int):
        if not self.is_alive(v):
            raise ValueError("vertex %r is deleted or out of range" % (v,))

    @property
    def alive_count(self) -> int:
        return self._alive_count

    @property
    def edge_count(self) -> int:
        return self._m

    def vertices(self) -> list[int]:
        return [v for v in range(self.size) if self._alive[v]]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._adj[v])

    def neighbors(self, v: int) -> set[int]:
        self._check(v)
        return set(self._adj[v])

    def closed_neighborhood(self, v: int) -> set[int]:
        self._check(v)
        return self._adj[v] | {v}

    def neighborhood_of(self, xs) -> set[int]:
        """N(X): neighbors of the set X, excluding X itself."""
        xs = set(xs)
        out: set[int] = set()
        for v in xs:
            self._check(v)
            out |= self._adj[v]
        return out - xs

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in self.vertices() for v in sorted(self._adj[u]) if u < v]

    def max_degree(self) -> int:
        return max((len(self._adj[v]) for v in range(self.size) if self._alive[v]), default=0)

    def max_degree_at_most(self, d: int) -> bool:
        if d < 0:
            raise ValueError("degree bound must be nonnegative")
        return all(len(self._adj[v]) <= d for v in range(self.size) if self._alive[v])

    def components(self) -> list[list[int]]:
        """Connected components of the alive subgraph, each sorted, ordered by minimum."""
        seen = set()
        comps = []
        for root in range(self.size):
            if not self._alive[root] or root in seen:
                continue
            comp = [root]
            seen.add(root)
            stack = [root]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def component_count(self) -> int:
        return len(self.components())

    def isolated_count(self) -> int:
        return sum(1 for v in range(self.size) if self._alive[v] and not self._adj[v])

    def is_linear_forest(self) -> bool:
        """True iff every component is an induced path (max degree <= 2, acyclic)."""
        if not self.max_degree_at_most(2):
            return False
        for comp in self.components():
            edges = sum(len(self._adj[v]) for v in comp) // 2
            if edges != len(comp) - 1:
                return False
        return True

    def dominates(self, v: int, u: int) -> bool:
        """True iff N[u] is contained in N[v]."""
        self._check(v)
        self._check(u)
        if u == v:
            raise ValueError("domination is defined for distinct vertices")
        if u not in self._adj[v]:
            return False
        av = self._adj[v]
        return all(w == v or w in av for w in self._adj[u])

    # ------------------------------------------------------------ mutation

    def add_edge(self, u: int, v: int):
        self._check(u)
        self._check(v)
        if u == v:
            raise ValueError("self-loops are not allowed")
        if v in self._adj[u]:
            raise ValueError("edge (%d, %d) already present" % (u, v))
        self._adj[u].add(v)
        self._adj[v].add(u)
        self._m += 1

    def remove_edge(self, u: int, v: int):
        self._check(u)
        self._check(v)
        if v not in self._adj[u]:
            raise ValueError("edge (%d, %d) not present" % (u, v))
        self._adj[u].discard(v)
        self._adj[v].discard(u)
        self._m -= 1

    def remove_vertex(self, v: int):
        self._check(v)
        for u in self._adj[v]:
            self._adj[u].discard(v)
        self._m -= len(self._adj[v])
        self._adj[v] = set()
        self._alive[v] = False
        self._alive_count -= 1

    def remove_vertices(self, vs):
        for v in sorted(set(vs)):
            self.remove_vertex(v)

    def without_vertices(self, vs) -> "Graph":
        g = self.copy()
        g.remove_vertices(vs)
        return g

    def without_edge(self, u: int, v: int) -> "Graph":
        g = self.copy()
        g.remove_edge(u, v)
        return g


# -------------------------------------------------------- structure search
#
# All finders scan vertices and neighbors in increasing id order and return
# the first witness, so every caller is reproducible run-to-run.


def find_degree_ge5(g: Graph):
    for v in g.vertices():
        if len(g._adj[v]) >= 5:
            return (v,)
    return None


def find_dominating_deg4(g: Graph):
    """Degree-4 vertex v dominating some vertex u with degree >= 3."""
    for v in g.vertices():
        if len(g._adj[v]) != 4:
            continue
        for u in sorted(g._adj[v]):
            if len(g._adj[u]) >= 3 and g.dominates(v, u):
                return (v, u)
    return None


def _triangles(g: Graph):
    for u in g.vertices():
        au = g._adj[u]
        for v in sorted(au):
            if v <= u:
                continue
            for w in sorted(au & g._adj[v]):
                if w > v:
                    yield (u, v, w)


def find_triangle_single_neighbor(g: Graph):
    """Triangle whose outside neighborhood is a single vertex x; returns (u, v, w, x)."""
    for u, v, w in _triangles(g):
        outside = (g._adj[u] | g._adj[v] | g._adj[w]) - {u, v, w}
        if len(outside) == 1:
            return (u, v, w, outside.pop())
    return None


def find_heavy_triangle(g: Graph):
    """Triangle with outside neighborhood of size >= 4."""
    for u, v, w in _triangles(g):
        if len((g._adj[u] | g._adj[v] | g._adj[w]) - {u, v, w}) >= 4:
            return (u, v, w)
    return None


def find_deg4_heavy_triangle(g: Graph):
    """(v, u1, u2): degree-4 v in a heavy triangle {v, u1, u2}."""
    for v in g.vertices():
        if len(g._adj[v]) != 4:
            continue
        nbrs = sorted(g._adj[v])
        for u1, u2 in combinations(nbrs, 2):
            if u2 not in g._adj[u1]:
                continue
            if len((g._adj[v] | g._adj[u1] | g._adj[u2]) - {v, u1, u2}) >= 4:
                return (v, u1, u2)
    return None


def find_deg4_in_triangle(g: Graph):
    """(v, u1, u2): degree-4 v in any triangle {v, u1, u2}."""
    for v in g.vertices():
        if len(g._adj[v]) != 4:
            continue
        nbrs = sorted(g._adj[v])
        for u1, u2 in combinations(nbrs, 2):
            if u2 in g._adj[u1]:
                return (v, u1, u2)
    return None


def find_deg4_adjacent_deg3(g: Graph):
    """(v, u1): degree-4 v adjacent to some u1 with degree >= 3."""
    for v in g.vertices():
        if len(g._adj[v]) != 4:
            continue
        for u in sorted(g._adj[v]):
            if len(g._adj[u]) >= 3:
                return (v, u)
    return None


def find_low_degree_edge(g: Graph):
    """Edge whose endpoints both have degree <= 2."""
    for u in g.vertices():
        if len(g._adj[u]) > 2:
            continue
        for v in sorted(g._adj[u]):
            if u < v and len(g._adj[v]) <= 2:
                return (u, v)
    return None


def find_degree_two_path(g: Graph, min_edges: int = 4):
    """Path v0..vh whose endpoints have degree != 2 and whose h-1 internal
    vertices all have degree 2, with h >= min_edges. The endpoints may
    coincide (a cycle hanging off one vertex)."""
    for v0 in g.vertices():
        if len(g._adj[v0]) == 2 or not g._adj[v0]:
            continue
        for v1 in sorted(g._adj[v0]):
            if len(g._adj[v1]) != 2:
                continue
            seq = [v0, v1]
            prev, cur = v0, v1
            while len(g._adj[cur]) == 2:
                nxt = next(x for x in g._adj[cur] if x != prev)
                seq.append(nxt)
                prev, cur = cur, nxt
            if len(seq) - 1 >= min_edges:
                return tuple(seq)
    return None


def find_pendant_chain(g: Graph):
    """(x, c1, c2): degree-1 x whose neighbor c1 and next vertex c2 both have
    degree 2. Too short for the general degree-two-path rule, but its middle
    vertex still sees no degree->=3 neighbor."""
    for x in g.vertices():
        if len(g._adj[x]) != 1:
            continue
        c1 = next(iter(g._adj[x]))
        if len(g._adj[c1]) != 2:
            continue
        c2 = next(y for y in g._adj[c1] if y != x)
        if len(g._adj[c2]) == 2:
            return (x, c1, c2)
    return None


def find_small_component(g: Graph, limit: int = 6):
    for comp in g.components():
        if len(comp) <= limit:
            return tuple(comp)
    return None


def find_cycle_component(g: Graph):
    """Component inducing a single cycle (every vertex has degree exactly 2)."""
    for comp in g.components():
        if len(comp) >= 3 and all(len(g._adj[v]) == 2 for v in comp):
            return tuple(comp)
    return None


_FINDERS = {
    "degree_ge5": find_degree_ge5,
    "dominating_deg4": find_dominating_deg4,
    "triangle_single_neighbor": find_triangle_single_neighbor,
    "heavy_triangle": find_heavy_triangle,
    "deg4_heavy_triangle": find_deg4_heavy_triangle,
    "deg4_in_triangle": find_deg4_in_triangle,
    "deg4_adjacent_deg3": find_deg4_adjacent_deg3,
    "low_degree_edge": find_low_degree_edge,
    "degree_two_path": find_degree_two_path,
    "pendant_chain": find_pendant_chain,
    "small_component": find_small_component,
    "cycle_component": find_cycle_component,
}


def find_structure(g: Graph, kind: str):
    """First witness of the requested structure in deterministic (lowest-id) order, or None."""
    try:
        finder = _FINDERS[kind]
    except KeyError:
        raise ValueError("unknown structure kind %r (known: %s)" % (kind, ", ".join(STRUCTURE_KINDS)))
    return finder(g)
