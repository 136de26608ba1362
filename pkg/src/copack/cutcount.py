"""Randomized decision procedure for co-path packing over a path decomposition.

The object counted is a "cc-candidate": an induced subgraph of maximum degree
2 together with a cut of its vertices into two sides with no crossing edge
(degree-0 vertices pinned to side one) and a set of marked side-one edges.
Counting those modulo 2, keyed by (isolates, vertices, edges, weight,
markers), and querying keys whose marker count equals the would-be component
count n - e - a makes every cyclic or under-marked subgraph cancel in pairs;
an odd count therefore certifies an induced linear forest of the requested
size. Random weights break ties between solutions (otherwise two distinct
solutions with equal statistics could also cancel), which is where the
one-sided error comes from.

Bag labels: deleted; kept degree-0 (side one by convention); kept degree-1 on
side one; kept degree-1 on side two; kept degree-2 (no further edges can
arrive, so the side no longer matters).
"""

from __future__ import annotations

import random
from bisect import bisect_left, insort
from dataclasses import dataclass

from .decomp import NiceEventSequence
from .graph import Graph

DEL, ISO, ONE1, ONE2, TWO = 0, 1, 2, 3, 4

_SEED_STRIDE = 0x9E3779B97F4A7C15


def derive_seed(master: int, counter: int) -> int:
    return (master * 6364136223846793005 + counter * _SEED_STRIDE + 1442695040888963407) & (
        (1 << 63) - 1
    )


@dataclass(frozen=True)
class WeightAssignment:
    """Independent uniform integer weights in [1, N] on vertices and edges,
    with N = 3 * (#vertices + #edges)."""

    vertex_weights: dict
    edge_weights: dict
    n_max: int


def sample_weights(g: Graph, seed: int) -> WeightAssignment:
    verts = g.vertices()
    edges = g.edges()
    n_max = 3 * (len(verts) + len(edges))
    rng = random.Random(seed)
    vw = {v: rng.randint(1, n_max) for v in verts}
    ew = {e: rng.randint(1, n_max) for e in edges}
    return WeightAssignment(vw, ew, n_max)


def _toggle(table: set, key):
    if key in table:
        table.discard(key)
    else:
        table.add(key)


def parity_dp(
    g: Graph,
    events: NiceEventSequence,
    weights: WeightAssignment,
    min_keep: int | None = None,
) -> set:
    """Final-table odd keys (a, n, e, w, m): parity of the number of
    cc-candidates with a isolated vertices, n vertices, e edges, weight w and
    m markers.

    min_keep, when given, prunes states that can no longer reach n >= min_keep
    kept vertices; use only for decisions, never when the full table matters.
    """
    intro_left = sum(1 for op, _ in events.events if op == "introduce")
    table: set = {((), 0, 0, 0, 0, 0)}
    bag: list[int] = []

    for op, v in events.events:
        if not g.is_alive(v):
            raise ValueError("event vertex %d is not alive" % v)
        new: set = set()
        if op == "introduce":
            intro_left -= 1
            p = bisect_left(bag, v)
            nbrs = [(i, bag[i]) for i in range(len(bag)) if bag[i] in g._adj[v]]
            ew = {i: weights.edge_weights[(min(u, v), max(u, v))] for i, u in nbrs}
            wv = weights.vertex_weights[v]
            for key in table:
                labels, a, n, e, w, m = key
                _toggle(new, (labels[:p] + (DEL,) + labels[p:], a, n, e, w, m))
                kept = [(i, labels[i]) for i, _ in nbrs if labels[i] != DEL]
                if len(kept) == 0:
                    _toggle(new, (labels[:p] + (ISO,) + labels[p:], a + 1, n + 1, e, w + wv, m))
                elif len(kept) == 1:
                    i, l = kept[0]
                    we = ew[i]
                    base = list(labels)
                    if l == ISO:
                        # the neighbor's side was only a degree-0 convention;
                        # its first edge fixes it to v's side
                        base[i] = ONE1
                        nl = tuple(base[:p]) + (ONE1,) + tuple(base[p:])
                        _toggle(new, (nl, a - 1, n + 1, e + 1, w + wv, m))
                        _toggle(new, (nl, a - 1, n + 1, e + 1, w + wv + we, m + 1))
                        base[i] = ONE2
                        nl = tuple(base[:p]) + (ONE2,) + tuple(base[p:])
                        _toggle(new, (nl, a - 1, n + 1, e + 1, w + wv, m))
                    elif l == ONE1:
                        base[i] = TWO
                        nl = tuple(base[:p]) + (ONE1,) + tuple(base[p:])
                        _toggle(new, (nl, a, n + 1, e + 1, w + wv, m))
                        _toggle(new, (nl, a, n + 1, e + 1, w + wv + we, m + 1))
                    elif l == ONE2:
                        base[i] = TWO
                        nl = tuple(base[:p]) + (ONE2,) + tuple(base[p:])
                        _toggle(new, (nl, a, n + 1, e + 1, w + wv, m))
                    # l == TWO: no kept branch, the neighbor is saturated
                elif len(kept) == 2:
                    (i1, l1), (i2, l2) = kept
                    if TWO in (l1, l2) or {l1, l2} == {ONE1, ONE2}:
                        continue
                    we1, we2 = ew[i1], ew[i2]
                    iso_drop = (l1 == ISO) + (l2 == ISO)
                    sides = (1, 2) if l1 == ISO and l2 == ISO else ((1,) if ONE1 in (l1, l2) else (2,))
                    for side in sides:
                        base = list(labels)
                        one = ONE1 if side == 1 else ONE2
                        base[i1] = one if l1 == ISO else TWO
                        base[i2] = one if l2 == ISO else TWO
                        nl = tuple(base[:p]) + (TWO,) + tuple(base[p:])
                        a2, n2, e2 = a - iso_drop, n + 1, e + 2
                        if side == 1:
                            _toggle(new, (nl, a2, n2, e2, w + wv, m))
                            _toggle(new, (nl, a2, n2, e2, w + wv + we1, m + 1))
                            _toggle(new, (nl, a2, n2, e2, w + wv + we2, m + 1))
                            _toggle(new, (nl, a2, n2, e2, w + wv + we1 + we2, m + 2))
                        else:
                            _toggle(new, (nl, a2, n2, e2, w + wv, m))
                # more than 2 kept bag-neighbors: v cannot be kept
            insort(bag, v)
        elif op == "forget":
            try:
                p = bag.index(v)
            except ValueError:
                raise ValueError("vertex %d forgotten while not in bag" % v)
            for key in table:
                labels, a, n, e, w, m = key
                _toggle(new, (labels[:p] + labels[p + 1:], a, n, e, w, m))
            bag.pop(p)
        else:
            raise ValueError("unknown event %r" % (op,))
        if min_keep is not None:
            new = {key for key in new if key[2] + intro_left >= min_keep}
        table = new

    if bag:
        raise ValueError("events leave a nonempty bag: %s" % bag)
    return {key[1:] for key in table}


def decide_cpp_once(g: Graph, k: int, events: NiceEventSequence, seed: int) -> bool:
    """One weighted run: True certifies a co-path-packing set of size <= k
    exists (sound); False may be wrong with probability <= 1/3."""
    if k < 0:
        return False
    need = g.alive_count - k
    weights = sample_weights(g, seed)
    final = parity_dp(g, events, weights, min_keep=max(need, 0))
    for a, n, e, w, m in final:
        if n >= need and m == n - e - a:
            return True
    return False


def decide_cpp(g: Graph, k: int, events: NiceEventSequence, repeats: int, seed: int) -> bool:
    """Repeat with independently derived weights; yes is sound, a no is wrong
    with probability <= (1/3)^repeats on yes-instances."""
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    for t in range(repeats):
        if decide_cpp_once(g, k, events, derive_seed(seed, t)):
            return True
    return False
