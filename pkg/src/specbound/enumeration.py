"""Isomorphism-free lists of all small graphs, for exhaustive sweeps.

Graphs on n+1 vertices are generated from the list on n vertices by gluing a
new vertex onto every subset of the old ones, and reduced modulo isomorphism
with a canonical form: vertices are first partitioned by iterated
neighbor-degree refinement (an isomorphism-invariant coloring), and the
canonical labeling is the refinement-respecting vertex order maximizing the
adjacency bit rows, found by branch and bound.  Slow next to real canonical
labeling tools, but exact, dependency-free, and fast enough for n <= 8 --
which is all the exhaustive test sweeps need.

The class counts are pinned in the tests against the classical values
(graphs: 1, 2, 4, 11, 34, 156, 1044, 12346; connected: 1, 1, 2, 6, 21, 112,
853, 11117 for n = 1..8), which is as strong a correctness check as this
module can get.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from .graphs import CapExceeded, Graph, Mask, bits, components_within, popcount

MAX_ENUM_N = 8

AdjMasks = Tuple[Mask, ...]


def wl_ranks(adj: Sequence[Mask], n: int) -> Tuple[int, ...]:
    """Iterated neighbor-color refinement; returns iso-invariant class ranks."""
    colors = [popcount(a) for a in adj]
    n_classes = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            nb = sorted(colors[u] for u in bits(adj[v]))
            sigs.append((colors[v], tuple(nb)))
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        k = len(set(new))
        if k == n_classes:
            return tuple(new)
        n_classes = k
        colors = new


def canonical_key(adj: Sequence[Mask], n: int) -> Tuple[int, ...]:
    """Canonical form: per-position adjacency rows under the best labeling.

    Row i holds vertex i's adjacency bits to positions 0..i-1.  Two graphs
    are isomorphic iff their keys coincide.  Labelings are constrained to
    follow the refinement classes in rank order, which prunes the search to
    roughly the automorphisms for symmetric graphs; complete and empty
    graphs, where refinement is useless, are special-cased.
    """
    if n == 1:
        return (0,)
    full = (1 << n) - 1
    if all(a == 0 for a in adj):
        return tuple(0 for _ in range(n))
    if all(adj[v] == full ^ (1 << v) for v in range(n)):
        return tuple((1 << i) - 1 for i in range(n))

    ranks = wl_ranks(adj, n)
    rank_seq = sorted(ranks)
    by_rank: Dict[int, List[int]] = {}
    for v, r in enumerate(ranks):
        by_rank.setdefault(r, []).append(v)

    best: Optional[List[int]] = None
    placed: List[int] = []
    current: List[int] = []
    used = [False] * n

    def rec(pos: int, state: int) -> bool:
        """state 1: prefix beats best (or best unset); 0: prefix equals it.

        Returns True when `best` was replaced somewhere in this subtree, so
        the caller knows its own prefix is now a prefix of `best`.
        """
        nonlocal best
        if pos == n:
            if best is None or state == 1:
                best = current.copy()
                return True
            return False
        scored = []
        for v in by_rank[rank_seq[pos]]:
            if used[v]:
                continue
            row = 0
            av = adj[v]
            for j, p in enumerate(placed):
                row |= ((av >> p) & 1) << j
            scored.append((row, v))
        scored.sort(reverse=True)
        st = state
        updated = False
        for row, v in scored:
            if best is not None and st == 0:
                if row < best[pos]:
                    break  # descending rows: the rest are worse too
                child = 0 if row == best[pos] else 1
            else:
                child = 1
            used[v] = True
            placed.append(v)
            current.append(row)
            if rec(pos + 1, child):
                updated = True
                st = 0
            current.pop()
            placed.pop()
            used[v] = False
        return updated

    rec(0, 1)
    assert best is not None
    return tuple(best)


def masks_from_key(key: Sequence[int]) -> AdjMasks:
    n = len(key)
    adj = [0] * n
    for i in range(n):
        row = key[i]
        for j in range(i):
            if (row >> j) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return tuple(adj)


_CACHE: Dict[int, List[AdjMasks]] = {1: [(0,)]}


def graph_masks(n: int) -> List[AdjMasks]:
    """Canonical adjacency masks of every graph on n vertices, one per class."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n > MAX_ENUM_N:
        raise CapExceeded(f"graph enumeration capped at n={MAX_ENUM_N}")
    if n in _CACHE:
        return _CACHE[n]
    prev = graph_masks(n - 1)
    k = n - 1
    seen: Dict[Tuple[int, ...], AdjMasks] = {}
    for adj in prev:
        for s in range(1 << k):
            cand = tuple(adj[v] | (((s >> v) & 1) << k) for v in range(k)) + (s,)
            key = canonical_key(cand, n)
            if key not in seen:
                seen[key] = masks_from_key(key)
    reps = list(seen.values())
    _CACHE[n] = reps
    return reps


def _to_graph(adj: AdjMasks) -> Graph:
    n = len(adj)
    es = [(u, v) for u in range(n) for v in bits(adj[u]) if v > u]
    return Graph(n, es)


def enumerate_graphs(n: int, connected: bool = False,
                     regular: bool = False) -> List[Graph]:
    """All graphs on exactly n vertices up to isomorphism, optionally
    filtered to connected and/or regular ones."""
    out = []
    full = (1 << n) - 1
    for adj in graph_masks(n):
        if regular:
            degs = {popcount(a) for a in adj}
            if len(degs) != 1:
                continue
        if connected and len(components_within(adj, full)) != 1:
            continue
        out.append(_to_graph(adj))
    return out


def isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test via canonical keys (n <= 8)."""
    if g.n != h.n:
        return False
    return canonical_key(g.adj_masks, g.n) == canonical_key(h.adj_masks, h.n)
