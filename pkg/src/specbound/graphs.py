"""Finite graphs carrying the uniform vertex measure.

Everything downstream (spectra, peeling colorers, Tutte scans, limit checks)
works on two small types defined here:

* :class:`Graph` -- a simple undirected graph on vertices ``0..n-1`` with
  sorted neighbor lists and per-vertex adjacency bitmasks.  The measure is
  always uniform, ``mu({v}) = 1/n``; subsets of vertices are plain ``int``
  bitmasks so that exhaustive subset scans stay cheap.
* :class:`DirectedGraph` -- finite out-neighbor lists, optionally remembering
  the generating functions it was built from.

The module also holds the mass-transport checker: a transport is a nonnegative
weight on ordered adjacent pairs, and under the uniform measure the total mass
sent equals the total mass received.  ``verify_mass_transport`` recomputes both
sides grouped by sender and by receiver and reports the (floating point)
residual, which must vanish to near machine precision.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

Mask = int  # vertex subsets as bitmasks over 0..n-1


class CapExceeded(RuntimeError):
    """Raised when an exhaustive routine is asked to run above its size cap."""


# ---------------------------------------------------------------------------
# bitmask helpers
# ---------------------------------------------------------------------------

def mask_of(vertices: Iterable[int]) -> Mask:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: Mask) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def popcount(mask: Mask) -> int:
    return mask.bit_count()


# ---------------------------------------------------------------------------
# undirected graphs
# ---------------------------------------------------------------------------

class Graph:
    """Simple undirected graph on ``0..n-1`` with uniform vertex measure.

    Edges are validated on construction: endpoints in range, no loops, no
    duplicates.  Neighbor lists are kept sorted and the adjacency is also
    cached as one bitmask per vertex.
    """

    __slots__ = ("n", "adj", "adj_masks", "degrees", "_edges")

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]]):
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        self.n = n
        seen = set()
        adj: List[List[int]] = [[] for _ in range(n)]
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {e!r} out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge {key!r}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        for lst in adj:
            lst.sort()
        self.adj = tuple(tuple(lst) for lst in adj)
        self.adj_masks = tuple(mask_of(lst) for lst in adj)
        self.degrees = tuple(len(lst) for lst in adj)
        self._edges = tuple(sorted(seen))

    # -- basic accessors ----------------------------------------------------

    @property
    def m(self) -> int:
        return len(self._edges)

    def edges(self) -> Tuple[Tuple[int, int], ...]:
        """All edges as (u, v) with u < v, sorted lexicographically."""
        return self._edges

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    @property
    def is_regular(self) -> bool:
        return self.min_degree == self.max_degree

    @property
    def full_mask(self) -> Mask:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj_masks[u] >> v & 1)

    def mu(self, subset: Mask) -> float:
        """Uniform measure of a vertex subset."""
        return popcount(subset) / self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def degree_stats(g: Graph) -> Tuple[int, int, float]:
    """(min degree, max degree, average degree).  Average is ``2m/n``."""
    return g.min_degree, g.max_degree, 2.0 * g.m / g.n


def neighborhood(g: Graph, subset: Mask) -> Mask:
    """Vertices with at least one neighbor in ``subset``.

    Note N(A) may intersect A; it is the set of endpoints of edges leaving A,
    not the "exterior boundary".  Always ``|N(A)| <= max_degree * |A|``.
    """
    out = 0
    for v in bits(subset):
        out |= g.adj_masks[v]
    return out


def induced_subgraph(g: Graph, subset: Mask) -> Tuple[Graph, List[int]]:
    """Subgraph induced on ``subset``, relabeled to ``0..k-1``.

    Returns ``(graph, index_map)`` where ``index_map[i]`` is the original
    vertex behind new index ``i``.  The empty subset is an error.
    """
    vs = list(bits(subset))
    if not vs:
        raise ValueError("induced subgraph of the empty set is undefined")
    pos = {v: i for i, v in enumerate(vs)}
    es = []
    for i, v in enumerate(vs):
        for w in g.adj[v]:
            if w > v and (subset >> w) & 1:
                es.append((i, pos[w]))
    return Graph(len(vs), es), vs


def components_within(adj_masks: Sequence[Mask], region: Mask) -> List[Mask]:
    """Connected components of the subgraph induced on ``region`` (bitmasks).

    Ordered by least contained vertex.  Works on raw adjacency masks so the
    Tutte subset scan can call it without building Graph objects.
    """
    comps = []
    rem = region
    while rem:
        seed = rem & -rem
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= adj_masks[b.bit_length() - 1]
            nxt &= region & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rem &= ~comp
    return comps


def components(g: Graph) -> List[Mask]:
    """Vertex sets of the connected components, ordered by least vertex."""
    return components_within(g.adj_masks, g.full_mask)


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


# ---------------------------------------------------------------------------
# directed graphs / function graphs
# ---------------------------------------------------------------------------

class DirectedGraph:
    """Finite digraph with sorted out-neighbor lists, no loops, no duplicates.

    When built from a family of functions ``f_i : V -> V`` (see
    ``generators.function_graph``) the functions are remembered;
    ``n_functions`` then bounds the out-degree.
    """

    __slots__ = ("n", "out", "out_masks", "functions")

    def __init__(self, n: int, out_edges: Iterable[Tuple[int, int]],
                 functions: Optional[Sequence[Sequence[int]]] = None):
        if n < 1:
            raise ValueError("digraph needs at least one vertex")
        self.n = n
        out: List[set] = [set() for _ in range(n)]
        for e in out_edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc {e!r} out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            if v in out[u]:
                raise ValueError(f"duplicate arc {(u, v)!r}")
            out[u].add(v)
        self.out = tuple(tuple(sorted(s)) for s in out)
        self.out_masks = tuple(mask_of(s) for s in out)
        if functions is not None:
            fns = []
            for f in functions:
                f = tuple(f)
                if len(f) != n or any(not (0 <= y < n) for y in f):
                    raise ValueError("function table must map 0..n-1 into 0..n-1")
                fns.append(f)
            self.functions = tuple(fns)
        else:
            self.functions = None

    @property
    def n_functions(self) -> int:
        """Number of generating functions; falls back to max out-degree."""
        if self.functions is not None:
            return len(self.functions)
        return max((len(o) for o in self.out), default=0)

    @property
    def out_degrees(self) -> Tuple[int, ...]:
        return tuple(len(o) for o in self.out)

    @property
    def in_degrees(self) -> Tuple[int, ...]:
        indeg = [0] * self.n
        for u in range(self.n):
            for v in self.out[u]:
                indeg[v] += 1
        return tuple(indeg)

    def arcs(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.out[u]]

    def underlying(self) -> Graph:
        """Forget orientation (parallel opposite arcs collapse to one edge)."""
        es = set()
        for u in range(self.n):
            for v in self.out[u]:
                es.add((u, v) if u < v else (v, u))
        return Graph(self.n, sorted(es))

    def __repr__(self) -> str:
        return f"DirectedGraph(n={self.n}, arcs={sum(self.out_degrees)})"


# ---------------------------------------------------------------------------
# mass transport
# ---------------------------------------------------------------------------

@dataclass
class Transport:
    """Nonnegative weights on ordered adjacent pairs of a graph.

    ``weights[(x, y)]`` is the mass vertex x sends to its neighbor y.  Support
    off the edge set, or a negative weight, is rejected up front.
    """

    graph: Graph
    weights: Dict[Tuple[int, int], float]

    def __post_init__(self) -> None:
        g = self.graph
        for (x, y), w in self.weights.items():
            if not (0 <= x < g.n and 0 <= y < g.n) or not g.has_edge(x, y):
                raise ValueError(f"transport supported on non-edge pair {(x, y)!r}")
            if w < 0:
                raise ValueError(f"negative transport weight at {(x, y)!r}")

    def sent(self, x: int) -> float:
        return sum(w for (a, _), w in self.weights.items() if a == x)

    def received(self, y: int) -> float:
        return sum(w for (_, b), w in self.weights.items() if b == y)


def verify_mass_transport(transport: Transport) -> float:
    """Residual of the mass-transport identity under the uniform measure.

    Integrates the outgoing mass over senders and the incoming mass over
    receivers, grouped the two different ways, and returns
    ``|sum_out - sum_in| / n``.  Mathematically the two integrals coincide;
    floating point leaves at most a tiny summation-order residual.
    """
    g = transport.graph
    out = [0.0] * g.n
    inc = [0.0] * g.n
    for (x, y), w in transport.weights.items():
        out[x] += w
        inc[y] += w
    total_out = sum(out)
    total_in = sum(inc)
    return abs(total_out - total_in) / g.n


# ---------------------------------------------------------------------------
# edge-list text format
# ---------------------------------------------------------------------------
#
# First line "n m", then m lines "u v" with 0 <= u < v < n.  The writer sorts
# edges lexicographically, so write(load(text)) == text for canonical input.

def dump_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def _parse_lines(text: str) -> List[List[str]]:
    rows = []
    for raw in text.splitlines():
        row = raw.split()
        if row:
            rows.append(row)
    return rows


def load_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format; malformed input raises ValueError."""
    rows = _parse_lines(text)
    if not rows:
        raise ValueError("empty edge-list input")
    head = rows[0]
    if len(head) != 2:
        raise ValueError("header must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise ValueError("header must be two integers 'n m'") from exc
    if n < 1 or m < 0:
        raise ValueError(f"bad header values n={n} m={m}")
    if len(rows) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for row in rows[1:]:
        if len(row) != 2:
            raise ValueError(f"bad edge line {' '.join(row)!r}")
        try:
            u, v = int(row[0]), int(row[1])
        except ValueError as exc:
            raise ValueError(f"bad edge line {' '.join(row)!r}") from exc
        if not (0 <= u < v < n):
            raise ValueError(f"edge line must satisfy 0 <= u < v < n: {u} {v}")
        edges.append((u, v))
    return Graph(n, edges)  # Graph re-checks duplicates


def dump_directed_edge_list(d: DirectedGraph) -> str:
    """Directed variant: same header, one "u v" line per arc u -> v."""
    lines = [f"{d.n} {sum(d.out_degrees)}"]
    lines.extend(f"{u} {v}" for u, v in d.arcs())
    return "\n".join(lines) + "\n"


def load_directed_edge_list(text: str) -> DirectedGraph:
    rows = _parse_lines(text)
    if not rows:
        raise ValueError("empty edge-list input")
    head = rows[0]
    if len(head) != 2:
        raise ValueError("header must be 'n m'")
    n, m = int(head[0]), int(head[1])
    if n < 1 or m < 0:
        raise ValueError(f"bad header values n={n} m={m}")
    if len(rows) - 1 != m:
        raise ValueError(f"expected {m} arc lines, found {len(rows) - 1}")
    arcs = []
    for row in rows[1:]:
        if len(row) != 2:
            raise ValueError(f"bad arc line {' '.join(row)!r}")
        u, v = int(row[0]), int(row[1])
        arcs.append((u, v))
    return DirectedGraph(n, arcs)


def canonical_digest(g: Graph) -> str:
    """Stable hex digest of the canonical edge-list text."""
    return hashlib.sha256(dump_edge_list(g).encode()).hexdigest()
