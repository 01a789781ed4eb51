"""Immutable simple-graph value type and the neighborhood/degree/distance
primitives everything else is built on.

Vertices are dense integer ids ``0..n-1``.  Adjacency rows are bitmask-backed
:class:`VertexSet` values, which keeps membership, union, difference and
popcount cheap enough for the exhaustive solvers.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, NamedTuple

#: Hard cap on graph order for the core operations.  The propagation kernels
#: assume rows fit a fixed number of 64-bit words.
MAX_VERTICES = 512


class VertexSet:
    """Immutable subset of ``{0..n-1}`` backed by an int bitmask."""

    __slots__ = ("_mask",)

    def __init__(self, members: Iterable[int] = ()) -> None:
        mask = 0
        for v in members:
            if v < 0:
                raise ValueError(f"negative vertex id: {v}")
            mask |= 1 << v
        object.__setattr__(self, "_mask", mask)

    @classmethod
    def from_mask(cls, mask: int) -> "VertexSet":
        if mask < 0:
            raise ValueError("mask must be non-negative")
        s = cls.__new__(cls)
        object.__setattr__(s, "_mask", mask)
        return s

    @property
    def mask(self) -> int:
        return self._mask

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("VertexSet is immutable")

    def __contains__(self, v: int) -> bool:
        return v >= 0 and (self._mask >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        mask = self._mask
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __len__(self) -> int:
        return self._mask.bit_count()

    def __bool__(self) -> bool:
        return self._mask != 0

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self._mask | other._mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self._mask & other._mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self._mask & ~other._mask)

    def __xor__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self._mask ^ other._mask)

    def __le__(self, other: "VertexSet") -> bool:
        return self._mask & ~other._mask == 0

    def __lt__(self, other: "VertexSet") -> bool:
        return self != other and self <= other

    def __eq__(self, other: object) -> bool:
        return isinstance(other, VertexSet) and self._mask == other._mask

    def __hash__(self) -> int:
        return hash(("VertexSet", self._mask))

    def isdisjoint(self, other: "VertexSet") -> bool:
        return self._mask & other._mask == 0

    def add(self, v: int) -> "VertexSet":
        """Return a new set with ``v`` included."""
        return VertexSet.from_mask(self._mask | (1 << v))

    def __repr__(self) -> str:
        return "VertexSet({" + ", ".join(str(v) for v in self) + "})"


class Edge(NamedTuple):
    """Normalized undirected edge with ``u < v``."""

    u: int
    v: int

    @staticmethod
    def of(a: int, b: int) -> "Edge":
        if a == b:
            raise ValueError(f"loop edge ({a},{b}) not allowed")
        return Edge(a, b) if a < b else Edge(b, a)


class GraphMetrics(NamedTuple):
    min_degree: int
    max_degree: int
    connected: bool
    diameter: float  # math.inf when disconnected


class Graph:
    """Immutable simple undirected graph.

    Attributes:
      n:   vertex count, ids ``0..n-1``.
      adj: tuple of ``n`` :class:`VertexSet` adjacency rows.
      m:   edge count.
    """

    __slots__ = ("n", "adj", "m")

    def __init__(self, n: int, adj: tuple[VertexSet, ...], m: int) -> None:
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "m", m)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Graph is immutable")

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.adj)

    def vertices(self) -> VertexSet:
        return VertexSet.from_mask((1 << self.n) - 1)

    def row_masks(self) -> tuple[int, ...]:
        """Raw adjacency bitmasks (the hot-path view of ``adj``)."""
        return tuple(row.mask for row in self.adj)

    def neighbors(self, v: int) -> VertexSet:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> tuple[Edge, ...]:
        out = []
        for u in range(self.n):
            rest = self.adj[u].mask >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    out.append(Edge(u, v))
                rest >>= 1
                v += 1
        return tuple(out)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _validate_masks(n: int, masks: list[int]) -> None:
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if n > MAX_VERTICES:
        raise ValueError(f"graph order {n} exceeds cap {MAX_VERTICES}")
    full = (1 << n) - 1
    for u, row in enumerate(masks):
        if row & ~full:
            raise ValueError(f"adjacency row {u} references vertices >= {n}")
        if (row >> u) & 1:
            raise ValueError(f"loop at vertex {u}")
    for u in range(n):
        rest = masks[u] >> (u + 1)
        v = u + 1
        while rest:
            if rest & 1 and not (masks[v] >> u) & 1:
                raise ValueError(f"asymmetric adjacency between {u} and {v}")
            rest >>= 1
            v += 1


def graph_from_masks(n: int, masks: Iterable[int]) -> Graph:
    """Build a Graph from raw adjacency bitmasks, checking symmetry and
    loop-freedom (every construction path funnels through here)."""
    rows = list(masks)
    if len(rows) != n:
        raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
    _validate_masks(n, rows)
    m = sum(row.bit_count() for row in rows) // 2
    return Graph(n, tuple(VertexSet.from_mask(r) for r in rows), m)


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices from an edge list.

    Duplicate edges collapse; loops and out-of-range endpoints raise.
    """
    if n < 0 or n > MAX_VERTICES:
        raise ValueError(f"vertex count {n} out of range 0..{MAX_VERTICES}")
    masks = [0] * n
    for a, b in edges:
        if not (0 <= a < n and 0 <= b < n):
            raise ValueError(f"edge ({a},{b}) endpoint out of range 0..{n - 1}")
        if a == b:
            raise ValueError(f"loop edge ({a},{a}) not allowed")
        masks[a] |= 1 << b
        masks[b] |= 1 << a
    m = sum(row.bit_count() for row in masks) // 2
    return Graph(n, tuple(VertexSet.from_mask(r) for r in masks), m)


def open_neighborhood(g: Graph, s: VertexSet) -> VertexSet:
    """N(S): union of the neighbors of the vertices of ``s``."""
    mask = 0
    for v in s:
        mask |= g.adj[v].mask
    return VertexSet.from_mask(mask)


def closed_neighborhood(g: Graph, s: VertexSet) -> VertexSet:
    """N[S] = N(S) ∪ S."""
    mask = s.mask
    for v in s:
        mask |= g.adj[v].mask
    return VertexSet.from_mask(mask)


def _bfs_mask(rows: tuple[int, ...], start_mask: int) -> int:
    """Set of vertices reachable from any vertex of ``start_mask``."""
    seen = start_mask
    frontier = start_mask
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= rows[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def connected_components(g: Graph) -> list[VertexSet]:
    """Components as VertexSets, ordered by least vertex."""
    rows = g.row_masks()
    remaining = (1 << g.n) - 1
    comps = []
    while remaining:
        low = remaining & -remaining
        comp = _bfs_mask(rows, low)
        comps.append(VertexSet.from_mask(comp))
        remaining &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return _bfs_mask(g.row_masks(), 1) == (1 << g.n) - 1


def metrics(g: Graph) -> GraphMetrics:
    """(min degree, max degree, connected flag, diameter).

    Diameter by all-pairs BFS; ``math.inf`` when disconnected.
    """
    if g.n < 1:
        raise ValueError("metrics requires at least one vertex")
    degs = g.degrees()
    rows = g.row_masks()
    full = (1 << g.n) - 1
    diameter = 0
    for v in range(g.n):
        seen = 1 << v
        frontier = seen
        dist = 0
        while True:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= rows[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            if not frontier:
                break
            seen |= frontier
            dist += 1
        if seen != full:
            return GraphMetrics(min(degs), max(degs), False, math.inf)
        diameter = max(diameter, dist)
    return GraphMetrics(min(degs), max(degs), True, float(diameter))


def are_twins(g: Graph, u: int, v: int) -> bool:
    """True iff N(u)=N(v) (open twins) or N[u]=N[v] (closed twins)."""
    if u == v:
        raise ValueError("twin test requires two distinct vertices")
    ru, rv = g.adj[u].mask, g.adj[v].mask
    if ru == rv:
        return True
    return ru | (1 << u) == rv | (1 << v)


def is_acyclic(g: Graph) -> bool:
    """True iff the graph is a forest (m = n - number of components)."""
    return g.m == g.n - len(connected_components(g))


def induced_subgraph(g: Graph, w: VertexSet) -> Graph:
    """Subgraph induced by ``w``, relabeled by ascending original id."""
    verts = list(w)
    if verts and verts[-1] >= g.n:
        raise ValueError("subset contains vertices outside the graph")
    index = {v: i for i, v in enumerate(verts)}
    masks = [0] * len(verts)
    wmask = w.mask
    for v in verts:
        row = g.adj[v].mask & wmask
        out = 0
        while row:
            low = row & -row
            out |= 1 << index[low.bit_length() - 1]
            row ^= low
        masks[index[v]] = out
    return graph_from_masks(len(verts), masks)


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """New graph with edge ``e`` removed; raises if ``e`` is absent."""
    u, v = Edge.of(*e)
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u},{v}) not in graph")
    masks = list(g.row_masks())
    masks[u] &= ~(1 << v)
    masks[v] &= ~(1 << u)
    return graph_from_masks(g.n, masks)
