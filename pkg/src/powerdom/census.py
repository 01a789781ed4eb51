"""Small-graph corpora: exhaustive census up to isomorphism (n <= 7) and
seeded random samplers.

The canonical form of a graph is the minimum upper-triangle bit encoding
over all n! vertex permutations (no refinement heuristics), so it doubles as
an isomorphism oracle.  Isomorphism classes on k vertices are produced by
extending every class on k-1 vertices with one new vertex and deduplicating
canonical codes; every class arises this way because deleting a vertex of
any k-vertex graph lands in some (k-1)-class.
"""

from __future__ import annotations

import heapq
import random
from typing import Iterator

from powerdom import kernel
from powerdom.graph import Graph, build_graph, graph_from_masks, is_connected

#: Enumeration/isomorphism cap: n! permutations stay manageable through 7.
MAX_ENUM_N = 7

_perm_tables: dict[int, object] = {}
_class_codes: dict[int, tuple[int, ...]] = {}


def _table(n: int):
    if n not in _perm_tables:
        _perm_tables[n] = kernel.make_perm_table(n)
    return _perm_tables[n]


def canonical_code(g: Graph) -> int:
    """Minimum adjacency encoding of ``g`` over all vertex permutations."""
    if g.n > MAX_ENUM_N:
        raise ValueError(f"canonical form supported for n <= {MAX_ENUM_N}")
    return kernel.canonical_code(g.row_masks(), g.n, _table(g.n))


def graph_from_code(n: int, code: int) -> Graph:
    """Decode an upper-triangle encoding (column order, MSB first)."""
    nbits = n * (n - 1) // 2
    masks = [0] * n
    t = 0
    for j in range(1, n):
        for i in range(j):
            if (code >> (nbits - 1 - t)) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            t += 1
    return graph_from_masks(n, masks)


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n:
        return False
    if a.m != b.m or sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return canonical_code(a) == canonical_code(b)


def _codes_for_order(n: int) -> tuple[int, ...]:
    """Sorted canonical codes of all isomorphism classes on n vertices."""
    if n in _class_codes:
        return _class_codes[n]
    if n < 1 or n > MAX_ENUM_N:
        raise ValueError(f"census supports 1 <= n <= {MAX_ENUM_N}")
    if n == 1:
        codes: tuple[int, ...] = (0,)
    else:
        table = _table(n)
        parents = _codes_for_order(n - 1)
        seen = set()
        new = n - 1
        for pcode in parents:
            base = graph_from_code(n - 1, pcode).row_masks()
            for attach in range(1 << new):
                masks = list(base) + [attach]
                rest = attach
                while rest:
                    low = rest & -rest
                    rest ^= low
                    masks[low.bit_length() - 1] |= 1 << new
                seen.add(kernel.canonical_code(masks, n, table))
        codes = tuple(sorted(seen))
    _class_codes[n] = codes
    return codes


def all_graphs(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class on n vertices, in canonical
    code order; the representative is its own canonical labeling."""
    for code in _codes_for_order(n):
        yield graph_from_code(n, code)


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs."""
    for g in all_graphs(n):
        if is_connected(g):
            yield g


# ---------------------------------------------------------------------------
# Seeded random corpora


def random_tree(rng: random.Random, n: int) -> Graph:
    """Uniform random labeled tree via a random Pruefer sequence."""
    if n < 1:
        raise ValueError("tree needs n >= 1")
    if n == 1:
        return build_graph(1, ())
    if n == 2:
        return build_graph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    edges.append((u, w))
    return build_graph(n, edges)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    """G(n, p); may be disconnected."""
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return build_graph(n, edges)


def random_connected_graph(rng: random.Random, n: int, extra: float = 0.3) -> Graph:
    """Random spanning tree plus each non-tree pair with probability ``extra``."""
    tree = random_tree(rng, n)
    masks = list(tree.row_masks())
    for i in range(n):
        for j in range(i + 1, n):
            if not (masks[i] >> j) & 1 and rng.random() < extra:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return graph_from_masks(n, masks)
