"""Exact minimum solvers for the six invariants: power domination, zero
forcing, domination, edge domination, path cover and spider number.

Subset solvers enumerate candidates by ascending cardinality and, within a
cardinality, in lexicographic order; the first success is therefore the
lexicographically least minimum witness.  The candidate test is delegated to
the active closure kernel, so one solve may issue hundreds of thousands of
closure runs.

The optional dominance prune for power domination and domination skips a
vertex u whenever some v < u has N[u] ⊆ N[v].  Swapping u for v can only
grow N[S] and lands on a lexicographically smaller set, so the least minimum
witness never contains a pruned vertex and the prune changes neither values
nor witnesses.  It can be disabled for A/B runs.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations, islice
from typing import Callable, Iterable, Optional, Sequence, Union

from powerdom.graph import (
    Edge,
    Graph,
    VertexSet,
    connected_components,
    induced_subgraph,
    is_acyclic,
    is_connected,
)
from powerdom.kernel import ClosureKernel

GAMMA_P_CAP = 40
DOMINATION_CAP = 40
ZERO_FORCING_CAP = 24
EDGE_DOMINATION_CAP = 28
PARTITION_CAP = 14

_CHUNK = 4096


class CapExceeded(ValueError):
    """Raised when a solver is asked for a graph beyond its size cap."""


Witness = Union[VertexSet, tuple[Edge, ...], tuple[VertexSet, ...]]


@dataclass(frozen=True)
class InvariantResult:
    value: int
    witness: Witness
    tested: int
    elapsed: float


def _scan_chunk(batch: list[tuple[int, ...]], accept) -> Optional[tuple[int, tuple[int, ...]]]:
    for i, combo in enumerate(batch):
        if accept(combo):
            return i, combo
    return None


def _first_accepted(
    candidates: Sequence[int],
    accept: Callable[[tuple[int, ...]], bool],
    threads: int,
) -> tuple[tuple[int, ...], int]:
    """First combination accepted, scanning (cardinality, lex) ascending.

    Returns the combination and the number of candidates examined up to and
    including it (in lexicographic position, independent of thread count).
    Candidate shards are consumed in submission order, so a hit in a later
    shard never outruns earlier shards.
    """
    tested = 0
    for k in range(1, len(candidates) + 1):
        gen = combinations(candidates, k)
        if threads <= 1:
            pos = 0
            for combo in gen:
                pos += 1
                if accept(combo):
                    return combo, tested + pos
            tested += pos
            continue
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = []
            consumed = 0
            hit = None
            while True:
                while len(futures) < 2 * threads:
                    batch = list(islice(gen, _CHUNK))
                    if not batch:
                        break
                    futures.append((len(batch), pool.submit(_scan_chunk, batch, accept)))
                if not futures:
                    break
                size, fut = futures.pop(0)
                result = fut.result()
                if result is not None:
                    hit = (consumed + result[0] + 1, result[1])
                    for _, f in futures:
                        f.cancel()
                    break
                consumed += size
            if hit is not None:
                return hit[1], tested + hit[0]
            tested += consumed
    raise RuntimeError("search exhausted without a solution")  # pragma: no cover


def _pruned_candidates(closed: Sequence[int], n: int) -> list[int]:
    keep = []
    for u in range(n):
        cu = closed[u]
        if any(cu & ~closed[v] == 0 for v in range(u)):
            continue
        keep.append(u)
    return keep


def _solve_components(
    g: Graph,
    solve_one: Callable[[Graph], tuple[int, tuple[int, ...], int]],
) -> tuple[int, VertexSet, int]:
    """Run a per-component vertex-subset solver and merge the results."""
    comps = connected_components(g)
    if len(comps) == 1:
        value, combo, tested = solve_one(g)
        return value, VertexSet(combo), tested
    total = 0
    tested = 0
    witness_mask = 0
    for comp in comps:
        sub = induced_subgraph(g, comp)
        ids = list(comp)
        value, combo, t = solve_one(sub)
        total += value
        tested += t
        for local in combo:
            witness_mask |= 1 << ids[local]
    return total, VertexSet.from_mask(witness_mask), tested


def gamma_p(g: Graph, *, prune: bool = True, threads: int = 1) -> InvariantResult:
    """Power domination number: minimum S with cl(N[S]) = V."""
    if g.n < 1:
        raise ValueError("power domination needs at least one vertex")
    if g.n > GAMMA_P_CAP:
        raise CapExceeded(f"gamma_p cap is {GAMMA_P_CAP} vertices (got {g.n})")
    start = time.perf_counter()

    def solve_one(sub: Graph) -> tuple[int, tuple[int, ...], int]:
        kern = ClosureKernel(sub.row_masks(), sub.n)
        if prune:
            closed = [r | (1 << v) for v, r in enumerate(sub.row_masks())]
            cands = _pruned_candidates(closed, sub.n)
        else:
            cands = list(range(sub.n))
        combo, tested = _first_accepted(cands, kern.pd_covers, threads)
        return len(combo), combo, tested

    value, witness, tested = _solve_components(g, solve_one)
    return InvariantResult(value, witness, tested, time.perf_counter() - start)


def domination_number(g: Graph, *, prune: bool = True, threads: int = 1) -> InvariantResult:
    """Domination number: minimum D with N[D] = V."""
    if g.n < 1:
        raise ValueError("domination needs at least one vertex")
    if g.n > DOMINATION_CAP:
        raise CapExceeded(f"domination cap is {DOMINATION_CAP} vertices (got {g.n})")
    start = time.perf_counter()

    def solve_one(sub: Graph) -> tuple[int, tuple[int, ...], int]:
        kern = ClosureKernel(sub.row_masks(), sub.n)
        if prune:
            closed = [r | (1 << v) for v, r in enumerate(sub.row_masks())]
            cands = _pruned_candidates(closed, sub.n)
        else:
            cands = list(range(sub.n))
        combo, tested = _first_accepted(cands, kern.dominates, threads)
        return len(combo), combo, tested

    value, witness, tested = _solve_components(g, solve_one)
    return InvariantResult(value, witness, tested, time.perf_counter() - start)


def zero_forcing_number(g: Graph, *, threads: int = 1) -> InvariantResult:
    """Zero forcing number: minimum U with cl(U) = V."""
    if g.n < 1:
        raise ValueError("zero forcing needs at least one vertex")
    if g.n > ZERO_FORCING_CAP:
        raise CapExceeded(f"zero forcing cap is {ZERO_FORCING_CAP} vertices (got {g.n})")
    start = time.perf_counter()

    def solve_one(sub: Graph) -> tuple[int, tuple[int, ...], int]:
        kern = ClosureKernel(sub.row_masks(), sub.n)
        combo, tested = _first_accepted(list(range(sub.n)), kern.zf_covers, threads)
        return len(combo), combo, tested

    value, witness, tested = _solve_components(g, solve_one)
    return InvariantResult(value, witness, tested, time.perf_counter() - start)


def edge_domination_number(g: Graph, *, threads: int = 1) -> InvariantResult:
    """Edge domination number: minimum F ⊆ E meeting or touching every edge.

    Solved as closed domination on the line graph; the witness is a tuple of
    normalized edges, ascending.
    """
    edges = g.edges()
    m = len(edges)
    if m > EDGE_DOMINATION_CAP:
        raise CapExceeded(f"edge domination cap is {EDGE_DOMINATION_CAP} edges (got {m})")
    start = time.perf_counter()
    if m == 0:
        return InvariantResult(0, (), 0, time.perf_counter() - start)
    incident = [0] * g.n
    for k, (u, v) in enumerate(edges):
        incident[u] |= 1 << k
        incident[v] |= 1 << k
    lrows = []
    for k, (u, v) in enumerate(edges):
        lrows.append((incident[u] | incident[v]) & ~(1 << k))
    kern = ClosureKernel(lrows, m)
    combo, tested = _first_accepted(list(range(m)), kern.dominates, threads)
    witness = tuple(edges[k] for k in combo)
    return InvariantResult(len(combo), witness, tested, time.perf_counter() - start)


# ---------------------------------------------------------------------------
# Partition solvers (induced path cover, spider partition)


def _induced_degree(rows: Sequence[int], mask: int, v: int) -> int:
    return (rows[v] & mask).bit_count()


def _valid_parts_through(
    rows: Sequence[int],
    allowed: int,
    v: int,
    max_high_degree: int,
) -> Iterable[int]:
    """Connected subsets of ``allowed`` containing ``v`` whose induced graph
    is acyclic with at most ``max_high_degree`` vertices of degree >= 3.

    max_high_degree=0 yields induced paths, 1 yields spiders.  Enumeration
    order is deterministic (branch on the least frontier vertex, include
    before exclude).
    """

    def grow(part: int, edges: int, high: int, banned: int):
        yield part
        frontier = 0
        p = part
        while p:
            low = p & -p
            p ^= low
            frontier |= rows[low.bit_length() - 1]
        frontier &= allowed & ~part & ~banned
        local_ban = 0
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            u = low.bit_length() - 1
            new_part = part | low
            added = (rows[u] & part).bit_count()
            new_edges = edges + added
            # a cycle appears exactly when the new vertex touches >= 2 part vertices
            if new_edges >= new_part.bit_count():
                local_ban |= low
                continue
            new_high = high + (1 if added >= 3 else 0)
            nb = rows[u] & part
            while nb:
                nlow = nb & -nb
                nb ^= nlow
                w = nlow.bit_length() - 1
                if _induced_degree(rows, new_part, w) == 3:
                    new_high += 1
            if new_high > max_high_degree:
                local_ban |= low
                continue
            yield from grow(new_part, new_edges, new_high, banned | local_ban)
            local_ban |= low

    yield from grow(1 << v, 0, 0, 0)


def _min_partition(
    g: Graph, max_high_degree: int
) -> tuple[int, tuple[VertexSet, ...], int]:
    rows = g.row_masks()
    full = (1 << g.n) - 1
    lower = len(connected_components(g)) if g.n else 0
    tested = 0

    def cover(mask: int, budget: int, failed: set[tuple[int, int]]) -> Optional[list[int]]:
        nonlocal tested
        if mask == 0:
            return []
        if budget == 0 or (mask, budget) in failed:
            return None
        v = (mask & -mask).bit_length() - 1
        for part in _valid_parts_through(rows, mask, v, max_high_degree):
            tested += 1
            rest = cover(mask & ~part, budget - 1, failed)
            if rest is not None:
                return [part] + rest
        failed.add((mask, budget))
        return None

    if g.n == 0:
        return 0, (), 0
    budget = max(lower, 1)
    while True:
        parts = cover(full, budget, set())
        if parts is not None:
            return budget, tuple(VertexSet.from_mask(p) for p in parts), tested
        budget += 1


def path_cover_number(g: Graph) -> InvariantResult:
    """Minimum number of parts in a partition of V into induced paths."""
    if g.n > PARTITION_CAP:
        raise CapExceeded(f"path cover cap is {PARTITION_CAP} vertices (got {g.n})")
    start = time.perf_counter()
    value, parts, tested = _min_partition(g, max_high_degree=0)
    return InvariantResult(value, parts, tested, time.perf_counter() - start)


def is_spider(t: Graph) -> bool:
    """A tree with at most one vertex of degree >= 3 (paths included)."""
    if t.n == 0 or not is_connected(t) or not is_acyclic(t):
        return False
    return sum(1 for d in t.degrees() if d >= 3) <= 1


def spider_number(t: Graph) -> InvariantResult:
    """Minimum partition of a tree's vertices into spider-inducing subsets."""
    if t.n < 1 or not (is_connected(t) and is_acyclic(t)):
        raise ValueError("spider number is defined for trees only")
    if t.n > PARTITION_CAP:
        raise CapExceeded(f"spider number cap is {PARTITION_CAP} vertices (got {t.n})")
    start = time.perf_counter()
    value, parts, tested = _min_partition(t, max_high_degree=1)
    return InvariantResult(value, parts, tested, time.perf_counter() - start)
