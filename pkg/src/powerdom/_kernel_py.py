"""Pure-Python propagation/canonical-form kernels.

Fallback used when the compiled extension is unavailable.  Bitmasks are
plain ints; semantics must match ``_kernel_c`` exactly (the backends are
cross-checked in the test suite).
"""

from __future__ import annotations

from itertools import permutations
from typing import Sequence

BACKEND_NAME = "pure"


class ClosureKernel:
    """Coverage checks for one fixed graph, given as raw adjacency masks.

    Instances are immutable and safe to share across threads.
    """

    __slots__ = ("n", "rows", "closed", "full")

    def __init__(self, rows: Sequence[int], n: int) -> None:
        self.n = n
        self.rows = tuple(rows)
        self.closed = tuple(r | (1 << v) for v, r in enumerate(rows))
        self.full = (1 << n) - 1

    def closure(self, mask: int) -> int:
        """Fixpoint of the color change rule from initial black set ``mask``."""
        rows = self.rows
        full = self.full
        black = mask & full
        while True:
            add = 0
            todo = black
            while todo:
                low = todo & -todo
                todo ^= low
                w = rows[low.bit_length() - 1] & ~black
                if w and w & (w - 1) == 0:
                    add |= w
            if not add:
                return black
            black |= add

    def zf_covers(self, seed: tuple[int, ...]) -> bool:
        mask = 0
        for v in seed:
            mask |= 1 << v
        return self.closure(mask) == self.full

    def pd_covers(self, seed: tuple[int, ...]) -> bool:
        mask = 0
        closed = self.closed
        for v in seed:
            mask |= closed[v]
        return self.closure(mask) == self.full

    def dominates(self, seed: tuple[int, ...]) -> bool:
        mask = 0
        closed = self.closed
        for v in seed:
            mask |= closed[v]
        return mask == self.full


def make_perm_table(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(permutations(range(n)))


def canonical_code(rows: Sequence[int], n: int, table) -> int:
    """Minimum upper-triangle encoding over the given vertex permutations.

    Bit order matches graph6: pairs (0,1),(0,2),(1,2),(0,3),... with the
    first pair in the most significant position, so integer order equals
    lexicographic bitstring order.
    """
    nbits = n * (n - 1) // 2
    if nbits == 0:
        return 0
    # weight[i][j]: contribution of an edge between output slots i < j
    weight = [[0] * n for _ in range(n)]
    t = 0
    for j in range(1, n):
        for i in range(j):
            weight[i][j] = 1 << (nbits - 1 - t)
            weight[j][i] = weight[i][j]
            t += 1
    edges = []
    for u in range(n):
        rest = rows[u] >> (u + 1)
        v = u + 1
        while rest:
            if rest & 1:
                edges.append((u, v))
            rest >>= 1
            v += 1
    best = None
    for perm in table:
        code = 0
        for u, v in edges:
            code += weight[perm[u]][perm[v]]
        if best is None or code < best:
            best = code
    return best if best is not None else 0
