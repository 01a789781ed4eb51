"""Named graph families: paths, cycles, complete (multipartite) graphs,
stars, wheels, spiders and the H-graph.

Vertex labeling is fixed per family so witnesses stay reproducible:
path/cycle vertices run 0..n-1 in order, the star and wheel hub is vertex 0,
multipartite parts occupy consecutive id blocks in ascending part-size order,
and spider legs are laid out one after another behind center 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from powerdom.graph import Graph, build_graph

FAMILY_KINDS = (
    "path",
    "cycle",
    "complete",
    "star",
    "kpartite",
    "wheel",
    "hgraph",
    "spider",
)

#: Edge set of the H-graph: two adjacent degree-3 centers (1 and 4), four leaves.
H_GRAPH_EDGES = ((0, 1), (1, 2), (3, 4), (4, 5), (1, 4))


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its integer parameters, e.g. kpartite(3, 3, 4)."""

    kind: str
    params: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family {self.kind!r}")
        if any(p < 1 for p in self.params):
            raise ValueError(f"family parameters must be >= 1: {self.params}")

    def __str__(self) -> str:
        if not self.params:
            return self.kind
        return f"{self.kind}:{','.join(str(p) for p in self.params)}"


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return build_graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return build_graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return build_graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def star(n: int) -> Graph:
    """K_{1,n-1}: hub 0 joined to n-1 leaves (order-n convention)."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    return build_graph(n, ((0, i) for i in range(1, n)))


def complete_multipartite(sizes: tuple[int, ...]) -> Graph:
    """Complete multipartite graph; parts must be sorted ascending."""
    if not sizes:
        raise ValueError("at least one part required")
    if any(s < 1 for s in sizes):
        raise ValueError("part sizes must be >= 1")
    if list(sizes) != sorted(sizes):
        raise ValueError(f"part sizes must be sorted ascending: {sizes}")
    starts = [0]
    for s in sizes:
        starts.append(starts[-1] + s)
    n = starts[-1]
    edges = []
    for a in range(len(sizes)):
        for b in range(a + 1, len(sizes)):
            for u in range(starts[a], starts[a + 1]):
                for v in range(starts[b], starts[b + 1]):
                    edges.append((u, v))
    return build_graph(n, edges)


def multipartite_parts(sizes: tuple[int, ...]) -> list[range]:
    """Vertex id blocks of complete_multipartite(sizes), in part order."""
    starts = [0]
    for s in sizes:
        starts.append(starts[-1] + s)
    return [range(starts[i], starts[i + 1]) for i in range(len(sizes))]


def wheel(n: int) -> Graph:
    """W_n: hub 0 joined to the cycle 1..n-1 (total order n)."""
    if n < 4:
        raise ValueError("wheel needs n >= 4")
    rim = [(1 + i, 1 + (i + 1) % (n - 1)) for i in range(n - 1)]
    hub = [(0, i) for i in range(1, n)]
    return build_graph(n, rim + hub)


def h_graph() -> Graph:
    return build_graph(6, H_GRAPH_EDGES)


def spider(legs: tuple[int, ...]) -> Graph:
    """Center 0 with one pendant path of ``leg`` vertices per leg length."""
    if not legs:
        raise ValueError("spider needs at least one leg")
    if any(l < 1 for l in legs):
        raise ValueError("leg lengths must be >= 1")
    edges = []
    nxt = 1
    for leg in legs:
        prev = 0
        for _ in range(leg):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_graph(nxt, edges)


def make_family(spec: FamilySpec) -> Graph:
    """Construct the graph described by ``spec``."""
    kind, params = spec.kind, spec.params

    def one_param() -> int:
        if len(params) != 1:
            raise ValueError(f"{kind} takes exactly one parameter")
        return params[0]

    if kind == "path":
        return path(one_param())
    if kind == "cycle":
        return cycle(one_param())
    if kind == "complete":
        return complete(one_param())
    if kind == "star":
        return star(one_param())
    if kind == "kpartite":
        return complete_multipartite(params)
    if kind == "wheel":
        return wheel(one_param())
    if kind == "hgraph":
        if params:
            raise ValueError("hgraph takes no parameters")
        return h_graph()
    if kind == "spider":
        return spider(params)
    raise ValueError(f"unknown family {kind!r}")
