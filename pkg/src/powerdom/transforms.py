"""The four one-graph transformations (Mycielskian, shadow, central, middle)
plus the Cartesian product.

Vertex id conventions, fixed so witnesses are reproducible:
  mycielskian: originals 0..n-1, shadow of v_i is n+i, apex is 2n.
  shadow:      originals 0..n-1, shadow of v_i is n+i.
  central:     originals 0..n-1, then one subdivision vertex per edge in
               sorted normalized edge order (edge k maps to vertex n+k).
  middle:      originals 0..n-1, then one edge-vertex per edge, same order.
  cartesian_product: pair (x, y) maps to x * n_b + y.

All transforms accept disconnected input.
"""

from __future__ import annotations

from powerdom.graph import Graph, graph_from_masks


def mycielskian(g: Graph) -> Graph:
    """mu(G): order 2n+1, size 3m+n; apex adjacent to the n shadows."""
    n = g.n
    rows = g.row_masks()
    masks = [0] * (2 * n + 1)
    apex = 2 * n
    for v in range(n):
        # original keeps its edges and gains the shadows of its neighbors
        masks[v] = rows[v] | (rows[v] << n)
        # shadow of v sees the neighbors of v plus the apex
        masks[n + v] = rows[v] | (1 << apex)
        masks[apex] |= 1 << (n + v)
    return graph_from_masks(2 * n + 1, masks)


def shadow(g: Graph) -> Graph:
    """S(G): order 2n, size 3m; shadow n+i joined to the G-neighbors of i."""
    n = g.n
    rows = g.row_masks()
    masks = [0] * (2 * n)
    for v in range(n):
        masks[v] = rows[v]
        masks[n + v] = rows[v]
    for v in range(n):
        nbrs = rows[v]
        while nbrs:
            low = nbrs & -nbrs
            nbrs ^= low
            masks[low.bit_length() - 1] |= 1 << (n + v)
    return graph_from_masks(2 * n, masks)


def central(g: Graph) -> Graph:
    """C(G): subdivide every edge once, then join all non-adjacent original
    pairs.  Order n+m, size C(n,2)+m."""
    n = g.n
    rows = g.row_masks()
    edges = g.edges()
    masks = [0] * (n + len(edges))
    full_orig = (1 << n) - 1
    for v in range(n):
        masks[v] = full_orig & ~rows[v] & ~(1 << v)
    for k, (u, v) in enumerate(edges):
        s = n + k
        masks[s] = (1 << u) | (1 << v)
        masks[u] |= 1 << s
        masks[v] |= 1 << s
    return graph_from_masks(n + len(edges), masks)


def middle(g: Graph) -> Graph:
    """M(G): vertices V plus E; edge-vertices adjacent when the edges share
    an endpoint, and to their two endpoints.  No original-original edges."""
    n = g.n
    edges = g.edges()
    m = len(edges)
    masks = [0] * (n + m)
    incident = [0] * n  # vertex -> bitmask of incident edge indices
    for k, (u, v) in enumerate(edges):
        s = n + k
        masks[s] |= (1 << u) | (1 << v)
        masks[u] |= 1 << s
        masks[v] |= 1 << s
        incident[u] |= 1 << k
        incident[v] |= 1 << k
    for k, (u, v) in enumerate(edges):
        others = (incident[u] | incident[v]) & ~(1 << k)
        masks[n + k] |= others << n
    return graph_from_masks(n + m, masks)


def cartesian_product(a: Graph, b: Graph) -> Graph:
    """A box B: (x,y) ~ (x',y') iff x=x' and y~y', or y=y' and x~x'."""
    na, nb = a.n, b.n
    arows = a.row_masks()
    brows = b.row_masks()
    masks = [0] * (na * nb)
    for x in range(na):
        for y in range(nb):
            vid = x * nb + y
            masks[vid] |= brows[y] << (x * nb)
            col = arows[x]
            while col:
                low = col & -col
                col ^= low
                masks[vid] |= 1 << ((low.bit_length() - 1) * nb + y)
    return graph_from_masks(na * nb, masks)
