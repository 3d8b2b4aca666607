"""Immutable simple undirected graphs with bitset adjacency.

Vertices are 0..n-1 and each neighborhood is stored as an int bitmask, so
degree, common-neighborhood and containment tests reduce to integer
arithmetic.  Everything here is a pure function over immutable values; the
62-vertex cap keeps every graph expressible as a one-byte-order graph6 line.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 62


class UnsupportedOrder(ValueError):
    """Raised for graphs outside the supported 0..62 vertex range."""


class Graph:
    """A simple undirected graph on vertices 0..n-1.

    ``adj[v]`` is the neighborhood of ``v`` as a bitmask.  Instances are
    immutable and hashable; equality is labeled equality (use
    :func:`linforest.canon.are_isomorphic` for unlabeled comparison).
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0 or n > MAX_VERTICES:
            raise UnsupportedOrder(f"order {n} outside supported range 0..{MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for order {n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))

    @classmethod
    def from_adj(cls, adj: Sequence[int]) -> "Graph":
        """Wrap a prebuilt adjacency tuple (trusted: symmetric, loop-free)."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", len(adj))
        object.__setattr__(g, "adj", tuple(adj))
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={sorted(self.edges())})"

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(a.bit_count() for a in self.adj)

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def min_degree(self) -> int:
        return min((a.bit_count() for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            row = self.adj[v] >> (v + 1) << (v + 1)
            while row:
                low = row & -row
                yield (v, low.bit_length() - 1)
                row ^= low

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex v renamed to perm[v]."""
        adj = [0] * self.n
        for v in range(self.n):
            row = self.adj[v]
            m = 0
            while row:
                low = row & -row
                m |= 1 << perm[low.bit_length() - 1]
                row ^= low
            adj[perm[v]] = m
        return Graph.from_adj(adj)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, vertices renumbered in ascending order."""
        vs = sorted(vertices)
        index = {v: i for i, v in enumerate(vs)}
        adj = [0] * len(vs)
        for i, v in enumerate(vs):
            row = self.adj[v]
            m = 0
            for u in vs:
                if row >> u & 1:
                    m |= 1 << index[u]
            adj[i] = m
        return Graph.from_adj(adj)


def bits(mask: int) -> Iterator[int]:
    """Iterate set bit positions of a mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def degree_profile(g: Graph) -> tuple[tuple[int, ...], int, int]:
    """Return (non-increasing degree sequence, minimum degree, edge count)."""
    degs = g.degrees()
    e = sum(degs) // 2
    return tuple(sorted(degs, reverse=True)), (min(degs) if degs else 0), e


# ---------------------------------------------------------------------------
# assembly primitives

def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete(n: int) -> Graph:
    if n > MAX_VERTICES:
        raise UnsupportedOrder(f"order {n} exceeds {MAX_VERTICES}")
    full = (1 << n) - 1
    return Graph.from_adj([full ^ (1 << v) for v in range(n)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    total = sum(p.n for p in parts)
    if total > MAX_VERTICES:
        raise UnsupportedOrder(f"union order {total} exceeds {MAX_VERTICES}")
    adj: list[int] = []
    offset = 0
    for p in parts:
        adj.extend(a << offset for a in p.adj)
        offset += p.n
    return Graph.from_adj(adj)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two parts."""
    u = disjoint_union([g, h])
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    adj = [(a | hmask) if v < g.n else (a | gmask) for v, a in enumerate(u.adj)]
    return Graph.from_adj(adj)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph.from_adj([(full ^ a) & ~(1 << v) for v, a in enumerate(g.adj)])


def copies(k: int, g: Graph) -> Graph:
    return disjoint_union([g] * k)


# ---------------------------------------------------------------------------
# connectivity and block structure

def _component_mask(adj: Sequence[int], start: int, allowed: int) -> int:
    """Bitmask of the component of `start` inside the `allowed` vertex mask."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    full = (1 << g.n) - 1
    return _component_mask(g.adj, 0, full) == full


def components(g: Graph) -> list[int]:
    """Vertex masks of the connected components, ordered by least vertex."""
    full = (1 << g.n) - 1
    out = []
    rest = full
    while rest:
        start = (rest & -rest).bit_length() - 1
        comp = _component_mask(g.adj, start, rest)
        out.append(comp)
        rest &= ~comp
    return out


@dataclass(frozen=True)
class BlockDecomposition:
    """Cut vertices and blocks (maximal 2-connected pieces, bridges, isolated
    vertices), each block a vertex bitmask.  ``end_blocks`` are the blocks
    containing exactly one cut vertex."""

    cut_vertices: int
    blocks: tuple[int, ...]
    end_blocks: tuple[int, ...]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Iterative DFS-lowpoint block decomposition.

    Every edge lies in exactly one block; a vertex is a cut vertex iff it
    lies in at least two blocks.  Isolated vertices become singleton blocks.
    """
    n = g.n
    adj = g.adj
    num = [-1] * n
    low = [0] * n
    cut = 0
    blocks: list[int] = []
    edge_stack: list[tuple[int, int]] = []
    counter = 0
    for root in range(n):
        if num[root] != -1:
            continue
        if adj[root] == 0:
            blocks.append(1 << root)
            continue
        # iterative DFS with per-vertex neighbor cursors
        num[root] = low[root] = counter
        counter += 1
        stack = [(root, -1, list(bits(adj[root])), 0)]
        root_children = 0
        while stack:
            v, parent, nbrs, idx = stack.pop()
            if idx < len(nbrs):
                w = nbrs[idx]
                stack.append((v, parent, nbrs, idx + 1))
                if w == parent:
                    continue
                if num[w] == -1:
                    edge_stack.append((v, w))
                    num[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, list(bits(adj[w])), 0))
                elif num[w] < num[v]:
                    edge_stack.append((v, w))
                    if num[w] < low[v]:
                        low[v] = num[w]
            else:
                # post-visit: fold lowpoint into parent, pop finished block
                if parent != -1:
                    if low[v] < low[parent]:
                        low[parent] = low[v]
                    if low[v] >= num[parent]:
                        if parent == root:
                            root_children += 1
                        mask = 0
                        while True:
                            a, b = edge_stack.pop()
                            mask |= (1 << a) | (1 << b)
                            if (a, b) == (parent, v):
                                break
                        blocks.append(mask)
                        if parent != root:
                            cut |= 1 << parent
        if root_children >= 2:
            cut |= 1 << root
    end_blocks = tuple(b for b in blocks if (b & cut).bit_count() == 1)
    return BlockDecomposition(cut_vertices=cut, blocks=tuple(blocks), end_blocks=end_blocks)


def is_two_connected(g: Graph) -> bool:
    """n >= 3, connected, and without cut vertices."""
    if g.n < 3 or not is_connected(g):
        return False
    return block_decomposition(g).cut_vertices == 0


def has_cut_vertex(g: Graph) -> bool:
    return block_decomposition(g).cut_vertices != 0


@dataclass(frozen=True)
class ConnectivityReport:
    is_connected: bool
    is_two_connected: bool
    blocks: BlockDecomposition


def connectivity_report(g: Graph) -> ConnectivityReport:
    conn = is_connected(g)
    dec = block_decomposition(g)
    return ConnectivityReport(
        is_connected=conn,
        is_two_connected=conn and g.n >= 3 and dec.cut_vertices == 0,
        blocks=dec,
    )


class NotEndBlock(ValueError):
    """Raised when a block handed to block_path_order is not an end block."""


def block_path_order(g: Graph, b1: int, b2: int) -> int:
    """Order of a longest path in G between the cut vertices of two end blocks.

    ``b1`` and ``b2`` are vertex masks of distinct end blocks; returns 1 when
    they share their cut vertex.
    """
    dec = block_decomposition(g)
    if b1 not in dec.end_blocks or b2 not in dec.end_blocks or b1 == b2:
        raise NotEndBlock("arguments must be two distinct end blocks of g")
    u1 = next(bits(b1 & dec.cut_vertices))
    u2 = next(bits(b2 & dec.cut_vertices))
    if u1 == u2:
        return 1
    # exhaustive DFS over u1..u2 paths; graphs at this scale are tiny
    best = 0
    adj = g.adj
    stack = [(u1, 1 << u1, 1)]
    while stack:
        v, used, length = stack.pop()
        if v == u2:
            if length > best:
                best = length
            continue
        for w in bits(adj[v] & ~used):
            stack.append((w, used | (1 << w), length + 1))
    return best
