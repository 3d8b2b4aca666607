"""Canonical labeling via iterated neighborhood refinement plus backtracking.

The canonical form of a graph is the lexicographically least relabeled
adjacency vector over a pruned search tree of individualize-refine steps.
Two graphs are isomorphic iff their canonical forms coincide.  The search
also collects automorphisms (leaves with equal codes), which both prune the
tree and feed the isomorph-free enumerator.  Correctness is cross-checked
in the tests against brute-force isomorphism over all n! bijections.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .graph6 import write_graph6
from .graphs import Graph


def refine_partition(n: int, adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Stable equitable refinement of an ordered partition.

    Cells split by the vector of neighbor counts into every current cell;
    sub-cells are ordered by signature, so the result is canonical for the
    input partition.
    """
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            # signature = per-cell neighbor counts packed into one int
            # (6 bits per count keeps the comparison lexicographic for n <= 62)
            buckets: dict[int, list[int]] = {}
            for v in cell:
                av = adj[v]
                key = 0
                for m in masks:
                    key = (key << 6) | (av & m).bit_count()
                b = buckets.get(key)
                if b is None:
                    buckets[key] = [v]
                else:
                    b.append(v)
            if len(buckets) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for key in sorted(buckets):
                    new_cells.append(buckets[key])
        cells = new_cells
        if not changed:
            return cells


def _leaf_code(n: int, adj: Sequence[int], order: list[int]) -> tuple[int, ...]:
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    code = []
    for v in order:
        row = adj[v]
        m = 0
        while row:
            low = row & -row
            m |= 1 << pos[low.bit_length() - 1]
            row ^= low
        code.append(m)
    return tuple(code)


def canonical_form(
    n: int, adj: Sequence[int], colors: Optional[Sequence[int]] = None
) -> tuple[tuple[int, ...], tuple[int, ...], list[tuple[int, ...]]]:
    """Return (canonical adjacency vector, old-to-new permutation, aut generators).

    ``colors`` (smaller value = earlier cell) constrains the labeling to
    color-preserving permutations; the empty generator list certifies a
    trivial (color-preserving) automorphism group, since pruning only ever
    uses previously recorded automorphisms.
    """
    if n == 0:
        return (), (), []
    if colors is None:
        cells = [list(range(n))]
    else:
        groups: dict[int, list[int]] = {}
        for v in range(n):
            groups.setdefault(colors[v], []).append(v)
        cells = [groups[c] for c in sorted(groups)]

    best_code: Optional[tuple[int, ...]] = None
    best_order: Optional[list[int]] = None
    gens: list[tuple[int, ...]] = []

    def record_automorphism(order: list[int]) -> None:
        sigma = [0] * n
        for i in range(n):
            sigma[best_order[i]] = order[i]
        if all(sigma[v] == v for v in range(n)):
            return
        # verify before trusting it for pruning
        for v in range(n):
            img = 0
            row = adj[v]
            while row:
                low = row & -row
                img |= 1 << sigma[low.bit_length() - 1]
                row ^= low
            if img != adj[sigma[v]]:
                raise AssertionError("leaf collision produced a non-automorphism")
        gens.append(tuple(sigma))

    def search(cells: list[list[int]], indiv: list[int]) -> None:
        nonlocal best_code, best_order
        cells = refine_partition(n, adj, cells)
        target = -1
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                target = i
                break
        if target == -1:
            order = [c[0] for c in cells]
            code = _leaf_code(n, adj, order)
            if best_code is None or code < best_code:
                best_code = code
                best_order = order
            elif code == best_code:
                record_automorphism(order)
            return
        cell = cells[target]
        prefix = cells[:target]
        suffix = cells[target + 1:]
        tried: list[int] = []
        for v in cell:
            if tried:
                # orbit pruning under recorded automorphisms fixing the path
                parent = list(range(n))

                def find(x: int) -> int:
                    while parent[x] != x:
                        parent[x] = parent[parent[x]]
                        x = parent[x]
                    return x

                for sigma in gens:
                    if all(sigma[u] == u for u in indiv):
                        for x in range(n):
                            rx, ry = find(x), find(sigma[x])
                            if rx != ry:
                                parent[rx] = ry
                rv = find(v)
                if any(find(t) == rv for t in tried):
                    continue
            rest = [w for w in cell if w != v]
            search(prefix + [[v], rest] + suffix, indiv + [v])
            tried.append(v)

    search(cells, [])
    assert best_order is not None
    perm = [0] * n
    for i, v in enumerate(best_order):
        perm[v] = i
    return best_code, tuple(perm), gens


def canonical_label(g: Graph, colors: Optional[Sequence[int]] = None) -> bytes:
    """Canonical byte string: equal for two graphs iff they are isomorphic."""
    code, _, _ = canonical_form(g.n, g.adj, colors)
    return bytes([g.n]) + b"".join(row.to_bytes(8, "little") for row in code)


def canonical_perm(g: Graph) -> tuple[int, ...]:
    _, perm, _ = canonical_form(g.n, g.adj)
    return perm


def automorphism_generators(g: Graph) -> list[tuple[int, ...]]:
    _, _, gens = canonical_form(g.n, g.adj)
    return gens


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    if sorted(a.bit_count() for a in g.adj) != sorted(a.bit_count() for a in h.adj):
        return False
    return canonical_label(g) == canonical_label(h)


def canonical_g6(g: Graph) -> str:
    """graph6 of the canonically relabeled graph (a per-class representative)."""
    return write_graph6(g.relabel(canonical_perm(g)))
