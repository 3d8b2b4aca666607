"""Exact subgraph decision procedures.

All searches are exhaustive backtracking over bitmask state with
reachability pruning: linear-forest containment (with re-checkable
certificates), longest path (optionally anchored), longest cycle, generic
monomorphism, and a common-neighborhood finder.  No heuristics: every
"no" answer is a proof at these orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Optional, Sequence

from .forests import LinearForest
from .graphs import Graph, bits


@dataclass(frozen=True)
class EmbeddingCertificate:
    """One vertex sequence per component of the target forest."""

    paths: tuple[tuple[int, ...], ...]

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.paths]


def validate_certificate(g: Graph, forest: LinearForest, cert: EmbeddingCertificate) -> bool:
    """Independent linear-time re-check of an embedding certificate."""
    if sorted(len(p) for p in cert.paths) != sorted(forest.orders):
        return False
    seen: set[int] = set()
    for p in cert.paths:
        for v in p:
            if v in seen or not 0 <= v < g.n:
                return False
            seen.add(v)
        for a, b in zip(p, p[1:]):
            if not g.has_edge(a, b):
                return False
    return True


def _reach_mask(adj: Sequence[int], start_mask: int, allowed: int) -> int:
    seen = start_mask
    frontier = start_mask
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def contains_linear_forest(g: Graph, forest: LinearForest) -> Optional[EmbeddingCertificate]:
    """Embed the forest as a (not necessarily induced) subgraph, or prove absence.

    Components are placed longest first; start vertices are tried by
    descending degree (ties by index); equal-order components are forced to
    use strictly increasing minimum vertices, which removes the component
    permutation symmetry without losing any embedding.
    """
    orders = forest.orders
    n = g.n
    if sum(orders) > n:
        return None
    adj = g.adj
    full = (1 << n) - 1
    start_rank = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))
    placed: list[tuple[int, ...]] = []

    def place(idx: int, used: int, prev_min: int) -> bool:
        if idx == len(orders):
            return True
        t = orders[idx]
        avail = full & ~used
        if idx > 0 and orders[idx - 1] == t:
            # symmetry break: this component lives strictly above prev_min
            avail &= full << (prev_min + 1)
        if avail.bit_count() < t:
            return False
        prefix: list[int] = []

        def build(v: int, pused: int) -> bool:
            prefix.append(v)
            if len(prefix) == t:
                placed.append(tuple(prefix))
                if place(idx + 1, used | pused, min(prefix)):
                    return True
                placed.pop()
                prefix.pop()
                return False
            remaining = t - len(prefix)
            cand = adj[v] & avail & ~pused
            if remaining >= 2:
                reach = _reach_mask(adj, cand, avail & ~pused)
                if reach.bit_count() < remaining:
                    prefix.pop()
                    return False
            for w in bits(cand):
                if build(w, pused | (1 << w)):
                    return True
            prefix.pop()
            return False

        for s in start_rank:
            if avail >> s & 1 and build(s, 1 << s):
                return True
        return False

    if place(0, 0, -1):
        return EmbeddingCertificate(paths=tuple(placed))
    return None


def contains_linear_forest_naive(g: Graph, forest: LinearForest) -> bool:
    """Reference oracle: enumerate every injection of the forest's vertices."""
    orders = forest.orders
    m = sum(orders)
    if m > g.n:
        return False
    adj = g.adj
    cuts = []
    pos = 0
    for t in orders:
        cuts.append((pos, pos + t))
        pos += t
    for perm in permutations(range(g.n), m):
        ok = True
        for lo, hi in cuts:
            for i in range(lo, hi - 1):
                if not adj[perm[i]] >> perm[i + 1] & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def longest_path(
    g: Graph, anchor: Optional[int] = None, stop_at: Optional[int] = None
) -> tuple[int, tuple[int, ...]]:
    """Exact maximum path order (and witness), DFS with reachability bounds.

    With ``anchor`` the path must end at that vertex.  ``stop_at`` allows the
    search to return as soon as a path of that order is found (the returned
    value is then a lower bound that is >= stop_at).  Candidates extend
    fewest-options-first, which finds near-Hamiltonian paths quickly.
    """
    n = g.n
    if n == 0:
        return 0, ()
    adj = g.adj
    full = (1 << n) - 1
    cap = n if stop_at is None else min(stop_at, n)
    best = 0
    best_seq: tuple[int, ...] = ()
    if anchor is not None:
        starts = [anchor]
    else:
        starts = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))
    seq: list[int] = []

    def dfs(v: int, used: int, length: int) -> bool:
        nonlocal best, best_seq
        if length > best:
            best = length
            best_seq = tuple(seq)
            if best >= cap:
                return True
        free = full & ~used
        if length + free.bit_count() <= best:
            return False
        cand = adj[v] & free
        if not cand:
            return False
        if best - length >= 2:
            # reachable-from-v bound, inline BFS over the free vertices
            seen = 1 << v
            frontier = seen
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    low = f & -f
                    nxt |= adj[low.bit_length() - 1]
                    f ^= low
                frontier = nxt & free & ~seen
                seen |= frontier
            if length + (seen & free).bit_count() <= best:
                return False
        if cand & (cand - 1):
            keyed = []
            c = cand
            while c:
                low = c & -c
                w = low.bit_length() - 1
                keyed.append(((adj[w] & free).bit_count() << 6) | w)
                c ^= low
            keyed.sort()
            ws = [x & 63 for x in keyed]
        else:
            ws = (cand.bit_length() - 1,)
        for w in ws:
            seq.append(w)
            if dfs(w, used | (1 << w), length + 1):
                return True
            seq.pop()
        return False

    for s in starts:
        seq = [s]
        if dfs(s, 1 << s, 1):
            break
    if anchor is not None:
        best_seq = tuple(reversed(best_seq))
    return best, best_seq


def has_path_of_order(g: Graph, t: int, anchor: Optional[int] = None) -> bool:
    if t <= 0:
        return True
    order, _ = longest_path(g, anchor=anchor, stop_at=t)
    return order >= t


def longest_cycle_witness(g: Graph, stop_at: Optional[int] = None) -> tuple[int, tuple[int, ...]]:
    """Exact circumference with a witness cycle (0 and () for forests).

    Cycles are searched through their minimum vertex so each cycle is
    considered once; ``stop_at`` permits early exit for decision queries.
    """
    n = g.n
    adj = g.adj
    best = 0
    best_cyc: tuple[int, ...] = ()
    cap = n if stop_at is None else min(stop_at, n)
    seq: list[int] = []

    def dfs(s: int, v: int, used: int, length: int, allowed: int) -> bool:
        nonlocal best, best_cyc
        if length >= 3 and adj[v] >> s & 1 and length > best:
            best = length
            best_cyc = tuple(seq)
            if best >= cap:
                return True
        free = allowed & ~used
        # must stay able to return to s; inline BFS over free + {s}
        scope = free | (1 << s)
        seen = 1 << v
        frontier = seen
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & scope & ~seen
            seen |= frontier
        if not seen >> s & 1:
            return False
        if length + (seen & free).bit_count() <= best:
            return False
        cand = adj[v] & free
        if cand & (cand - 1):
            keyed = []
            c = cand
            while c:
                low = c & -c
                w = low.bit_length() - 1
                keyed.append(((adj[w] & free).bit_count() << 6) | w)
                c ^= low
            keyed.sort()
            ws = [x & 63 for x in keyed]
        elif cand:
            ws = (cand.bit_length() - 1,)
        else:
            ws = ()
        for w in ws:
            seq.append(w)
            if dfs(s, w, used | (1 << w), length + 1, allowed):
                return True
            seq.pop()
        return False

    full = (1 << n) - 1
    for s in range(n):
        if best >= cap:
            break
        allowed = full >> s << s  # vertices >= s only
        seq = [s]
        dfs(s, s, 1 << s, 1, allowed)
    return best, best_cyc


def longest_cycle(g: Graph) -> int:
    return longest_cycle_witness(g)[0]


def has_cycle_of_length_at_least(g: Graph, t: int) -> bool:
    if t <= 0:
        return True
    length, _ = longest_cycle_witness(g, stop_at=t)
    return length >= t


class OrderMismatch(ValueError):
    """Raised when the pattern graph has more vertices than the host."""


def monomorphism(small: Graph, big: Graph) -> Optional[tuple[int, ...]]:
    """An injective edge-preserving map small -> big, or None.

    Vertices of the pattern are assigned in a connectivity-aware order
    (descending degree first), with degree and mapped-neighborhood pruning.
    """
    if small.n > big.n:
        raise OrderMismatch(f"pattern order {small.n} exceeds host order {big.n}")
    ns, nb = small.n, big.n
    sadj, badj = small.adj, big.adj
    sdeg = [a.bit_count() for a in sadj]
    bdeg = [a.bit_count() for a in badj]

    order: list[int] = []
    placed_mask = 0
    while len(order) < ns:
        cands = [v for v in range(ns) if not placed_mask >> v & 1]
        attached = [v for v in cands if sadj[v] & placed_mask]
        pool = attached if attached else cands
        v = max(pool, key=lambda x: (sdeg[x], -x))
        order.append(v)
        placed_mask |= 1 << v

    mapping = [-1] * ns
    full = (1 << nb) - 1

    def rec(i: int, used: int) -> bool:
        if i == ns:
            return True
        v = order[i]
        cand = full & ~used
        for u in bits(sadj[v]):
            mu = mapping[u]
            if mu != -1:
                cand &= badj[mu]
        for b in bits(cand):
            if bdeg[b] < sdeg[v]:
                continue
            mapping[v] = b
            if rec(i + 1, used | (1 << b)):
                return True
            mapping[v] = -1
        return False

    if rec(0, 0):
        return tuple(mapping)
    return None


def monomorphism_exists(small: Graph, big: Graph) -> bool:
    return monomorphism(small, big) is not None


def common_neighborhood_find(
    g: Graph, p_vertices: Iterable[int], s: int, m: int
) -> Optional[set[int]]:
    """Some s-subset of P whose members share >= m neighbors outside P, else None.

    Exhaustive over s-subsets in lexicographic order; the intersection over
    the empty subset is taken to be all of V(G).
    """
    pset = sorted(set(p_vertices))
    pmask = 0
    for v in pset:
        pmask |= 1 << v
    full = (1 << g.n) - 1
    if s == 0:
        return set() if (full & ~pmask).bit_count() >= m else None
    if s > len(pset):
        return None
    for sub in combinations(pset, s):
        inter = full
        for v in sub:
            inter &= g.adj[v]
        if (inter & ~pmask).bit_count() >= m:
            return set(sub)
    return None
