"""Isomorph-free exhaustive graph generation plus graph6 stream ingestion.

Generation is by canonical vertex augmentation: a child (parent plus one new
vertex) is accepted iff the new vertex is a canonical deletion choice, where
the deletion rule picks, inside the first cell of the stable degree
refinement (a subset of the minimum-degree class), the vertices minimizing
the vertex-marked canonical code.  Accepted children of a parent with a
trivial automorphism group are automatically pairwise non-isomorphic;
parents with symmetry get an explicit canonical-code dedup.

Two useful facts fall out of the acceptance rule and speed everything up:

* every accepted child has minimum degree exactly |S| (the new vertex's
  degree), so min-degree filters prune the subset iteration directly;
* a candidate whose new vertex is the unique minimum-degree vertex is
  accepted with no canonical labeling at all.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, Union

from .canon import canonical_form, canonical_label, refine_partition
from .graph6 import Graph6Error, parse_graph6
from .graphs import Graph, bits

GENERATION_CAP = 11


class OrderCap(ValueError):
    """Built-in generation is capped; larger universes must be ingested."""


class IoError(OSError):
    pass


@dataclass(frozen=True)
class EnumFilter:
    n: int
    min_degree: int = 0
    connectivity: str = "any"  # any | connected | two_connected | has_cut_vertex

    def __post_init__(self):
        if self.connectivity not in ("any", "connected", "two_connected", "has_cut_vertex"):
            raise ValueError(f"unknown connectivity filter {self.connectivity!r}")


# ---------------------------------------------------------------------------
# canonical augmentation

def _marked_code(n: int, adj: tuple[int, ...], v: int) -> tuple[int, ...]:
    colors = [1] * n
    colors[v] = 0
    code, _, _ = canonical_form(n, adj, colors)
    return code


def _accept_tied(n: int, child: tuple[int, ...], newv: int) -> bool:
    """Full acceptance test when the new vertex ties for minimum degree."""
    cells = refine_partition(n, child, [list(range(n))])
    c0 = cells[0]
    if newv not in c0:
        return False
    if len(c0) == 1:
        return True
    code_new = _marked_code(n, child, newv)
    for v in c0:
        if v != newv and _marked_code(n, child, v) < code_new:
            return False
    return True


def _expand_group(gens: list[tuple[int, ...]], cap: int) -> Optional[list[tuple[int, ...]]]:
    """Close a generator set under composition, or None once past cap.

    Returns the non-identity elements; an empty list certifies (given honest
    generators) that only the identity is available for subset dedup.
    """
    if not gens:
        return []
    n = len(gens[0])
    ident = tuple(range(n))
    group = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for sigma in frontier:
            for g in gens:
                tau = tuple(sigma[g[v]] for v in range(n))
                if tau not in group:
                    group.add(tau)
                    nxt.append(tau)
                    if len(group) > cap:
                        return None
        frontier = nxt
    group.discard(ident)
    return sorted(group)


def children(padj: tuple[int, ...], min_ds: int = 0) -> list[tuple[int, ...]]:
    """Accepted one-vertex extensions of a canonical parent, in stable order.

    ``min_ds`` floors the new vertex's degree; since accepted children have
    minimum degree exactly ds, this implements a min-degree filter for free.
    """
    np_ = len(padj)
    n = np_ + 1
    newbit = 1 << np_
    pdeg = [a.bit_count() for a in padj]
    dmin = min(pdeg) if pdeg else 0
    minmask = 0
    for v in range(np_):
        if pdeg[v] == dmin:
            minmask |= 1 << v
    min_vs = list(bits(minmask))
    other_vs = [v for v in range(np_) if not minmask >> v & 1]

    # A discrete stable refinement certifies a trivial automorphism group, in
    # which case accepted children are automatically pairwise distinct.  For
    # symmetric parents, subsets are deduped to orbit minima under Aut(parent)
    # (complete when the expanded group fits the cap), with a canonical-code
    # dedup of emitted children as the fallback for very large groups.
    pcells = refine_partition(np_, padj, [list(range(np_))]) if np_ else []
    group: list[tuple[int, ...]] = []
    dedup: Optional[set[bytes]] = None
    if any(len(c) > 1 for c in pcells):
        _, _, gens = canonical_form(np_, padj)
        expanded = _expand_group(gens, cap=512)
        if expanded is None:
            dedup = set()
        else:
            group = expanded

    out: list[tuple[int, ...]] = []

    def emit(smask: int, tied: bool) -> None:
        for sigma in group:
            t = 0
            s = smask
            while s:
                low = s & -s
                t |= 1 << sigma[low.bit_length() - 1]
                s ^= low
            if t < smask:
                return
        child = tuple(
            (padj[v] | newbit) if smask >> v & 1 else padj[v] for v in range(np_)
        ) + (smask,)
        if tied and not _accept_tied(n, child, np_):
            return
        if dedup is not None:
            key = canonical_label(Graph.from_adj(child))
            if key in dedup:
                return
            dedup.add(key)
        out.append(child)

    for ds in range(min_ds, min(dmin + 1, np_) + 1):
        if ds < dmin:
            # new vertex is the unique minimum-degree vertex: accept outright
            for combo in combinations(range(np_), ds):
                smask = 0
                for v in combo:
                    smask |= 1 << v
                emit(smask, tied=False)
        elif ds == dmin:
            for combo in combinations(range(np_), ds):
                smask = 0
                for v in combo:
                    smask |= 1 << v
                emit(smask, tied=(minmask & ~smask) != 0)
        else:
            # ds == dmin + 1: every current min-degree vertex must join S
            extra = ds - len(min_vs)
            if extra < 0:
                continue
            for combo in combinations(other_vs, extra):
                smask = minmask
                for v in combo:
                    smask |= 1 << v
                # old vertices at pdeg == ds outside S also stay at degree ds
                emit(smask, tied=True)
    return out


_LEVEL_CACHE: dict[int, list[tuple[int, ...]]] = {0: [()]}
_LEVEL_MEMO_MAX = 9  # levels up to here are small enough to keep around


def all_graphs_adj(n: int) -> list[tuple[int, ...]]:
    """All graphs of order n (one per isomorphism class) as adjacency tuples."""
    if n > _LEVEL_MEMO_MAX:
        raise OrderCap(f"levels above {_LEVEL_MEMO_MAX} are stream-only")
    if n not in _LEVEL_CACHE:
        level: list[tuple[int, ...]] = []
        for p in all_graphs_adj(n - 1):
            level.extend(children(p))
        _LEVEL_CACHE[n] = level
    return _LEVEL_CACHE[n]


def _stream_adj(n: int, min_ds: int) -> Iterator[tuple[int, ...]]:
    if n <= _LEVEL_MEMO_MAX:
        floor = min_ds
        for adj in all_graphs_adj(n):
            if min(( a.bit_count() for a in adj), default=0) >= floor:
                yield adj
        return
    for parent in _stream_adj(n - 1, 0 if min_ds == 0 else min_ds - 1):
        yield from children(parent, min_ds=min_ds)


def _connected_mask(n: int, adj: tuple[int, ...]) -> bool:
    if n <= 1:
        return True
    full = (1 << n) - 1
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
    return seen == full


def _has_cut_vertex(n: int, adj: tuple[int, ...]) -> bool:
    """Articulation test via per-vertex deletion (n <= 11, so this is cheap)."""
    if n < 3:
        return False
    for v in range(n):
        start = 0 if v != 0 else 1
        full = ((1 << n) - 1) & ~(1 << v)
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & full & ~seen
            seen |= frontier
        if seen != full:
            return True
    return False


def passes_filter(n: int, adj: tuple[int, ...], f: EnumFilter) -> bool:
    if min((a.bit_count() for a in adj), default=0) < f.min_degree:
        return False
    if f.connectivity == "any":
        return True
    conn = _connected_mask(n, adj)
    if f.connectivity == "connected":
        return conn
    if not conn:
        return False
    cut = _has_cut_vertex(n, adj)
    if f.connectivity == "two_connected":
        return n >= 3 and not cut
    return cut  # has_cut_vertex


def enumerate_graphs(f: EnumFilter) -> Iterator[Graph]:
    """Deterministic stream, exactly one representative per isomorphism class."""
    if f.n > GENERATION_CAP:
        raise OrderCap(
            f"built-in generation is capped at n = {GENERATION_CAP}; ingest an external stream instead"
        )
    if f.n < 0:
        raise ValueError("order must be non-negative")
    for adj in _stream_adj(f.n, f.min_degree):
        if passes_filter(f.n, adj, f):
            yield Graph.from_adj(adj)


def connected_census(n_max: int) -> list[int]:
    """Counts of connected graphs for n = 1..n_max."""
    return [
        sum(1 for _ in enumerate_graphs(EnumFilter(n=n, connectivity="connected")))
        for n in range(1, n_max + 1)
    ]


# ---------------------------------------------------------------------------
# ingestion

def ingest_graph6_stream(
    source: Union[str, Iterable[str]],
    dedup: bool = False,
    enum_filter: Optional[EnumFilter] = None,
    errors: Optional[list[tuple[int, str]]] = None,
) -> Iterator[Graph]:
    """Parse a graph6 stream (path, file object, or iterable of lines).

    Malformed lines are collected into ``errors`` as (line number, message)
    and skipped; with ``dedup`` only the first graph of each isomorphism
    class is emitted.
    """
    if isinstance(source, str):
        try:
            fh: Iterable[str] = open(source, "r", encoding="ascii")
        except OSError as exc:
            raise IoError(str(exc)) from exc
        close = True
    else:
        fh = source
        close = False
    seen: set[bytes] = set()
    try:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                g = parse_graph6(line)
            except Graph6Error as exc:
                if errors is not None:
                    errors.append((lineno, str(exc)))
                continue
            if enum_filter is not None and (
                g.n != enum_filter.n or not passes_filter(g.n, g.adj, enum_filter)
            ):
                continue
            if dedup:
                key = canonical_label(g)
                if key in seen:
                    continue
                seen.add(key)
            yield g
    finally:
        if close and isinstance(fh, io.IOBase):
            fh.close()


# ---------------------------------------------------------------------------
# parallel graph6 emission (deterministic order for any worker count)

_EMIT_CTX: Optional[dict] = None


def _init_emit(ctx: dict) -> None:
    global _EMIT_CTX
    _EMIT_CTX = ctx
    all_graphs_adj(ctx["level"])


def _emit_chunk(bounds: tuple[int, int]) -> list[str]:
    from .graph6 import write_graph6

    ctx = _EMIT_CTX
    assert ctx is not None
    f: EnumFilter = ctx["filter"]
    lo, hi = bounds
    out: list[str] = []
    if ctx["mode"] == "parents":
        for parent in all_graphs_adj(ctx["level"])[lo:hi]:
            for adj in children(parent, f.min_degree):
                if passes_filter(f.n, adj, f):
                    out.append(write_graph6(Graph.from_adj(adj)))
    else:
        for adj in all_graphs_adj(ctx["level"])[lo:hi]:
            if passes_filter(f.n, adj, f):
                out.append(write_graph6(Graph.from_adj(adj)))
    return out


def enumerate_g6_lines(f: EnumFilter, jobs: int = 1) -> Iterator[str]:
    """graph6 lines of the filtered enumeration, parallel but order-stable."""
    from .graph6 import write_graph6

    if f.n > GENERATION_CAP:
        raise OrderCap(f"built-in generation is capped at n = {GENERATION_CAP}")
    if jobs <= 1 or f.n > 10:
        for g in enumerate_graphs(f):
            yield write_graph6(g)
        return
    level = f.n if f.n <= _LEVEL_MEMO_MAX else f.n - 1
    ctx = {"filter": f, "level": level,
           "mode": "graphs" if f.n <= _LEVEL_MEMO_MAX else "parents"}
    total = len(all_graphs_adj(level))
    step = max(1, total // (jobs * 24))
    chunks = [(i, min(i + step, total)) for i in range(0, total, step)]
    import multiprocessing as mp

    with mp.get_context("fork").Pool(jobs, initializer=_init_emit, initargs=(ctx,)) as pool:
        for lines in pool.imap(_emit_chunk, chunks):
            yield from lines
