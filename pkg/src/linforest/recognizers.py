"""Membership tests for the exceptional families, with re-checkable witnesses.

Family-subgraph verdicts ("G is a subgraph of S_{n,h}" and friends) always
compare G against the family member of the SAME order n, so they are
spanning-subgraph tests; "G equals L_{t,h}" style verdicts are isomorphism
tests.  Structural shortcuts exist for the join-with-independent-set shapes:

* S        <=>  some vertex cover of size <= h
* SPLUS    <=>  some A with |A| <= h and at most one edge left in G - A
* K2MATCH  <=>  n even and some pair A with max degree of G - A at most 1
* K3MATCH  <=>  n odd and some triple A likewise
* LGEN     <=>  some apex whose removal leaves components packable into
                t1 cliques of size h and t2 of size h+1

and the remaining kinds go through monomorphism / isomorphism against the
generated template over every feasible parameter tuple of matching order.
The structural routes are cross-validated exhaustively against the
monomorphism oracle in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .canon import canonical_form
from .families import BadParams, FamilySpec, UnknownFamily, generate_family
from .graphs import Graph, bits, components
from .subgraphs import monomorphism

_TEMPLATES: dict[tuple, Graph] = {}


def family_template(spec: FamilySpec) -> Graph:
    key = spec.key()
    g = _TEMPLATES.get(key)
    if g is None:
        g = generate_family(spec)
        _TEMPLATES[key] = g
    return g


@dataclass(frozen=True)
class FamilyMatch:
    kind: str
    params: dict = field(default_factory=dict)
    witness: tuple = ()
    all_params: tuple = ()

    def to_json(self) -> dict:
        return {
            "family": self.kind,
            "params": dict(sorted(self.params.items())),
            "witness": list(self.witness),
            "all_params": [dict(sorted(p.items())) for p in self.all_params],
        }


def vertex_cover_at_most(g: Graph, h: int) -> Optional[tuple[int, ...]]:
    """A vertex cover of size <= h, or None; exact branching on max degree."""
    if h < 0:
        return None

    def solve(adj: list[int], budget: int) -> Optional[list[int]]:
        best_v = -1
        best_d = 0
        for v, a in enumerate(adj):
            d = a.bit_count()
            if d > best_d:
                best_d = d
                best_v = v
        if best_d == 0:
            return []
        if budget <= 0:
            return None
        if best_d == 1:
            # what's left is a matching: one endpoint per edge
            picks = []
            seen = 0
            for u, a in enumerate(adj):
                if a and not seen >> u & 1:
                    w = a.bit_length() - 1
                    picks.append(u)
                    seen |= (1 << u) | (1 << w)
            return picks if len(picks) <= budget else None
        v = best_v
        bit = 1 << v
        branch = [a & ~bit for a in adj]
        branch[v] = 0
        got = solve(branch, budget - 1)
        if got is not None:
            return [v] + got
        nbrs = list(bits(adj[v]))
        if len(nbrs) > budget:
            return None
        nmask = adj[v]
        branch = [a & ~nmask for a in adj]
        for u in nbrs:
            branch[u] = 0
        got = solve(branch, budget - len(nbrs))
        if got is not None:
            return nbrs + got
        return None

    got = solve(list(g.adj), h)
    return tuple(sorted(got)) if got is not None else None


def _iso_witness(g: Graph, template: Graph) -> Optional[tuple[int, ...]]:
    """Vertex map g -> template when isomorphic (via canonical forms)."""
    if g.n != template.n or g.edge_count() != template.edge_count():
        return None
    if sorted(g.degrees()) != sorted(template.degrees()):
        return None
    code_g, perm_g, _ = canonical_form(g.n, g.adj)
    code_t, perm_t, _ = canonical_form(template.n, template.adj)
    if code_g != code_t:
        return None
    inv_t = [0] * template.n
    for v, p in enumerate(perm_t):
        inv_t[p] = v
    return tuple(inv_t[perm_g[v]] for v in range(g.n))


def _pack_components(orders: list[int], caps: list[int]) -> Optional[list[int]]:
    """Assign component orders into bins of the given capacities, or None."""
    orders = sorted(orders, reverse=True)
    assign = [0] * len(orders)
    caps = list(caps)

    def rec(i: int) -> bool:
        if i == len(orders):
            return True
        tried: set[int] = set()
        for j, c in enumerate(caps):
            if c >= orders[i] and c not in tried:
                tried.add(c)
                caps[j] -= orders[i]
                assign[i] = j
                if rec(i + 1):
                    return True
                caps[j] += orders[i]
        return False

    return assign if rec(0) else None


def _lgen_tuples(n: int, h: int) -> list[tuple[int, int]]:
    """All (t1, t2) with t1*h + t2*(h+1) + 1 == n."""
    out = []
    for t2 in range((n - 1) // (h + 1) + 1):
        rest = n - 1 - t2 * (h + 1)
        if rest >= 0 and rest % h == 0:
            out.append((rest // h, t2))
    return out


def recognize_exception(g: Graph, kind: str, h: Optional[int] = None) -> Optional[FamilyMatch]:
    """Decide membership of g in the named family at its own order n."""
    n = g.n
    if kind == "S":
        if h is None:
            raise BadParams("S recognition requires h")
        cover = vertex_cover_at_most(g, h)
        if cover is None:
            return None
        return FamilyMatch("S", {"n": n, "h": h}, witness=cover)
    if kind == "SPLUS":
        if h is None:
            raise BadParams("SPLUS recognition requires h")
        cover = vertex_cover_at_most(g, h)
        if cover is not None:
            return FamilyMatch("SPLUS", {"n": n, "h": h}, witness=cover)
        for u, v in g.edges():
            adj = list(g.adj)
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
            cover = vertex_cover_at_most(Graph.from_adj(adj), h)
            if cover is not None:
                return FamilyMatch("SPLUS", {"n": n, "h": h}, witness=cover)
        return None
    if kind in ("K2MATCH", "K3MATCH"):
        size = 2 if kind == "K2MATCH" else 3
        if n % 2 != size % 2 or n < size + 2:
            return None
        for a in combinations(range(n), size):
            amask = 0
            for v in a:
                amask |= 1 << v
            if all((g.adj[v] & ~amask).bit_count() <= 1 for v in range(n) if not amask >> v & 1):
                return FamilyMatch(kind, {"n": n}, witness=a)
        return None
    if kind == "L":
        if h is None:
            raise BadParams("L recognition requires h")
        if h < 1 or (n - 1) % h or (n - 1) // h < 1:
            return None
        t = (n - 1) // h
        mapping = _iso_witness(g, family_template(FamilySpec("L", {"t": t, "h": h})))
        if mapping is None:
            return None
        return FamilyMatch("L", {"t": t, "h": h}, witness=mapping)
    if kind == "U3":
        if h is None:
            raise BadParams("U3 recognition requires h")
        if h < 1 or n != 3 * h + 3:
            return None
        mapping = _iso_witness(g, family_template(FamilySpec("U3", {"h": h})))
        if mapping is None:
            return None
        return FamilyMatch("U3", {"h": h}, witness=mapping)
    if kind == "HNLA":
        raise BadParams("HNLA recognition needs explicit l and a; use recognize_hnla")
    if kind == "LGEN":
        if h is None:
            raise BadParams("LGEN recognition requires h")
        tuples = _lgen_tuples(n, h) if h >= 1 else []
        hits = []
        first: Optional[FamilyMatch] = None
        for t1, t2 in tuples:
            caps = [h] * t1 + [h + 1] * t2
            for apex in range(n):
                orders = [c.bit_count() for c in components_without(g, apex)]
                if max(orders, default=0) > h + 1:
                    continue
                assign = _pack_components(orders, caps)
                if assign is not None:
                    hits.append({"t1": t1, "t2": t2, "h": h})
                    if first is None:
                        first = FamilyMatch(
                            "LGEN",
                            {"t1": t1, "t2": t2, "h": h},
                            witness=(apex,),
                        )
                    break
        if first is None:
            return None
        return FamilyMatch(first.kind, first.params, first.witness, all_params=tuple(hits))
    if kind in ("FGLUE", "TGLUE", "H1", "H2"):
        specs: list[FamilySpec]
        if kind == "H1":
            specs = [FamilySpec("H1", {"n": n})] if n >= 7 else []
        elif kind == "H2":
            specs = [FamilySpec("H2", {"n": n})] if n >= 8 else []
        else:
            if h is None:
                raise BadParams(f"{kind} recognition requires h")
            extras = 1 if kind == "FGLUE" else 2
            specs = []
            if h >= 2:
                for t1, t2p in _lgen_tuples(n, h):
                    t2 = t2p - extras
                    if t2 >= 0:
                        specs.append(FamilySpec(kind, {"t1": t1, "t2": t2, "h": h}))
        hits = []
        first = None
        for spec in specs:
            mapping = monomorphism(g, family_template(spec))
            if mapping is not None:
                hits.append(dict(spec.params))
                if first is None:
                    first = FamilyMatch(kind, dict(spec.params), witness=mapping)
        if first is None:
            return None
        return FamilyMatch(first.kind, first.params, first.witness, all_params=tuple(hits))
    raise UnknownFamily(f"no recognizer for family kind {kind!r}")


def components_without(g: Graph, apex: int) -> list[int]:
    """Component masks of G - apex (over the original labels)."""
    adj = [a & ~(1 << apex) for a in g.adj]
    adj[apex] = 0
    rest = ((1 << g.n) - 1) & ~(1 << apex)
    out = []
    while rest:
        start = (rest & -rest).bit_length() - 1
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            nxt &= rest & ~seen
            seen |= nxt
            frontier = nxt
        out.append(seen)
        rest &= ~seen
    return out


def recognize_hnla(g: Graph, l: int, a: int) -> Optional[FamilyMatch]:
    """Isomorphism test against H_{n,l,a} at g's own order."""
    try:
        template = family_template(FamilySpec("HNLA", {"n": g.n, "l": l, "a": a}))
    except BadParams:
        return None
    mapping = _iso_witness(g, template)
    if mapping is None:
        return None
    return FamilyMatch("HNLA", {"n": g.n, "l": l, "a": a}, witness=mapping)


def validate_match(g: Graph, match: FamilyMatch) -> bool:
    """Independent re-check of a FamilyMatch witness."""
    kind = match.kind
    n = g.n
    if kind in ("S", "SPLUS"):
        amask = 0
        for v in match.witness:
            amask |= 1 << v
        if len(match.witness) > match.params["h"]:
            return False
        left = sum((g.adj[v] & ~amask).bit_count() for v in range(n) if not amask >> v & 1) // 2
        return left == 0 if kind == "S" else left <= 1
    if kind in ("K2MATCH", "K3MATCH"):
        size = 2 if kind == "K2MATCH" else 3
        if len(match.witness) != size or n % 2 != size % 2:
            return False
        amask = 0
        for v in match.witness:
            amask |= 1 << v
        return all(
            (g.adj[v] & ~amask).bit_count() <= 1 for v in range(n) if not amask >> v & 1
        )
    if kind in ("L", "U3", "HNLA"):
        template = family_template(FamilySpec(kind, match.params))
        return g.relabel(match.witness) == template
    if kind in ("H1", "H2", "FGLUE", "TGLUE"):
        template = family_template(FamilySpec(kind, match.params))
        mapping = match.witness
        if len(set(mapping)) != n or template.n != n:
            return False
        return all(template.has_edge(mapping[u], mapping[v]) for u, v in g.edges())
    if kind == "LGEN":
        apex = match.witness[0]
        h = match.params["h"]
        t1, t2 = match.params["t1"], match.params["t2"]
        if t1 * h + t2 * (h + 1) + 1 != n:
            return False
        orders = [c.bit_count() for c in components_without(g, apex)]
        return _pack_components(orders, [h] * t1 + [h + 1] * t2) is not None
    return False
