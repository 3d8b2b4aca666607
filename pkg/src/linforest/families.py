"""Generators and closed-form sizes for every named exceptional graph family.

Kinds and parameter domains:

=========  =======================  ==========================================
kind       parameters               construction
=========  =======================  ==========================================
S          n, h                     K_h joined to an independent set
SPLUS      n, h (n >= h+2)          S plus one edge inside the independent set
L          t, h (n = t*h + 1)       t cliques K_{h+1} sharing one center
LGEN       t1, t2, h                center joined to t1 K_h and t2 K_{h+1}
FGLUE      t1, t2, h (h >= 2)       LGEN center tied by an edge to one K_{h+1}
TGLUE      t1, t2, h (h >= 2)       LGEN center tied by edges to two K_{h+1}
U3         h (n = 3h + 3)           triangle, each corner merged into a K_{h+1}
H1         n (n >= 7)               S_{n-2,2} with a triangle glued at a hub
H2         n (n >= 8)               H1 with a second triangle at the other hub
K2MATCH    n (even, >= 4)           K_2 joined to a perfect matching
K3MATCH    n (odd, >= 5)            K_3 joined to a perfect matching
HNLA       n, l, a (a <= l//2)      K_a joined to (K_{l-2a} union empty)
=========  =======================  ==========================================

Vertices are numbered hubs/centers first, then the blocks in order, so the
generated labelings are deterministic.  Degenerate parameters are permitted
whenever the construction stays well-defined (S with n == h is a bare
clique; LGEN with t1 = t2 = 0 is K_1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Mapping

from .graphs import (
    Graph,
    complete,
    disjoint_union,
    empty_graph,
    join,
)

FAMILY_KINDS = (
    "S", "SPLUS", "L", "LGEN", "FGLUE", "TGLUE",
    "U3", "H1", "H2", "K2MATCH", "K3MATCH", "HNLA",
)


class BadParams(ValueError):
    """Raised with the violated parameter constraint named."""


class UnknownFamily(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise UnknownFamily(f"unknown family kind {self.kind!r}")
        object.__setattr__(self, "params", dict(self.params))

    def key(self) -> tuple:
        return (self.kind, tuple(sorted(self.params.items())))


def _need(spec: FamilySpec, *names: str) -> list[int]:
    out = []
    for name in names:
        if name not in spec.params:
            raise BadParams(f"{spec.kind} requires parameter {name}")
        out.append(int(spec.params[name]))
    return out


def _lgen_counts(spec: FamilySpec) -> tuple[int, int, int]:
    t1, t2, h = _need(spec, "t1", "t2", "h")
    if h < 1:
        raise BadParams(f"{spec.kind} requires h >= 1, got h={h}")
    if t1 < 0 or t2 < 0:
        raise BadParams(f"{spec.kind} requires t1, t2 >= 0, got t1={t1}, t2={t2}")
    if spec.kind in ("FGLUE", "TGLUE") and h < 2:
        raise BadParams(f"{spec.kind} is defined only for h >= 2, got h={h}")
    return t1, t2, h


def generate_family(spec: FamilySpec) -> Graph:
    """Build the family member; raises BadParams outside the parameter domain."""
    kind = spec.kind
    if kind == "S":
        n, h = _need(spec, "n", "h")
        if not 0 <= h <= n:
            raise BadParams(f"S requires 0 <= h <= n, got n={n}, h={h}")
        return join(complete(h), empty_graph(n - h))
    if kind == "SPLUS":
        n, h = _need(spec, "n", "h")
        if not 0 <= h <= n - 2:
            raise BadParams(f"SPLUS requires h <= n-2 for the extra edge, got n={n}, h={h}")
        return join(complete(h), disjoint_union([complete(2), empty_graph(n - h - 2)]))
    if kind == "L":
        t, h = _need(spec, "t", "h")
        if t < 1 or h < 1:
            raise BadParams(f"L requires t >= 1 and h >= 1, got t={t}, h={h}")
        return join(complete(1), disjoint_union([complete(h)] * t))
    if kind == "LGEN":
        t1, t2, h = _lgen_counts(spec)
        blocks = [complete(h)] * t1 + [complete(h + 1)] * t2
        return join(complete(1), disjoint_union(blocks) if blocks else empty_graph(0))
    if kind in ("FGLUE", "TGLUE"):
        t1, t2, h = _lgen_counts(spec)
        extras = 1 if kind == "FGLUE" else 2
        base_blocks = [complete(h)] * t1 + [complete(h + 1)] * t2
        base = join(complete(1), disjoint_union(base_blocks) if base_blocks else empty_graph(0))
        g = disjoint_union([base] + [complete(h + 1)] * extras)
        edges = list(g.edges())
        offset = base.n
        for _ in range(extras):
            edges.append((0, offset))
            offset += h + 1
        return Graph(g.n, edges)
    if kind == "U3":
        (h,) = _need(spec, "h")
        if h < 1:
            raise BadParams(f"U3 requires h >= 1, got h={h}")
        edges = [(0, 1), (1, 2), (0, 2)]
        for c in range(3):
            group = [c] + [3 + c * h + i for i in range(h)]
            edges.extend((u, v) for i, u in enumerate(group) for v in group[i + 1:])
        return Graph(3 * h + 3, edges)
    if kind == "H1":
        (n,) = _need(spec, "n")
        if n < 7:
            raise BadParams(f"H1 requires n >= 7, got n={n}")
        edges = [(0, 1)]
        edges += [(0, i) for i in range(2, n - 2)] + [(1, i) for i in range(2, n - 2)]
        edges += [(0, n - 2), (0, n - 1), (n - 2, n - 1)]
        return Graph(n, edges)
    if kind == "H2":
        (n,) = _need(spec, "n")
        if n < 8:
            raise BadParams(f"H2 requires n >= 8, got n={n}")
        edges = [(0, 1)]
        edges += [(0, i) for i in range(2, n - 4)] + [(1, i) for i in range(2, n - 4)]
        edges += [(0, n - 4), (0, n - 3), (n - 4, n - 3)]
        edges += [(1, n - 2), (1, n - 1), (n - 2, n - 1)]
        return Graph(n, edges)
    if kind == "K2MATCH":
        (n,) = _need(spec, "n")
        if n < 4 or n % 2:
            raise BadParams(f"K2MATCH requires even n >= 4, got n={n}")
        return join(complete(2), disjoint_union([complete(2)] * ((n - 2) // 2)))
    if kind == "K3MATCH":
        (n,) = _need(spec, "n")
        if n < 5 or n % 2 == 0:
            raise BadParams(f"K3MATCH requires odd n >= 5, got n={n}")
        return join(complete(3), disjoint_union([complete(2)] * ((n - 3) // 2)))
    if kind == "HNLA":
        n, l, a = _need(spec, "n", "l", "a")
        if a < 0 or 2 * a > l:
            raise BadParams(f"HNLA requires 0 <= a <= l/2, got l={l}, a={a}")
        if n - l + a < 0:
            raise BadParams(f"HNLA requires n >= l - a, got n={n}, l={l}, a={a}")
        return join(complete(a), disjoint_union([complete(l - 2 * a), empty_graph(n - l + a)]))
    raise UnknownFamily(kind)


def family_size_formulas(spec: FamilySpec) -> tuple[int, int]:
    """Closed-form (order, edge count); must match the generated graph."""
    kind = spec.kind
    if kind == "S":
        n, h = _need(spec, "n", "h")
        if not 0 <= h <= n:
            raise BadParams(f"S requires 0 <= h <= n, got n={n}, h={h}")
        return n, comb(h, 2) + h * (n - h)
    if kind == "SPLUS":
        n, h = _need(spec, "n", "h")
        if not 0 <= h <= n - 2:
            raise BadParams(f"SPLUS requires h <= n-2, got n={n}, h={h}")
        return n, comb(h, 2) + h * (n - h) + 1
    if kind == "L":
        t, h = _need(spec, "t", "h")
        if t < 1 or h < 1:
            raise BadParams(f"L requires t >= 1 and h >= 1, got t={t}, h={h}")
        return t * h + 1, t * comb(h + 1, 2)
    if kind == "LGEN":
        t1, t2, h = _lgen_counts(spec)
        return t1 * h + t2 * (h + 1) + 1, t1 * comb(h + 1, 2) + t2 * comb(h + 2, 2)
    if kind == "FGLUE":
        t1, t2, h = _lgen_counts(spec)
        order = t1 * h + (t2 + 1) * (h + 1) + 1
        return order, t1 * comb(h + 1, 2) + t2 * comb(h + 2, 2) + comb(h + 1, 2) + 1
    if kind == "TGLUE":
        t1, t2, h = _lgen_counts(spec)
        order = t1 * h + (t2 + 2) * (h + 1) + 1
        return order, t1 * comb(h + 1, 2) + t2 * comb(h + 2, 2) + 2 * comb(h + 1, 2) + 2
    if kind == "U3":
        (h,) = _need(spec, "h")
        if h < 1:
            raise BadParams(f"U3 requires h >= 1, got h={h}")
        return 3 * h + 3, 3 * comb(h + 1, 2) + 3
    if kind == "H1":
        (n,) = _need(spec, "n")
        if n < 7:
            raise BadParams(f"H1 requires n >= 7, got n={n}")
        return n, 2 * n - 4
    if kind == "H2":
        (n,) = _need(spec, "n")
        if n < 8:
            raise BadParams(f"H2 requires n >= 8, got n={n}")
        return n, 2 * n - 5
    if kind == "K2MATCH":
        (n,) = _need(spec, "n")
        if n < 4 or n % 2:
            raise BadParams(f"K2MATCH requires even n >= 4, got n={n}")
        return n, 1 + 2 * (n - 2) + (n - 2) // 2
    if kind == "K3MATCH":
        (n,) = _need(spec, "n")
        if n < 5 or n % 2 == 0:
            raise BadParams(f"K3MATCH requires odd n >= 5, got n={n}")
        return n, 3 + 3 * (n - 3) + (n - 3) // 2
    if kind == "HNLA":
        n, l, a = _need(spec, "n", "l", "a")
        if a < 0 or 2 * a > l or n - l + a < 0:
            raise BadParams(f"HNLA requires 0 <= a <= l/2 and n >= l-a, got n={n}, l={l}, a={a}")
        return n, comb(l - a, 2) + a * (n - l + a)
    raise UnknownFamily(kind)


def parse_family_params(text: str) -> dict[str, int]:
    """Parse CLI-style "n=7,h=2" into a parameter dict."""
    params: dict[str, int] = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise BadParams(f"parameter {part!r} is not of the form name=value")
        name, _, value = part.partition("=")
        try:
            params[name.strip()] = int(value)
        except ValueError as exc:
            raise BadParams(f"parameter {part!r} has a non-integer value") from exc
    return params


def family_spec(kind: str, **params: int) -> FamilySpec:
    return FamilySpec(kind=kind.upper(), params=params)
