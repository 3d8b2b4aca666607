"""Linear forests (disjoint unions of paths) and their degree parameters.

A forest with even path orders 2a_1 >= ... >= 2a_k and odd orders
2b_1+1 >= ... >= 2b_l+1 has threshold h = sum(a_i) + sum(b_i) - 1 and total
order 2h + 2 + l; the number of odd paths selects which minimum-degree
theorem applies.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable


class OrderTooSmall(ValueError):
    """A path component of order < 2 (P_1 components are excluded)."""


class EmptyForest(ValueError):
    """A forest needs at least one path component."""


class TheoremClass(Enum):
    EVEN = "even"
    ONE_ODD = "one_odd"
    TWO_ODD = "two_odd"
    OUT_OF_THEOREM_SCOPE = "out_of_theorem_scope"


@dataclass(frozen=True)
class LinearForest:
    """Multiset of path orders, stored in non-increasing order."""

    orders: tuple[int, ...]

    def __post_init__(self):
        if not self.orders:
            raise EmptyForest("a linear forest needs at least one path")
        if any(t < 2 for t in self.orders):
            bad = min(self.orders)
            raise OrderTooSmall(f"path order {bad} < 2 is not allowed")
        object.__setattr__(self, "orders", tuple(sorted(self.orders, reverse=True)))

    @property
    def even_halves(self) -> tuple[int, ...]:
        """The a_i with even components P_{2a_i}, descending."""
        return tuple(t // 2 for t in self.orders if t % 2 == 0)

    @property
    def odd_halves(self) -> tuple[int, ...]:
        """The b_i with odd components P_{2b_i+1}, descending."""
        return tuple(t // 2 for t in self.orders if t % 2 == 1)

    @property
    def total_order(self) -> int:
        return sum(self.orders)

    def __str__(self):
        return ",".join(str(t) for t in self.orders)


def forest(orders: Iterable[int]) -> LinearForest:
    return LinearForest(tuple(orders))


def parse_forest(text: str) -> LinearForest:
    """Parse a comma-separated order list such as "4,4,3"."""
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    if not tokens:
        raise EmptyForest("no path orders given")
    try:
        orders = tuple(int(t) for t in tokens)
    except ValueError as exc:
        raise ValueError(f"non-integer path order in {text!r}") from exc
    return LinearForest(orders)


@dataclass(frozen=True)
class ForestParams:
    k: int
    l: int
    h: int
    total_order: int
    theorem_class: TheoremClass


def forest_params(f: LinearForest) -> ForestParams:
    """Derive (k, l, h, total order, applicable theorem class)."""
    a = f.even_halves
    b = f.odd_halves
    k, l = len(a), len(b)
    h = sum(a) + sum(b) - 1
    total = f.total_order
    assert total == 2 * h + 2 + l
    if l >= 3 or k + l < 2:
        cls = TheoremClass.OUT_OF_THEOREM_SCOPE
    elif l == 0:
        cls = TheoremClass.EVEN
    elif l == 1:
        cls = TheoremClass.ONE_ODD
    else:
        cls = TheoremClass.TWO_ODD
    return ForestParams(k=k, l=l, h=h, total_order=total, theorem_class=cls)
