"""The hidden total order and the single counting gateway to it."""

from __future__ import annotations

from typing import Sequence

from .dag import Dag, is_topological_order


class InconsistentOrderError(ValueError):
    """The hidden order contradicts an arc of the graph."""


class HiddenOrder:
    """A total order on ``range(n)`` stored as ranks.

    ``rank[v] == k`` means ``v`` is the ``(k+1)``-st smallest vertex.
    """

    __slots__ = ("rank",)

    def __init__(self, order: Sequence[int]):
        n = len(order)
        rank = [-1] * n
        for k, v in enumerate(order):
            if not (0 <= v < n) or rank[v] != -1:
                raise ValueError(f"order is not a permutation of range({n}): bad entry {v!r}")
            rank[v] = k
        self.rank = rank

    def __len__(self) -> int:
        return len(self.rank)

    def ascending(self) -> list[int]:
        order = [0] * len(self.rank)
        for v, k in enumerate(self.rank):
            order[k] = v
        return order


class ComparisonProvider:
    """Answers ``u < v`` under a hidden order and counts every answer.

    Algorithms must only learn about the order through :meth:`less`; it is
    the one place ``count`` changes.
    """

    __slots__ = ("_rank", "_count")

    def __init__(self, hidden: HiddenOrder):
        self._rank = hidden.rank
        self._count = 0

    @property
    def count(self) -> int:
        return self._count

    def __len__(self) -> int:
        return len(self._rank)

    def less(self, u: int, v: int) -> bool:
        if u == v:
            raise ValueError(f"cannot compare vertex {u} with itself")
        self._count += 1
        return self._rank[u] < self._rank[v]


def make_provider(dag: Dag, order: Sequence[int]) -> ComparisonProvider:
    """Provider whose hidden order is ``order`` (smallest first).

    Raises:
        ValueError: if ``order`` is not a permutation of the vertices.
        InconsistentOrderError: if some arc ``u -> v`` has ``v`` before ``u``.
    """
    if not is_topological_order(dag, order):
        raise InconsistentOrderError("hidden order is not a topological order of the graph")
    return ComparisonProvider(HiddenOrder(order))
