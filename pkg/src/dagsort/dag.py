"""DAG representation and the comparison-free graph routines.

Vertices are dense integers ``0..n-1``. Nothing in this module ever compares
two vertices under the hidden order; everything here is pure graph work.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, NamedTuple, Sequence


class DagError(ValueError):
    """Malformed graph input (bad endpoint, wrong arity, ...)."""


class CycleError(DagError):
    """The graph has a directed cycle.

    ``cycle`` lists the vertices of one witness cycle in arc order, rotated so
    that the smallest vertex comes first. Consecutive entries are joined by
    arcs and the last vertex has an arc back to the first.
    """

    def __init__(self, cycle: Sequence[int]):
        self.cycle = list(cycle)
        super().__init__("graph has a cycle: " + " -> ".join(map(str, self.cycle + self.cycle[:1])))


class Dag:
    """Immutable directed graph on ``range(n)`` with out-adjacency lists.

    Duplicate arcs are kept; ``in_degree`` counts them with multiplicity.
    Acyclicity is *not* checked here (use :func:`kahn_order`).
    """

    __slots__ = ("n", "arcs", "out_adj", "in_degree", "_in_adj")

    def __init__(self, n: int, arcs: list[tuple[int, int]], out_adj: list[list[int]], in_degree: list[int]):
        self.n = n
        self.arcs = arcs
        self.out_adj = out_adj
        self.in_degree = in_degree
        self._in_adj: list[list[int]] | None = None

    @property
    def m(self) -> int:
        return len(self.arcs)

    @property
    def in_adj(self) -> list[list[int]]:
        """Predecessor lists, built on first use."""
        if self._in_adj is None:
            in_adj: list[list[int]] = [[] for _ in range(self.n)]
            for u, v in self.arcs:
                in_adj[v].append(u)
            self._in_adj = in_adj
        return self._in_adj

    def sources(self) -> list[int]:
        return [v for v in range(self.n) if self.in_degree[v] == 0]

    def __repr__(self) -> str:
        return f"Dag(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dag):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs


def build_dag(n: int, arcs: Iterable[Sequence[int]]) -> Dag:
    """Build a :class:`Dag` from a vertex count and an iterable of arcs.

    Raises:
        DagError: if ``n`` is negative or an endpoint is outside ``[0, n)``.
        CycleError: on a self-loop ``(v, v)``.
    """
    if n < 0:
        raise DagError(f"vertex count must be non-negative, got {n}")
    out_adj: list[list[int]] = [[] for _ in range(n)]
    in_degree = [0] * n
    arc_list: list[tuple[int, int]] = []
    for arc in arcs:
        u, v = arc
        if not (0 <= u < n and 0 <= v < n):
            raise DagError(f"arc ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise CycleError([u])
        out_adj[u].append(v)
        in_degree[v] += 1
        arc_list.append((u, v))
    return Dag(n, arc_list, out_adj, in_degree)


def _assemble(n: int, arcs: list[tuple[int, int]]) -> Dag:
    """Build a Dag from arcs already known to be in range and loop-free."""
    out_adj: list[list[int]] = [[] for _ in range(n)]
    in_degree = [0] * n
    for u, v in arcs:
        out_adj[u].append(v)
        in_degree[v] += 1
    return Dag(n, arcs, out_adj, in_degree)


def find_cycle(dag: Dag, remaining: Sequence[bool]) -> list[int]:
    """Walk arcs backward inside ``remaining`` until a vertex repeats.

    Every remaining vertex must have a remaining predecessor, which holds for
    the vertices a source-deletion sort could not remove. The smallest
    remaining predecessor is taken at each step, so the witness is
    deterministic.
    """
    in_adj = dag.in_adj
    start = next(v for v in range(dag.n) if remaining[v])
    seen: dict[int, int] = {}
    walk: list[int] = []
    v = start
    while v not in seen:
        seen[v] = len(walk)
        walk.append(v)
        v = min(u for u in in_adj[v] if remaining[u])
    # walk[seen[v]:] was traversed against the arcs; reverse to get arc order
    cycle = walk[seen[v]:][::-1]
    i = cycle.index(min(cycle))
    return cycle[i:] + cycle[:i]


def kahn_order(dag: Dag) -> list[int]:
    """Topological order by repeated source deletion with a FIFO queue.

    Initial sources are queued in ascending index order. Raises
    :class:`CycleError` with a witness cycle if some vertex is never freed.
    """
    n = dag.n
    out_adj = dag.out_adj
    indeg = list(dag.in_degree)
    queue = deque(v for v in range(n) if indeg[v] == 0)
    order: list[int] = []
    append = order.append
    popleft = queue.popleft
    push = queue.append
    while queue:
        v = popleft()
        append(v)
        for w in out_adj[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                push(w)
    if len(order) < n:
        raise CycleError(find_cycle(dag, [d > 0 for d in indeg]))
    return order


class Path(NamedTuple):
    """A longest path plus the per-vertex longest-path lengths.

    ``lengths[v]`` is the number of vertices on a longest path ending at
    ``v`` (so sources have length 1).
    """

    vertices: list[int]
    lengths: list[int]

    def __len__(self) -> int:
        return len(self.vertices)


def longest_path(dag: Dag, order: Sequence[int] | None = None) -> Path:
    """Compute longest-path lengths and reconstruct one longest path.

    The path is rebuilt backward from the smallest-index vertex of maximum
    length, stepping each time to the smallest-index predecessor of maximum
    length. ``order`` may pass a precomputed topological order.
    """
    n = dag.n
    if n == 0:
        return Path([], [])
    if order is None:
        order = kahn_order(dag)
    out_adj = dag.out_adj
    length = [1] * n
    best_pred = [-1] * n
    for v in order:
        lv = length[v] + 1
        for w in out_adj[v]:
            lw = length[w]
            if lv > lw or (lv == lw and v < best_pred[w]):
                length[w] = lv
                best_pred[w] = v
    top = max(length)
    v = length.index(top)
    path = [v]
    while best_pred[v] != -1:
        v = best_pred[v]
        path.append(v)
    path.reverse()
    return Path(path, length)


def layers(dag: Dag, path: Path | None = None) -> list[list[int]]:
    """Partition vertices by longest-path length; ``result[i]`` holds length ``i + 1``."""
    if path is None:
        path = longest_path(dag)
    result: list[list[int]] = [[] for _ in range(len(path))]
    for v, lv in enumerate(path.lengths):
        result[lv - 1].append(v)
    return result


def is_topological_order(dag: Dag, order: Sequence[int]) -> bool:
    """True iff every arc goes forward in ``order``.

    Raises:
        ValueError: if ``order`` is not a permutation of ``range(dag.n)``.
    """
    n = dag.n
    if len(order) != n:
        raise ValueError(f"order has {len(order)} entries, expected {n}")
    pos = [-1] * n
    for i, v in enumerate(order):
        if not (0 <= v < n) or pos[v] != -1:
            raise ValueError(f"order is not a permutation of range({n}): bad entry {v!r}")
        pos[v] = i
    return all(pos[u] < pos[v] for u, v in dag.arcs)
