"""Interval-graph analysis of a finished heapsort run.

Each heap-processed vertex owns the closed interval between its insert and
delete-min timestamps. The functions here rebuild the greedy clique
partition of that interval graph, working-set sizes, and the lower and
upper bound quantities they feed, then check them against exact counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .dag import Dag, longest_path
from .sorter import IntervalRecord, SortRun

LOG2_E = math.log2(math.e)


@dataclass
class CliquePartition:
    cliques: list[list[int]]
    critical_times: list[int]
    # selection_order[j] is the index in ``cliques`` of the j-th greedy pick
    selection_order: list[int]

    def sizes(self) -> list[int]:
        return [len(c) for c in self.cliques]

    def index_of(self) -> dict[int, int]:
        return {v: i for i, clique in enumerate(self.cliques) for v in clique}

    def size_entropy(self) -> float:
        """Sum of ``|C| * log2 |C|`` over all cliques."""
        return sum(k * math.log2(k) for k in self.sizes())


@dataclass
class WorkingSetReport:
    w: dict[int, int]
    sum_log_w: float


def _max_overlap(intervals: Sequence[IntervalRecord]) -> tuple[int, int]:
    """Earliest time of maximum overlap and the overlap count there."""
    events = sorted([(r.t_in, 1) for r in intervals] + [(r.t_out, -1) for r in intervals])
    best, best_t, active = 0, -1, 0
    for t, delta in events:
        active += delta
        if active > best:
            best, best_t = active, t
    return best_t, best


def greedy_clique_partition(intervals: Sequence[IntervalRecord]) -> CliquePartition:
    """Peel off maximum cliques of the interval graph until nothing is left.

    A maximum clique of an interval graph is the set of intervals alive at a
    point of maximum overlap; the earliest such point is used. The result is
    ordered by critical time, the latest insertion among a clique's members.
    """
    remaining = list(intervals)
    picked: list[tuple[int, list[int]]] = []
    while remaining:
        t, _ = _max_overlap(remaining)
        clique = [r for r in remaining if r.t_in <= t <= r.t_out]
        remaining = [r for r in remaining if not (r.t_in <= t <= r.t_out)]
        picked.append((max(r.t_in for r in clique), sorted(r.vertex for r in clique)))

    by_time = sorted(range(len(picked)), key=lambda j: picked[j][0])
    position = {j: i for i, j in enumerate(by_time)}
    return CliquePartition(
        cliques=[picked[j][1] for j in by_time],
        critical_times=[picked[j][0] for j in by_time],
        selection_order=[position[j] for j in range(len(picked))],
    )


def partition_lower_bound(partition: CliquePartition, n: int) -> float:
    """``sum |C| log2 |C| - n log2 e``, a lower bound on ``log2 T``. Not clamped at 0."""
    return partition.size_entropy() - n * LOG2_E


def working_set_sizes(intervals: Sequence[IntervalRecord]) -> WorkingSetReport:
    """Largest working set of each vertex over its heap lifetime.

    A vertex's working set is itself plus everything inserted after it and
    still in the heap. Sweeping events in time order, an insert grows the
    working set of every live vertex, and a delete shrinks the working sets
    of the live vertices inserted before the deleted one.
    """
    events = sorted([(r.t_in, 0, r) for r in intervals] + [(r.t_out, 1, r) for r in intervals])
    current: dict[int, int] = {}
    best: dict[int, int] = {}
    live: list[IntervalRecord] = []  # in insertion order
    for _, kind, rec in events:
        if kind == 0:
            for other in live:
                current[other.vertex] += 1
                if current[other.vertex] > best[other.vertex]:
                    best[other.vertex] = current[other.vertex]
            live.append(rec)
            current[rec.vertex] = best[rec.vertex] = 1
        else:
            idx = live.index(rec)
            for other in live[:idx]:
                current[other.vertex] -= 1
            del live[idx]
    return WorkingSetReport(best, sum(math.log2(x) for x in best.values()))


@dataclass
class Certificate:
    """Checked bound quantities for one run; ``log2_t`` is ``None`` when too big to count."""

    partition: CliquePartition
    working_sets: WorkingSetReport
    lower_bound: float
    ell: int
    log2_t: float | None
    partition_bound: bool | None
    working_set_bound: bool
    path_bound: bool | None
    arcs_forward: bool


def certify(dag: Dag, run: SortRun, t: int | None = None) -> Certificate:
    """Evaluate the clique-partition bounds for ``run`` on ``dag``.

    ``t`` is the exact number of topological orders of ``dag`` if known.
    The working-set inequality is checked in exact integer arithmetic as
    ``prod w(v) <= prod |C|^(2|C|)``.
    """
    partition = greedy_clique_partition(run.intervals)
    ws = working_set_sizes(run.intervals)
    bound = partition_lower_bound(partition, dag.n)
    ell = run.ell if run.ell is not None else len(longest_path(dag))

    lhs = math.prod(ws.w.values())
    rhs = math.prod(k ** (2 * k) for k in partition.sizes())

    index = partition.index_of()
    arcs = run.reduced.original_arcs() if run.reduced is not None else dag.arcs
    forward = all(index[u] < index[v] for u, v in arcs if u in index and v in index)

    if t is None:
        log2_t = l32 = l41 = None
    else:
        log2_t = math.log2(t)
        l32 = bound <= log2_t
        l41 = t * t >= 2 ** (dag.n - ell)
    return Certificate(partition, ws, bound, ell, log2_t, l32, lhs <= rhs, l41, forward)
