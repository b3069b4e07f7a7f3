"""Topological heapsort and topological heapsort with insertion.

Both sorters recover the hidden order of a DAG's vertices, asking the
:class:`~dagsort.oracle.ComparisonProvider` only the comparisons the graph
does not already answer. Every heap lifetime is recorded as an
:class:`IntervalRecord` so a run can be analysed afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Sequence

from .dag import CycleError, Dag, Path, _assemble, find_cycle, kahn_order, longest_path
from .heap import PairingHeap
from .oracle import ComparisonProvider


class IntervalRecord(NamedTuple):
    """Heap lifetime of one vertex, in global heap-event timestamps."""

    vertex: int
    t_in: int
    t_out: int


@dataclass
class ReducedDag:
    """The graph the insertion variant actually heapsorts.

    ``dag`` is indexed ``0..len(to_original)-1``; ``to_original`` maps those
    indices back to the input graph. ``path`` holds the longest path of the
    input graph in path order and ``marked`` the path vertices that survive
    into ``dag`` (original ids, in path order).
    """

    dag: Dag
    to_original: list[int]
    path: list[int]
    marked: list[int]

    @property
    def n(self) -> int:
        return self.dag.n

    def original_arcs(self) -> list[tuple[int, int]]:
        ids = self.to_original
        return [(ids[u], ids[v]) for u, v in self.dag.arcs]


@dataclass
class SortRun:
    order: list[int]
    comparisons: int
    intervals: list[IntervalRecord]
    algorithm: str
    ell: int | None = None
    reduced: ReducedDag | None = field(default=None, repr=False)

    @property
    def reduced_n(self) -> int | None:
        return None if self.reduced is None else self.reduced.n


def _heapsort(
    dag: Dag,
    less: Callable[[int, int], bool],
    on_delete: Callable[[int], None],
    intervals: list[IntervalRecord] | None,
    label: Sequence[int] | None = None,
) -> None:
    """Run Algorithm 1 on ``dag``, calling ``on_delete`` for each deleted vertex.

    ``label`` maps vertex indices to the ids that ``less``, ``on_delete`` and
    the interval records use (identity when ``None``). The heap holds labels
    directly so each comparison is a single call.
    """
    n = dag.n
    if label is None:
        label = range(n)
        index = label
        capacity = n
    else:
        capacity = max(label, default=-1) + 1
        index = [0] * capacity
        for i, v in enumerate(label):
            index[v] = i
    out_adj = dag.out_adj
    indeg = list(dag.in_degree)
    heap = PairingHeap(capacity, less)
    insert, delete_min = heap.insert, heap.delete_min
    t_in = [0] * n if intervals is not None else None
    clock = 0

    for v in range(n):
        if indeg[v] == 0:
            insert(label[v])
            if t_in is not None:
                t_in[v] = clock
            clock += 1

    done = 0
    while heap:
        x = delete_min()
        v = index[x]
        if intervals is not None:
            intervals.append(IntervalRecord(x, t_in[v], clock))
        clock += 1
        done += 1
        on_delete(x)
        for w in out_adj[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                insert(label[w])
                if t_in is not None:
                    t_in[w] = clock
                clock += 1

    if done < n:
        raise CycleError([label[v] for v in find_cycle(dag, [d > 0 for d in indeg])])


def topological_heapsort(dag: Dag, provider: ComparisonProvider, record: bool = True) -> SortRun:
    """Sort ``dag``'s vertices by keeping the current sources in a pairing heap.

    Raises :class:`CycleError` if the graph is not acyclic. ``dag`` is left
    untouched; in-degrees are decremented on a private copy.
    """
    start = provider.count
    order: list[int] = []
    intervals: list[IntervalRecord] | None = [] if record else None
    _heapsort(dag, provider.less, order.append, intervals)
    return SortRun(order, provider.count - start, intervals or [], "ths")


def build_reduced_dag(dag: Dag, path: Path | Sequence[int]) -> ReducedDag:
    """Collapse a longest path of ``dag`` down to its marked vertices.

    For each off-path vertex ``v`` only the arc from the last path vertex
    into ``v`` and the arc from ``v`` to the first path vertex out of ``v``
    survive, and both endpoints get marked. The last path vertex is always
    marked. Consecutive marked vertices are then chained by new arcs and the
    unmarked path vertices disappear. Arcs between two path vertices are
    dropped too, since the chain implies them.
    """
    path_vertices = list(path.vertices if isinstance(path, Path) else path)
    n = dag.n
    pos = [-1] * n
    for i, v in enumerate(path_vertices):
        pos[v] = i

    last_in = [-1] * n   # last path position with an arc into v
    first_out = [n] * n  # first path position with an arc out of v
    off_arcs: list[tuple[int, int]] = []
    for u, v in dag.arcs:
        pu, pv = pos[u], pos[v]
        if pu < 0:
            if pv < 0:
                off_arcs.append((u, v))
            elif pv < first_out[u]:
                first_out[u] = pv
        elif pv < 0 and pu > last_in[v]:
            last_in[v] = pu

    is_marked = [False] * len(path_vertices)
    if path_vertices:
        is_marked[-1] = True
    for v in range(n):
        if pos[v] < 0:
            if last_in[v] >= 0:
                is_marked[last_in[v]] = True
            if first_out[v] < n:
                is_marked[first_out[v]] = True
    marked = [path_vertices[i] for i, flag in enumerate(is_marked) if flag]

    keep = [pos[v] < 0 or is_marked[pos[v]] for v in range(n)]
    to_original = [v for v in range(n) if keep[v]]
    new_id = [-1] * n
    for i, v in enumerate(to_original):
        new_id[v] = i

    arcs = [(new_id[u], new_id[v]) for u, v in off_arcs]
    for v in range(n):
        if pos[v] < 0:
            if last_in[v] >= 0:
                arcs.append((new_id[path_vertices[last_in[v]]], new_id[v]))
            if first_out[v] < n:
                arcs.append((new_id[v], new_id[path_vertices[first_out[v]]]))
    for x, y in zip(marked, marked[1:]):
        arcs.append((new_id[x], new_id[y]))
    return ReducedDag(_assemble(len(to_original), arcs), to_original, path_vertices, marked)


def insert_search(items: Sequence[int], v: int, provider: ComparisonProvider, lo: int = 0) -> int:
    """Count the elements of ``items[lo:]`` that are less than ``v``.

    ``items[lo:]`` must be ascending under the hidden order. Probes 1-based
    positions 1, 2, 4, 8, ... of the suffix until one exceeds ``v`` or the
    suffix runs out, then binary-searches the last unresolved gap. A result
    of ``k`` costs at most ``2 * floor(log2(k + 1)) + 2`` comparisons.
    """
    less = provider.less
    size = len(items) - lo
    below = 0  # suffix positions 1..below are known to be < v
    probe = 1
    hi = size
    while probe <= size:
        if less(v, items[lo + probe - 1]):
            hi = probe - 1
            break
        below = probe
        probe *= 2
    # answer lies in [below, hi]
    while below < hi:
        mid = (below + hi) // 2
        if less(items[lo + mid], v):
            below = mid + 1
        else:
            hi = mid
    return below


def topological_heapsort_with_insertion(
    dag: Dag,
    provider: ComparisonProvider,
    record: bool = True,
    skip_reduction_epsilon: float | None = None,
) -> SortRun:
    """Heapsort only the off-path part of the graph; gallop the rest into place.

    A longest path is pulled out first and never enters the heap. Each
    vertex leaving the heap either is a marked path vertex, in which case the
    remaining path prefix through it is emitted without comparisons, or is
    placed into the remaining path by :func:`insert_search`.

    With ``skip_reduction_epsilon`` set, graphs whose longest path has at most
    ``(1 - epsilon) * n`` vertices are handed to plain topological heapsort.
    """
    start = provider.count
    topo = kahn_order(dag)
    path = longest_path(dag, topo)
    ell = len(path)

    if skip_reduction_epsilon is not None and ell <= (1.0 - skip_reduction_epsilon) * dag.n:
        run = topological_heapsort(dag, provider, record)
        run.ell = ell
        return run

    reduced = build_reduced_dag(dag, path)
    ids = reduced.to_original
    chain = reduced.path
    chain_pos = {v: i for i, v in enumerate(chain)}
    order: list[int] = []
    emit = order.extend
    cursor = 0  # chain[:cursor] is already in the output

    def on_delete(v: int) -> None:
        nonlocal cursor
        p = chain_pos.get(v)
        if p is not None:
            emit(chain[cursor:p + 1])
            cursor = p + 1
        else:
            k = insert_search(chain, v, provider, cursor)
            emit(chain[cursor:cursor + k])
            cursor += k
            order.append(v)

    intervals: list[IntervalRecord] | None = [] if record else None
    _heapsort(reduced.dag, provider.less, on_delete, intervals, ids)
    emit(chain[cursor:])
    return SortRun(order, provider.count - start, intervals or [], "thsi", ell, reduced)


ALGORITHMS = {
    "ths": topological_heapsort,
    "thsi": topological_heapsort_with_insertion,
}
