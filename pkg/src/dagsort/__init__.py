"""Sorting the vertices of a DAG under an unknown total order."""

from .dag import CycleError, Dag, DagError, Path, build_dag, is_topological_order, kahn_order, layers, longest_path
from .extensions import ExtensionCount, count_extensions, estimate_log_t, extension_table, sample_extension
from .heap import PairingHeap
from .oracle import ComparisonProvider, HiddenOrder, InconsistentOrderError, make_provider
from .sorter import (
    IntervalRecord,
    ReducedDag,
    SortRun,
    build_reduced_dag,
    insert_search,
    topological_heapsort,
    topological_heapsort_with_insertion,
)

__all__ = [
    "ComparisonProvider",
    "CycleError",
    "Dag",
    "DagError",
    "ExtensionCount",
    "HiddenOrder",
    "InconsistentOrderError",
    "IntervalRecord",
    "PairingHeap",
    "Path",
    "ReducedDag",
    "SortRun",
    "build_dag",
    "build_reduced_dag",
    "count_extensions",
    "estimate_log_t",
    "extension_table",
    "insert_search",
    "is_topological_order",
    "kahn_order",
    "layers",
    "longest_path",
    "make_provider",
    "sample_extension",
    "topological_heapsort",
    "topological_heapsort_with_insertion",
]
