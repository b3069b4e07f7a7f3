"""Plain-text graph and order files.

Graph file: a header ``n m`` followed by exactly ``m`` lines ``u v`` with
0-based vertex ids. Order file: ``n`` lines with one vertex id each, smallest
first. In both, blank lines and lines starting with ``#`` are skipped.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .dag import Dag, DagError, build_dag


class FormatError(DagError):
    pass


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield lineno, stripped.split()


def _ints(fields: list[str], lineno: int, arity: int) -> list[int]:
    if len(fields) != arity:
        raise FormatError(f"line {lineno}: expected {arity} integers, got {len(fields)} fields")
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise FormatError(f"line {lineno}: not an integer in {' '.join(fields)!r}") from None


def parse_dag(text: str) -> Dag:
    lines = _content_lines(text)
    try:
        lineno, fields = next(lines)
    except StopIteration:
        raise FormatError("empty graph file: missing 'n m' header") from None
    n, m = _ints(fields, lineno, 2)
    if n < 0 or m < 0:
        raise FormatError(f"line {lineno}: negative count in header")
    arcs = []
    for lineno, fields in lines:
        arcs.append(tuple(_ints(fields, lineno, 2)))
    if len(arcs) != m:
        raise FormatError(f"header declares {m} arcs but file has {len(arcs)}")
    return build_dag(n, arcs)


def format_dag(dag: Dag) -> str:
    out = [f"{dag.n} {dag.m}"]
    out.extend(f"{u} {v}" for u, v in dag.arcs)
    return "\n".join(out) + "\n"


def parse_order(text: str, n: int | None = None) -> list[int]:
    order = [_ints(fields, lineno, 1)[0] for lineno, fields in _content_lines(text)]
    size = len(order) if n is None else n
    if sorted(order) != list(range(size)):
        raise FormatError(f"order file is not a permutation of 0..{size - 1}")
    return order


def format_order(order: Iterable[int]) -> str:
    return "".join(f"{v}\n" for v in order)


def read_dag(path: str | Path) -> Dag:
    return parse_dag(Path(path).read_text())


def write_dag(path: str | Path, dag: Dag) -> None:
    Path(path).write_text(format_dag(dag))


def read_order(path: str | Path, n: int | None = None) -> list[int]:
    return parse_order(Path(path).read_text(), n)


def write_order(path: str | Path, order: Sequence[int]) -> None:
    Path(path).write_text(format_order(order))
