"""Seeded instance generators.

Every generator plants the hidden order first and only draws arcs that go
forward in it, so the returned order is always consistent with the graph.
"""

from __future__ import annotations

import numpy as np

from .dag import Dag, build_dag

KINDS = ("chain", "antichain", "random", "layered")


def chain(n: int) -> tuple[Dag, list[int]]:
    return build_dag(n, [(i, i + 1) for i in range(n - 1)]), list(range(n))


def antichain(n: int, seed: int = 0) -> tuple[Dag, list[int]]:
    rng = np.random.default_rng(seed)
    return build_dag(n, []), rng.permutation(n).tolist()


def _forward_pairs(n: int, p: float, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    """Each pair ``i < j`` independently with probability ``p``, in row-major order.

    Draws geometric gaps between selected pair indices, so the cost is
    proportional to the number of pairs chosen rather than ``n**2``.
    """
    total = n * (n - 1) // 2
    if total == 0 or p <= 0.0:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty
    chunk = int(total * p * 1.05) + 64
    picks = []
    last = -1
    while last < total:
        gaps = rng.geometric(p, size=chunk)
        # tiny p can overflow int64; any gap past the end is equivalent
        gaps[(gaps <= 0) | (gaps > total)] = total + 1
        idx = last + np.cumsum(gaps)
        picks.append(idx)
        last = int(idx[-1])
    linear = np.concatenate(picks)
    linear = linear[linear < total]
    rows = np.arange(n, dtype=np.int64)
    row_start = rows * (2 * n - rows - 1) // 2
    i = np.searchsorted(row_start, linear, side="right") - 1
    j = linear - row_start[i] + i + 1
    return i, j


def random_dag(n: int, p: float, seed: int = 0) -> tuple[Dag, list[int]]:
    """Forward arcs of a seeded random permutation, each kept with probability ``p``."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    perm = rng.permutation(n)
    i, j = _forward_pairs(n, p, rng)
    arcs = np.stack([perm[i], perm[j]], axis=1).tolist() if len(i) else []
    return build_dag(n, arcs), perm.tolist()


def layered(n: int, layers: int, p: float = 0.5, seed: int = 0) -> tuple[Dag, list[int]]:
    """Split a seeded permutation into ``layers`` consecutive blocks.

    Arcs join vertices of adjacent blocks, each with probability ``p``.
    """
    if layers < 1:
        raise ValueError(f"need at least one layer, got {layers}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    perm = rng.permutation(n)
    blocks = np.array_split(perm, min(layers, max(n, 1)))
    arcs = []
    for lower, upper in zip(blocks, blocks[1:]):
        keep = rng.random((len(lower), len(upper))) < p
        a, b = np.nonzero(keep)
        arcs.extend(zip(lower[a].tolist(), upper[b].tolist()))
    return build_dag(n, arcs), perm.tolist()


def generate(kind: str, n: int, p: float = 0.3, layers: int = 3, seed: int = 0) -> tuple[Dag, list[int]]:
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    if kind == "chain":
        return chain(n)
    if kind == "antichain":
        return antichain(n, seed)
    if kind == "random":
        return random_dag(n, p, seed)
    if kind == "layered":
        return layered(n, layers, p, seed)
    raise ValueError(f"unknown instance kind {kind!r}; expected one of {', '.join(KINDS)}")
