"""Pairing heap over integer items, ordered by an external comparison.

Used as the working-set heap for topological heapsort. Nodes live in flat
child/sibling arrays indexed by the item itself, so each item may be in the
heap at most once at a time and must lie in ``range(capacity)``.
"""

from __future__ import annotations

from typing import Callable

_NIL = -1


class PairingHeap:
    """Min pairing heap with two-pass delete-min.

    ``less(a, b)`` decides the order; every comparison the heap makes goes
    through it. Insert links the new item with the root (at most one
    comparison). Delete-min pairs the root's children left to right, then
    folds the pairs right to left.
    """

    __slots__ = ("_less", "_child", "_sibling", "_root", "_size")

    def __init__(self, capacity: int, less: Callable[[int, int], bool]):
        self._less = less
        self._child = [_NIL] * capacity
        self._sibling = [_NIL] * capacity
        self._root = _NIL
        self._size = 0

    def __len__(self) -> int:
        return self._size

    def __bool__(self) -> bool:
        return self._size > 0

    def is_empty(self) -> bool:
        return self._size == 0

    def find_min(self) -> int:
        if self._root == _NIL:
            raise IndexError("find_min on an empty heap")
        return self._root

    def _link(self, a: int, b: int) -> int:
        # the loser becomes the leftmost child of the winner
        if self._less(b, a):
            a, b = b, a
        self._sibling[b] = self._child[a]
        self._child[a] = b
        return a

    def insert(self, v: int) -> None:
        self._child[v] = _NIL
        self._sibling[v] = _NIL
        root = self._root
        self._root = v if root == _NIL else self._link(root, v)
        self._size += 1

    def delete_min(self) -> int:
        root = self._root
        if root == _NIL:
            raise IndexError("delete_min on an empty heap")
        child, sibling, less = self._child, self._sibling, self._less

        # pass 1: link children pairwise, left to right (links inlined for speed)
        pairs = []
        c = child[root]
        while c != _NIL:
            d = sibling[c]
            if d == _NIL:
                pairs.append(c)
                break
            nxt = sibling[d]
            if less(d, c):
                c, d = d, c
            sibling[d] = child[c]
            child[c] = d
            pairs.append(c)
            c = nxt

        # pass 2: fold the pair winners right to left
        if pairs:
            acc = pairs.pop()
            while pairs:
                a = pairs.pop()
                if less(acc, a):
                    a, acc = acc, a
                sibling[acc] = child[a]
                child[a] = acc
                acc = a
            sibling[acc] = _NIL
            self._root = acc
        else:
            self._root = _NIL
        child[root] = _NIL
        self._size -= 1
        return root
