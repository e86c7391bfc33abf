"""Enumerate subset pairs (A, B) of a finite group.

A and A + B are disjoint exactly when B avoids the difference set A - A, so
for each A the admissible B are the s-subsets of the non-zero elements
outside A - A.  Sets are handled as bitmasks over the canonical element
order, which keeps the difference-set computation cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, islice
from math import comb
from typing import Iterator

from .errors import StructuralError, UnsupportedGroupError
from .group import Element, GroupSpec
from .matching import SubsetPair


@dataclass(frozen=True)
class PairQuery:
    spec: GroupSpec
    size_min: int
    size_max: int
    require_weak: bool = True
    limit: int | None = None
    translation_reduce: bool = False

    def __post_init__(self):
        if not self.spec.is_finite:
            raise UnsupportedGroupError(f"cannot enumerate pairs in infinite group {self.spec}")
        if self.size_min < 1:
            raise StructuralError(f"subset size must be at least 1, got {self.size_min}")
        if self.limit is not None and self.limit < 0:
            raise StructuralError("limit must be non-negative")

    def sizes(self) -> range:
        # |B| <= order - 1 since B avoids the identity
        return range(self.size_min, min(self.size_max, self.spec.order - 1) + 1)


class _Tables:
    """Element list plus index-level addition and negation for one group."""

    def __init__(self, spec: GroupSpec):
        self.elements: list[Element] = list(spec.elements())
        index = {x: i for i, x in enumerate(self.elements)}
        self.add = [[index[spec.add(x, y)] for y in self.elements] for x in self.elements]
        self.neg = [index[spec.neg(x)] for x in self.elements]
        self.zero = index[spec.zero()]

    def difference_mask(self, A: tuple[int, ...]) -> int:
        mask = 0
        for a in A:
            row = self.add[a]
            for b in A:
                mask |= 1 << row[self.neg[b]]
        return mask

    def is_translation_minimal(self, A: tuple[int, ...]) -> bool:
        # element indices follow canonical order, so sorted index tuples compare like element tuples
        for g in range(len(self.elements)):
            if tuple(sorted(self.add[a][g] for a in A)) < A:
                return False
        return True


def _a_candidates(tables: _Tables, query: PairQuery, s: int, first: int | None):
    order = len(tables.elements)
    if first is None:
        source = combinations(range(order), s)
    else:
        source = ((first,) + rest for rest in combinations(range(first + 1, order), s - 1))
    for A in source:
        if query.translation_reduce and not tables.is_translation_minimal(A):
            continue
        yield A


def _b_pool(tables: _Tables, query: PairQuery, A: tuple[int, ...]) -> list[int]:
    forbidden = tables.difference_mask(A) if query.require_weak else 1 << tables.zero
    return [j for j in range(len(tables.elements)) if not (forbidden >> j) & 1]


def _index_pairs(query: PairQuery, size: int | None = None, first: int | None = None):
    tables = _Tables(query.spec)
    sizes = query.sizes() if size is None else [size]
    for s in sizes:
        for A in _a_candidates(tables, query, s, first):
            for B in combinations(_b_pool(tables, query, A), s):
                yield tables, A, B


def generate_pairs(
    query: PairQuery, *, size: int | None = None, first: int | None = None
) -> Iterator[SubsetPair]:
    """Stream pairs in lexicographic (s, A, B) order, stopping at ``query.limit``.

    ``size`` and ``first`` restrict the stream to one subset size and to the
    sets A whose smallest element has canonical index ``first``; these are
    the shards used for parallel scans.
    """
    stream = (
        SubsetPair(
            query.spec,
            tuple(tables.elements[i] for i in A),
            tuple(tables.elements[j] for j in B),
        )
        for tables, A, B in _index_pairs(query, size, first)
    )
    if query.limit is not None:
        stream = islice(stream, query.limit)
    return stream


def count_pairs(query: PairQuery) -> int:
    """Length of :func:`generate_pairs` without building any pair."""
    order = query.spec.order
    if not query.require_weak and not query.translation_reduce:
        total = sum(comb(order, s) * comb(order - 1, s) for s in query.sizes())
    else:
        tables = _Tables(query.spec)
        total = 0
        for s in query.sizes():
            for A in _a_candidates(tables, query, s, None):
                total += comb(len(_b_pool(tables, query, A)), s)
                if query.limit is not None and total >= query.limit:
                    return query.limit
    return total if query.limit is None else min(total, query.limit)
