"""Subset pairs, matchings between them, and multiplicity functions.

A matching from A to B is a bijection f with a + f(a) not in A for every a.
It is stored as an index permutation ``perm`` with f(A[i]) = B[perm[i]].
``Mode.BIJECTION`` drops the a + f(a) not in A constraint and admits every
bijection; it exists only to reproduce numbers computed that way.
"""

from __future__ import annotations

import enum
import math
import os
from collections import Counter
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from .errors import (
    CapExceededError,
    DuplicateElementError,
    SizeMismatchError,
    StructuralError,
    ValidationError,
    ZeroInBError,
)
from .group import Element, GroupSpec, format_element

DEFAULT_CAP = math.factorial(10)
CAP_ENV = "ACYMATCH_CAP"


class Mode(str, enum.Enum):
    STRICT = "strict"
    BIJECTION = "bijection"

    @classmethod
    def parse(cls, value: str | Mode) -> Mode:
        if isinstance(value, Mode):
            return value
        if value in ("bijection-compat", "compat"):
            return cls.BIJECTION
        return cls(value)


def default_cap() -> int:
    """Materialization cap, overridable through the ACYMATCH_CAP variable."""
    raw = os.environ.get(CAP_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise StructuralError(f"{CAP_ENV}={raw!r} is not an integer") from None


@dataclass(frozen=True)
class SubsetPair:
    """A validated pair (A, B) with precomputed sums and forbidden cells.

    ``sums[i][j]`` is A[i] + B[j]; ``forbidden[i][j]`` is true when that sum
    lies in A.  Build instances through :func:`build_pair`.
    """

    spec: GroupSpec
    A: tuple[Element, ...]
    B: tuple[Element, ...]
    sums: tuple[tuple[Element, ...], ...] = field(init=False, repr=False, compare=False)
    forbidden: tuple[tuple[bool, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        spec = self.spec
        sums = tuple(tuple(spec.add(a, b) for b in self.B) for a in self.A)
        members = set(self.A)
        object.__setattr__(self, "sums", sums)
        object.__setattr__(
            self, "forbidden", tuple(tuple(s in members for s in row) for row in sums)
        )

    @property
    def n(self) -> int:
        return len(self.A)

    @property
    def zero_in_B(self) -> bool:
        return self.spec.zero() in self.B

    def allowed(self) -> list[list[int]]:
        """For each A-index, the B-indices it may be sent to in strict mode."""
        return [[j for j, bad in enumerate(row) if not bad] for row in self.forbidden]


def build_pair(spec: GroupSpec, A: Iterable[Sequence[int]], B: Iterable[Sequence[int]]) -> SubsetPair:
    A = [tuple(a) for a in A]
    B = [tuple(b) for b in B]
    for x in A + B:
        if not spec.is_canonical(x):
            raise StructuralError(f"element {x} is not canonical in group {spec}")
    if len(A) != len(B):
        raise SizeMismatchError(f"|A| = {len(A)} but |B| = {len(B)}")
    if not A:
        raise SizeMismatchError("A and B must be non-empty")
    for name, xs in (("A", A), ("B", B)):
        if len(set(xs)) != len(xs):
            dup = next(x for x in xs if xs.count(x) > 1)
            raise DuplicateElementError(f"{name} contains {format_element(dup)} twice")
    if spec.zero() in B:
        raise ZeroInBError("B contains the identity element")
    return SubsetPair(spec, tuple(sorted(A)), tuple(sorted(B)))


def weak_condition(pair: SubsetPair) -> tuple[bool, list[tuple[Element, Element, Element]]]:
    """Check A and A+B are disjoint; list every (a, b, a+b) with a+b in A."""
    violations = [
        (a, b, pair.sums[i][j])
        for i, a in enumerate(pair.A)
        for j, b in enumerate(pair.B)
        if pair.forbidden[i][j]
    ]
    return not violations, violations


@dataclass(frozen=True)
class Matching:
    pair: SubsetPair
    perm: tuple[int, ...]
    mode: Mode = Mode.STRICT

    def __post_init__(self):
        n = self.pair.n
        if len(self.perm) != n or sorted(self.perm) != list(range(n)):
            raise StructuralError(f"{self.perm} is not a permutation of 0..{n - 1}")
        if self.mode is Mode.STRICT:
            for i, j in enumerate(self.perm):
                if self.pair.forbidden[i][j]:
                    a, b = self.pair.A[i], self.pair.B[j]
                    raise ValidationError(
                        f"{format_element(a)} -> {format_element(b)} lands back in A"
                    )

    def rules(self) -> list[tuple[Element, Element]]:
        """The assignments a -> f(a) in A-order."""
        return [(a, self.pair.B[j]) for a, j in zip(self.pair.A, self.perm)]

    def image(self, a: Element) -> Element:
        return self.pair.B[self.perm[self.pair.A.index(a)]]


def matching_from_rules(
    pair: SubsetPair, rules: Iterable[tuple[Sequence[int], Sequence[int]]], mode: Mode = Mode.STRICT
) -> Matching:
    """Build a matching from explicit (a, f(a)) assignments."""
    mapping = {tuple(a): tuple(b) for a, b in rules}
    if set(mapping) != set(pair.A):
        raise StructuralError("rules must assign every element of A exactly once")
    try:
        perm = tuple(pair.B.index(mapping[a]) for a in pair.A)
    except ValueError:
        raise StructuralError("rules map outside of B") from None
    return Matching(pair, perm, Mode.parse(mode))


def iter_perms(pair: SubsetPair, mode: Mode = Mode.STRICT) -> Iterator[tuple[int, ...]]:
    """Stream permutations in lexicographic order without any cap.

    Strict mode backtracks over the allowed cells, pruning a branch as soon as
    an A-index has no unused allowed target.
    """
    n = pair.n
    if Mode.parse(mode) is Mode.BIJECTION or not any(any(r) for r in pair.forbidden):
        yield from permutations(range(n))
        return

    allowed = pair.allowed()
    perm = [0] * n
    used = [False] * n

    def extend(i: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(perm)
            return
        for j in allowed[i]:
            if not used[j]:
                used[j] = True
                perm[i] = j
                yield from extend(i + 1)
                used[j] = False

    yield from extend(0)


def count_matchings(pair: SubsetPair, mode: Mode = Mode.STRICT) -> int:
    """Number of matchings, by a subset DP over the allowed cells (a permanent)."""
    n = pair.n
    if Mode.parse(mode) is Mode.BIJECTION:
        return math.factorial(n)
    allowed_masks = [sum(1 << j for j in row) for row in pair.allowed()]
    ways = [0] * (1 << n)
    ways[0] = 1
    for mask in range(1 << n):
        w = ways[mask]
        if not w:
            continue
        i = mask.bit_count()
        if i == n:
            continue
        free = allowed_masks[i] & ~mask
        while free:
            low = free & -free
            ways[mask | low] += w
            free ^= low
    return ways[(1 << n) - 1]


def enumerate_matchings(
    pair: SubsetPair, mode: Mode = Mode.STRICT, cap: int | None = None
) -> Iterator[Matching]:
    """Matchings in lexicographic permutation order.

    Refuses up front with :class:`CapExceededError` when more than ``cap``
    matchings would be produced.
    """
    mode = Mode.parse(mode)
    cap = default_cap() if cap is None else cap
    total = count_matchings(pair, mode)
    if total > cap:
        raise CapExceededError(total, cap)
    return (Matching(pair, p, mode) for p in iter_perms(pair, mode))


def fingerprint_of(pair: SubsetPair, perm: Sequence[int]) -> tuple[tuple[Element, int], ...]:
    sums = pair.sums
    counts = Counter(sums[i][j] for i, j in enumerate(perm))
    return tuple(sorted(counts.items()))


def sequence_of(pair: SubsetPair, perm: Sequence[int]) -> tuple[int, ...]:
    sums = pair.sums
    counts = Counter(sums[i][j] for i, j in enumerate(perm))
    return tuple(sorted(counts.values(), reverse=True))


def multiplicity(matching: Matching) -> dict[Element, int]:
    """m_f(x) = #{a in A : a + f(a) = x}, for x with a positive count, in canonical order."""
    return dict(fingerprint_of(matching.pair, matching.perm))


def fingerprint(matching: Matching) -> tuple[tuple[Element, int], ...]:
    return fingerprint_of(matching.pair, matching.perm)


def support(matching: Matching) -> list[Element]:
    return [x for x, _ in fingerprint_of(matching.pair, matching.perm)]


def acyclicity_sequence(matching: Matching) -> tuple[int, ...]:
    """The multiplicities over the support, sorted non-increasingly."""
    return sequence_of(matching.pair, matching.perm)
