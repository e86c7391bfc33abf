"""Partition matchings by multiplicity function and decide acyclicity.

A matching is acyclic when no other matching has the same multiplicity
function, i.e. when its class in :func:`classify` is a singleton.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import Sequence

from .errors import StructuralError
from .matching import (
    Element,
    Matching,
    Mode,
    SubsetPair,
    enumerate_matchings,
    fingerprint,
    fingerprint_of,
)

Fingerprint = tuple[tuple[Element, int], ...]


@dataclass(frozen=True)
class MultiplicityClass:
    fingerprint: Fingerprint
    members: tuple[Matching, ...]

    @property
    def is_singleton(self) -> bool:
        return len(self.members) == 1


def classify(
    pair: SubsetPair, mode: Mode = Mode.STRICT, cap: int | None = None
) -> list[MultiplicityClass]:
    """All matchings grouped by multiplicity fingerprint, classes sorted by fingerprint."""
    groups: dict[Fingerprint, list[Matching]] = {}
    for m in enumerate_matchings(pair, mode, cap):
        groups.setdefault(fingerprint_of(pair, m.perm), []).append(m)
    return [MultiplicityClass(fp, tuple(ms)) for fp, ms in sorted(groups.items())]


def _find_class(matching: Matching, classes: Sequence[MultiplicityClass]) -> MultiplicityClass:
    fp = fingerprint(matching)
    k = bisect.bisect_left(classes, fp, key=lambda c: c.fingerprint)
    if k < len(classes) and classes[k].fingerprint == fp and matching in classes[k].members:
        return classes[k]
    raise StructuralError(f"matching {matching.perm} is not among the classified matchings")


def is_acyclic(matching: Matching, classes: Sequence[MultiplicityClass]) -> bool:
    return _find_class(matching, classes).is_singleton


def acyclic_matchings(classes: Sequence[MultiplicityClass]) -> list[Matching]:
    """Members of singleton classes, in permutation order."""
    return sorted((c.members[0] for c in classes if c.is_singleton), key=lambda m: m.perm)


def all_ones_matchings(
    pair: SubsetPair, mode: Mode = Mode.STRICT, cap: int | None = None
) -> list[Matching]:
    """Matchings whose sums a + f(a) are pairwise distinct (sequence 1, ..., 1)."""
    n = pair.n
    return [m for m in enumerate_matchings(pair, mode, cap) if len(fingerprint(m)) == n]


def acyclically_matched(
    pair: SubsetPair,
    mode: Mode = Mode.STRICT,
    classes: Sequence[MultiplicityClass] | None = None,
) -> bool:
    """Whether some acyclic matching exists.  False when there are no matchings at all."""
    if classes is None:
        classes = classify(pair, mode)
    return any(c.is_singleton for c in classes)


def strongly_acyclically_matched(
    pair: SubsetPair,
    mode: Mode = Mode.STRICT,
    classes: Sequence[MultiplicityClass] | None = None,
) -> bool:
    """Whether matchings exist and every one of them is acyclic."""
    if classes is None:
        classes = classify(pair, mode)
    return bool(classes) and all(c.is_singleton for c in classes)
