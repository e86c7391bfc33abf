"""The C_i / F^(i) refinement over acyclicity sequences.

Starting from all matchings, step i keeps the matchings whose i-th sequence
term equals the largest i-th term among the current survivors (that largest
value is C_i).  Every sequence is a partition of n and all survivors share the
prefix (C_1, ..., C_i), so the process stops exactly when that prefix sums
to n.  The final survivors are therefore the matchings whose whole sequence
is lexicographically largest, which :func:`run_filter` finds in one
streaming pass.  :func:`run_filter_iterative` performs the step-by-step
refinement literally and is kept as a cross-check.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import NoMatchingsError
from .matching import Matching, Mode, SubsetPair, acyclicity_sequence, iter_perms, sequence_of


@dataclass(frozen=True)
class FilterTrace:
    c_values: tuple[int, ...]
    survivor_counts: tuple[int, ...]
    survivors: tuple[Matching, ...]
    matching_count: int
    stages: tuple[tuple[Matching, ...], ...] | None = field(default=None, compare=False)

    @property
    def t(self) -> int:
        """The acyclicity index: number of refinement steps with a non-empty survivor set."""
        return len(self.c_values)


class FilterAccumulator:
    """Streaming reduction for the filter.

    Keeps a histogram of sequences plus the permutations attaining the best
    one seen so far.  ``merge`` is commutative and associative, so shards of
    one enumeration may be reduced independently.
    """

    def __init__(self):
        self.seq_counts: Counter[tuple[int, ...]] = Counter()
        self.best: tuple[int, ...] | None = None
        self.best_perms: list[tuple[int, ...]] = []

    def add(self, perm: tuple[int, ...], seq: tuple[int, ...]) -> None:
        self.seq_counts[seq] += 1
        if self.best is None or seq > self.best:
            self.best = seq
            self.best_perms = [perm]
        elif seq == self.best:
            self.best_perms.append(perm)

    def merge(self, other: FilterAccumulator) -> FilterAccumulator:
        out = FilterAccumulator()
        out.seq_counts = self.seq_counts + other.seq_counts
        candidates = [acc for acc in (self, other) if acc.best is not None]
        if candidates:
            out.best = max(acc.best for acc in candidates)
            out.best_perms = [p for acc in candidates if acc.best == out.best for p in acc.best_perms]
        return out

    def finalize(self, pair: SubsetPair, mode: Mode) -> FilterTrace:
        if self.best is None:
            raise NoMatchingsError(f"no matchings exist from A to B in {mode.value} mode")
        best = self.best
        counts = tuple(
            sum(c for s, c in self.seq_counts.items() if s[:i] == best[:i])
            for i in range(1, len(best) + 1)
        )
        survivors = tuple(Matching(pair, p, mode) for p in sorted(self.best_perms))
        return FilterTrace(best, counts, survivors, sum(self.seq_counts.values()))


def run_filter(pair: SubsetPair, mode: Mode = Mode.STRICT) -> FilterTrace:
    """C values, survivor counts and final survivors in one streaming pass."""
    mode = Mode.parse(mode)
    acc = FilterAccumulator()
    for perm in iter_perms(pair, mode):
        acc.add(perm, sequence_of(pair, perm))
    return acc.finalize(pair, mode)


def run_filter_iterative(pair: SubsetPair, mode: Mode = Mode.STRICT) -> FilterTrace:
    """Refine the survivor set one sequence position at a time, keeping every stage."""
    mode = Mode.parse(mode)
    current = [(p, sequence_of(pair, p)) for p in iter_perms(pair, mode)]
    if not current:
        raise NoMatchingsError(f"no matchings exist from A to B in {mode.value} mode")
    total = len(current)
    c_values, stages = [], []
    i = 0
    while True:
        having = [(p, s) for p, s in current if len(s) > i]
        if not having:
            break
        c = max(s[i] for _, s in having)
        current = [(p, s) for p, s in having if s[i] == c]
        c_values.append(c)
        stages.append(tuple(Matching(pair, p, mode) for p, _ in sorted(current)))
        i += 1
    return FilterTrace(
        c_values=tuple(c_values),
        survivor_counts=tuple(len(s) for s in stages),
        survivors=stages[-1],
        matching_count=total,
        stages=tuple(stages),
    )


def sequence_prefix_key(matching: Matching) -> tuple[int, ...]:
    """Sort key under which the filter's survivors are exactly the maxima."""
    return acyclicity_sequence(matching)
