"""Per-pair verdicts on the open conjectures and exhaustive scans over groups.

Verdict fields, by record key:

``c21``
    some acyclic matching exists (the weak acyclic matching property, per pair)
``c31``
    every final survivor of the C_i / F^(i) filter is acyclic
``c37``
    some matching is acyclic and has an all-ones sequence
``c314``
    if some matching is acyclic and every matching has an all-ones sequence,
    then every matching is acyclic
``thm35``
    when B with 0 is a subgroup and A, A+B are disjoint (n > 1): every
    sequence is all-ones and every matching is acyclic.  This is a proved
    statement, so a failure means a bug here.

``c21``, ``c31`` and ``c37`` assume A and A+B disjoint and are ``None``
(not applicable) otherwise; ``c314`` is ``None`` whenever its premise fails.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from .classify import acyclic_matchings, classify
from .errors import CapExceededError
from .filter import run_filter
from .group import Element, GroupSpec, format_element, format_elements, format_spec
from .matching import Mode, SubsetPair, default_cap, weak_condition
from .pairs import PairQuery, generate_pairs

CONJECTURES: dict[str, str] = {
    "2.1": "c21",
    "3.1": "c31",
    "3.7": "c37",
    "3.14": "c314",
    "3.5": "thm35",
}
DEFAULT_CONJECTURES = ("2.1", "3.1", "3.7", "3.14", "3.5")


@dataclass(frozen=True)
class PairVerdict:
    spec: GroupSpec
    A: tuple[Element, ...]
    B: tuple[Element, ...]
    mode: Mode
    status: str
    weak_ok: bool
    violations: tuple[tuple[Element, Element, Element], ...]
    matching_count: int
    all_ones_count: int | None = None
    acyclic_count: int | None = None
    c_values: tuple[int, ...] | None = None
    survivor_count: int | None = None
    c21: bool | None = None
    c31: bool | None = None
    c37: bool | None = None
    c314_applicable: bool = False
    c314: bool | None = None
    thm35_applicable: bool = False
    thm35: bool | None = None
    elapsed_ms: float | None = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return len(self.A)

    @property
    def t(self) -> int | None:
        return None if self.c_values is None else len(self.c_values)

    @property
    def key(self) -> tuple:
        return (self.spec.moduli, len(self.A), self.A, self.B)

    def pair_id(self) -> str:
        return f"G={format_spec(self.spec)} A={format_elements(self.A)} B={format_elements(self.B)}"

    def to_record(self) -> dict:
        """Flat record for line-delimited output; key order is fixed."""
        return {
            "group": format_spec(self.spec),
            "A": format_elements(self.A),
            "B": format_elements(self.B),
            "mode": self.mode.value,
            "n": self.n,
            "status": self.status,
            "matching_count": self.matching_count,
            "c_values": None if self.c_values is None else list(self.c_values),
            "t": self.t,
            "survivor_count": self.survivor_count,
            "acyclic_count": self.acyclic_count,
            "all_ones_count": self.all_ones_count,
            "weak_ok": self.weak_ok,
            "c21": self.c21,
            "c31": self.c31,
            "c37": self.c37,
            "c314": self.c314,
            "thm35": self.thm35,
            "violations": [[format_element(x) for x in v] for v in self.violations],
            "elapsed_ms": self.elapsed_ms,
        }


def evaluate_pair(
    pair: SubsetPair, mode: Mode = Mode.STRICT, cap: int | None = None, timings: bool = False
) -> PairVerdict:
    """Evaluate every conjecture and the subgroup theorem on one pair.

    Exceeding the cap yields a verdict with status ``"skipped: cap"``
    instead of raising.
    """
    start = time.perf_counter()
    mode = Mode.parse(mode)
    cap = default_cap() if cap is None else cap
    weak_ok, violations = weak_condition(pair)
    base = dict(spec=pair.spec, A=pair.A, B=pair.B, mode=mode, weak_ok=weak_ok, violations=tuple(violations))

    try:
        classes = classify(pair, mode, cap)
    except CapExceededError as exc:
        return PairVerdict(status="skipped: cap", matching_count=exc.needed, **base)

    n = pair.n
    total = sum(len(c.members) for c in classes)
    acyclic = {m.perm for m in acyclic_matchings(classes)}
    all_ones = {m.perm for c in classes if len(c.fingerprint) == n for m in c.members}

    if total:
        trace = run_filter(pair, mode)
        c_values, survivors = trace.c_values, [m.perm for m in trace.survivors]
    else:
        c_values, survivors = (), []

    c21 = c31 = c37 = None
    if weak_ok:
        c21 = bool(acyclic)
        c31 = all(p in acyclic for p in survivors)
        c37 = bool(acyclic & all_ones)

    c314_applicable = bool(acyclic) and len(all_ones) == total
    c314 = len(acyclic) == total if c314_applicable else None

    thm35_applicable = n > 1 and weak_ok and pair.spec.is_subgroup_with_zero(pair.B)
    thm35 = None
    if thm35_applicable:
        thm35 = len(all_ones) == len(acyclic) == total == math.factorial(n)

    elapsed = round((time.perf_counter() - start) * 1000, 3) if timings else None
    return PairVerdict(
        status="ok",
        matching_count=total,
        all_ones_count=len(all_ones),
        acyclic_count=len(acyclic),
        c_values=c_values,
        survivor_count=len(survivors),
        c21=c21,
        c31=c31,
        c37=c37,
        c314_applicable=c314_applicable,
        c314=c314,
        thm35_applicable=thm35_applicable,
        thm35=thm35,
        elapsed_ms=elapsed,
        **base,
    )


def verdict_check(verdict: PairVerdict, conjecture: str) -> bool | None:
    """True/False when the statement applies to the pair, None otherwise."""
    return getattr(verdict, CONJECTURES[conjecture])


@dataclass
class ConjectureTally:
    checked: int = 0
    holds: int = 0
    counterexamples: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"checked": self.checked, "holds": self.holds, "counterexamples": list(self.counterexamples)}


@dataclass
class ScanSummary:
    groups: list[str]
    sizes: tuple[int, int]
    mode: Mode
    require_weak: bool
    subgroup_only: bool = False
    pairs_evaluated: int = 0
    weak_pairs: int = 0
    skipped_cap: int = 0
    tallies: dict[str, ConjectureTally] = field(default_factory=dict)
    elapsed_s: float | None = None

    def add(self, verdict: PairVerdict) -> None:
        self.pairs_evaluated += 1
        self.weak_pairs += verdict.weak_ok
        if verdict.status != "ok":
            self.skipped_cap += 1
            return
        for cid, tally in self.tallies.items():
            outcome = verdict_check(verdict, cid)
            if outcome is None:
                continue
            tally.checked += 1
            if outcome:
                tally.holds += 1
            else:
                tally.counterexamples.append(verdict.pair_id())

    @property
    def counterexample_count(self) -> int:
        return sum(len(t.counterexamples) for t in self.tallies.values())

    def to_dict(self) -> dict:
        out = {
            "groups": self.groups,
            "sizes": list(self.sizes),
            "mode": self.mode.value,
            "require_weak": self.require_weak,
            "subgroup_only": self.subgroup_only,
            "pairs_evaluated": self.pairs_evaluated,
            "weak_pairs": self.weak_pairs,
            "skipped_cap": self.skipped_cap,
            "conjectures": {cid: t.to_dict() for cid, t in self.tallies.items()},
        }
        if self.elapsed_s is not None:
            out["elapsed_s"] = self.elapsed_s
        return out


@dataclass(frozen=True)
class _Shard:
    spec: GroupSpec
    size: int
    first: int
    mode: Mode
    require_weak: bool
    subgroup_only: bool
    cap: int
    timings: bool


def _run_shard(shard: _Shard) -> list[PairVerdict]:
    query = PairQuery(shard.spec, shard.size, shard.size, require_weak=shard.require_weak)
    out = []
    for pair in generate_pairs(query, size=shard.size, first=shard.first):
        if shard.subgroup_only and not pair.spec.is_subgroup_with_zero(pair.B):
            continue
        out.append(evaluate_pair(pair, shard.mode, shard.cap, shard.timings))
    return out


def _shards(specs, sizes, mode, require_weak, subgroup_only, cap, timings) -> list[_Shard]:
    lo, hi = sizes
    shards = []
    for spec in specs:
        query = PairQuery(spec, max(lo, 1), hi, require_weak=require_weak)
        for s in query.sizes():
            for first in range(spec.order - s + 1):
                shards.append(_Shard(spec, s, first, mode, require_weak, subgroup_only, cap, timings))
    return shards


def iter_verdicts(
    specs: Sequence[GroupSpec],
    sizes: tuple[int, int],
    mode: Mode = Mode.STRICT,
    *,
    jobs: int = 1,
    require_weak: bool = True,
    subgroup_only: bool = False,
    cap: int | None = None,
    timings: bool = False,
) -> Iterator[PairVerdict]:
    """Verdicts for every generated pair in canonical (group, s, A, B) order.

    Work is sharded by (group, size, smallest element of A); shard results
    come back in submission order, so the stream does not depend on ``jobs``.
    """
    cap = default_cap() if cap is None else cap
    shards = _shards(specs, sizes, Mode.parse(mode), require_weak, subgroup_only, cap, timings)
    if jobs <= 1:
        for shard in shards:
            yield from _run_shard(shard)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for verdicts in pool.map(_run_shard, shards, chunksize=4):
            yield from verdicts


def scan(
    specs: Sequence[GroupSpec],
    sizes: tuple[int, int],
    mode: Mode = Mode.STRICT,
    conjectures: Iterable[str] = DEFAULT_CONJECTURES,
    *,
    jobs: int = 1,
    sink: Callable[[PairVerdict], None] | None = None,
    require_weak: bool = True,
    subgroup_only: bool = False,
    cap: int | None = None,
    timings: bool = False,
) -> ScanSummary:
    """Evaluate every pair of the given groups and sizes, tallying each selected statement.

    ``sink`` receives each verdict in canonical order.
    """
    mode = Mode.parse(mode)
    start = time.perf_counter()
    summary = ScanSummary(
        groups=[format_spec(s) for s in specs],
        sizes=tuple(sizes),
        mode=mode,
        require_weak=require_weak,
        subgroup_only=subgroup_only,
        tallies={cid: ConjectureTally() for cid in conjectures},
    )
    for cid in summary.tallies:
        if cid not in CONJECTURES:
            raise ValueError(f"unknown conjecture id {cid!r}; choose from {sorted(CONJECTURES)}")
    for verdict in iter_verdicts(
        specs, sizes, mode, jobs=jobs, require_weak=require_weak,
        subgroup_only=subgroup_only, cap=cap, timings=timings,
    ):
        summary.add(verdict)
        if sink is not None:
            sink(verdict)
    if timings:
        summary.elapsed_s = round(time.perf_counter() - start, 3)
    return summary


def find_counterexample(
    conjecture: str | Callable[[PairVerdict], bool | None],
    query: PairQuery,
    mode: Mode = Mode.STRICT,
    cap: int | None = None,
) -> PairVerdict | None:
    """First pair in stream order on which the statement fails.

    ``conjecture`` is an id from :data:`CONJECTURES` or a predicate returning
    True (holds), False (fails) or None (not applicable).
    """
    if callable(conjecture):
        check = conjecture
    else:
        if conjecture not in CONJECTURES:
            raise ValueError(f"unknown conjecture id {conjecture!r}")
        check = lambda v: verdict_check(v, conjecture)  # noqa: E731
    for pair in generate_pairs(query):
        verdict = evaluate_pair(pair, mode, cap)
        if verdict.status == "ok" and check(verdict) is False:
            return verdict
    return None


def subgroup_pairs(spec: GroupSpec, min_size: int = 2) -> Iterator[SubsetPair]:
    """Every pair with A, A+B disjoint, |A| = |B| >= min_size and B with 0 a subgroup.

    B ranges over all subsets of the non-zero elements, so no subgroup is
    assumed known in advance.
    """
    from itertools import combinations

    elements = list(spec.elements())
    nonzero = [x for x in elements if x != spec.zero()]
    for s in range(min_size, len(nonzero) + 1):
        for B in combinations(nonzero, s):
            if not spec.is_subgroup_with_zero(B):
                continue
            for A in combinations(elements, s):
                members = set(A)
                if any(spec.add(a, b) in members for a in A for b in B):
                    continue
                yield SubsetPair(spec, A, B)
