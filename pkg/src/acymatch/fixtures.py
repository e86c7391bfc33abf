"""Published reference computations and a runner that re-derives them.

Each fixture recomputes a claim from scratch and reports ``pass``,
``fail`` or ``discrepancy``.  A discrepancy is an expected mismatch with the
published premise (the claim is reported, not counted as a failure).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Callable

from .classify import acyclic_matchings, classify, is_acyclic, strongly_acyclically_matched
from .filter import run_filter
from .group import GroupSpec, format_element, format_set
from .matching import (
    Matching,
    Mode,
    SubsetPair,
    acyclicity_sequence,
    build_pair,
    count_matchings,
    enumerate_matchings,
    fingerprint,
    matching_from_rules,
    support,
    weak_condition,
)


def _cyclic_pair(n: int, A, B) -> SubsetPair:
    return build_pair(GroupSpec((n,)), [(a,) for a in A], [(b,) for b in B])


def _rules(A, images):
    return [((a,), (b,)) for a, b in zip(A, images)]


Z14_A = (1, 3, 5, 7)
Z14_B = (1, 3, 7, 9)

# (images of 1, 3, 5, 7), support, sequence; rows in published order
Z14_TABLE: list[tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]] = [
    ((1, 3, 7, 9), (2, 6, 12), (2, 1, 1)),
    ((1, 3, 9, 7), (0, 2, 6), (2, 1, 1)),
    ((1, 9, 3, 7), (0, 2, 8, 12), (1, 1, 1, 1)),
    ((1, 9, 7, 3), (2, 10, 12), (2, 1, 1)),
    ((1, 7, 3, 9), (2, 8, 10), (2, 1, 1)),
    ((1, 7, 9, 3), (0, 2, 10), (2, 1, 1)),
    ((3, 1, 7, 9), (2, 4, 12), (2, 1, 1)),
    ((3, 1, 9, 7), (0, 4), (2, 2)),
    ((3, 7, 9, 1), (0, 4, 8, 10), (1, 1, 1, 1)),
    ((3, 7, 1, 9), (2, 4, 6, 10), (1, 1, 1, 1)),
    ((3, 9, 1, 7), (0, 4, 6, 12), (1, 1, 1, 1)),
    ((3, 9, 7, 1), (4, 8, 12), (2, 1, 1)),
    ((7, 1, 3, 9), (2, 4, 8), (2, 1, 1)),
    ((7, 1, 9, 3), (0, 4, 8, 10), (1, 1, 1, 1)),
    ((7, 3, 1, 9), (2, 6, 8), (2, 1, 1)),
    ((7, 3, 9, 1), (0, 6, 8), (2, 1, 1)),
    ((7, 9, 1, 3), (6, 8, 10, 12), (1, 1, 1, 1)),
    ((7, 9, 3, 1), (8, 12), (3, 1)),
    ((9, 1, 3, 7), (0, 4, 8, 10), (1, 1, 1, 1)),
    ((9, 1, 7, 3), (4, 10, 12), (2, 1, 1)),
    ((9, 3, 1, 7), (0, 6, 10), (2, 1, 1)),
    ((9, 3, 7, 1), (6, 8, 10, 12), (1, 1, 1, 1)),
    ((9, 7, 3, 1), (8, 10), (2, 2)),
    ((9, 7, 1, 3), (6, 10), (3, 1)),
]


def z14_pair() -> SubsetPair:
    return _cyclic_pair(14, Z14_A, Z14_B)


def z14_row(k: int) -> Matching:
    """Matching of the 1-based row ``k`` of the reference table."""
    return matching_from_rules(z14_pair(), _rules(Z14_A, Z14_TABLE[k - 1][0]))


Z23_A = (0, 1, 2, 3, 12, 13, 14, 15)
Z23_B = (4, 5, 6, 7, 8, 16, 17, 18)
Z23_SURVIVOR_IMAGES = [
    (7, 6, 5, 4, 18, 17, 16, 8),
    (8, 7, 6, 5, 4, 18, 17, 16),
    (8, 18, 17, 16, 7, 6, 5, 4),
]
Z23_SURVIVOR_SUPPORTS = [(0, 7), (8, 16), (8, 19)]
# two bijections with all-ones sequences and equal multiplicity functions
Z23_TWIN_IMAGES = [
    (18, 16, 17, 5, 4, 7, 8, 6),
    (18, 16, 17, 5, 4, 8, 6, 7),
]
Z23_ALL_ONES = 2436
Z23_ACYCLIC_ALL_ONES = 8


def z23_pair() -> SubsetPair:
    return _cyclic_pair(23, Z23_A, Z23_B)


def z23_matching(images, mode: Mode = Mode.BIJECTION) -> Matching:
    return matching_from_rules(z23_pair(), _rules(Z23_A, images), mode)


def integer_pair() -> SubsetPair:
    return build_pair(GroupSpec((0,)), [(2,), (4,)], [(3,), (1,)])


def z9_subgroup_pair() -> SubsetPair:
    return _cyclic_pair(9, (1, 2), (3, 6))


@dataclass(frozen=True)
class FixtureResult:
    name: str
    status: str  # "pass", "fail" or "discrepancy"
    detail: str

    @property
    def ok(self) -> bool:
        return self.status != "fail"


def _check(name: str, ok: bool, detail: str) -> FixtureResult:
    return FixtureResult(name, "pass" if ok else "fail", detail)


def check_z14_table() -> FixtureResult:
    pair = z14_pair()
    computed = {
        tuple(b[0] for _, b in m.rules()): (tuple(x[0] for x in support(m)), acyclicity_sequence(m))
        for m in enumerate_matchings(pair)
    }
    expected = {images: (supp, seq) for images, supp, seq in Z14_TABLE}
    bad = [k + 1 for k, row in enumerate(Z14_TABLE) if computed.get(row[0]) != row[1:]]
    ok = len(computed) == 24 and computed == expected
    return _check("z14-table", ok, f"{len(computed)} matchings, mismatched rows: {bad or 'none'}")


def check_z14_filter() -> FixtureResult:
    pair = z14_pair()
    trace = run_filter(pair)
    classes = classify(pair)
    expected = sorted([z14_row(18), z14_row(24)], key=lambda m: m.perm)
    ok = (
        trace.c_values == (3, 1)
        and trace.t == 2
        and list(trace.survivors) == expected
        and all(is_acyclic(m, classes) for m in trace.survivors)
    )
    return _check(
        "z14-filter",
        ok,
        f"C = {trace.c_values}, t = {trace.t}, "
        f"survivors {'are' if list(trace.survivors) == expected else 'are not'} rows 18 and 24",
    )


def check_z14_weak() -> FixtureResult:
    ok, violations = weak_condition(z14_pair())
    return _check("z14-weak-condition", ok and not violations, "A and A+B are disjoint")


def check_z14_equal_multiplicities() -> FixtureResult:
    pair = z14_pair()
    classes = classify(pair)
    f9, f19 = z14_row(9), z14_row(19)
    same = fingerprint(f9) == fingerprint(f19)
    ok = same and not is_acyclic(f9, classes) and not is_acyclic(f19, classes)
    ok = ok and not strongly_acyclically_matched(pair, classes=classes)
    return _check(
        "z14-equal-multiplicities",
        ok,
        f"rows 9 and 19 {'share' if same else 'do not share'} the multiplicity "
        f"{format_set(support(f9))} -> 1; pair not strongly acyclically matched",
    )


def check_z23_bijection_filter() -> FixtureResult:
    pair = z23_pair()
    trace = run_filter(pair, Mode.BIJECTION)
    classes = classify(pair, Mode.BIJECTION)
    expected = sorted((z23_matching(im) for im in Z23_SURVIVOR_IMAGES), key=lambda m: m.perm)
    supports = sorted(tuple(x[0] for x in support(m)) for m in trace.survivors)
    ok = (
        trace.matching_count == factorial(8)
        and trace.c_values == (7, 1)
        and list(trace.survivors) == expected
        and supports == sorted(Z23_SURVIVOR_SUPPORTS)
        and all(acyclicity_sequence(m) == (7, 1) for m in trace.survivors)
        and all(is_acyclic(m, classes) for m in trace.survivors)
    )
    return _check(
        "z23-bijection-filter",
        ok,
        f"{trace.matching_count} bijections, C = {trace.c_values}, t = {trace.t}, "
        f"survivor supports {supports}",
    )


def check_z23_twins() -> FixtureResult:
    f, g = (z23_matching(im) for im in Z23_TWIN_IMAGES)
    classes = classify(z23_pair(), Mode.BIJECTION)
    ok = (
        fingerprint(f) == fingerprint(g)
        and acyclicity_sequence(f) == acyclicity_sequence(g) == (1,) * 8
        and not is_acyclic(f, classes)
        and not is_acyclic(g, classes)
    )
    return _check("z23-shared-class", ok, "two all-ones bijections share one multiplicity class")


def check_z23_all_ones_counts() -> FixtureResult:
    classes = classify(z23_pair(), Mode.BIJECTION)
    all_ones = sum(len(c.members) for c in classes if len(c.fingerprint) == 8)
    acyclic_ones = sum(1 for c in classes if len(c.fingerprint) == 8 and c.is_singleton)
    detail = (
        f"all-ones bijections {all_ones} (published {Z23_ALL_ONES}), "
        f"acyclic among them {acyclic_ones} (published {Z23_ACYCLIC_ALL_ONES})"
    )
    if (all_ones, acyclic_ones) == (Z23_ALL_ONES, Z23_ACYCLIC_ALL_ONES):
        return FixtureResult("z23-all-ones-counts", "pass", detail)
    return FixtureResult("z23-all-ones-counts", "discrepancy", detail)


def check_z23_strict() -> FixtureResult:
    pair = z23_pair()
    ok, violations = weak_condition(pair)
    count = count_matchings(pair)
    shown = [tuple(format_element(x) for x in v) for v in violations]
    expected_violation = [((15,), (8,), (0,))]
    if violations != expected_violation or count != factorial(8) - factorial(7):
        return FixtureResult("z23-strict-weak-violation", "fail", f"violations {shown}, {count} matchings")
    return FixtureResult(
        "z23-strict-weak-violation",
        "discrepancy",
        f"15 + 8 = 0 lies in A, so A and A+B are not disjoint and only {count} of "
        f"{factorial(8)} bijections are matchings; the bijection counts above use every bijection",
    )


def check_integer_pair() -> FixtureResult:
    pair = integer_pair()
    classes = classify(pair)
    ms = list(enumerate_matchings(pair))
    two = matching_from_rules(pair, [((2,), (3,)), ((4,), (1,))])
    ok = (
        len(ms) == 2
        and all(is_acyclic(m, classes) for m in ms)
        and strongly_acyclically_matched(pair, classes=classes)
        and acyclicity_sequence(two) == (2,)
    )
    return _check(
        "integer-two-point",
        ok,
        f"{len(ms)} matchings, strongly acyclically matched, 2->3 4->1 has sequence {acyclicity_sequence(two)}",
    )


def check_z9_subgroup() -> FixtureResult:
    pair = z9_subgroup_pair()
    classes = classify(pair)
    ms = [m for c in classes for m in c.members]
    ok = (
        pair.spec.is_subgroup_with_zero(pair.B)
        and weak_condition(pair)[0]
        and all(acyclicity_sequence(m) == (1, 1) for m in ms)
        and len(acyclic_matchings(classes)) == len(ms) == 2
    )
    sets = ", ".join(format_set(support(m)) for m in ms)
    return _check("z9-subgroup", ok, f"supports {sets}; every matching acyclic")


FIXTURES: list[Callable[[], FixtureResult]] = [
    check_z14_weak,
    check_z14_table,
    check_z14_filter,
    check_z14_equal_multiplicities,
    check_z23_bijection_filter,
    check_z23_twins,
    check_z23_all_ones_counts,
    check_z23_strict,
    check_integer_pair,
    check_z9_subgroup,
]


def run_fixtures() -> list[FixtureResult]:
    return [fixture() for fixture in FIXTURES]
