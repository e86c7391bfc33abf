"""Exit criteria for the package, one test per criterion.

Each test records a PASS/FAIL line that is printed in the pytest terminal
summary.  Run alone with ``pytest tests/test_acceptance.py``.
"""

import json
import math
import time
from itertools import combinations, permutations

import pytest

from acymatch import (
    GroupSpec,
    Mode,
    acyclicity_sequence,
    all_ones_matchings,
    build_pair,
    classify,
    count_matchings,
    enumerate_matchings,
    is_acyclic,
    run_filter,
    strongly_acyclically_matched,
    support,
    weak_condition,
)
from acymatch.classify import acyclic_matchings
from acymatch.cli import main as cli_main
from acymatch.fixtures import (
    Z14_TABLE,
    Z23_ACYCLIC_ALL_ONES,
    Z23_ALL_ONES,
    Z23_SURVIVOR_SUPPORTS,
    Z23_TWIN_IMAGES,
    integer_pair,
    z14_pair,
    z14_row,
    z23_matching,
    z23_pair,
)
from acymatch.harness import subgroup_pairs
from acymatch.matching import matching_from_rules

from oracles import cyclic_weak_pairs, naive_acyclic, naive_filter, naive_matchings

RESULTS: list[str] = []


class criterion:
    """Record PASS/FAIL for one criterion around the block of assertions."""

    def __init__(self, number: int, title: str):
        self.label = f"AC{number} {title}"
        self.notes: list[str] = []

    def note(self, text: str) -> None:
        self.notes.append(text)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        status = "PASS" if exc_type is None else "FAIL"
        detail = "; ".join(self.notes)
        if exc is not None and str(exc):
            detail = f"{detail}; {str(exc).splitlines()[0]}" if detail else str(exc).splitlines()[0]
        RESULTS.append(f"[{status}] {self.label}" + (f" ({detail})" if detail else ""))
        return False


def test_ac1_table_reproduction():
    with criterion(1, "acyclicity table of the Z/14 pair") as c:
        start = time.perf_counter()
        pair = z14_pair()
        rows = {
            tuple(b[0] for _, b in m.rules()): (tuple(x[0] for x in support(m)), acyclicity_sequence(m))
            for m in enumerate_matchings(pair)
        }
        elapsed = time.perf_counter() - start
        c.note(f"{len(rows)} matchings in {elapsed * 1000:.1f} ms")
        assert len(rows) == 24
        for k, (images, supp, seq) in enumerate(Z14_TABLE, start=1):
            assert rows[images] == (supp, seq), f"row {k}"
        assert elapsed < 1.0


def test_ac2_filter_reproduction():
    with criterion(2, "filter on the Z/14 pair") as c:
        pair = z14_pair()
        trace = run_filter(pair)
        classes = classify(pair)
        c.note(f"C = {trace.c_values}, t = {trace.t}")
        assert trace.c_values == (3, 1)
        assert trace.t == 2
        expected = {z14_row(18), z14_row(24)}
        assert set(trace.survivors) == expected and len(trace.survivors) == 2
        rules = {tuple((a[0], b[0]) for a, b in m.rules()) for m in trace.survivors}
        assert rules == {((1, 7), (3, 9), (5, 3), (7, 1)), ((1, 9), (3, 7), (5, 1), (7, 3))}
        assert all(is_acyclic(m, classes) for m in trace.survivors)


def test_ac3_equal_multiplicities():
    with criterion(3, "rows 9 and 19 share a multiplicity function"):
        pair = z14_pair()
        classes = classify(pair)
        f9, f19 = z14_row(9), z14_row(19)
        assert f9 != f19
        from acymatch import multiplicity

        assert multiplicity(f9) == multiplicity(f19)
        assert not is_acyclic(f9, classes) and not is_acyclic(f19, classes)
        assert not strongly_acyclically_matched(pair, classes=classes)


def test_ac4_bijection_mode_z23():
    with criterion(4, "Z/23 pair in bijection-compat mode") as c:
        start = time.perf_counter()
        pair = z23_pair()
        trace = run_filter(pair, Mode.BIJECTION)
        classes = classify(pair, Mode.BIJECTION)
        assert trace.matching_count == 40320 == sum(len(k.members) for k in classes)
        assert trace.c_values == (7, 1) and trace.t == 2
        assert len(trace.survivors) == 3
        supports = sorted(tuple(x[0] for x in support(m)) for m in trace.survivors)
        assert supports == sorted(Z23_SURVIVOR_SUPPORTS)
        assert all(acyclicity_sequence(m) == (7, 1) for m in trace.survivors)
        assert all(is_acyclic(m, classes) for m in trace.survivors)
        f, g = (z23_matching(im) for im in Z23_TWIN_IMAGES)
        assert any(f in k.members and g in k.members for k in classes)

        ones = all_ones_matchings(pair, Mode.BIJECTION)
        acyclic = set(acyclic_matchings(classes))
        acyclic_ones = [m for m in ones if m in acyclic]
        counts = (len(ones), len(acyclic_ones))
        published = (Z23_ALL_ONES, Z23_ACYCLIC_ALL_ONES)
        if counts == published:
            c.note(f"all-ones {counts[0]}, acyclic all-ones {counts[1]}: agree with published counts")
        else:
            c.note(f"DISCREPANCY all-ones/acyclic {counts} vs published {published}")
        elapsed = time.perf_counter() - start
        c.note(f"{elapsed:.2f} s")
        assert elapsed < 10.0


def test_ac5_strict_mode_z23():
    with criterion(5, "Z/23 pair in strict mode") as c:
        pair = z23_pair()
        ok, violations = weak_condition(pair)
        assert not ok and violations == [((15,), (8,), (0,))]
        # independent count: brute force over all 8! bijections
        A = [a[0] for a in pair.A]
        brute = sum(
            all((a + b) % 23 not in A for a, b in zip(A, images))
            for images in permutations([b[0] for b in pair.B])
        )
        c.note(f"count_matchings = {count_matchings(pair)}, brute force = {brute}")
        assert count_matchings(pair) == brute == 35280 == math.factorial(8) - math.factorial(7)


def _subgroup_hypothesis_pairs(n):
    """Plain-loop enumeration of pairs meeting the subgroup theorem's hypotheses in Z/n."""
    for s in range(2, n):
        for B in combinations(range(1, n), s):
            H = set(B) | {0}
            if any((x + y) % n not in H for x in H for y in H):
                continue
            for A in combinations(range(n), s):
                if all((a + b) % n not in A for a in A for b in B):
                    yield A, B


def test_ac6_subgroup_theorem_exhaustive():
    with criterion(6, "subgroup theorem over Z/n, n <= 12") as c:
        start = time.perf_counter()
        checked = violations = 0
        for n in range(2, 13):
            spec = GroupSpec((n,))
            found = list(_subgroup_hypothesis_pairs(n))
            assert {(tuple(x[0] for x in p.A), tuple(x[0] for x in p.B)) for p in subgroup_pairs(spec)} == set(found)
            for A, B in found:
                pair = build_pair(spec, [(a,) for a in A], [(b,) for b in B])
                classes = classify(pair)
                ms = [m for k in classes for m in k.members]
                ok = (
                    len(ms) == math.factorial(len(A))
                    and all(acyclicity_sequence(m) == (1,) * len(A) for m in ms)
                    and all(is_acyclic(m, classes) for m in ms)
                    and strongly_acyclically_matched(pair, classes=classes)
                )
                checked += 1
                violations += not ok
        elapsed = time.perf_counter() - start
        c.note(f"{checked} pairs, {violations} violations, {elapsed:.1f} s")
        assert checked > 0 and violations == 0
        assert elapsed < 300


def test_ac7_integer_pair():
    with criterion(7, "A={2,4}, B={3,1} in Z"):
        pair = integer_pair()
        classes = classify(pair)
        ms = list(enumerate_matchings(pair))
        assert len(ms) == 2
        assert all(is_acyclic(m, classes) for m in ms)
        assert strongly_acyclically_matched(pair, classes=classes)
        m = matching_from_rules(pair, [((2,), (3,)), ((4,), (1,))])
        assert acyclicity_sequence(m) == (2,)


def test_ac8_oracle_equivalence():
    with criterion(8, "pruned / streaming / naive agreement on weak pairs, n <= 8, sizes <= 4") as c:
        pairs = divergences = 0
        for n in range(2, 9):
            spec = GroupSpec((n,))
            for s in range(1, 5):
                for A, B in cyclic_weak_pairs(n, s):
                    pair = build_pair(spec, [(a,) for a in A], [(b,) for b in B])
                    pairs += 1
                    moduli = (n,)
                    naive = naive_matchings(moduli, pair.A, pair.B)
                    images = lambda ms: [tuple(b for _, b in m.rules()) for m in ms]  # noqa: E731
                    same = images(enumerate_matchings(pair)) == naive
                    _, stages = naive_filter(moduli, pair.A, naive)
                    same &= images(run_filter(pair).survivors) == stages[-1]
                    same &= sorted(images(acyclic_matchings(classify(pair)))) == sorted(
                        naive_acyclic(moduli, pair.A, naive)
                    )
                    divergences += not same
        c.note(f"{pairs} pairs, {divergences} divergences")
        assert pairs > 0 and divergences == 0


@pytest.mark.slow
def test_ac9_conjecture_scan(tmp_path, capsys):
    with criterion(9, "scan of Z/n, n in [3, 11], sizes 2..4, strict") as c:
        start = time.perf_counter()
        outputs = {}
        for jobs in (1, 8):
            path = tmp_path / f"jobs{jobs}.jsonl"
            code = cli_main([
                "search", "--groups", "3..11", "--sizes", "2..4", "--mode", "strict",
                "--conjectures", "3.1,3.7", "--jobs", str(jobs), "--out", str(path),
            ])
            summary = json.loads(capsys.readouterr().out)
            assert code == 0
            outputs[jobs] = (path.read_bytes(), summary)
        elapsed = time.perf_counter() - start
        identical = outputs[1] == outputs[8]
        summary = outputs[1][1]
        c31 = summary["conjectures"]["3.1"]
        c37 = summary["conjectures"]["3.7"]
        c.note(f"{summary['pairs_evaluated']} pairs, outputs identical at 1 and 8 jobs: {identical}")
        c.note(f"3.1 counterexamples {len(c31['counterexamples'])} of {c31['checked']}")
        c.note(
            f"3.7 counterexamples {len(c37['counterexamples'])} of {c37['checked']}"
            + (f", first {c37['counterexamples'][0]}" if c37["counterexamples"] else "")
        )
        c.note(f"{elapsed:.1f} s")
        assert identical
        assert elapsed < 900
        assert c31["counterexamples"] == []
        assert c37["counterexamples"] == [], "counterexamples to 3.7 recorded"


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
