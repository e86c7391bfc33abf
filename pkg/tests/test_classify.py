import pytest
from hypothesis import given, settings

from acymatch import (
    GroupSpec,
    Mode,
    StructuralError,
    acyclically_matched,
    all_ones_matchings,
    build_pair,
    classify,
    count_matchings,
    is_acyclic,
    strongly_acyclically_matched,
)
from acymatch.classify import acyclic_matchings
from acymatch.fixtures import (
    Z23_TWIN_IMAGES,
    integer_pair,
    z9_subgroup_pair,
    z14_row,
    z23_matching,
)
from acymatch.matching import Matching, matching_from_rules

from conftest import small_pairs
from oracles import naive_acyclic, naive_matchings


def test_equal_multiplicity_class(z14):
    classes = classify(z14)
    f9, f19 = z14_row(9), z14_row(19)
    (cls,) = [c for c in classes if f9 in c.members]
    assert f19 in cls.members
    assert cls.fingerprint == (((0,), 1), ((4,), 1), ((8,), 1), ((10,), 1))
    assert not is_acyclic(f9, classes)
    assert is_acyclic(z14_row(18), classes)
    assert is_acyclic(z14_row(24), classes)


def test_classes_sorted_and_partition(z14):
    classes = classify(z14)
    fps = [c.fingerprint for c in classes]
    assert fps == sorted(fps)
    assert sum(len(c.members) for c in classes) == 24


def test_single_element_class():
    pair = build_pair(GroupSpec((6,)), [(2,)], [(1,)])
    classes = classify(pair)
    assert len(classes) == 1 and classes[0].is_singleton


def test_is_acyclic_unknown_matching(z14):
    other = build_pair(GroupSpec((14,)), [(1,), (3,), (5,), (7,)], [(1,), (3,), (7,), (11,)])
    m = Matching(other, (0, 1, 2, 3))
    with pytest.raises(StructuralError):
        is_acyclic(m, classify(z14))


def test_twins_in_bijection_mode(z23):
    classes = classify(z23, Mode.BIJECTION)
    f, g = (z23_matching(im) for im in Z23_TWIN_IMAGES)
    assert not is_acyclic(f, classes)
    assert not is_acyclic(g, classes)
    assert any(f in c.members and g in c.members for c in classes)


def test_all_ones_examples(z14, z23):
    rows = {z14_row(k) for k in (3, 9, 10, 11, 14, 17, 19, 22)}
    assert set(all_ones_matchings(z14)) == rows
    assert len(all_ones_matchings(z23, Mode.BIJECTION)) == 2436


def test_matchedness_examples(z14, z23):
    assert acyclically_matched(z14)
    assert not strongly_acyclically_matched(z14)
    assert acyclically_matched(z23, Mode.BIJECTION)
    empty = build_pair(GroupSpec((4,)), [(0,), (2,)], [(1,), (2,)])
    assert count_matchings(empty) == 0
    assert not acyclically_matched(empty)
    assert not strongly_acyclically_matched(empty)


def test_integer_pair_strongly_matched():
    pair = integer_pair()
    assert strongly_acyclically_matched(pair)
    m = matching_from_rules(pair, [((2,), (3,)), ((4,), (1,))])
    from acymatch import acyclicity_sequence

    assert acyclicity_sequence(m) == (2,)


def test_z9_subgroup_pair():
    pair = z9_subgroup_pair()
    classes = classify(pair)
    assert [c.fingerprint for c in classes] == [
        (((4,), 1), ((8,), 1)),
        (((5,), 1), ((7,), 1)),
    ]
    assert strongly_acyclically_matched(pair)
    assert len(all_ones_matchings(pair)) == 2


@given(small_pairs(max_size=5))
@settings(max_examples=150, deadline=None)
def test_acyclic_matches_pairwise_oracle(pair):
    moduli = pair.spec.moduli
    for mode, strict in ((Mode.STRICT, True), (Mode.BIJECTION, False)):
        classes = classify(pair, mode)
        total = count_matchings(pair, mode)
        assert sum(len(c.members) for c in classes) == total
        got = [tuple(b for _, b in m.rules()) for m in acyclic_matchings(classes)]
        matchings = naive_matchings(moduli, pair.A, pair.B, strict=strict)
        assert sorted(got) == sorted(naive_acyclic(moduli, pair.A, matchings))
        for c in classes:
            for m in c.members:
                assert is_acyclic(m, classes) == (len(c.members) == 1)


@given(small_pairs(max_size=5))
@settings(max_examples=100, deadline=None)
def test_strict_classes_are_filtered_bijection_classes(pair):
    strict = classify(pair, Mode.STRICT)
    compat = classify(pair, Mode.BIJECTION)
    rebuilt = {}
    for c in compat:
        kept = [m.perm for m in c.members if not any(pair.forbidden[i][j] for i, j in enumerate(m.perm))]
        if kept:
            rebuilt[c.fingerprint] = kept
    assert {c.fingerprint: [m.perm for m in c.members] for c in strict} == rebuilt


def test_all_ones_does_not_imply_acyclic(z14):
    f9 = z14_row(9)
    assert f9 in all_ones_matchings(z14)
    assert not is_acyclic(f9, classify(z14))
