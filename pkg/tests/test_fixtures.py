import pytest

from acymatch import fixtures


@pytest.mark.parametrize("check", fixtures.FIXTURES, ids=lambda f: f.__name__)
def test_fixture_outcome(check):
    result = check()
    expected = "discrepancy" if check is fixtures.check_z23_strict else "pass"
    assert result.status == expected, result.detail


def test_reference_table_is_internally_consistent():
    # every row's sequence is the multiplicity profile of its own rule
    for images, supp, seq in fixtures.Z14_TABLE:
        sums = [(a + b) % 14 for a, b in zip(fixtures.Z14_A, images)]
        assert tuple(sorted(set(sums))) == supp
        assert tuple(sorted((sums.count(x) for x in supp), reverse=True)) == seq
    assert len({images for images, _, _ in fixtures.Z14_TABLE}) == 24
