import pytest
from hypothesis import strategies as st

from acymatch import GroupSpec, build_pair


def cyc(n, xs):
    return [(x,) for x in xs]


@pytest.fixture
def z14():
    return build_pair(GroupSpec((14,)), cyc(14, [1, 3, 5, 7]), cyc(14, [1, 3, 7, 9]))


@pytest.fixture
def z23():
    return build_pair(
        GroupSpec((23,)),
        cyc(23, [0, 1, 2, 3, 12, 13, 14, 15]),
        cyc(23, [4, 5, 6, 7, 8, 16, 17, 18]),
    )


@st.composite
def small_pairs(draw, max_order=12, max_size=5):
    """Random valid pairs in a small cyclic or rank-2 finite group."""
    moduli = draw(
        st.one_of(
            st.tuples(st.integers(3, max_order)),
            st.tuples(st.integers(2, 3), st.integers(2, 4)),
        )
    )
    spec = GroupSpec(moduli)
    elements = list(spec.elements())
    nonzero = [x for x in elements if x != spec.zero()]
    s = draw(st.integers(1, min(max_size, len(nonzero))))
    A = draw(st.lists(st.sampled_from(elements), min_size=s, max_size=s, unique=True))
    B = draw(st.lists(st.sampled_from(nonzero), min_size=s, max_size=s, unique=True))
    return build_pair(spec, A, B)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
