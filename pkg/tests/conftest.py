import pytest
from hypothesis import strategies as st

from schubmin.perm import Permutation, parse_permutation


@pytest.fixture
def w3142():
    return parse_permutation("3142")


@pytest.fixture
def w_enum():
    return parse_permutation("619723458")


@pytest.fixture
def w_km():
    return parse_permutation("13865742")


def permutations_up_to(max_n):
    return st.integers(1, max_n).flatmap(
        lambda n: st.permutations(range(1, n + 1))).map(lambda w: Permutation(tuple(w)))


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(f"[acceptance] {line}")
