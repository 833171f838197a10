import pytest

from congrlab.checks import PROVEN, RECORDED, check_names, run_suite


@pytest.fixture(scope="session")
def proven_results():
    """One full pass of every proven and recorded check over 5 <= p <= 499.

    Shared by the acceptance criteria so the O(p**2) per-prime tables are
    built once.
    """
    names = check_names((PROVEN, RECORDED))
    return list(run_suite(names, 5, 499))
