import pytest

from cayleycubic import enumerate_solutions


@pytest.fixture(scope="session")
def s1_solutions_2000():
    """All canonical s=1 solutions with max component <= 2000.

    Shared between the closure tests and the search tests; the scan takes a
    couple of seconds, so compute it once per session.
    """
    return enumerate_solutions(1, 2000)
