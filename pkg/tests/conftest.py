import pytest

from primefam import build_table


@pytest.fixture(scope="session")
def big_table():
    """One table large enough for every test that needs real coverage."""
    return build_table(40_000_000, threads=4)


@pytest.fixture(scope="session")
def small_table():
    """Covers primes to 2*10^5; enough headroom for classification to ~10^4."""
    return build_table(200_000)
