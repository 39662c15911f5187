import numpy as np
import pytest

from primefam import OutOfRangeError, ResourceLimitError, build_table
from primefam.engine import SEGMENT_ODDS

from oracles import naive_pi_prefix, naive_primes

ORACLE_LIMIT = 100_000
ORACLE_PRIMES = naive_primes(ORACLE_LIMIT)
ORACLE_PI = naive_pi_prefix(ORACLE_LIMIT)


@pytest.fixture(scope="module")
def table():
    return build_table(ORACLE_LIMIT)


def test_primes_match_naive_sieve(table):
    assert table.primes().tolist() == ORACLE_PRIMES


def test_pi_matches_naive_everywhere(table):
    values = list(range(0, 2000)) + list(range(0, ORACLE_LIMIT + 1, 997))
    for x in values:
        assert table.pi(x) == ORACLE_PI[x], x
    assert table.pi(ORACLE_LIMIT) == ORACLE_PI[ORACLE_LIMIT]
    assert table.prime_count == len(ORACLE_PRIMES)


def test_pi_prefix_matches_naive(table):
    assert table.pi_prefix(ORACLE_LIMIT).tolist() == ORACLE_PI
    assert table.pi_prefix(0).tolist() == [0]
    assert table.pi_prefix(2).tolist() == [0, 0, 1]


def test_nth_prime_round_trip(table):
    for n in (1, 2, 3, 100, 1229, 5000, len(ORACLE_PRIMES)):
        assert table.nth_prime(n) == ORACLE_PRIMES[n - 1]
    with pytest.raises(ValueError):
        table.nth_prime(0)
    with pytest.raises(OutOfRangeError):
        table.nth_prime(len(ORACLE_PRIMES) + 1)


def test_is_prime_agrees_with_naive(table):
    prime_set = set(ORACLE_PRIMES)
    for x in range(0, 3000):
        assert table.is_prime(x) == (x in prime_set), x
    assert table.is_prime(99991)
    with pytest.raises(OutOfRangeError):
        table.is_prime(ORACLE_LIMIT + 1)


def test_next_and_prev_prime(table):
    for x in range(0, 1500):
        expected_next = next(p for p in ORACLE_PRIMES if p > x)
        assert table.next_prime(x) == expected_next, x
    for x in range(3, 1500):
        expected_prev = max(p for p in ORACLE_PRIMES if p < x)
        assert table.prev_prime(x) == expected_prev, x
    assert table.prev_prime(2) is None
    assert table.next_prime(ORACLE_PRIMES[-1]) is None
    assert table.prev_prime(ORACLE_LIMIT + 1) == ORACLE_PRIMES[-1]
    with pytest.raises(OutOfRangeError):
        table.next_prime(ORACLE_LIMIT + 1)
    with pytest.raises(OutOfRangeError):
        table.prev_prime(ORACLE_LIMIT + 2)


def test_next_prime_in_open_interval(table):
    assert table.next_prime_in(89, 97) is None
    assert table.next_prime_in(89, 98) == 97
    assert table.next_prime_in(0, 3) == 2
    assert table.next_prime_in(10, 11) is None
    assert table.next_prime_in(5, 5) is None
    with pytest.raises(OutOfRangeError):
        table.next_prime_in(10, ORACLE_LIMIT + 2)


def test_primes_upto_is_prefix(table):
    assert table.primes_upto(100).tolist() == [p for p in ORACLE_PRIMES if p <= 100]
    assert table.primes_upto(1).size == 0
    with pytest.raises(OutOfRangeError):
        table.primes_upto(ORACLE_LIMIT + 1)


def test_segment_boundaries_are_seamless():
    # limit chosen so the table spans several segments and ends mid-segment
    limit = 2 * SEGMENT_ODDS * 2 + 12345
    table = build_table(limit)
    reference = build_table(limit, threads=3)
    assert np.array_equal(table.primes(), reference.primes())
    edge = SEGMENT_ODDS * 2  # first odd number of segment 1
    for x in range(edge - 5, edge + 6):
        assert table.pi(x) == reference.pi(x)
    mid_rank = table.pi(edge)
    assert table.nth_prime(mid_rank) <= edge < table.nth_prime(mid_rank + 1)


def test_threaded_build_is_identical():
    serial = build_table(5_000_000)
    threaded = build_table(5_000_000, threads=8)
    assert np.array_equal(serial._bits, threaded._bits)
    assert np.array_equal(serial._checkpoints, threaded._checkpoints)


def test_build_rejects_bad_limits():
    with pytest.raises(ValueError):
        build_table(1)
    with pytest.raises(ResourceLimitError):
        build_table(1001, cap=1000)


def test_tiny_tables():
    table = build_table(2)
    assert table.pi(2) == 1 and table.is_prime(2)
    assert table.next_prime(0) == 2 and table.next_prime(2) is None
    table3 = build_table(3)
    assert table3.primes().tolist() == [2, 3]
    assert table3.prev_prime(3) == 2
