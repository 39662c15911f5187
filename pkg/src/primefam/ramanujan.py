"""Ramanujan and Labos prime sequences from interval prime counts.

Both sequences are extremes of f(x) = pi(x) - pi(x/2).  The n-th Ramanujan
prime R_n is the smallest x with f(y) >= n for every y >= x; the n-th Labos
prime L_n is the smallest x where f first reaches n.  Each sequence consists
of primes only, because f can only step upward at a prime.
"""

from __future__ import annotations

import numpy as np

from .engine import PrimeTable
from .errors import OutOfRangeError, ResourceLimitError


def interval_prime_counts(table: PrimeTable, bound: int) -> np.ndarray:
    """Array f of length bound+1 with f[x] = pi(x) - pi(x // 2)."""
    pi_all = table.pi_prefix(bound)
    halves = np.repeat(pi_all[:bound // 2 + 1], 2)[:bound + 1]
    return pi_all - halves


def _scan_bound(table: PrimeTable, count: int) -> int:
    """Largest x the generator must inspect: p_{3n} bounds R_n from above."""
    if count < 1:
        raise ValueError(f"term count must be >= 1, got {count}")
    needed = 3 * count
    if table.prime_count < needed:
        raise ResourceLimitError(
            f"generating {count} terms needs a table covering p_{needed}; "
            f"the table ends at {table.limit} with only {table.prime_count} primes")
    return table.nth_prime(needed)


def _assert_prime_values(table: PrimeTable, values: np.ndarray, label: str) -> None:
    primes = table.primes()
    pos = np.searchsorted(primes, values)
    ok = (pos < primes.size) & (primes[np.minimum(pos, primes.size - 1)] == values)
    if not bool(np.all(ok)):
        bad = values[~ok][:5]
        raise RuntimeError(f"{label} produced non-prime values {bad.tolist()}")


def ramanujan_primes(table: PrimeTable, count: int) -> np.ndarray:
    """First `count` Ramanujan primes R_1..R_count."""
    bound = _scan_bound(table, count)
    f = interval_prime_counts(table, bound)
    # min over all y >= x; beyond the scan bound f never dips below count.
    tail_min = np.minimum.accumulate(f[::-1])[::-1]
    values = np.searchsorted(tail_min, np.arange(1, count + 1), side="left").astype(np.int64)
    _assert_prime_values(table, values, "ramanujan_primes")
    return values


def labos_primes(table: PrimeTable, count: int) -> np.ndarray:
    """First `count` Labos primes L_1..L_count."""
    bound = _scan_bound(table, count)
    f = interval_prime_counts(table, bound)
    running_max = np.maximum.accumulate(f)
    values = np.searchsorted(running_max, np.arange(1, count + 1), side="left").astype(np.int64)
    _assert_prime_values(table, values, "labos_primes")
    return values


def ramanujan_upto(table: PrimeTable, x: int) -> np.ndarray:
    """All Ramanujan primes <= x."""
    if x < 2:
        return np.empty(0, dtype=np.int64)
    # R_n > p_{2n}, so pi(x)//2 + 1 terms are enough to overshoot x.
    count = table.pi(x) // 2 + 1
    values = ramanujan_primes(table, count)
    return values[values <= x]


def labos_upto(table: PrimeTable, x: int) -> np.ndarray:
    """All Labos primes <= x."""
    if x < 2:
        return np.empty(0, dtype=np.int64)
    f = interval_prime_counts(table, x)
    running_max = np.maximum.accumulate(f)
    # L_n sits exactly where the running maximum first reaches n.
    values = (np.flatnonzero(np.diff(running_max) == 1) + 1).astype(np.int64)
    _assert_prime_values(table, values, "labos_upto")
    return values


def verify_ramanujan_extremal(table: PrimeTable, n: int, value: int) -> bool:
    """Check value against the defining property of R_n.

    True iff the interval count sits at n-1 just below value and stays at or
    above n throughout [value, min(2*value, table.limit)].
    """
    if n < 1 or value < 2:
        return False
    if value > table.limit:
        raise OutOfRangeError(f"{value} exceeds the table limit {table.limit}")
    bound = min(2 * value, table.limit)
    f = interval_prime_counts(table, bound)
    if int(f[value - 1]) != n - 1:
        return False
    return int(f[value:].min()) >= n
