"""Bit-packed segmented sieve with rank (pi) and inverse-rank (nth prime) queries.

The table stores one bit per odd number, so covering 2e9 costs 125 MB.  Odd
primes are counted per segment at build time, which turns pi(x) and
nth_prime(n) into a checkpoint lookup plus a popcount over at most one
segment (128 KB of packed bits).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .errors import OutOfRangeError, ResourceLimitError

DEFAULT_CAP = 2_000_000_000

# Odd numbers per segment; one segment occupies 512 KB as a bool workspace
# and 128 KB once packed.
SEGMENT_ODDS = 1 << 20
_SEGMENT_BYTES = SEGMENT_ODDS // 8

_POPCOUNT = np.array([bin(byte).count("1") for byte in range(256)], dtype=np.int64)
_BIT_POSITIONS = [tuple(i for i in range(8) if byte >> i & 1) for byte in range(256)]


def _odd_base_primes(limit: int) -> np.ndarray:
    """Odd primes up to limit via a dense sieve, for crossing off segments."""
    if limit < 3:
        return np.empty(0, dtype=np.int64)
    n_odds = (limit + 1) // 2
    flags = np.ones(n_odds, dtype=bool)
    flags[0] = False
    k = 1
    while True:
        p = 2 * k + 1
        if p * p > limit:
            break
        if flags[k]:
            flags[p * p // 2::p] = False
        k += 1
    return (np.flatnonzero(flags) * 2 + 1).astype(np.int64)


def _sieve_segment(base_primes: np.ndarray, k_start: int, k_stop: int, n_odds: int) -> np.ndarray:
    """Pack primality bits for odd numbers 2k+1 with k in [k_start, k_stop)."""
    flags = np.ones(k_stop - k_start, dtype=bool)
    if k_start == 0:
        flags[0] = False
    low = 2 * k_start + 1
    high = 2 * k_stop - 1
    for p in base_primes:
        p = int(p)
        if p * p > high:
            break
        start = p * p
        if start < low:
            q = -(-low // p)
            if q % 2 == 0:
                q += 1
            start = q * p
        flags[start // 2 - k_start::p] = False
    if k_stop > n_odds:
        flags[n_odds - k_start:] = False
    return np.packbits(flags, bitorder="little")


class PrimeTable:
    """Primality bits for every odd number up to ``limit``, plus count checkpoints.

    Bit k (little-endian within each byte) answers whether 2k+1 is prime.
    ``_checkpoints[s]`` is the number of odd primes in segments before s.
    """

    def __init__(self, limit: int, bits: np.ndarray, checkpoints: np.ndarray):
        self.limit = int(limit)
        self._bits = bits
        self._checkpoints = checkpoints
        self._prime_values: np.ndarray | None = None

    @property
    def prime_count(self) -> int:
        """pi(limit), the number of primes the table holds."""
        return self.pi(self.limit)

    def _check_range(self, x: int) -> None:
        if x > self.limit:
            raise OutOfRangeError(f"{x} exceeds the table limit {self.limit}")

    def _odd_rank(self, k: int) -> int:
        """Number of odd primes with index <= k."""
        n_bits = k + 1
        full_bytes = n_bits >> 3
        segment = full_bytes // _SEGMENT_BYTES
        count = int(self._checkpoints[segment])
        count += int(_POPCOUNT[self._bits[segment * _SEGMENT_BYTES:full_bytes]].sum())
        rem = n_bits & 7
        if rem:
            count += int(_POPCOUNT[self._bits[full_bytes] & ((1 << rem) - 1)])
        return count

    def pi(self, x: int) -> int:
        """Number of primes <= x."""
        self._check_range(x)
        if x < 2:
            return 0
        return 1 + self._odd_rank((x - 1) // 2)

    def is_prime(self, x: int) -> bool:
        self._check_range(x)
        if x < 2:
            return False
        if x % 2 == 0:
            return x == 2
        k = x // 2
        return bool(self._bits[k >> 3] >> (k & 7) & 1)

    def nth_prime(self, n: int) -> int:
        """The n-th prime, 1-based (nth_prime(1) == 2)."""
        if n < 1:
            raise ValueError(f"prime index must be >= 1, got {n}")
        if n == 1:
            return 2
        if self._prime_values is not None:
            if n > self._prime_values.size:
                raise OutOfRangeError(
                    f"table holds {self._prime_values.size} primes, index {n} requested")
            return int(self._prime_values[n - 1])
        target = n - 1  # rank among odd primes
        checkpoints = self._checkpoints
        if target > checkpoints[-1]:
            raise OutOfRangeError(
                f"table holds {int(checkpoints[-1]) + 1} primes, index {n} requested")
        segment = int(np.searchsorted(checkpoints, target, side="left")) - 1
        remaining = target - int(checkpoints[segment])
        chunk = self._bits[segment * _SEGMENT_BYTES:(segment + 1) * _SEGMENT_BYTES]
        cumulative = np.cumsum(_POPCOUNT[chunk])
        byte_index = int(np.searchsorted(cumulative, remaining, side="left"))
        before = int(cumulative[byte_index - 1]) if byte_index else 0
        position = _BIT_POSITIONS[int(chunk[byte_index])][remaining - before - 1]
        k = (segment * _SEGMENT_BYTES + byte_index) * 8 + position
        return 2 * k + 1

    def next_prime(self, x: int) -> int | None:
        """Smallest prime strictly greater than x, or None if none is <= limit."""
        if x < 2:
            return 2 if self.limit >= 2 else None
        self._check_range(x)
        first_odd = x + 1 if x % 2 == 0 else x + 2
        last_odd = self.limit if self.limit % 2 == 1 else self.limit - 1
        if first_odd > last_odd:
            return None
        k = first_odd // 2
        k_end = last_odd // 2
        bits = self._bits
        chunk_bytes = 8192
        while k <= k_end:
            byte0 = k >> 3
            byte1 = min((k_end >> 3) + 1, byte0 + chunk_bytes)
            flags = np.unpackbits(bits[byte0:byte1], bitorder="little")
            offset = k - byte0 * 8
            hits = np.flatnonzero(flags[offset:])
            if hits.size:
                candidate = k + int(hits[0])
                if candidate > k_end:
                    return None
                return 2 * candidate + 1
            k = byte1 * 8
        return None

    def prev_prime(self, x: int) -> int | None:
        """Largest prime strictly less than x, or None if none exists."""
        if x > self.limit + 1:
            raise OutOfRangeError(f"{x} exceeds the table limit {self.limit} + 1")
        if x <= 2:
            return None
        if x == 3:
            return 2
        last_odd = x - 1 if x % 2 == 0 else x - 2
        k_end = last_odd // 2
        bits = self._bits
        chunk_bytes = 8192
        while k_end >= 1:
            byte1 = k_end >> 3
            byte0 = max(0, byte1 - chunk_bytes + 1)
            flags = np.unpackbits(bits[byte0:byte1 + 1], bitorder="little")
            length = k_end - byte0 * 8 + 1
            hits = np.flatnonzero(flags[:length])
            if hits.size:
                return 2 * (byte0 * 8 + int(hits[-1])) + 1
            k_end = byte0 * 8 - 1
        return 2

    def next_prime_in(self, lo: int, hi: int) -> int | None:
        """Smallest prime in the open interval (lo, hi), or None."""
        if hi > self.limit + 1:
            raise OutOfRangeError(f"interval end {hi} exceeds the table limit {self.limit} + 1")
        if hi <= lo + 1:
            return None
        candidate = self.next_prime(lo)
        if candidate is not None and candidate < hi:
            return candidate
        return None

    def primes(self) -> np.ndarray:
        """All primes <= limit as an int64 array (materialized once, then cached)."""
        if self._prime_values is None:
            parts = [np.array([2], dtype=np.int64)]
            n_bytes = self._bits.size
            step = _SEGMENT_BYTES
            for byte0 in range(0, n_bytes, step):
                flags = np.unpackbits(self._bits[byte0:byte0 + step], bitorder="little")
                ks = np.flatnonzero(flags) + byte0 * 8
                if ks.size:
                    parts.append(ks.astype(np.int64) * 2 + 1)
            self._prime_values = np.concatenate(parts)
        return self._prime_values

    def primes_upto(self, x: int) -> np.ndarray:
        """Primes <= x, as a view into the cached prime array."""
        self._check_range(x)
        values = self.primes()
        return values[:int(np.searchsorted(values, x, side="right"))]

    def pi_prefix(self, x: int) -> np.ndarray:
        """Array a of length x+1 with a[y] = pi(y), dtype int32."""
        if x < 0:
            raise ValueError("pi_prefix needs x >= 0")
        self._check_range(x)
        indicator = np.zeros(x + 1, dtype=np.uint8)
        if x >= 2:
            indicator[2] = 1
        n_odd_flags = (x + 1) // 2
        if n_odd_flags:
            n_bytes = -(-n_odd_flags // 8)
            flags = np.unpackbits(self._bits[:n_bytes], bitorder="little")[:n_odd_flags]
            indicator[1::2] = flags
        return np.cumsum(indicator, dtype=np.int32)


def build_table(limit: int, *, cap: int = DEFAULT_CAP, threads: int | None = None) -> PrimeTable:
    """Sieve all primes up to ``limit`` and return the packed table.

    Construction can be parallelized over segments with ``threads``; the
    resulting table is identical regardless of worker count.
    """
    if limit < 2:
        raise ValueError(f"table limit must be >= 2, got {limit}")
    if limit > cap:
        raise ResourceLimitError(f"requested limit {limit} exceeds the cap {cap}")
    base = _odd_base_primes(int(limit ** 0.5) + 1)
    n_odds = (limit + 1) // 2
    n_segments = -(-n_odds // SEGMENT_ODDS)
    bits = np.zeros(n_segments * _SEGMENT_BYTES, dtype=np.uint8)
    counts = np.zeros(n_segments, dtype=np.int64)

    def run(segment: int) -> None:
        k0 = segment * SEGMENT_ODDS
        packed = _sieve_segment(base, k0, k0 + SEGMENT_ODDS, n_odds)
        bits[segment * _SEGMENT_BYTES:(segment + 1) * _SEGMENT_BYTES] = packed
        counts[segment] = _POPCOUNT[packed].sum()

    if threads and threads > 1 and n_segments > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(run, range(n_segments)))
    else:
        for segment in range(n_segments):
            run(segment)
    checkpoints = np.concatenate(([0], np.cumsum(counts)))
    return PrimeTable(limit, bits, checkpoints)
