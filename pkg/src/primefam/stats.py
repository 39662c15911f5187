"""Density and win-rate statistics over the prime families.

The headline number is the win fraction: among the odd primes from 7 up,
how often a prime lands in (p, 2*p_{m+1}) where p_m < p/2 < p_{m+1}.  The
report also tracks how Ramanujan-prime density approaches 1/2 and checks
the interval accounting identity at aligned checkpoints n = 2*p_{h+2}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .classify import condition_table
from .engine import PrimeTable
from .errors import OutOfRangeError, ResourceLimitError
from .ramanujan import labos_upto, ramanujan_upto


def reference_constants() -> dict[str, float]:
    """Comparison constants: the 1/2 lower bound, the 2/3 betting heuristic,
    and the naive interval estimate (1 + e^-2)/2, known to be off the truth."""
    return {"half": 0.5, "p0": 2.0 / 3.0, "p1": 0.5 * (1.0 + math.exp(-2.0))}


class IntervalIdentity(NamedTuple):
    k: int       # nonempty intervals (2p_j, 2p_{j+1}), j = 2..h+1
    nonrpr: int  # non-RPR primes in [7, n]
    h: int       # floor((pi(n) - 1) / 2)


@dataclass(frozen=True)
class StatsReport:
    """Family counts over the odd primes in [7, p_K], K = prefix_size.

    The primes 2, 3, 5 are excluded from the examined range (2 belongs to
    both families by convention, 3 and 5 to neither right family), so
    prime_count = K - 3.  ramanujan_fraction is the whole-prefix density
    pi_R(p_K)/K, while the *_count fields stay within the examined range.
    """

    prefix_size: int
    prime_count: int
    rpr_count: int
    ramanujan_count: int
    labos_count: int
    lpl_count: int
    win_fraction: float
    ramanujan_fraction: float
    aligned_n: int | None
    nonempty_intervals: int | None
    h: int | None
    reference: dict[str, float]


def win_fraction(table: PrimeTable, first_k_primes: int) -> StatsReport:
    """Evaluate the family statistics over the first K primes."""
    k = first_k_primes
    if k < 4:
        raise ValueError(f"the examined range [7, p_K] needs K >= 4, got {k}")
    if table.prime_count < k + 1:
        raise ResourceLimitError(
            f"statistics over {k} primes need a table holding {k + 1} primes; "
            f"the table at limit {table.limit} holds {table.prime_count}")
    p_k = table.nth_prime(k)
    doubled_successor = 2 * table.nth_prime(k + 1)
    if doubled_successor > table.limit:
        raise ResourceLimitError(
            f"statistics over {k} primes need a table limit of at least "
            f"{doubled_successor}, got {table.limit}")
    flags = condition_table(table, p_k)
    examined = flags.indexes >= 4
    prime_count = int(examined.sum())
    rpr_count = int((flags.cond2 & examined).sum())
    lpl_count = int((flags.cond4 & examined).sum())
    r_values = ramanujan_upto(table, p_k)
    l_values = labos_upto(table, p_k)
    checkpoints = aligned_checkpoints(table, p_k)
    if checkpoints:
        aligned_n = checkpoints[-1]
        identity = interval_count_identity(table, aligned_n)
        nonempty, h = identity.k, identity.h
    else:
        aligned_n = nonempty = h = None
    return StatsReport(
        prefix_size=k,
        prime_count=prime_count,
        rpr_count=rpr_count,
        ramanujan_count=int((r_values >= 7).sum()),
        labos_count=int((l_values >= 7).sum()),
        lpl_count=lpl_count,
        win_fraction=rpr_count / prime_count,
        ramanujan_fraction=r_values.size / k,
        aligned_n=aligned_n,
        nonempty_intervals=nonempty,
        h=h,
        reference=reference_constants())


def ramanujan_fraction(table: PrimeTable, x: int) -> Fraction:
    """pi_R(x) / pi(x) as an exact rational."""
    if x < 2:
        raise ValueError(f"no primes at or below {x}")
    return Fraction(int(ramanujan_upto(table, x).size), table.pi(x))


def aligned_checkpoints(table: PrimeTable, up_to: int) -> list[int]:
    """All aligned n <= up_to, i.e. n = 2*p_j with j = floor((pi(n)-1)/2) + 2."""
    if up_to > table.limit:
        raise OutOfRangeError(f"{up_to} exceeds the table limit {table.limit}")
    primes = table.primes()
    j_max = int(np.searchsorted(primes, up_to // 2, side="right"))
    if j_max < 4:
        return []
    js = np.arange(4, j_max + 1)
    doubles = 2 * primes[js - 1]
    hs = (np.searchsorted(primes, doubles, side="right") - 1) // 2
    return doubles[hs + 2 == js].tolist()


def interval_count_identity(table: PrimeTable, n: int) -> IntervalIdentity:
    """Count nonempty doubled-gap intervals against non-RPR primes up to n.

    n must be aligned (n = 2*p_{h+2} for h = floor((pi(n)-1)/2)) so that the
    intervals (2p_j, 2p_{j+1}), j = 2..h+1, tile (6, n] exactly; then every
    nonempty interval contributes exactly one non-RPR prime, its largest.
    """
    if n < 14:
        raise ValueError(f"aligned checkpoints start at 14, got {n}")
    pi_n = table.pi(n)
    h = (pi_n - 1) // 2
    primes = table.primes()
    if n != 2 * int(primes[h + 1]):
        candidates = aligned_checkpoints(table, min(table.limit, max(4 * n, 200)))
        nearest = min(candidates, key=lambda a: abs(a - n)) if candidates else None
        raise ValueError(
            f"n = {n} is not aligned with the interval system"
            + (f"; nearest aligned n is {nearest}" if nearest is not None else ""))
    lows = 2 * primes[1:h + 1]
    highs = 2 * primes[2:h + 2]
    nonempty = (np.searchsorted(primes, highs - 1, side="right")
                > np.searchsorted(primes, lows, side="right"))
    flags = condition_table(table, n)
    examined = flags.indexes >= 4
    nonrpr = int((examined & ~flags.cond2).sum())
    return IntervalIdentity(k=int(nonempty.sum()), nonrpr=nonrpr, h=h)


def ladder(table: PrimeTable, max_primes: int) -> list[StatsReport]:
    """Reports for a doubling ladder of prefix sizes ending at max_primes."""
    if max_primes < 4:
        raise ValueError(f"ladder needs max_primes >= 4, got {max_primes}")
    sizes = []
    step = 100
    while step < max_primes:
        sizes.append(step)
        step *= 2
    sizes = [s for s in sizes if s >= 4]
    if not sizes or sizes[-1] != max_primes:
        sizes.append(max_primes)
    return [win_fraction(table, size) for size in sizes]
