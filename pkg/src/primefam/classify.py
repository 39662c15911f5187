"""Per-prime interval conditions and the four-way family classification.

For a prime p = p_n with successor q and m = pi(p/2), the four conditions are

  1. no prime y satisfies (p+1)/2 <= y <= (q-1)/2
  2. q < 2 * p_{m+1}
  3. no prime y satisfies (p_{n-1}+1)/2 <= y <= (p-1)/2   (needs n >= 3)
  4. p_{n-1} > 2 * p_m                                    (needs p >= 5)

Conditions 1 and 2 are equivalent, as are 3 and 4.  Condition 2 marks the
right family (Ramanujan or pseudo-Ramanujan), condition 4 the left family
(Labos or pseudo-Labos).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .engine import PrimeTable
from .errors import ResourceLimitError
from .ramanujan import labos_upto, ramanujan_upto

RAMANUJAN = "ramanujan"
PSEUDO_RAMANUJAN = "pseudo_ramanujan"
NON_RPR = "non_rpr"
LABOS = "labos"
PSEUDO_LABOS = "pseudo_labos"
NON_LPL = "non_lpl"

CSV_FIELDS = ("p", "n", "right_class", "left_class",
              "cond1", "cond2", "cond3", "cond4",
              "witness_right", "witness_left")


def _require_prime(table: PrimeTable, p: int, minimum: int, name: str) -> None:
    if p < minimum:
        raise ValueError(f"{name} needs p >= {minimum}, got {p}")
    if not table.is_prime(p):
        raise ValueError(f"{name} needs a prime argument, got {p}")


def _successor(table: PrimeTable, p: int) -> int:
    q = table.next_prime(p)
    if q is None:
        raise ResourceLimitError(
            f"no prime after {p} within the table limit {table.limit}")
    return q


def condition1(table: PrimeTable, p: int) -> bool:
    """No prime in [(p+1)/2, (q-1)/2] where q is the prime after p."""
    _require_prime(table, p, 3, "condition1")
    q = _successor(table, p)
    return table.next_prime_in((p - 1) // 2, (q + 1) // 2) is None


def condition2(table: PrimeTable, p: int) -> bool:
    """The prime after p is below twice the smallest prime exceeding p/2."""
    _require_prime(table, p, 3, "condition2")
    q = _successor(table, p)
    half_successor = table.next_prime(p // 2)
    return q < 2 * half_successor


def condition3(table: PrimeTable, p: int) -> bool:
    """No prime in [(p'+1)/2, (p-1)/2] where p' is the prime before p."""
    _require_prime(table, p, 5, "condition3")
    prev = table.prev_prime(p)
    return table.next_prime_in((prev - 1) // 2, (p + 1) // 2) is None


def condition4(table: PrimeTable, p: int) -> bool:
    """The prime before p exceeds twice the largest prime below p/2."""
    _require_prime(table, p, 5, "condition4")
    below_half = table.prev_prime(p // 2 + 1)
    return table.next_prime_in(2 * below_half, p) is not None


@dataclass(frozen=True)
class ConditionTable:
    """Condition flags for the odd primes p_2..p_{pi(limit)}, rank-aligned."""

    values: np.ndarray        # the odd primes themselves
    indexes: np.ndarray       # 1-based ranks, starting at 2
    half_rank: np.ndarray     # m = pi(p // 2)
    cond1: np.ndarray
    cond2: np.ndarray
    cond3: np.ndarray         # False where undefined (rank 2)
    cond4: np.ndarray
    left_defined: np.ndarray  # rank >= 3, the domain of cond3/cond4
    witness_right: np.ndarray  # prime after p where cond2 holds, else 0
    witness_left: np.ndarray   # smallest prime > 2*p_m where cond4 holds, else 0


def condition_table(table: PrimeTable, limit: int) -> ConditionTable:
    """Evaluate all four conditions for every odd prime <= limit at once."""
    if limit < 3:
        raise ValueError(f"classification needs limit >= 3, got {limit}")
    primes = table.primes()
    n_max = table.pi(limit)
    if n_max + 1 > primes.size:
        raise ResourceLimitError(
            f"classifying up to {limit} needs the prime after p_{n_max}; "
            f"raise the table limit above {table.limit}")
    values = primes[1:n_max]
    succ = primes[2:n_max + 1]
    pred = primes[0:n_max - 1]
    m = np.searchsorted(primes, values // 2, side="right")
    next_after_half = primes[m]
    cond2 = succ < 2 * next_after_half
    # pi((p-1)/2) and pi((q-1)/2) turn the no-prime intervals into rank gaps.
    rank_below_self = np.searchsorted(primes, (values - 1) // 2, side="right")
    rank_below_succ = np.searchsorted(primes, (succ - 1) // 2, side="right")
    cond1 = rank_below_succ == rank_below_self
    rank_below_pred = np.searchsorted(primes, (pred - 1) // 2, side="right")
    cond3 = rank_below_self == rank_below_pred
    largest_below_half = primes[np.maximum(m, 1) - 1]
    cond4 = pred > 2 * largest_below_half
    indexes = np.arange(2, n_max + 1, dtype=np.int64)
    left_defined = indexes >= 3
    cond3 &= left_defined
    cond4 &= left_defined
    witness_right = np.where(cond2, succ, 0)
    left_witness_rank = np.searchsorted(primes, 2 * largest_below_half, side="right")
    witness_left = np.where(cond4, primes[np.minimum(left_witness_rank, primes.size - 1)], 0)
    return ConditionTable(values=values, indexes=indexes, half_rank=m,
                          cond1=cond1, cond2=cond2, cond3=cond3, cond4=cond4,
                          left_defined=left_defined,
                          witness_right=witness_right, witness_left=witness_left)


def rpr_upto(table: PrimeTable, limit: int) -> np.ndarray:
    """Ramanujan and pseudo-Ramanujan primes <= limit: 2 plus the condition-2 primes."""
    flags = condition_table(table, limit)
    return np.concatenate(([2], flags.values[flags.cond2]))


def lpl_upto(table: PrimeTable, limit: int) -> np.ndarray:
    """Labos and pseudo-Labos primes <= limit: 2 and 3 plus the condition-4 primes."""
    flags = condition_table(table, limit)
    return np.concatenate(([2, 3], flags.values[flags.cond4]))


@dataclass(frozen=True)
class PrimeClass:
    """Classification record for one prime."""

    p: int
    n: int
    right_class: str
    left_class: str
    cond1: bool | None
    cond2: bool | None
    cond3: bool | None
    cond4: bool | None
    witness_right: int | None
    witness_left: int | None

    def as_dict(self) -> dict:
        return {field: getattr(self, field) for field in CSV_FIELDS}


def classify_range(table: PrimeTable, limit: int) -> list[PrimeClass]:
    """Classify every prime <= limit into right and left families.

    The prime 2 heads both families by convention and carries no condition
    flags; 3 carries right flags only, its left membership (it is a Labos
    prime) coming from the sequence itself.
    """
    if limit < 2:
        raise ValueError(f"classification needs limit >= 2, got {limit}")
    records = [PrimeClass(p=2, n=1, right_class=RAMANUJAN, left_class=LABOS,
                          cond1=None, cond2=None, cond3=None, cond4=None,
                          witness_right=None, witness_left=None)]
    if limit < 3:
        return records
    flags = condition_table(table, limit)
    in_ramanujan = np.isin(flags.values, ramanujan_upto(table, limit))
    in_labos = np.isin(flags.values, labos_upto(table, limit))
    for i in range(flags.values.size):
        if in_ramanujan[i]:
            right = RAMANUJAN
        elif flags.cond2[i]:
            right = PSEUDO_RAMANUJAN
        else:
            right = NON_RPR
        if in_labos[i]:
            left = LABOS
        elif flags.cond4[i]:
            left = PSEUDO_LABOS
        else:
            left = NON_LPL
        defined = bool(flags.left_defined[i])
        records.append(PrimeClass(
            p=int(flags.values[i]), n=int(flags.indexes[i]),
            right_class=right, left_class=left,
            cond1=bool(flags.cond1[i]), cond2=bool(flags.cond2[i]),
            cond3=bool(flags.cond3[i]) if defined else None,
            cond4=bool(flags.cond4[i]) if defined else None,
            witness_right=int(flags.witness_right[i]) or None,
            witness_left=int(flags.witness_left[i]) or None))
    return records
