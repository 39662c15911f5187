"""Prime doubling chains and the family sieve built from them.

A descending chain repeatedly jumps to the largest prime below twice its
current term, an ascending chain to the smallest prime above twice it; by
Bertrand's postulate both always exist and exceed the current term.  The
family sieve extracts such chains from successive smallest unassigned
seeds.  The descending sieve's seed sequence matches the RPR primes term
by term (checked by verify_seed_identity); the ascending variant's seeds
are compared against the LPL primes empirically.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import gmpy2

from .classify import lpl_upto, rpr_upto
from .engine import PrimeTable
from .errors import ResourceLimitError

DESCENDING = "descending_below_double"
ASCENDING = "ascending_above_double"
_DIRECTIONS = (DESCENDING, ASCENDING)


@dataclass(frozen=True)
class DoublingChain:
    """A doubling chain: terms[0] is the seed, each later term one doubling step on."""

    seed: int
    direction: str
    terms: list[int]


@dataclass(frozen=True)
class FamilySieveState:
    """Disjoint doubling chains covering every prime up to the horizon.

    Chain terms may overshoot the horizon (they stop beyond 2x it); the
    horizon field tells callers where full accounting ends.
    """

    horizon: int
    direction: str
    families: list[DoublingChain]
    extracted: set[int] = field(repr=False)

    @property
    def seeds(self) -> list[int]:
        return [chain.seed for chain in self.families]


def _check_direction(direction: str) -> None:
    if direction not in _DIRECTIONS:
        raise ValueError(f"direction must be one of {_DIRECTIONS}, got {direction!r}")


def _next_term(table: PrimeTable, term: int, direction: str) -> int | None:
    """One doubling step, or None when the table cannot certify it."""
    if direction == DESCENDING:
        if 2 * term - 1 > table.limit:
            return None
        return table.prev_prime(2 * term)
    if 2 * term >= table.limit:
        return None
    return table.next_prime(2 * term)


def doubling_chain(table: PrimeTable, seed: int, direction: str,
                   max_value: int) -> DoublingChain:
    """Chain from seed, extended while the next term stays <= max_value."""
    _check_direction(direction)
    if not table.is_prime(seed):
        raise ValueError(f"chain seed must be prime, got {seed}")
    if max_value > table.limit:
        raise ResourceLimitError(
            f"max_value {max_value} exceeds the table limit {table.limit}")
    terms = [seed]
    while True:
        nxt = _next_term(table, terms[-1], direction)
        if nxt is None or nxt > max_value:
            break
        terms.append(nxt)
    return DoublingChain(seed=seed, direction=direction, terms=terms)


def doubling_terms(seed: int, count: int, direction: str = DESCENDING) -> list[int]:
    """First `count` chain terms with arbitrary-precision prime steps.

    Unlike doubling_chain this needs no table, so it reaches terms around
    2^count.  Primality testing is probabilistic (standard multi-round
    Miller-Rabin) with negligible error at these sizes.
    """
    _check_direction(direction)
    if count < 1:
        raise ValueError(f"term count must be >= 1, got {count}")
    if not gmpy2.is_prime(gmpy2.mpz(seed)):
        raise ValueError(f"chain seed must be prime, got {seed}")
    step = gmpy2.prev_prime if direction == DESCENDING else gmpy2.next_prime
    terms = [gmpy2.mpz(seed)]
    while len(terms) < count:
        terms.append(step(2 * terms[-1]))
    return [int(t) for t in terms]


def family_sieve(table: PrimeTable, horizon: int,
                 direction: str = DESCENDING) -> FamilySieveState:
    """Extract disjoint doubling chains until every prime <= horizon is assigned.

    Scans primes upward; each prime not yet in a chain seeds a new one.  A
    chain stops when its next term would exceed 2*horizon or is already
    assigned, which keeps the families disjoint.
    """
    _check_direction(direction)
    if horizon < 2:
        raise ValueError(f"horizon must be >= 2, got {horizon}")
    if table.limit < 4 * horizon:
        raise ResourceLimitError(
            f"family sieve to horizon {horizon} needs a table limit of at least "
            f"{4 * horizon}, got {table.limit}")
    ceiling = 2 * horizon
    extracted: set[int] = set()
    families: list[DoublingChain] = []
    for seed in table.primes_upto(horizon).tolist():
        if seed in extracted:
            continue
        terms = [seed]
        extracted.add(seed)
        while True:
            nxt = _next_term(table, terms[-1], direction)
            if nxt is None or nxt > ceiling or nxt in extracted:
                break
            terms.append(nxt)
            extracted.add(nxt)
        families.append(DoublingChain(seed=seed, direction=direction, terms=terms))
    return FamilySieveState(horizon=horizon, direction=direction,
                            families=families, extracted=extracted)


def verify_seed_identity(table: PrimeTable, count: int,
                         direction: str = DESCENDING) -> list[tuple[int, int, bool]]:
    """Pair the first `count` sieve seeds with the classifier's family sequence.

    Descending seeds are compared against the RPR primes, ascending seeds
    against the LPL primes.  The two sides come from independent pipelines:
    the sieve knows nothing about the per-prime conditions.
    """
    _check_direction(direction)
    if count < 1:
        raise ValueError(f"term count must be >= 1, got {count}")
    # The count-th RPR prime is at most R_count < p_{3*count}, and seeds
    # appear in increasing order, so this horizon yields enough of them.
    if table.prime_count < 3 * count:
        raise ResourceLimitError(
            f"verifying {count} seeds needs a table covering p_{3 * count}")
    horizon = table.nth_prime(3 * count)
    state = family_sieve(table, horizon, direction)
    seeds = state.seeds[:count]
    reference_fn = rpr_upto if direction == DESCENDING else lpl_upto
    reference = reference_fn(table, horizon)[:count].tolist()
    if len(seeds) < count or len(reference) < count:
        raise ResourceLimitError(
            f"fewer than {count} seeds below horizon {horizon}; raise the table limit")
    return [(int(s), int(r), int(s) == int(r)) for s, r in zip(seeds, reference)]
