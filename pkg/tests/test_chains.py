import sympy
import pytest

from primefam import (ASCENDING, DESCENDING, ResourceLimitError, build_table,
                      doubling_chain, doubling_terms, family_sieve, lpl_upto,
                      rpr_upto, verify_seed_identity)

SEEDS_14 = [2, 11, 17, 29, 41, 47, 59, 67, 71, 97, 101, 107, 109, 127]


def test_descending_chain_goldens(small_table):
    chain = doubling_chain(small_table, 2, DESCENDING, 100_000)
    assert chain.terms[:7] == [2, 3, 5, 7, 13, 23, 43]
    assert doubling_chain(small_table, 11, DESCENDING, 100_000).terms[:4] == [11, 19, 37, 73]


def test_ascending_chain_golden(small_table):
    chain = doubling_chain(small_table, 2, ASCENDING, 100_000)
    assert chain.terms[:6] == [2, 5, 11, 23, 47, 97]


def test_chain_respects_max_value(small_table):
    chain = doubling_chain(small_table, 2, DESCENDING, 50)
    assert chain.terms == [2, 3, 5, 7, 13, 23, 43]
    assert doubling_chain(small_table, 89, DESCENDING, 89).terms == [89]


def test_chain_step_invariants(small_table):
    for direction in (DESCENDING, ASCENDING):
        terms = doubling_chain(small_table, 5, direction, 100_000).terms
        for a, b in zip(terms, terms[1:]):
            assert small_table.is_prime(b)
            if direction == DESCENDING:
                assert a < b < 2 * a
                assert small_table.next_prime_in(b, 2 * a) is None
            else:
                assert b > 2 * a
                assert small_table.next_prime_in(2 * a, b) is None


def test_chain_argument_errors(small_table):
    with pytest.raises(ValueError):
        doubling_chain(small_table, 9, DESCENDING, 1000)
    with pytest.raises(ValueError):
        doubling_chain(small_table, 7, "sideways", 1000)
    with pytest.raises(ResourceLimitError):
        doubling_chain(small_table, 7, DESCENDING, 10**6)


def test_big_integer_terms_match_sympy():
    terms = doubling_terms(2, 40)
    check = [2]
    while len(check) < 40:
        check.append(int(sympy.prevprime(2 * check[-1])))
    assert terms == check
    up = doubling_terms(2, 40, ASCENDING)
    check = [2]
    while len(check) < 40:
        check.append(int(sympy.nextprime(2 * check[-1])))
    assert up == check


def test_big_integer_terms_errors():
    with pytest.raises(ValueError):
        doubling_terms(8, 5)
    with pytest.raises(ValueError):
        doubling_terms(2, 0)


def test_family_sieve_golden_families(small_table):
    state = family_sieve(small_table, 300)
    assert state.seeds[:14] == SEEDS_14
    assert state.families[0].terms[:9] == [2, 3, 5, 7, 13, 23, 43, 83, 163]
    assert state.families[1].terms[:5] == [11, 19, 37, 73, 139]
    assert state.families[2].terms[:5] == [17, 31, 61, 113, 223]
    assert state.families[3].terms[:4] == [29, 53, 103, 199]


def test_family_sieve_partitions_primes(small_table):
    horizon = 5_000
    state = family_sieve(small_table, horizon)
    members = [term for chain in state.families for term in chain.terms]
    assert len(members) == len(set(members))  # disjoint
    covered = {term for term in members if term <= horizon}
    assert covered == set(small_table.primes_upto(horizon).tolist())
    assert state.seeds == sorted(state.seeds)
    assert max(members) <= 2 * horizon


def test_family_sieve_requires_headroom(small_table):
    with pytest.raises(ResourceLimitError):
        family_sieve(small_table, 100_000)
    with pytest.raises(ValueError):
        family_sieve(small_table, 1)


def test_seed_identity_descending(big_table):
    results = verify_seed_identity(big_table, 200)
    assert len(results) == 200
    assert all(equal for _, _, equal in results)
    assert results[0] == (2, 2, True)
    assert results[12] == (109, 109, True)
    seeds = [seed for seed, _, _ in results]
    assert seeds == rpr_upto(big_table, seeds[-1])[:200].tolist()


def test_seed_identity_ascending_matches_lpl(big_table):
    results = verify_seed_identity(big_table, 200, ASCENDING)
    assert all(equal for _, _, equal in results)
    seeds = [seed for seed, _, _ in results]
    assert seeds[:6] == [2, 3, 13, 19, 31, 43]
    assert seeds == lpl_upto(big_table, seeds[-1])[:200].tolist()
