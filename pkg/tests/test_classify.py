import numpy as np
import pytest

from primefam import (ResourceLimitError, build_table, classify_range,
                      condition1, condition2, condition3, condition4,
                      condition_table, labos_upto, lpl_upto, ramanujan_upto,
                      rpr_upto)
from primefam.classify import CSV_FIELDS

from oracles import NaiveConditions

PSEUDO_RAMANUJAN_6 = [109, 137, 191, 197, 283, 521]
PSEUDO_LABOS_6 = [131, 151, 229, 233, 311, 571]


@pytest.fixture(scope="module")
def naive():
    return NaiveConditions(50_000)


def test_scalar_conditions_match_naive(small_table, naive):
    for p in naive.primes:
        if p in (2,) or p > 2_000:
            continue
        assert condition1(small_table, p) == naive.cond1(p), p
        assert condition2(small_table, p) == naive.cond2(p), p
        if p >= 5:
            assert condition3(small_table, p) == naive.cond3(p), p
            assert condition4(small_table, p) == naive.cond4(p), p


def test_vector_conditions_match_scalar(small_table):
    flags = condition_table(small_table, 10_000)
    for i, p in enumerate(flags.values.tolist()):
        assert bool(flags.cond1[i]) == condition1(small_table, p)
        assert bool(flags.cond2[i]) == condition2(small_table, p)
        if p >= 5:
            assert bool(flags.cond3[i]) == condition3(small_table, p)
            assert bool(flags.cond4[i]) == condition4(small_table, p)


def test_condition_equivalences_to_one_million(big_table):
    flags = condition_table(big_table, 1_000_000)
    assert flags.values.size == big_table.pi(1_000_000) - 1
    assert (flags.cond1 == flags.cond2).all()
    assert (flags.cond3 == flags.cond4).all()


def test_ramanujan_primes_satisfy_condition1(big_table):
    flags = condition_table(big_table, 1_000_000)
    r_odd = ramanujan_upto(big_table, 1_000_000)[1:]  # drop the convention prime 2
    satisfied = flags.cond1[np.searchsorted(flags.values, r_odd)]
    assert satisfied.all()


def test_labos_primes_satisfy_condition3(big_table):
    flags = condition_table(big_table, 1_000_000)
    l_odd = labos_upto(big_table, 1_000_000)[2:]  # drop 2 and 3
    satisfied = flags.cond3[np.searchsorted(flags.values, l_odd)]
    assert satisfied.all()


def test_pseudo_sequences(small_table):
    rpr = rpr_upto(small_table, 600).tolist()
    ram = set(ramanujan_upto(small_table, 600).tolist())
    assert [p for p in rpr if p not in ram][:6] == PSEUDO_RAMANUJAN_6
    lpl = lpl_upto(small_table, 600).tolist()
    lab = set(labos_upto(small_table, 600).tolist())
    assert [p for p in lpl if p not in lab][:6] == PSEUDO_LABOS_6
    assert rpr[:14] == [2, 11, 17, 29, 41, 47, 59, 67, 71, 97, 101, 107, 109, 127]


def test_classify_range_conventions(small_table):
    records = {record.p: record for record in classify_range(small_table, 140)}
    two = records[2]
    assert two.right_class == "ramanujan" and two.left_class == "labos"
    assert two.cond1 is None and two.cond4 is None
    three = records[3]
    assert three.right_class == "non_rpr" and three.left_class == "labos"
    assert three.cond2 is False and three.cond3 is None and three.cond4 is None
    assert records[109].right_class == "pseudo_ramanujan"
    assert records[131].left_class == "pseudo_labos"
    assert records[11].right_class == "ramanujan" and records[11].witness_right == 13
    assert records[13].left_class == "labos" and records[13].cond4 is True
    assert records[7].right_class == "non_rpr" and records[7].witness_right is None


def test_classify_witnesses_are_valid(small_table):
    for record in classify_range(small_table, 2_000):
        if record.witness_right is not None:
            q = record.witness_right
            assert small_table.is_prime(q) and q > record.p
            after_half = small_table.next_prime(record.p // 2)
            assert q < 2 * after_half
        if record.witness_left is not None:
            w = record.witness_left
            assert small_table.is_prime(w) and w < record.p
            below_half = small_table.prev_prime(record.p // 2 + 1)
            assert w > 2 * below_half


def test_class_labels_follow_conditions(small_table):
    for record in classify_range(small_table, 5_000):
        if record.p == 2:
            continue
        right_in_family = record.right_class in ("ramanujan", "pseudo_ramanujan")
        assert right_in_family == record.cond2
        if record.cond4 is not None:
            left_in_family = record.left_class in ("labos", "pseudo_labos")
            assert left_in_family == record.cond4


def test_record_export_shape(small_table):
    record = classify_range(small_table, 20)[3]
    exported = record.as_dict()
    assert tuple(exported) == CSV_FIELDS
    assert exported["p"] == record.p


def test_domain_errors(small_table):
    with pytest.raises(ValueError):
        condition1(small_table, 4)
    with pytest.raises(ValueError):
        condition1(small_table, 2)
    with pytest.raises(ValueError):
        condition3(small_table, 3)
    with pytest.raises(ValueError):
        condition4(small_table, 2)
    with pytest.raises(ValueError):
        classify_range(small_table, 1)
    with pytest.raises(ValueError):
        condition_table(small_table, 2)


def test_insufficient_headroom():
    # successor of the largest prime <= limit is itself beyond the table
    cramped = build_table(23)
    with pytest.raises(ResourceLimitError):
        condition_table(cramped, 23)
