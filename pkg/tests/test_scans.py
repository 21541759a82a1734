from fractions import Fraction

import pytest

from fibtree import (
    DomainError,
    build_value_tables,
    check_block_alternating,
    cluster_variance,
    enumerate_codes,
    iter_conjecture_violations,
    scan_conjecture,
    scan_converse,
    scan_reflection,
    scan_roots,
    value,
    weight,
)


def test_value_tables_match_direct_evaluation():
    tables = build_value_tables(8)
    for length in range(9):
        for i, code in enumerate(enumerate_codes(length)):
            assert tables[length][i] == value(code)


def test_value_tables_ignore_parallelism():
    assert build_value_tables(9, jobs=1) == build_value_tables(9, jobs=2)
    assert build_value_tables(9, jobs=16) == build_value_tables(9, jobs=1)


def test_reflection_scan_is_clean():
    report = scan_reflection(10)
    assert report.checked == 2 ** 11 - 2
    assert report.violations == []
    assert report.to_jsonable()["elapsed_ms"] is None


def test_reflection_scan_ignores_parallelism():
    a, b = scan_reflection(12, jobs=1), scan_reflection(12, jobs=3)
    assert (a.checked, a.violations) == (b.checked, b.violations)


# ----------------------------------------------------------- converse

def test_converse_classes_at_length_five():
    classes = {c.value: c for c in scan_converse(5)}
    c25 = classes[25]
    assert c25.codes == ("01110", "10011", "11001")
    # a palindrome plus a reflection pair: three codes, so past reflection
    assert c25.beyond_reflection


def test_converse_reflection_pairs_stay_unflagged():
    classes = {c.value: c for c in scan_converse(4)}
    c19 = classes[19]
    assert c19.codes == ("1011", "1101")
    assert not c19.beyond_reflection
    assert all(not c.beyond_reflection for c in scan_converse(2))


def test_converse_classes_replay():
    for cls in scan_converse(7):
        values = {value(code) for code in cls.codes}
        assert values == {cls.value}
        assert len(cls.codes) >= 2


# ---------------------------------------------------- conjecture scans

LENGTH5_PAIRS = [
    ("00110", "10001", 19, 20),
    ("01100", "10001", 19, 20),
    ("10011", "01110", 25, 25),
    ("11001", "01110", 25, 25),
    ("11011", "10111", 30, 31),
    ("11011", "11101", 30, 31),
]


def test_conjecture_holds_through_length_four():
    for length in range(1, 5):
        assert scan_conjecture(length).violations == []
    assert scan_conjecture(4).checked == 16


def test_conjecture_first_fails_at_length_five():
    got = list(iter_conjecture_violations(5))
    assert [(p["low_var_code"], p["high_var_code"],
             p["low_var_value"], p["high_var_value"]) for p in got] == LENGTH5_PAIRS
    for p in got:
        assert p["low_var"] == "17/5" and p["high_var"] == "29/5"


def test_conjecture_pairs_replay_from_scratch():
    for pair in iter_conjecture_violations(7):
        lo, hi = pair["low_var_code"], pair["high_var_code"]
        assert len(lo) == len(hi) == pair["length"]
        assert weight(lo) == weight(hi) == pair["weight"]
        assert cluster_variance(lo) == Fraction(pair["low_var"])
        assert cluster_variance(hi) == Fraction(pair["high_var"])
        assert cluster_variance(lo) < cluster_variance(hi)
        assert value(lo) == pair["low_var_value"]
        assert value(hi) == pair["high_var_value"]
        assert value(lo) <= value(hi)  # the violation itself


def test_conjecture_weight_filter():
    report = scan_conjecture(5, weight_filter=2)
    assert report.checked == 10
    assert len(report.violations) == 2
    assert scan_conjecture(5, weight_filter=1).violations == []


def test_conjecture_violation_cap():
    full = scan_conjecture(6)
    assert len(full.violations) == 30
    assert full.violations_total is None
    capped = scan_conjecture(6, violation_cap=5)
    assert len(capped.violations) == 5
    assert capped.violations_total == 30
    assert capped.violations == full.violations[:5]
    assert capped.to_jsonable()["violations_total"] == 30


def test_conjecture_stream_ignores_parallelism():
    assert list(iter_conjecture_violations(8, jobs=2)) == \
        list(iter_conjecture_violations(8, jobs=1))


def test_conjecture_rejects_bad_length():
    with pytest.raises(DomainError):
        scan_conjecture(0)


# ------------------------------------------------------- roots and blocks

def test_root_scan_keeps_the_value_ordered_pair():
    report = scan_roots(20, 8)
    assert report.survivors == [(1, 2, 3), (2, 1, 3)]
    assert report.checked > 0


def test_block_beats_alternating_is_false_with_reflections_equal():
    verdict = check_block_alternating(2)
    assert verdict.block == 14 and verdict.alternating == 17
    assert verdict.block_reflected == 14
    assert verdict.alternating_reflected == 17
    assert verdict.ok
    for j in range(2, 7):
        v = check_block_alternating(j)
        assert v.ok
        assert v.block == value("1" * j + "0" * j)
        assert v.alternating == value("01" * j)
