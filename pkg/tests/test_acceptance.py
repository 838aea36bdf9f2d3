"""Acceptance suite: one test per criterion, one PASS line per criterion.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines; the
slow sweeps (criteria 6-9) dominate the runtime.
"""

import time
from fractions import Fraction

from sturmwords import (
    checks,
    circular_factors,
    classify_varieties,
    compose,
    empirical_frequencies,
    factor_interval_table,
    lower_christoffel,
    make_params,
    mechanical_prefix,
    multiplicities_formula,
    named_slope,
    partitioned_frequencies,
)

PAPER_PREFIX_36 = "abababbababbabababbababbabababbababb"


def report(num, detail):
    print(f"criterion {num:02d} PASS: {detail}")


def test_criterion_01_christoffel_fixtures():
    lower_christoffel(5, 2)  # warm any caches before timing
    t0 = time.perf_counter()
    w52 = lower_christoffel(5, 2)
    w53 = lower_christoffel(5, 3)
    elapsed = time.perf_counter() - t0
    assert w52 == "aaabaab"
    assert w53 == "aabaabab"
    assert elapsed < 1e-3
    report(1, f"fixtures exact, generation took {elapsed * 1e6:.0f} us")


def test_criterion_02_example_six():
    table = classify_varieties(circular_factors("aaabab", 3), compose((1, 2)))
    assert table.profiles == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert table.multiplicities == (1, 3, 1, 1)
    report(2, "aaabab under (1,2): 4 varieties, multiplicities (1,3,1,1)")


def test_criterion_03_example_seven():
    table = classify_varieties(circular_factors("aabaaab", 4), compose((1, 3)))
    assert len(table.entries) == 3
    assert table.multiplicities == (5, 1, 1)
    report(3, "aabaaab under (1,3): 3 varieties, multiplicities (5,1,1)")


def test_criterion_04_figure_two():
    table = multiplicities_formula(make_params(5, 2), compose((1, 2, 1)))
    assert table.residues == (0, 1, 5, 6)
    assert table.multiplicities == (1, 4, 1, 1)
    assert table.profiles == ((0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 0, 1))
    report(4, "formula(5,2;1,2,1): residues (0,1,5,6), Pi=(1,4,1,1)")


def test_criterion_05_figure_three():
    table = multiplicities_formula(make_params(5, 3), compose((1, 1, 1, 1)))
    assert table.multiplicities == (2, 2, 1, 2, 1)
    assert table.profiles == (
        (0, 0, 1, 0),
        (0, 1, 0, 0),
        (0, 1, 0, 1),
        (1, 0, 0, 1),
        (1, 0, 1, 0),
    )
    report(5, "formula(5,3;1,1,1,1): Pi=(2,2,1,2,1) with the caption profiles")


def test_criterion_06_oracle_sweep():
    t0 = time.perf_counter()
    result = checks.oracle_equivalence_check(max_n=60, max_m=12)
    elapsed = time.perf_counter() - t0
    assert result.ok, result
    assert elapsed < 60
    report(6, f"{result.detail} in {elapsed:.1f}s")


def test_criterion_07_borel_reutenauer():
    result = checks.borel_reutenauer_check(num_pairs=50, max_n=200, seed=0)
    assert result.ok, result
    report(7, result.detail)


def test_criterion_08_characterization_converse():
    t0 = time.perf_counter()
    result = checks.characterization_check(max_len=16)
    elapsed = time.perf_counter() - t0
    assert result.ok, result
    assert elapsed < 120
    report(8, f"{result.detail} in {elapsed:.1f}s")


def test_criterion_09_isc():
    result = checks.isc_check(max_n=200)
    assert result.ok, result
    report(9, result.detail)


def test_criterion_10_sturmian_prefix():
    assert mechanical_prefix(named_slope("log2_3_2"), 36) == PAPER_PREFIX_36
    report(10, "36-letter prefix of slope log2(3/2) matches byte-for-byte")


def test_criterion_11_example_l23_varieties():
    ft = partitioned_frequencies(named_slope("log2_3_2"), compose((1, 3)))
    assert [e.members for e in ft.entries] == [
        ("abab", "abba"),
        ("baba",),
        ("babb", "bbab"),
    ]
    total = sum(e.frequency for e in ft.entries)
    assert abs(float(total) - 1.0) <= 1e-15  # exact rationals: total == 1
    assert total == 1
    table = factor_interval_table(named_slope("log2_3_2"), 4)
    factor_len = dict(zip(table.factors, table.lengths))
    for entry in ft.entries:
        member_sum = sum((factor_len[f] for f in entry.members), Fraction(0))
        assert abs(entry.frequency - member_sum) <= 2 * table.err
    report(11, "classes {abab,abba},{baba},{babb,bbab}; sum=1; additivity holds")


def test_criterion_12_three_distance():
    result = checks.three_distance_check(max_m=100)
    assert result.ok, result
    report(12, result.detail)


def test_criterion_13_lexorder():
    result = checks.lexorder_check(max_m=50, prefix_len=5000)
    assert result.ok, result
    report(13, result.detail)


def test_criterion_14_convergence():
    t0 = time.perf_counter()
    theta = named_slope("log2_3_2")
    comp = compose((1, 3))
    exact = partitioned_frequencies(theta, comp).by_profile()
    empirical = empirical_frequencies(theta, comp, 100000).by_profile()
    assert set(exact) == set(empirical)
    worst = max(
        abs(exact[p].frequency - empirical[p].frequency) for p in exact
    )
    elapsed = time.perf_counter() - t0
    assert worst <= Fraction(1, 10000)
    assert elapsed < 5
    report(14, f"worst deviation {float(worst):.2e} <= 1e-4 in {elapsed:.1f}s")


def test_criterion_15_cross_module():
    result = checks.mechanical_christoffel_check(max_n=200)
    assert result.ok, result
    report(15, result.detail)
