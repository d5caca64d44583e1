"""Acceptance suite: one test per criterion, exact tolerances.

Each test prints a single PASS line on success (visible with pytest -s);
a failure shows up as an ordinary pytest failure.
"""

import json
import random

import pytest

from idealpow import (
    VERIFIED_NINE,
    AT_MOST_NINE,
    capacity,
    check_improved,
    check_original,
    choose_t,
    construct,
    cross_section_count,
    equals,
    family_ideal,
    normalize,
    power,
    power_naive,
    predicted_nine,
    verify_tiny_square,
)
from idealpow.cli import main
from idealpow.ioformat import emit, parse
from idealpow.plots import DOT, vgrid_cells
from idealpow.selftest import (
    check_absorption_random_subsets,
    check_duality_random,
    check_interval_random,
    check_basic_absorption,
    check_qbox_sweep,
    check_redundancy_random,
    check_t_independence,
    random_ideal,
)

from conftest import ideal


def report(criterion, detail=""):
    print(f"ACCEPTANCE {criterion}: PASS {detail}".rstrip())


def test_criterion_1_construct_2_6(capsys):
    assert main(["construct", "--nvars", "2", "--depth", "6", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["t"] == 22
    assert doc["capacity"] == 25
    assert doc["sizes"] == [26, 9, 13, 17, 21, 25]
    assert doc["verified"] is True
    with capsys.disabled():
        report(1, "(n=2, d=6: t=22, sizes 26,9,13,17,21,25)")


# the 43 published generators for n=3, d=3
PUBLISHED_43 = [
    (28, 0, 0), (0, 28, 0), (0, 0, 28),
    (21, 7, 7), (7, 21, 7), (7, 7, 21),
    (20, 17, 14), (20, 14, 17), (17, 20, 14), (17, 14, 20), (14, 20, 17), (14, 17, 20),
    (20, 16, 15), (20, 15, 16), (16, 20, 15), (16, 15, 20), (15, 20, 16), (15, 16, 20),
    (19, 18, 14), (19, 14, 18), (18, 19, 14), (18, 14, 19), (14, 19, 18), (14, 18, 19),
    (19, 17, 15), (19, 15, 17), (17, 19, 15), (17, 15, 19), (15, 19, 17), (15, 17, 19),
    (19, 16, 16), (16, 19, 16), (16, 16, 19),
    (18, 18, 15), (18, 15, 18), (15, 18, 18),
    (18, 17, 16), (18, 16, 17), (17, 18, 16), (17, 16, 18), (16, 18, 17), (16, 17, 18),
    (17, 17, 17),
]


def test_criterion_2_construct_3_3(capsys):
    rep = construct(3, 3)
    assert rep.t == 7
    assert rep.capacity == 34
    assert rep.sizes == (43, 18, 34)
    assert rep.verified
    assert set(rep.ideal.exponents()) == set(PUBLISHED_43)
    with capsys.disabled():
        report(2, "(n=3, d=3: t=7, sizes 43,18,34, generator list verbatim)")


def test_criterion_3_example_square(capsys):
    I = ideal((4, 0), (3, 2), (0, 3))
    assert set(power(I, 2).exponents()) == {(8, 0), (7, 2), (4, 3), (3, 5), (0, 6)}
    with capsys.disabled():
        report(3, "(G(I^2) of <x^4, x^3y^2, y^3>)")


def test_criterion_4_capacity_and_counts(capsys):
    assert capacity(2, 6) == 25
    assert capacity(3, 3) == 34
    assert choose_t(3, 29) == 7
    assert cross_section_count(3, 7) == 37
    for t in range(1, 51):
        assert cross_section_count(2, t) == t
    with capsys.disabled():
        report(4, "(A(2,6)=25, A(3,3)=34, choose_t(3,29)=7, counts)")


@pytest.mark.parametrize("t", [1, 3, 22])
def test_criterion_5_remark_ideals(t, capsys):
    S = family_ideal(1, 4 * t, t)
    assert check_improved(S).all_hold
    assert check_original(S).flags["3.2"] is False
    rep = verify_tiny_square(S)
    assert rep.verdict == VERIFIED_NINE
    assert len(rep.actual) == 9
    with capsys.disabled():
        report(5, f"(remark ideal t={t})")


def test_criterion_6_family_sweep(capsys):
    verdicts = {}
    for l in (1, 2, 3):
        for t in (1, 2, 3):
            for k in range(4 * t, 4 * t + 4):
                S = family_ideal(l, k, t)
                assert check_improved(S).all_hold
                rep = verify_tiny_square(S)
                assert len(rep.actual) <= 9
                assert set(rep.actual.gens) <= set(rep.predicted)
                assert rep.verdict in (VERIFIED_NINE, AT_MOST_NINE)
                verdicts[(l, k, t)] = rep.verdict
                # oracle cross-check on the smallest instances
                if S.m <= 6:
                    assert equals(rep.actual, power_naive(S.as_ideal(), 2))
    with capsys.disabled():
        n_nine = sum(1 for v in verdicts.values() if v == VERIFIED_NINE)
        report(6, f"(family sweep: {n_nine}/{len(verdicts)} verified-nine)")


def test_criterion_7_theorem_checks(capsys):
    assert check_basic_absorption(ns=(2, 3, 4), ts=(1, 2, 3))
    assert check_absorption_random_subsets(seed=0, subsets=50)
    assert check_qbox_sweep(ns=(2, 3), ts=(1, 2, 3))
    assert check_redundancy_random(seed=0, count=500)
    assert check_interval_random(seed=0, count=200)
    assert check_t_independence(ns=(2, 3), ts=(1, 2, 3), max_power=4)
    with capsys.disabled():
        report(7, "(absorption, box sweep, redundancy, interval, t-independence)")


def test_criterion_8_oracle_equivalence(capsys):
    rng = random.Random(0)
    for _ in range(200):
        I = random_ideal(rng, max_arity=3, max_gens=6, max_exp=8)
        i = rng.randint(1, 3)
        assert equals(power(I, i), power_naive(I, i))
    with capsys.disabled():
        report(8, "(power == power_naive on 200 seeded ideals)")


def test_criterion_9_duality(capsys):
    assert check_duality_random(seed=0, count=200)
    with capsys.disabled():
        report(9, "(sigma swaps B/B* and C/C* on 200 seeded ideals)")


def test_criterion_10_cli_contract(tmp_path, capsys):
    # file round-trip on golden ideals
    golden = [
        ideal((4, 0), (3, 2), (0, 3)),
        construct(2, 2).ideal,
        construct(3, 2).ideal,
        family_ideal(2, 8, 2).as_ideal(),
    ]
    for I in golden:
        assert parse(emit(I)).gens == I.gens

    # exit codes per subcommand: 0 verified, 1 negative verdict, 2 usage
    fam = tmp_path / "fam.ideal"
    assert main(["family", "1", "4", "1", "--output", str(fam)]) == 0
    assert main(["check", str(fam)]) == 0
    assert main(["check", str(fam), "--scheme", "original"]) == 1
    assert main(["construct", "--nvars", "1", "--depth", "2"]) == 2
    assert main(["family", "1", "3", "1"]) == 2
    small = tmp_path / "small.ideal"
    small.write_text("nvars: 2\n4 0\n3 2\n0 3\n")
    assert main(["check", str(small)]) == 2
    assert main(["power", str(small), "2"]) == 0
    assert main(["absorb", "--nvars", "2", "--t", "2", "--power", "2"]) == 0
    capsys.readouterr()

    # vgrid of the worked example: exactly one dot, at (2,2)
    cells = vgrid_cells(normalize(ideal((4, 0), (3, 2), (0, 3))))
    assert [(i, j) for i, j, k in cells if k == DOT] == [(2, 2)]
    with capsys.disabled():
        report(10, "(round-trip, exit codes, vgrid dot at (2,2))")
