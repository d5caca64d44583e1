import random

import pytest

from idealpow import (
    AT_MOST_NINE,
    CONDITIONS_FAIL,
    VERIFIED_NINE,
    Monomial,
    ParameterError,
    PreconditionError,
    SortedBivariateIdeal,
    check_improved,
    check_original,
    construct,
    dual_index,
    equals,
    family_ideal,
    interval_divisibility_holds,
    normalize,
    power,
    predicted_nine,
    redundancy_check,
    swap_reverse,
    verify_tiny_square,
)
from idealpow.selftest import random_sorted_bivariate

from conftest import ideal, mono


def staircase(*pairs) -> SortedBivariateIdeal:
    return SortedBivariateIdeal(tuple(Monomial(p) for p in pairs))


class TestNormalize:
    def test_sorts(self):
        S = normalize(ideal((0, 3), (4, 0), (3, 2)))
        assert [g.exps for g in S.gens] == [(4, 0), (3, 2), (0, 3)]

    def test_sorted_input_unchanged(self):
        S = normalize(ideal((4, 0), (3, 2), (0, 3)))
        assert [g.exps for g in S.gens] == [(4, 0), (3, 2), (0, 3)]

    def test_minimalizes_first(self):
        S = normalize(ideal((4, 1), (4, 0), (3, 2), (0, 3)))
        assert [g.exps for g in S.gens] == [(4, 0), (3, 2), (0, 3)]

    def test_arity(self):
        with pytest.raises(ParameterError):
            normalize(ideal((1, 2, 3)))


class TestCheckImproved:
    def test_family_smallest(self):
        rep = check_improved(family_ideal(1, 4, 1))
        assert rep.flags == {"A": True, "B": True, "Bstar": True, "C": True, "Cstar": True}
        assert rep.all_hold

    def test_remark_t5(self):
        rep = check_improved(family_ideal(1, 20, 5))
        assert rep.all_hold

    def test_b_fails(self):
        S = staircase((9, 0), (8, 1), (2, 2), (1, 8), (0, 9))
        rep = check_improved(S)
        assert not rep.flags["B"]
        assert not rep.all_hold

    def test_m_too_small(self):
        with pytest.raises(ParameterError, match="m >= 5"):
            check_improved(staircase((4, 0), (3, 2), (0, 3)))


class TestCheckOriginal:
    def test_remark_fails_32_only(self):
        rep = check_original(family_ideal(1, 20, 5))
        assert rep.flags["3.2"] is False
        assert all(v for k, v in rep.flags.items() if k != "3.2")

    def test_family_smallest_32(self):
        # u_1 u_4 = x^5 y^3 does not divide u_3^2 = x^4 y^4
        rep = check_original(family_ideal(1, 4, 1))
        assert rep.flags["3.2"] is False

    def test_keys(self):
        rep = check_original(family_ideal(1, 4, 1))
        assert set(rep.flags) == {"2", "3.1", "3.2", "4.1", "4.2", "5.1", "5.2", "6.1", "6.2"}


class TestPredictedNine:
    def test_family_smallest(self):
        got = predicted_nine(family_ideal(1, 4, 1))
        assert got == {Monomial((i, 8 - i)) for i in range(9)}

    def test_construct_ideal(self):
        rep = construct(2, 6)
        S = normalize(rep.ideal)
        pred = predicted_nine(S)
        assert len(pred) == 9
        assert set(power(rep.ideal, 2).gens) == pred

    def test_symmetry(self):
        S = random_sorted_bivariate(random.Random(7))
        assert predicted_nine(swap_reverse(S)) == {
            Monomial((p.exps[1], p.exps[0])) for p in predicted_nine(S)
        }


class TestVerifyTinySquare:
    def test_remark_t22(self):
        rep = verify_tiny_square(family_ideal(1, 88, 22))
        assert rep.verdict == VERIFIED_NINE
        assert len(rep.actual) == 9

    def test_family_smallest(self):
        rep = verify_tiny_square(family_ideal(1, 4, 1))
        assert rep.verdict == VERIFIED_NINE

    def test_conditions_fail(self):
        S = staircase((9, 0), (8, 1), (2, 2), (1, 8), (0, 9))
        rep = verify_tiny_square(S)
        assert rep.verdict == CONDITIONS_FAIL
        # actual is still computed for diagnostics
        assert len(rep.actual) >= 1

    def test_json_keys(self):
        doc = verify_tiny_square(family_ideal(1, 4, 1)).to_json_dict()
        assert set(doc) == {"scheme", "flags", "predicted", "actual", "verdict"}


class TestFamilyIdeal:
    def test_recovers_construct_2_6(self):
        S = family_ideal(1, 88, 22)
        rep = construct(2, 6)
        assert equals(S.as_ideal(), rep.ideal)

    def test_smallest(self):
        S = family_ideal(1, 4, 1)
        assert [g.exps for g in S.gens] == [(4, 0), (3, 1), (2, 2), (1, 3), (0, 4)]

    def test_l2_k8_t2(self):
        S = family_ideal(2, 8, 2)
        assert [g.exps[0] for g in S.gens] == [16, 12, 11, 10, 9, 8, 4, 0]
        assert S.m == 8

    def test_bad_params(self):
        with pytest.raises(ParameterError, match="k >= 4t"):
            family_ideal(1, 3, 1)
        with pytest.raises(ParameterError):
            family_ideal(0, 4, 1)

    @pytest.mark.parametrize("l", [1, 2, 3])
    @pytest.mark.parametrize("t", [1, 2, 3])
    def test_grid_passes_improved(self, l, t):
        for k in range(4 * t, 4 * t + 4):
            assert check_improved(family_ideal(l, k, t)).all_hold


class TestDualIndex:
    def test_self_dual(self):
        assert dual_index(1, 5, 5) == (1, 5)

    def test_pairing(self):
        assert dual_index(1, 3, 5) == (3, 5)

    @pytest.mark.parametrize("m", range(2, 9))
    def test_involution(self, m):
        for i in range(1, m + 1):
            for j in range(i, m + 1):
                assert dual_index(*dual_index(i, j, m), m) == (i, j)

    def test_out_of_range(self):
        with pytest.raises(ParameterError):
            dual_index(3, 2, 5)


class TestRedundancy:
    def test_family(self):
        assert redundancy_check(family_ideal(1, 4, 1))
        assert redundancy_check(family_ideal(1, 12, 3))

    def test_random(self):
        rng = random.Random(0)
        assert all(redundancy_check(random_sorted_bivariate(rng)) for _ in range(500))


class TestIntervalDivisibility:
    def test_single_point(self):
        S = family_ideal(1, 4, 1)
        assert interval_divisibility_holds(S, (2, 4), (2, 4), (2, 4))

    def test_direct(self):
        S = family_ideal(1, 4, 1)
        # f((2,4)) = x^4 y^4 = f((3,3))
        assert interval_divisibility_holds(S, (2, 4), (3, 3), (3, 3))

    def test_precondition_reported(self):
        S = family_ideal(1, 4, 1)
        with pytest.raises(PreconditionError):
            interval_divisibility_holds(S, (1, 1), (5, 5), (5, 5))  # u_1^2 does not divide u_5^2


class TestDualityAndConservativity:
    def test_duality_flags(self):
        rng = random.Random(1)
        for _ in range(200):
            S = random_sorted_bivariate(rng)
            f = check_improved(S).flags
            g = check_improved(swap_reverse(S)).flags
            assert g["B"] == f["Bstar"] and g["Bstar"] == f["B"]
            assert g["C"] == f["Cstar"] and g["Cstar"] == f["C"]
            assert g["A"] == f["A"]

    def test_improved_implies_eight_of_nine(self):
        cases = [family_ideal(l, k, t) for l in (1, 2) for t in (1, 2) for k in (4 * t, 4 * t + 2)]
        rng = random.Random(2)
        cases += [
            S for S in (random_sorted_bivariate(rng) for _ in range(2000))
            if check_improved(S).all_hold
        ]
        for S in cases:
            assert check_improved(S).all_hold
            flags = check_original(S).flags
            for key in ("2", "3.1", "4.1", "4.2", "5.1", "5.2", "6.1", "6.2"):
                assert flags[key], key

    def test_32_not_implied(self):
        # the improved conditions hold but 3.2 fails on every member of
        # the k = 4t, l = 1 slice
        for t in (1, 2, 3):
            S = family_ideal(1, 4 * t, t)
            assert check_improved(S).all_hold
            assert not check_original(S).flags["3.2"]

    def test_theorem_soundness_on_condition_satisfying(self):
        rng = random.Random(3)
        checked = 0
        for _ in range(2000):
            S = random_sorted_bivariate(rng, max_exp=20)
            if not check_improved(S).all_hold:
                continue
            rep = verify_tiny_square(S)
            assert rep.verdict in (VERIFIED_NINE, AT_MOST_NINE)
            assert set(rep.actual.gens) <= set(rep.predicted)
            checked += 1
        # the filter must actually exercise the theorem
        assert checked > 0
