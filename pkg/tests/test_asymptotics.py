import itertools
import math
from fractions import Fraction

import pytest

from gradedvol.arith import RadicalNumber, WeightVector
from gradedvol.asymptotics import (
    DimensionNotStable,
    SampleError,
    additivity_check,
    colength_sequence,
    comparison_constant,
    epsilon,
    epsilon_sequence,
    hilbert_samuel_volume,
    multiplicity,
    multiplicity_trend,
    phi_count,
    phi_limit,
    phi_sequence,
    polynomial_fit_limit,
    symbolic_multiplicity,
    symbolic_sequence,
    threshold_covolume,
    volume,
    volume_equals_multiplicity,
)
from gradedvol.families import Powers, StaircaseRule, SymbolicPowers, ValuationIdeals
from gradedvol.monomial import FacePrime, MonomialIdeal, NotPrimaryError, colength, maximal_ideal, power

SQRT2 = RadicalNumber.sqrt(2)
STAIRCASE = StaircaseRule((Fraction(1, 5), 1))
XX_XY = MonomialIdeal(2, [(2, 0), (1, 1)])
M2 = FacePrime(2, (0, 1))


def test_colength_sequences():
    assert colength_sequence(Powers(maximal_ideal(2)), [1, 5, 9]) == [(n, n * (n + 1) // 2) for n in (1, 5, 9)]
    assert dict(colength_sequence(STAIRCASE, [10]))[10] == 275  # 5 n (n + 1) / 2
    assert colength_sequence(Powers(MonomialIdeal(2, [(2, 0), (0, 3)])), [1]) == [(1, 6)]


def test_staircase_colength_closed_form():
    # count of (i, j) with i/5 + j < n: for each j < n there are 5 (n - j) choices of i
    for n in range(1, 30):
        assert colength(STAIRCASE.ideal_at(n)) == sum(5 * (n - j) for j in range(n))


def test_volume_of_staircase_and_maximal_ideal():
    est = volume(STAIRCASE, [50, 100, 200, 400])
    assert abs(est.extrapolated - 5) < Fraction(1, 50)
    assert polynomial_fit_limit(est.samples, 2, 2) == 5
    assert volume(Powers(maximal_ideal(2)), [50, 100]).extrapolated == 1 + Fraction(1, 150)


def test_volume_of_valuation_family_near_closed_form():
    F = ValuationIdeals(WeightVector([1, SQRT2]))
    est = volume(F, [250, 500])
    target = threshold_covolume(F.weights.entries) * 2
    assert str(target) == "√2/2"
    assert abs(target - est.extrapolated) < Fraction(1, 100)


def test_sample_error_names_index():
    with pytest.raises(SampleError) as info:
        volume(Powers(MonomialIdeal(2, [(1, 0)])), [3, 4])
    assert info.value.n == 3


def test_multiplicity_examples():
    assert multiplicity(maximal_ideal(2)) == 1
    assert multiplicity(MonomialIdeal(2, [(2, 0), (0, 3)])) == 6
    assert multiplicity(power(maximal_ideal(2), 2)) == 4
    assert multiplicity(maximal_ideal(3)) == 1
    with pytest.raises(NotPrimaryError):
        multiplicity(XX_XY)


@pytest.mark.parametrize(
    "gens",
    [[(2, 0), (0, 3)], [(3, 0), (1, 1), (0, 4)], [(2, 0, 0), (0, 3, 0), (0, 0, 1)], [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 1)]],
)
def test_multiplicity_equals_hilbert_samuel_leading_term(gens):
    I = MonomialIdeal(len(gens[0]), gens)
    e = multiplicity(I)
    assert hilbert_samuel_volume(I) == e
    trend = multiplicity_trend(I, [4, 8, 16])
    gaps = [abs(v - e) for _, v in trend.normalized]
    assert gaps[0] >= gaps[1] >= gaps[2]


def test_volume_equals_multiplicity_for_powers_is_exact():
    I = MonomialIdeal(2, [(3, 0), (1, 1), (0, 4)])
    rep = volume_equals_multiplicity(Powers(I), [20, 40], [1, 2, 5, 10])
    assert all(r == multiplicity(I) for _, r in rep.multiplicities)


def test_staircase_multiplicity_ratio():
    rep = volume_equals_multiplicity(STAIRCASE, [40, 80], [5, 10, 20])
    # I_p contains y^p and x^{5p}, so its Newton polygon is exactly p times the limit triangle
    assert all(r == 5 for _, r in rep.multiplicities)
    assert rep.monotone
    assert rep.to_json()["multiplicity_ratios"][0]["p"] == 5


def test_epsilon_of_x2_xy():
    seq = epsilon_sequence(XX_XY, range(1, 30))
    assert seq == [(n, n * (n + 1) // 2) for n in range(1, 30)]
    assert abs(epsilon(XX_XY, [50, 100]).extrapolated - 1) < Fraction(1, 50)


def test_epsilon_of_principal_ideal_is_zero():
    assert all(v == 0 for _, v in epsilon_sequence(MonomialIdeal(2, [(1, 1)]), range(1, 20)))


def test_epsilon_of_primary_ideal_follows_local_cohomology():
    # (I^n)^sat is the unit ideal, so the length is the colength of I^n
    I = MonomialIdeal(2, [(2, 0), (0, 3)])
    assert epsilon_sequence(I, [1, 2, 3]) == [(n, colength(power(I, n))) for n in (1, 2, 3)]


def test_epsilon_rejects_trivial_ideals():
    with pytest.raises(ValueError):
        epsilon_sequence(MonomialIdeal(2, [(0, 0)]), [1])


def test_symbolic_examples():
    y = MonomialIdeal(2, [(0, 1)])
    assert symbolic_sequence(XX_XY, y, M2, range(1, 8)) == [(n, n * (n + 1) // 2) for n in range(1, 8)]
    assert SymbolicPowers(XX_XY, y).ideal_at(4) == MonomialIdeal(2, [(4, 0)])
    x = MonomialIdeal(2, [(1, 0)])
    assert all(v == 0 for _, v in symbolic_sequence(x, y, FacePrime(2, (0,)), range(1, 6)))
    same = symbolic_sequence(XX_XY, maximal_ideal(2), M2, range(1, 6))
    assert same == epsilon_sequence(XX_XY, range(1, 6))
    est = symbolic_multiplicity(XX_XY, y, M2, [20, 40])
    assert abs(est.extrapolated - 1) < Fraction(1, 20)


def test_symbolic_rejects_wrong_prime_dimension():
    with pytest.raises(ValueError):
        symbolic_multiplicity(XX_XY, MonomialIdeal(2, [(0, 1)]), FacePrime(2, (0,)), [4, 8])


def test_additivity_on_dvr_localizations():
    for I in (MonomialIdeal(2, [(1, 0)]), XX_XY):
        rep = additivity_check(Powers(I), [3, 6, 12])
        assert rep.s == 1
        assert rep.T == rep.A == [FacePrime(2, (0,))]
        assert all(v == 1 for _, v in rep.lhs.normalized)
        assert all(v == 1 for _, v in rep.rhs)
        assert rep.rhs_limit == 1
        assert rep.to_json()["T"] == [{"d": 2, "support": [1]}]


def test_additivity_with_two_components():
    # (xy)^n: components (x) and (y), each contributing n
    rep = additivity_check(Powers(MonomialIdeal(2, [(1, 1)])), [2, 4, 8])
    assert len(rep.T) == 2 and rep.lhs.extrapolated == 2 and rep.rhs_limit == 2


def test_additivity_for_maximal_ideal_powers():
    rep = additivity_check(Powers(maximal_ideal(2)), [10, 20, 40])
    assert rep.s == 0 and rep.T == rep.A == [FacePrime(2, (0, 1))]
    assert all(v == 1 for _, v in rep.rhs)
    assert abs(rep.lhs.extrapolated - 1) < Fraction(1, 50)


def test_additivity_preconditions():
    from gradedvol.families import Custom
    from gradedvol.monomial import unit_ideal

    with pytest.raises(ValueError):
        additivity_check(Powers(maximal_ideal(2)), [4])
    with pytest.raises(TypeError):
        additivity_check(Custom((unit_ideal(2), maximal_ideal(2))), [1, 2])


def test_phi_examples():
    one = WeightVector([1])
    assert phi_sequence(one, [1, 5, 9]) == [(1, 0), (5, 4), (9, 8)]
    assert phi_limit(one, [10, 20]).extrapolated == 1
    w = WeightVector([1, SQRT2])
    assert phi_sequence(w, [50])[0][1] == colength(ValuationIdeals(w).ideal_at(50)) - 1
    assert str(threshold_covolume(w.entries)) == "√2/4"


def test_phi_against_direct_enumeration():
    w = WeightVector([Fraction(3, 2), SQRT2, RadicalNumber.sqrt(3)])
    for n in (1, 4, 7):
        brute = sum(
            1
            for v in itertools.product(range(8), repeat=3)
            if any(v) and sum(a * b for a, b in zip(v, w.entries)) < n
        )
        assert phi_count(w, n) == brute


def test_phi_refuses_dependent_weights():
    with pytest.raises(ValueError):
        phi_sequence(WeightVector([1, 2], strict=False), [3])


def test_phi_limit_in_half_open_interval():
    est = phi_limit(WeightVector([1, SQRT2]), [250, 500])
    assert 0 <= est.extrapolated < Fraction(1, 2)


def test_comparison_constant_holds_up_to_thirty():
    # m^{cn} ∩ I^n = m^{cn} ∩ (I^n)^sat for every n <= 30
    assert comparison_constant(XX_XY, 30) == 2
