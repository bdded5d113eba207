import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradedvol.monomial import (
    FacePrime,
    MonomialIdeal,
    NotPrimaryError,
    colength,
    colength_enumerate,
    colength_inclusion_exclusion,
    colength_sliced,
    contains,
    dimension,
    intersect,
    is_m_primary,
    localize_at_face,
    max_standard_degree,
    maximal_ideal,
    minimalize,
    newton_complement_volume,
    power,
    product,
    quotient,
    quotient_length,
    saturate,
    unit_ideal,
    zero_ideal,
)

BOX = 7


def ideal(*gens):
    return MonomialIdeal(len(gens[0]), gens)


def box(d, size=BOX):
    return itertools.product(range(size), repeat=d)


def members(I, size=BOX):
    return {v for v in box(I.d, size) if any(all(a >= b for a, b in zip(v, g)) for g in I.gens)}


# -- examples -------------------------------------------------------------------

def test_minimalize_examples():
    assert minimalize([(2, 0), (1, 1), (2, 1)], 2).gens == ((1, 1), (2, 0))
    assert minimalize([(0, 0), (3, 5)], 2).is_unit()
    assert minimalize([], 2).is_zero()


def test_membership_examples():
    I = ideal((2, 0), (1, 1))
    assert contains(I, (3, 1))
    assert not contains(I, (1, 0))
    assert not contains(zero_ideal(2), (5, 5))


def test_product_power_intersection_examples():
    assert product(ideal((1, 0)), ideal((0, 1))) == ideal((1, 1))
    assert power(ideal((2, 0), (0, 3)), 2) == ideal((4, 0), (2, 3), (0, 6))
    assert power(ideal((2, 0), (0, 3)), 0).is_unit()
    assert intersect(ideal((1, 0)), ideal((0, 1))) == ideal((1, 1))
    I = ideal((2, 0), (1, 1))
    assert intersect(I, unit_ideal(2)) == I
    assert intersect(I, ideal((0, 2))) == ideal((1, 2))


def test_quotient_examples():
    I = ideal((2, 0), (1, 1))
    assert quotient(I, ideal((1, 0))) == ideal((1, 0), (0, 1))
    assert quotient(I, unit_ideal(2)) == I
    assert quotient(ideal((1, 1)), ideal((0, 1))) == ideal((1, 0))


def test_saturate_examples():
    m = maximal_ideal(2)
    assert saturate(ideal((2, 0), (1, 1)), m) == ideal((1, 0))
    assert saturate(ideal((3, 0), (1, 2), (0, 4)), m).is_unit()
    assert saturate(ideal((1, 1)), m) == ideal((1, 1))


def test_colength_examples():
    assert colength(power(maximal_ideal(2), 3)) == 6
    assert colength(ideal((2, 0), (0, 3))) == 6
    assert colength(unit_ideal(2)) == 0
    with pytest.raises(NotPrimaryError):
        colength(ideal((2, 0), (1, 1)))


def test_primary_and_dimension_examples():
    assert is_m_primary(ideal((2, 0), (0, 3)))
    assert not is_m_primary(ideal((2, 0), (1, 1)))
    assert not is_m_primary(zero_ideal(2))
    assert dimension(ideal((2, 0), (1, 1))) == 1
    assert dimension(maximal_ideal(2)) == 0
    assert dimension(ideal((1, 1))) == 1
    assert dimension(zero_ideal(3)) == 3


def test_localization_examples():
    x = FacePrime(2, (0,))
    assert localize_at_face(ideal((2, 1), (1, 3)), x) == MonomialIdeal(1, [(1,)])
    assert localize_at_face(power(maximal_ideal(2), 2), x).is_unit()
    I = ideal((2, 1), (1, 3))
    assert localize_at_face(I, FacePrime(2, (0, 1))) == I


def test_covolume_examples():
    assert newton_complement_volume(maximal_ideal(2)) == Fraction(1, 2)
    assert newton_complement_volume(ideal((2, 0), (0, 3))) == 3
    assert newton_complement_volume(power(maximal_ideal(2), 2)) == 2


def test_covolume_matches_colength_trend():
    I = ideal((3, 0), (1, 1), (0, 4))
    e = 2 * newton_complement_volume(I)
    gaps = [abs(Fraction(2 * colength(power(I, k)), k * k) - e) for k in (5, 10, 20, 40)]
    assert all(a >= b for a, b in zip(gaps, gaps[1:]))
    assert gaps[-1] < Fraction(1, 2)


def test_quotient_length_counts_the_difference():
    small = power(ideal((2, 0), (1, 1)), 3)
    big = saturate(small, maximal_ideal(2))
    length, B = quotient_length(big, small)
    assert length == 6
    size = B + max(max(g) for g in small.gens) + 1
    oracle = len(members(big, size) - members(small, size))
    assert oracle == length


def test_max_standard_degree():
    assert max_standard_degree(ideal((2, 0), (0, 3))) == 3
    assert max_standard_degree(unit_ideal(2)) == -1


def test_json_roundtrip():
    I = ideal((2, 0, 1), (0, 3, 0), (1, 1, 1))
    assert MonomialIdeal.from_json(I.to_json()) == I


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        product(ideal((1, 0)), ideal((1, 0, 0)))


# -- properties with brute-force oracles -------------------------------------------

def gens_strategy(d, max_gens=4, max_exp=4):
    return st.lists(st.tuples(*[st.integers(0, max_exp)] * d), min_size=1, max_size=max_gens)


@st.composite
def ideals(draw, d=None, primary=False):
    d = d or draw(st.integers(1, 3))
    gens = draw(gens_strategy(d))
    if primary:
        gens += [tuple(draw(st.integers(1, 5)) if j == k else 0 for j in range(d)) for k in range(d)]
    return MonomialIdeal(d, gens)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_operations_match_membership(data):
    d = data.draw(st.integers(1, 3))
    I = data.draw(ideals(d))
    J = data.draw(ideals(d))
    size = 10 if d < 3 else 8
    mI, mJ = members(I, size), members(J, size)
    assert members(intersect(I, J), size) == mI & mJ
    assert members(I + J, size) == mI | mJ
    prod_oracle = {tuple(a + b for a, b in zip(u, v)) for u in mI for v in mJ}
    assert members(product(I, J), size) == {v for v in prod_oracle if max(v) < size}
    # quotient: v in I : J iff v + g in I for every generator g of J
    small = 5 if d < 3 else 4
    for v in box(d, small):
        in_quot = contains(quotient(I, J), v)
        assert in_quot == all(contains(I, tuple(a + b for a, b in zip(v, g))) for g in J.gens)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_saturate_is_fixpoint_of_quotients(data):
    d = data.draw(st.integers(1, 3))
    I, J = data.draw(ideals(d)), data.draw(ideals(d))
    if J.is_zero():
        return
    cur = I
    while True:
        nxt = quotient(cur, J)
        if nxt == cur:
            break
        cur = nxt
    assert saturate(I, J) == cur


@settings(max_examples=80, deadline=None)
@given(ideals(primary=True))
def test_three_colength_algorithms_agree(I):
    n = colength_enumerate(I)
    assert colength_inclusion_exclusion(I) == n
    assert colength_sliced(I) == n
    assert colength(I) == n


def test_colength_sliced_on_many_generators():
    I = power(ideal((3, 0, 0), (0, 2, 0), (0, 0, 3), (1, 1, 1), (2, 0, 1)), 4)
    assert len(I.gens) > 12
    assert colength(I) == colength_enumerate(I)


@settings(max_examples=40, deadline=None)
@given(ideals(d=2, primary=True))
def test_covolume_is_limit_of_colength(I):
    e = 2 * newton_complement_volume(I)
    # the complement of k * NP(I) is a down-set, so every point of it rounds
    # down to a monomial outside I^k: colength(I^k) >= e k^2 / 2
    gaps = []
    for k in (8, 32):
        ratio = Fraction(2 * colength(power(I, k)), k * k)
        assert ratio >= e
        gaps.append(ratio - e)
    assert gaps[1] <= gaps[0]


@settings(max_examples=40, deadline=None)
@given(ideals(primary=True))
def test_max_standard_degree_is_sharp(I):
    if I.is_unit():
        return
    D = max_standard_degree(I)
    assert is_m_primary(I)
    outside = [v for v in box(I.d, D + 2) if sum(v) == D and not contains(I, v)]
    assert outside
    assert all(contains(I, v) for v in box(I.d, D + 2) if sum(v) == D + 1)


@settings(max_examples=60, deadline=None)
@given(ideals())
def test_dimension_is_largest_avoiding_face(I):
    if I.is_unit():
        return
    # dim R/I = largest set of variables S with no generator supported inside S
    best = max(
        len(S)
        for r in range(I.d + 1)
        for S in itertools.combinations(range(I.d), r)
        if not any(all(g[k] == 0 for k in range(I.d) if k not in S) for g in I.gens)
    )
    assert dimension(I) == best
