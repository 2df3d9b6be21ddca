from fractions import Fraction as F

import pytest

from locvol.monomial import (
    BoxOverflow,
    GeneratorBlowup,
    MonomialIdeal,
    UnsupportedAmbient,
    asymptotic_multiplicity,
    h1_dim,
    multiplicity_sequence,
    power,
    saturation,
)
from locvol.toric import PointedCone


def ideal(*gens):
    return MonomialIdeal(list(gens))


def brute_h1(I, box=12):
    """Independent oracle: direct staircase scan of saturation minus ideal."""
    from itertools import product

    sat = saturation(I)
    return sum(
        1
        for pt in product(range(box), repeat=I.dim)
        if sat.contains_exponent(pt) and not I.contains_exponent(pt)
    )


def test_minimalization_and_equality():
    assert ideal((3, 0), (1, 3), (4, 1), (1, 4)).generators == ((1, 3), (3, 0))
    assert ideal((3, 0), (1, 3)) == ideal((1, 3), (3, 0), (5, 5))


def test_power_examples():
    principal = ideal((2, 5))
    assert power(principal, 3).generators == ((6, 15),)
    assert power(ideal((3, 0), (1, 3)), 2).generators == ((2, 6), (4, 3), (6, 0))
    assert power(ideal((1, 0), (0, 1)), 2).generators == ((0, 2), (1, 1), (2, 0))


def test_power_blowup_guard():
    wide = MonomialIdeal([(i, 120 - i) for i in range(121)])
    with pytest.raises(GeneratorBlowup):
        power(wide, 5)


def test_saturation_examples():
    assert saturation(ideal((1, 0), (0, 1))).generators == ((0, 0),)
    assert saturation(ideal((3, 0), (1, 3))).generators == ((1, 0),)
    assert saturation(ideal((2, 5))).generators == ((2, 5),)


def test_saturation_idempotent_and_extensive():
    for I in (ideal((3, 0), (1, 3)), ideal((2, 1), (1, 2)), ideal((4, 0), (0, 3))):
        sat = saturation(I)
        assert saturation(sat) == sat
        for g in I.generators:
            assert sat.contains_exponent(g)


def test_h1_dim_examples():
    assert h1_dim(ideal((3, 0), (1, 3))) == 6
    assert h1_dim(power(ideal((1, 0), (0, 1)), 3)) == 6
    assert h1_dim(ideal((2, 5))) == 0
    assert h1_dim(ideal((3, 0), (1, 3))) == brute_h1(ideal((3, 0), (1, 3)))


def test_h1_zero_iff_saturated():
    for I in (ideal((3, 0), (1, 3)), ideal((1, 0)), ideal((2, 2), (0, 5))):
        assert (h1_dim(I) == 0) == (saturation(I) == I)


def test_h1_three_variables():
    I = MonomialIdeal([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert h1_dim(I) == 1
    J = MonomialIdeal([(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 1)])
    assert h1_dim(J) == brute_h1(J, box=8)


def test_asymptotic_multiplicity_examples():
    assert asymptotic_multiplicity(ideal((3, 0), (1, 3))) == 6
    assert asymptotic_multiplicity(ideal((2, 5))) == 0
    for a, b in ((2, 3), (4, 5), (3, 7)):
        assert asymptotic_multiplicity(ideal((a, 0), (0, b))) == a * b


def test_homogeneity_through_powers():
    I = ideal((3, 0), (1, 3))
    base = asymptotic_multiplicity(I)
    for k in (2, 3):
        assert asymptotic_multiplicity(power(I, k)) == k ** 2 * base


def test_multiplicity_sequence_maximal_ideal():
    seq = multiplicity_sequence(ideal((1, 0), (0, 1)), 8)
    assert [(p, h) for p, h, _ in seq] == [
        (p, p * (p + 1) // 2) for p in range(1, 9)
    ]
    assert seq[-1][2] == F(2 * 36, 64)


def test_multiplicity_sequence_converges():
    I = ideal((3, 0), (1, 3))
    target = asymptotic_multiplicity(I)
    seq = multiplicity_sequence(I, 40)
    assert abs(seq[-1][2] - target) / target <= F(1, 10)
    # empirical O(1/p) error: |value - limit| * p stays bounded
    assert all(abs(norm - target) * p <= 8 for p, _, norm in seq)


def test_cone_ambient_unimodular_roundtrip():
    uni = PointedCone([(1, 0), (1, 1)])
    L = MonomialIdeal([(1, 0), (1, 1)], ambient=uni)
    assert saturation(L).generators == ((0, 0),)
    assert h1_dim(L) == 1
    assert asymptotic_multiplicity(L) == 1


def test_cone_ambient_nonunimodular_asymptotics():
    skew = PointedCone([(1, 0), (1, 2)])
    K = MonomialIdeal([(1, 0), (1, 1)], ambient=skew)
    # difference region is the triangle (1/2,0),(1,0),(1,1): area 1/4, times 2!
    assert asymptotic_multiplicity(K) == F(1, 2)
    assert asymptotic_multiplicity(MonomialIdeal([(2, 2)], ambient=skew)) == 0
    with pytest.raises(UnsupportedAmbient):
        h1_dim(K)


def test_cone_ambient_membership_validation():
    skew = PointedCone([(1, 0), (1, 2)])
    with pytest.raises(ValueError):
        MonomialIdeal([(0, 1)], ambient=skew)


def test_box_overflow_guard():
    huge = MonomialIdeal([(10 ** 4, 0), (0, 10 ** 4), (1, 1)])
    with pytest.raises(BoxOverflow):
        h1_dim(huge)
