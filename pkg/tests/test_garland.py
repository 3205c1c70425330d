from fractions import Fraction

import pytest

from torofock.garland import (
    GarlandPoly,
    garland_coeffs,
    garland_inverse_check,
    garland_to_symfun,
)
from torofock.symfun import complete, elementary


def test_low_coefficients():
    ps = garland_coeffs(2)
    assert ps[0] == GarlandPoly.one()
    assert ps[1] == GarlandPoly.symbol(1).scale(-1)
    expected2 = (GarlandPoly.symbol(1) * GarlandPoly.symbol(1) - GarlandPoly.symbol(2)).scale(
        Fraction(1, 2)
    )
    assert ps[2] == expected2


def test_exponential_expansion_cross_check():
    # direct expansion of exp(-sum h[j] u^j / j) through u^4, term by term
    s_max = 4
    ps = garland_coeffs(s_max)
    # build exp by multiplying the series for each j
    series = [GarlandPoly.one()] + [GarlandPoly() for _ in range(s_max)]
    for j in range(1, s_max + 1):
        factor = [GarlandPoly.one()]
        term = GarlandPoly.one()
        power = 0
        k = 0
        while (k + 1) * j <= s_max:
            k += 1
            term = term * GarlandPoly.symbol(j).scale(Fraction(-1, j))
            term = term.scale(Fraction(1, k))
            factor.append(term)
        new = [GarlandPoly() for _ in range(s_max + 1)]
        for d1, a in enumerate(series):
            for d2, b in enumerate(factor):
                if d1 + d2 * j <= s_max:
                    new[d1 + d2 * j] = new[d1 + d2 * j] + a * b
        series = new
    for s in range(s_max + 1):
        assert series[s] == ps[s]


def test_grades():
    for s, p in enumerate(garland_coeffs(8)):
        assert p.is_homogeneous(s)


def test_formal_inverse():
    assert garland_inverse_check(8)


def test_symfun_bridge_elementary():
    ps = garland_coeffs(4)
    assert garland_to_symfun(ps[1], 3) == -elementary(1, 3)
    assert garland_to_symfun(ps[2], 3) == elementary(2, 3)
    assert garland_to_symfun(ps[3], 4) == -elementary(3, 4)
    assert garland_to_symfun(ps[4], 5) == elementary(4, 5)


def test_symfun_bridge_complete():
    ps = garland_coeffs(6)
    for s in range(7):
        assert garland_to_symfun(ps[s], 7, negate=True) == complete(s, 7)


def test_faithfulness_guard():
    ps = garland_coeffs(3)
    with pytest.raises(ValueError):
        garland_to_symfun(ps[3], 2)
