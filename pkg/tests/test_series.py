from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torofock.series import (
    DivergenceError,
    Monomial,
    OutOfWindowError,
    Series,
    SeriesError,
    VariableMismatchError,
    geom_inverse,
    product_formula,
    series_from_json,
    series_to_json,
)

W = {"q": (0, 6)}


def q(k, c=1):
    return Series.monomial(W, {"q": k}, c)


def test_binomial_square():
    s = Series(W, {Monomial({}): 1, Monomial({"q": 1}): 1})
    sq = s * s
    assert sq.coeff(Monomial({})) == 1
    assert sq.coeff(Monomial({"q": 1})) == 2
    assert sq.coeff(Monomial({"q": 2})) == 1


def test_telescoping_truncates():
    window = {"q": (0, 6)}
    one_minus_q = Series(window, {Monomial({}): 1, Monomial({"q": 1}): -1})
    geometric = Series(window, {Monomial({"q": m}): 1 for m in range(7)})
    prod = one_minus_q * geometric
    # 1 - q^7 truncated to 1
    assert prod == Series.one(window)


def test_variable_mismatch_reports_both():
    a = Series.one({"q": (0, 2)})
    b = Series.one({"t": (0, 2)})
    with pytest.raises(VariableMismatchError) as err:
        a * b
    assert "q" in str(err.value) and "t" in str(err.value)


def test_coeff_inside_and_outside_window():
    s = Series(W, {Monomial({}): 1, Monomial({"q": 1}): 2})
    assert s.coeff(Monomial({"q": 1})) == 2
    assert s.coeff(Monomial({"q": 2})) == 0  # inside window: genuinely zero
    with pytest.raises(OutOfWindowError):
        s.coeff(Monomial({"q": 7}))


def test_geom_inverse_single_variable():
    g = geom_inverse(Monomial({"q": 1}), {"q": (0, 4)})
    assert [g.coeff(Monomial({"q": k})) for k in range(5)] == [1, 1, 1, 1, 1]


def test_geom_inverse_diagonal():
    window = {"q1": (0, 3), "q2": (0, 3)}
    g = geom_inverse(Monomial({"q1": 1, "q2": 1}), window)
    assert g.coeff(Monomial({"q1": 2, "q2": 2})) == 1
    assert g.coeff(Monomial({"q1": 1, "q2": 0})) == 0
    assert len(g.terms) == 4


def test_geom_inverse_divergence():
    with pytest.raises(DivergenceError):
        geom_inverse(Monomial({}), W)


def test_partition_generating_function():
    # coefficient of q^4 in prod 1/(1-q^m) counts the partitions of 4
    gens = [(Monomial({"q": k}), 1) for k in range(1, 7)]
    s = product_formula(gens, W)
    assert s.coeff(Monomial({"q": 4})) == 5
    # frozen against a brute-force partition enumeration
    def count_partitions(n, max_part):
        if n == 0:
            return 1
        return sum(
            count_partitions(n - p, p) for p in range(1, min(n, max_part) + 1)
        )
    for k in range(7):
        assert s.coeff(Monomial({"q": k})) == count_partitions(k, k)


def test_product_formula_multiset_bidegrees():
    # generators q1^m q2 (m >= 1): coefficient of q1^a q2^b counts multisets
    # of b integers >= 1 summing to a; table frozen from a direct enumeration
    window = {"q1": (0, 5), "q2": (0, 3)}
    gens = [(Monomial({"q1": m, "q2": 1}), 1) for m in range(1, 6)]
    s = product_formula(gens, window)
    expected = {
        (0, 0): 1, (1, 1): 1, (2, 1): 1, (2, 2): 1, (3, 1): 1, (3, 2): 1,
        (3, 3): 1, (4, 1): 1, (4, 2): 2, (4, 3): 1, (5, 1): 1, (5, 2): 2,
        (5, 3): 2,
    }
    for a in range(6):
        for b in range(4):
            assert s.coeff(Monomial({"q1": a, "q2": b})) == expected.get((a, b), 0)


def test_product_formula_empty_and_nonnegative():
    assert product_formula([], W) == Series.one(W)
    gens = [(Monomial({"q": k}), 2) for k in range(1, 7)]
    s = product_formula(gens, W)
    for c in s.terms.values():
        assert c.denominator == 1 and c > 0


def test_weight_labels_add_under_multiplication():
    a = Series.one(W, weight=(1, 0))
    b = Series.one(W, weight=(0, 2))
    assert (a * b).coeff(Monomial({}, (1, 2))) == 1
    plain = Series.monomial(W, {"q": 1})
    mixed = a * plain
    assert mixed.labeled
    assert mixed.coeff(Monomial({"q": 1}, (1, 0))) == 1


def test_labeled_plus_unlabeled_rejected():
    with pytest.raises(SeriesError):
        Series.one(W, weight=(0,)) + Series.one(W)


def test_weight_slice_and_drop():
    s = Series(
        W,
        {Monomial({"q": 1}, (2,)): 1, Monomial({"q": 1}, (0,)): 3},
        labeled=True,
    )
    assert s.weight_slice((2,)).coeff(Monomial({"q": 1}, (2,))) == 1
    assert s.drop_weights().coeff(Monomial({"q": 1})) == 4


def test_json_round_trip_and_stability():
    s = Series(
        {"q": (0, 3), "u1": (-1, 1)},
        {
            Monomial({"q": 2, "u1": -1}, (1, -1)): Fraction(3, 2),
            Monomial({}, (0, 0)): 1,
        },
        labeled=True,
    )
    text = series_to_json(s)
    assert series_from_json(text) == s
    assert series_to_json(series_from_json(text)) == text


small_series = st.builds(
    lambda coeffs: Series(W, {Monomial({"q": k}): c for k, c in coeffs.items()}),
    st.dictionaries(st.integers(0, 6), st.fractions(max_denominator=6), max_size=5),
)


@settings(max_examples=60, deadline=None)
@given(small_series, small_series, small_series)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4))
def test_geom_inverse_inverts(k):
    window = {"q": (0, 8)}
    g = Monomial({"q": k})
    lhs = geom_inverse(g, window) * (Series.one(window) - Series.monomial(window, {"q": k}))
    assert lhs == Series.one(window)
