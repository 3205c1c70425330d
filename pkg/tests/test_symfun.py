from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torofock.series import Monomial
from torofock.symfun import (
    Partition,
    PhiImage,
    SymPoly,
    complete,
    dominant_keys,
    eh_alternating_check,
    eh_alternating_check_full,
    elementary,
    expand_E_minus,
    expand_H_partition_sum,
    newton_e_check,
    newton_h_check,
    partitions,
    phi_generator_image,
    phi_slot_elementary,
    power_sum,
    sym_power_hilbert,
)


def test_partitions_enumeration():
    assert list(partitions(0)) == [()]
    assert sorted(partitions(4)) == [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]


def test_partition_attributes():
    lam = Partition((3, 2, 2, 1))
    assert lam.size == 8 and lam.length == 4
    assert lam.multiplicity(2) == 2
    assert lam.conjugate().parts == (4, 3, 1)
    assert lam.conjugate().conjugate() == lam
    # z = 3^1 1! * 2^2 2! * 1^1 1!
    assert lam.z() == 3 * 4 * 2 * 1
    assert lam.sign() == 1
    assert Partition((2,)).sign() == -1


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 9))
def test_conjugation_involution(n):
    for parts in partitions(n):
        lam = Partition(parts)
        assert lam.conjugate().conjugate() == lam
        assert lam.z() >= 1


def test_basis_elements_unrolled():
    e2 = elementary(2, 3)
    assert e2.terms == {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1}
    h2 = complete(2, 2)
    assert h2.terms == {(2, 0): 1, (1, 1): 1, (0, 2): 1}
    p3 = power_sum(3, 2)
    assert p3.terms == {(3, 0): 1, (0, 3): 1}
    assert elementary(4, 3).is_zero()
    assert power_sum(0, 5) == SymPoly.constant(5, 5)


def test_basis_elements_are_symmetric():
    for r in range(5):
        assert elementary(r, 4).is_symmetric()
        assert complete(r, 4).is_symmetric()
        assert power_sum(r, 4).is_symmetric()


def test_newton_identities_small():
    assert newton_e_check(1, 2)
    assert newton_e_check(2, 3)
    assert newton_e_check(3, 4)
    assert all(newton_e_check(n, 8) for n in range(1, 7))
    assert all(newton_h_check(n, 8) for n in range(1, 7))


def test_eh_alternating_fast_agrees_with_full_expansion():
    for n in range(1, 7):
        assert eh_alternating_check(n, 7) == eh_alternating_check_full(n, 7) is True


def test_dominant_keys():
    assert set(dominant_keys(3, 3)) == {(3, 0, 0), (2, 1, 0), (1, 1, 1)}
    assert dominant_keys(4, 2) == [(4, 0), (3, 1), (2, 2)]


def test_expand_E_minus_matches_elementary():
    ems = expand_E_minus(3, 4)
    assert ems[0] == SymPoly.constant(4, 1)
    assert ems[1] == -elementary(1, 4)
    assert ems[2] == elementary(2, 4)
    assert ems[3] == -elementary(3, 4)


def test_expand_H_partition_sum_matches_complete():
    hs = expand_H_partition_sum(4, 5)
    for n in range(5):
        assert hs[n] == complete(n, 5)


def test_sym_power_hilbert_one_variable():
    s = sym_power_hilbert(2, ["t2"], max_deg=2)
    vals = [s.coeff(Monomial({"t2": d})) for d in range(3)]
    assert vals == [1, 1, 2]


def test_sym_power_hilbert_rank_zero_and_one():
    assert sym_power_hilbert(0, ["t2"], max_deg=3).terms == {Monomial({}): Fraction(1)}
    s = sym_power_hilbert(1, ["t2", "t3"], max_deg=2)
    by_total = {}
    for mono, c in s.terms.items():
        d = mono.exponent("t2") + mono.exponent("t3")
        by_total[d] = by_total.get(d, 0) + c
    assert by_total == {0: 1, 1: 2, 2: 3}


def test_sym_power_hilbert_oracle():
    # brute-force multiset enumeration oracle in two variables
    import itertools

    r, cap = 3, 2
    monos = [m for m in itertools.product(range(cap + 1), repeat=2)]
    counts = {}
    for combo in itertools.combinations_with_replacement(monos, r):
        tot = tuple(sum(x) for x in zip(*combo))
        if max(tot) <= cap:
            counts[tot] = counts.get(tot, 0) + 1
    s = sym_power_hilbert(r, ["x", "y"], max_deg=cap)
    for deg, c in counts.items():
        assert s.coeff(Monomial({"x": deg[0], "y": deg[1]})) == c


def test_sym_power_hilbert_laurent_needs_window():
    with pytest.raises(ValueError):
        sym_power_hilbert(2, ["t2"], laurent=True)
    s = sym_power_hilbert(2, ["t2"], laurent=True, window={"t2": (-1, 1)})
    # slots from {t^-1, t, 1}: sums hitting zero: {}, {t,t^-1}
    assert s.coeff(Monomial({})) == 2
    assert s.coeff(Monomial({"t2": 1})) == 2  # {t}, {t,1}... {t}, {1,t}
    assert s.coeff(Monomial({"t2": -1})) == 2


def test_phi_single_slot_and_constant():
    img = phi_generator_image(0, (1,), (1, 2))
    assert img.terms == {(1,): 1}
    const = phi_generator_image(1, (0,), (1, 2))
    assert const.terms == {(0, 0): 2}
    zero_block = phi_generator_image(0, (1,), (0, 2))
    assert zero_block.is_zero()


def test_phi_power_sum_relation():
    # (phi of a)^2 - (phi of a^2) = 2 e_2 across two slots
    img1 = phi_generator_image(0, (1,), (2,))
    img2 = phi_generator_image(0, (2,), (2,))
    lhs = img1 * img1 - img2
    assert lhs == phi_slot_elementary(0, 2, 1, (1,), 2).scale(2)
    assert lhs.is_slot_symmetric()


def test_phi_block_out_of_range():
    with pytest.raises(ValueError):
        phi_generator_image(3, (1,), (1, 1))


def test_phi_multivariable_slots():
    img = phi_generator_image(0, (1, 2), (2,))
    assert img.terms == {(1, 2, 0, 0): 1, (0, 0, 1, 2): 1}
    assert img.is_slot_symmetric()
    assert (img * PhiImage(0, 2, 2, {(0, 0, 0, 0): 1})) == img
