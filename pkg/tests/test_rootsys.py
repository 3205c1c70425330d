from fractions import Fraction

import pytest

from torofock.rootsys import (
    RootSystemError,
    build_root_system,
    invert_matrix,
    positive_root_count,
)

ALL_TYPES = [
    ("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("D", 4),
    ("D", 5), ("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2),
]


@pytest.mark.parametrize("label,rank", ALL_TYPES)
def test_positive_root_counts_match_classical(label, rank):
    rs = build_root_system(label, rank)
    assert len(rs.positive_roots) == positive_root_count(label, rank)


@pytest.mark.parametrize("label,rank", ALL_TYPES)
def test_theta_normalization_and_dominance(label, rank):
    rs = build_root_system(label, rank)
    assert rs.norm2(rs.theta) == 2
    for beta in rs.positive_roots:
        # theta - beta is a nonnegative combination of simple roots
        assert all(t - b >= 0 for t, b in zip(rs.theta, beta))
        pairing = 2 * rs.bilinear(rs.theta, beta) / rs.norm2(beta)
        assert pairing == int(pairing) and pairing >= 0


def test_a1_basics():
    rs = build_root_system("A", 1)
    assert rs.positive_roots == [(1,)]
    assert rs.theta == (1,)
    assert rs.bilinear((1,), (1,)) == 2


def test_a2_roots_and_form():
    rs = build_root_system("A", 2)
    assert len(rs.positive_roots) == 3
    assert rs.theta == (1, 1)
    assert rs.bilinear((1, 0), (0, 1)) == -1


def test_bilinear_is_symmetric_and_linear():
    rs = build_root_system("D", 4)
    x, y = (1, 2, 0, -1), (0, 1, 1, 1)
    assert rs.bilinear(x, y) == rs.bilinear(y, x)
    two_x = tuple(2 * a for a in x)
    assert rs.bilinear(two_x, y) == 2 * rs.bilinear(x, y)
    assert rs.bilinear(x, (0, 0, 0, 0)) == 0


def test_bilinear_dimension_mismatch():
    rs = build_root_system("A", 2)
    with pytest.raises(RootSystemError):
        rs.bilinear((1,), (1, 0))


@pytest.mark.parametrize("label,rank,expect", [
    ("A", 1, True), ("A", 3, True), ("D", 4, True), ("E", 6, True),
    ("B", 2, False), ("C", 3, False), ("F", 4, False), ("G", 2, False),
])
def test_simply_laced_flag(label, rank, expect):
    assert build_root_system(label, rank).is_simply_laced() is expect


@pytest.mark.parametrize("label,rank", ALL_TYPES)
def test_evenness_iff_simply_laced(label, rank):
    rs = build_root_system(label, rank)
    even = all(rs.norm2(beta) % 2 == 0 for beta in rs.positive_roots)
    doubled = [tuple(a + b for a, b in zip(x, y))
               for x in rs.positive_roots[:4] for y in rs.positive_roots[:4]]
    even = even and all((rs.norm2(v)).denominator == 1 and int(rs.norm2(v)) % 2 == 0
                        for v in doubled)
    assert even is rs.is_simply_laced()


@pytest.mark.parametrize("label,rank", [("A", 0), ("E", 9), ("H", 3), ("G", 3), ("F", 5)])
def test_invalid_pairs_rejected(label, rank):
    with pytest.raises(RootSystemError):
        build_root_system(label, rank)


def test_fundamental_coords_round_trip():
    rs = build_root_system("A", 2)
    beta = (2, -1)
    fund = rs.fundamental_coords(beta)
    assert fund == (2 * 2 + (-1) * (-1), 2 * (-1) + (-1) * 2)
    assert rs.weight_to_root_coords(fund) == (Fraction(2), Fraction(-1))


def test_cartan_matrix_convention():
    for label, rank in ALL_TYPES:
        rs = build_root_system(label, rank)
        for i in range(rank):
            assert rs.cartan[i][i] == 2
            for j in range(rank):
                if i != j:
                    assert rs.cartan[i][j] <= 0
                # cartan[i][j] = 2 (a_i, a_j) / (a_j, a_j)
                lhs = Fraction(rs.cartan[i][j])
                rhs = 2 * rs.form_matrix[i][j] / rs.form_matrix[j][j]
                assert lhs == rhs


def test_lattice_points_by_norm():
    rs = build_root_system("A", 1)
    # (k a, k a) = 2 k^2: norms <= 8 give k in [-2, 2]
    assert rs.lattice_points(8) == [(-2,), (-1,), (0,), (1,), (2,)]
    rs2 = build_root_system("A", 2)
    pts = rs2.lattice_points(2)
    assert len(pts) == 7  # origin plus the six roots


def test_invert_matrix():
    m = [[2, -1], [-1, 2]]
    inv = invert_matrix(m)
    assert inv == [[Fraction(2, 3), Fraction(1, 3)], [Fraction(1, 3), Fraction(2, 3)]]
    with pytest.raises(RootSystemError):
        invert_matrix([[1, 1], [1, 1]])
