"""Exact quotient algebra: equitable partitions, char polys, certified roots."""

import random
from fractions import Fraction

import pytest

from specmatch import (
    BracketError,
    ExactPolynomial,
    ParameterError,
    char_poly,
    complete_graph,
    distance_matrix,
    extremal_family,
    extremal_partition,
    family_quartic,
    family_quartic_root,
    gap_bound_at_radius_floor,
    gap_bound_cubic,
    gap_bound_cubic_deriv,
    gap_bound_floor_deriv,
    hub_gap_coefficient,
    is_equitable,
    largest_root,
    mu_lower_bound_wiener,
    quotient_matrix,
)


def _det(matrix):
    """Fraction Gaussian elimination with partial pivoting; local oracle."""
    m = [[Fraction(v) for v in row] for row in matrix]
    t = len(m)
    det = Fraction(1)
    for col in range(t):
        pivot = next((r for r in range(col, t) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, t):
            factor = m[r][col] * inv
            for c in range(col, t):
                m[r][c] -= factor * m[col][c]
    return det


def _char_poly_oracle_value(entries, x):
    t = len(entries)
    shifted = [
        [Fraction(x) * (i == j) - Fraction(entries[i][j]) for j in range(t)]
        for i in range(t)
    ]
    return _det(shifted)


def test_equitable_recognition():
    dist = distance_matrix(extremal_family(14, 1)).tolist()
    assert is_equitable(dist, extremal_partition(14, 1))
    # splitting the big clique unevenly breaks equitability on the hub row? no,
    # but moving a singleton in with the triangle does
    bad = [[0], [1, 2], [3, 4], list(range(5, 14))]
    assert not is_equitable(dist, bad)


def test_partition_validation():
    dist = distance_matrix(complete_graph(4)).tolist()
    with pytest.raises(ParameterError):
        is_equitable(dist, [[0, 1], [2]])  # misses vertex 3
    with pytest.raises(ParameterError):
        is_equitable(dist, [[0, 1], [1, 2, 3]])  # duplicate
    with pytest.raises(ParameterError):
        is_equitable(dist, [[0, 1], [], [2, 3]])  # empty block
    with pytest.raises(ParameterError):
        is_equitable(dist, [[0, 1], [2, 5]])  # out of range


def test_quotient_rows_for_reference_family():
    dist = distance_matrix(extremal_family(14, 1)).tolist()
    q = quotient_matrix(dist, extremal_partition(14, 1))
    assert q.t == 4
    expected = [[0, 1, 3, 9], [1, 0, 6, 18], [1, 2, 2, 18], [1, 2, 6, 8]]
    assert [[int(v) for v in row] for row in q.entries] == expected
    # block row sums are the transmissions of the block representatives
    assert [int(s) for s in q.row_sums()] == [13, 25, 23, 17]


def test_quotient_rejects_non_equitable():
    dist = distance_matrix(extremal_family(14, 1)).tolist()
    with pytest.raises(ParameterError):
        quotient_matrix(dist, [[0], [1, 2], [3, 4], list(range(5, 14))])


def test_char_poly_against_determinant_oracle():
    dist = distance_matrix(extremal_family(14, 1)).tolist()
    q = quotient_matrix(dist, extremal_partition(14, 1))
    poly = char_poly(q)
    assert poly.degree == 4
    for x in (-3, -1, 0, 1, 2, 7, 20, Fraction(19, 3)):
        assert poly(x) == _char_poly_oracle_value(q.entries, x)


def test_char_poly_random_matrices():
    rng = random.Random(13)
    for _ in range(25):
        t = rng.randrange(1, 6)
        entries = [[rng.randrange(-5, 6) for _ in range(t)] for _ in range(t)]
        poly = char_poly(entries)
        assert poly.degree == t
        assert poly.coefficients[0] == 1
        for x in (-2, 0, 3, Fraction(1, 2)):
            assert poly(x) == _char_poly_oracle_value(entries, x)


def test_char_poly_rejects_non_square():
    with pytest.raises(ParameterError):
        char_poly([[1, 2, 3], [4, 5, 6]])


def test_quotient_char_poly_matches_closed_form():
    for n, s in ((14, 1), (16, 1), (20, 2), (22, 2), (30, 3), (40, 4)):
        dist = distance_matrix(extremal_family(n, s)).tolist()
        q = quotient_matrix(dist, extremal_partition(n, s))
        assert char_poly(q) == family_quartic(n, s)


def test_family_quartic_frozen_coefficients():
    assert family_quartic(14, 1).integer_coefficients() == (1, -10, -153, -368, -172)
    with pytest.raises(ParameterError):
        family_quartic(14, 0)
    with pytest.raises(ParameterError):
        family_quartic(13, 4)


def test_exact_polynomial_basics():
    p = ExactPolynomial((1, -3, 2))  # (x-1)(x-2)
    assert p.degree == 2
    assert p(1) == 0 and p(2) == 0 and p(3) == 2
    assert p(Fraction(1, 2)) == Fraction(3, 4)
    assert isinstance(p(1.5), float)
    assert p.derivative().coefficients == (Fraction(2), Fraction(-3))
    assert p.integer_coefficients() == (1, -3, 2)
    with pytest.raises(ParameterError):
        ExactPolynomial((Fraction(1, 2),)).integer_coefficients()
    with pytest.raises(ParameterError):
        ExactPolynomial(())


def test_largest_root_known_quadratic():
    p = ExactPolynomial((1, 0, -2))  # x^2 - 2
    root = largest_root(p, 0, 2, width=Fraction(1, 10**12))
    assert root.lo <= root.hi
    assert root.width <= Fraction(1, 10**12)
    assert abs(root.value - 2**0.5) < 1e-11
    assert root.lo * root.lo <= 2 <= root.hi * root.hi


def test_largest_root_picks_rightmost():
    p = ExactPolynomial((1, -10, 35, -50, 24))  # (x-1)(x-2)(x-3)(x-4)
    root = largest_root(p, 0, 5)
    assert root.lo <= 4 <= root.hi
    assert root.width <= Fraction(1, 10**10)


def test_largest_root_exact_hit_at_endpoint():
    p = ExactPolynomial((1, -3, 2))
    root = largest_root(p, 0, 2)
    assert root.lo == root.hi == 2
    assert root.value == 2.0


def test_largest_root_bracket_errors():
    p = ExactPolynomial((1, -4, 3))  # roots 1, 3
    with pytest.raises(BracketError):
        largest_root(p, 0, 2)  # poly(2) < 0: largest root above bracket
    with pytest.raises(BracketError):
        largest_root(ExactPolynomial((1, 0, 1)), 0, 2)  # no real roots
    # 2(x-1)(x-3)(x-7/2): bisection hits the exact root at 1, the sign mesh
    # must catch the negative stretch (3, 7/2) hiding above it
    with pytest.raises(BracketError):
        largest_root(ExactPolynomial((2, -15, 34, -21)), 0, 4)
    with pytest.raises(ParameterError):
        largest_root(p, 3, 1)
    with pytest.raises(ParameterError):
        largest_root(ExactPolynomial((5,)), 0, 1)


def test_family_quartic_root_reference_value():
    root = family_quartic_root(14, 1)
    assert abs(root.value - 19.063334136) < 1e-8
    assert root.width <= Fraction(1, 10**10)
    assert root.lo > mu_lower_bound_wiener(extremal_family(14, 1))
    poly = family_quartic(14, 1)
    assert poly(root.lo) < 0 < poly(root.hi)


def test_family_quartic_root_tracks_power_iteration():
    from specmatch import distance_spectral_radius

    for n, s in ((14, 1), (22, 2), (30, 3)):
        root = family_quartic_root(n, s)
        est = distance_spectral_radius(extremal_family(n, s), tol=1e-10)
        assert abs(root.value - est.value) < 1e-8


def test_hub_gap_factorization_exact():
    rng = random.Random(17)
    for _ in range(50):
        k = rng.randrange(1, 5)
        s = k + rng.randrange(0, 4)
        n = 2 * s + 6 + 2 * rng.randrange(0, 10)
        x = Fraction(rng.randrange(-50, 400), rng.randrange(1, 9))
        lhs = family_quartic(n, s)(x) - family_quartic(n, k)(x)
        assert lhs == (s - k) * hub_gap_coefficient(s, n, k, x)


def test_gap_bound_cubic_is_doubled_extreme_hub():
    rng = random.Random(18)
    for _ in range(50):
        k = rng.randrange(1, 5)
        n = 2 * k + 8 + 2 * rng.randrange(0, 12)
        mu = Fraction(rng.randrange(0, 300), rng.randrange(1, 7))
        s_extreme = Fraction(n - 6, 2)
        assert gap_bound_cubic(mu, n, k) == 2 * hub_gap_coefficient(s_extreme, n, k, mu)


def test_gap_bound_cubic_derivative_consistent():
    rng = random.Random(19)
    for _ in range(30):
        k = rng.randrange(1, 5)
        n = 2 * k + 8 + 2 * rng.randrange(0, 12)
        cubic = ExactPolynomial(
            (
                Fraction(-2),
                Fraction(n + 10 * k + 2),
                Fraction(8 * n - 4 * k * k + 44 * k - 8),
                Fraction(16 * n - 16 * k * k + 40 * k - 48),
            )
        )
        mu = Fraction(rng.randrange(0, 200), rng.randrange(1, 7))
        assert cubic(mu) == gap_bound_cubic(mu, n, k)
        assert cubic.derivative()(mu) == gap_bound_cubic_deriv(mu, n, k)


def test_radius_floor_values():
    assert gap_bound_at_radius_floor(14, 1) == -448
    for k in range(1, 8):
        n = 8 * k + 6
        assert gap_bound_at_radius_floor(n, k) == -36 * k**3 + 110 * k * k - 120 * k - 402
        assert gap_bound_at_radius_floor(n, k) < 0
    for n in range(14, 60, 2):
        for k in range(1, (n - 6) // 8 + 1):
            assert gap_bound_at_radius_floor(n, k) == gap_bound_cubic(n + k + 3, n, k)


def test_radius_floor_derivative_consistent():
    for k in range(1, 5):
        floor_poly = ExactPolynomial(
            (
                Fraction(-1),
                Fraction(6 * k - 2),
                Fraction(11 * k * k + 86 * k - 1),
                Fraction(4 * k**3 + 60 * k * k + 212 * k - 108),
            )
        )
        for n in range(8 * k + 6, 8 * k + 30, 2):
            assert floor_poly(n) == gap_bound_at_radius_floor(n, k)
            assert floor_poly.derivative()(n) == gap_bound_floor_deriv(n, k)
            assert gap_bound_floor_deriv(n, k) < 0
