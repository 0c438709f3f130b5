import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from olt.errors import DimensionMismatch, DuplicateInput, SingularMatrix
from olt.linalg import (
    _sample_invertible,
    dot,
    identity,
    invert,
    is_invertible,
    mat_mul,
    mat_vec,
    random_invertible,
    solve,
    vandermonde,
)

Q = 11


def leibniz_det(M, q):
    """Determinant by permutation expansion; independent of elimination."""
    n = len(M)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        term = -1 if inversions % 2 else 1
        for i, j in enumerate(perm):
            term *= M[i][j]
        total += term
    return total % q


def brute_force_solve(M, y, q):
    n = len(M)
    hits = [
        list(x)
        for x in itertools.product(range(q), repeat=n)
        if all(sum(a * b for a, b in zip(row, x)) % q == v % q for row, v in zip(M, y))
    ]
    return hits


def test_vandermonde_examples():
    assert vandermonde([2, 3], Q) == [[1, 2], [1, 3]]
    assert vandermonde([5], Q) == [[1]]
    assert vandermonde([2, 3, 4], Q) == [[1, 2, 4], [1, 3, 9], [1, 4, 5]]


def test_vandermonde_rejects_congruent_nodes():
    with pytest.raises(DuplicateInput):
        vandermonde([2, 13], Q)


def test_solve_example_matches_enumeration():
    M, y = [[1, 2], [1, 3]], [5, 7]
    assert brute_force_solve(M, y, Q) == [[1, 2]]
    assert solve(M, y, Q) == [1, 2]


def test_solve_identity():
    assert solve(identity(3), [4, 0, 9], Q) == [4, 0, 9]


def test_solve_singular():
    with pytest.raises(SingularMatrix):
        solve([[1, 2], [2, 4]], [1, 5], Q)


def test_solve_needs_a_pivot_swap():
    M = [[0, 1], [1, 0]]
    assert solve(M, [3, 4], Q) == [4, 3]


def test_invert_example_matches_adjugate():
    M = [[1, 2], [1, 3]]
    (a, b), (c, d) = M
    det_inv = pow((a * d - b * c) % Q, -1, Q)
    adjugate = [[d * det_inv % Q, -b * det_inv % Q], [-c * det_inv % Q, a * det_inv % Q]]
    assert adjugate == [[3, 9], [10, 1]]
    assert invert(M, Q) == adjugate
    assert mat_mul(M, invert(M, Q), Q) == identity(2)


def test_invert_identity_and_zero():
    assert invert(identity(4), Q) == identity(4)
    with pytest.raises(SingularMatrix):
        invert([[0, 0], [0, 0]], Q)


def test_dimension_checks():
    with pytest.raises(DimensionMismatch):
        solve([[1, 2]], [1], Q)
    with pytest.raises(DimensionMismatch):
        dot([1, 2], [1], Q)
    with pytest.raises(DimensionMismatch):
        mat_vec([[1, 2]], [1, 2, 3], Q)
    with pytest.raises(DimensionMismatch):
        mat_mul([[1, 2]], [[1, 2]], Q)
    with pytest.raises(DimensionMismatch):
        invert([[1, 2], [3]], Q)


def test_products():
    assert dot([1, 2], [1, 2], Q) == 5
    assert mat_vec(identity(3), [7, 8, 9], Q) == [7, 8, 9]


def test_invertibility_matches_determinant_exhaustively_2x2():
    for entries in itertools.product(range(Q), repeat=4):
        M = [list(entries[:2]), list(entries[2:])]
        assert is_invertible(M, Q) == (leibniz_det(M, Q) != 0)


@pytest.mark.parametrize("n", [2, 3])
def test_vandermonde_invertible_for_all_distinct_nodes(n):
    for xs in itertools.permutations(range(Q), n):
        V = vandermonde(xs, Q)
        prod = 1
        for i, j in itertools.combinations(range(n), 2):
            prod = prod * (xs[j] - xs[i]) % Q
        assert leibniz_det(V, Q) == prod != 0
        assert mat_mul(V, invert(V, Q), Q) == identity(n)


def test_random_invertible_small():
    rng = random.Random(3)
    for _ in range(50):
        (u,), = random_invertible(1, Q, rng)
        assert u != 0
    M = random_invertible(4, Q, rng)
    assert mat_mul(M, invert(M, Q), Q) == identity(4)


def test_random_invertible_acceptance_rate():
    rng = random.Random(4)
    samples, attempts = 1000, 0
    for _ in range(samples):
        M, tries = _sample_invertible(3, Q, rng)
        assert leibniz_det(M, Q) != 0
        attempts += tries
    expected = 1.0
    for k in range(1, 4):
        expected *= 1 - Q**-k
    rate = samples / attempts
    sigma = (expected * (1 - expected) / attempts) ** 0.5
    assert abs(rate - expected) < 5 * sigma


def _matrices(q, n):
    return st.lists(st.lists(st.integers(0, q - 1), min_size=n, max_size=n), min_size=n, max_size=n)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_round_trips_over_large_field(data):
    q = (1 << 61) - 1
    n = data.draw(st.integers(1, 6))
    M = data.draw(_matrices(q, n))
    y = data.draw(st.lists(st.integers(0, q - 1), min_size=n, max_size=n))
    if not is_invertible(M, q):
        return
    assert mat_vec(M, solve(M, y, q), q) == y
    assert invert(invert(M, q), q) == M


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_interpolation_property(data):
    q = 1009
    n = data.draw(st.integers(1, 7))
    xs = data.draw(st.lists(st.integers(0, q - 1), min_size=n, max_size=n, unique=True))
    y = data.draw(st.lists(st.integers(0, q - 1), min_size=n, max_size=n))
    V = vandermonde(xs, q)
    coeffs = solve(V, y, q)
    for row, target in zip(V, y):
        assert dot(row, coeffs, q) == target
