import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from tropwfst import (Halfspace, NegativeCycleError, cg_conjugate, delta,
                      format_matrix, gamma, halfspace_contains, mat_power,
                      maxplus_mul, minplus_mul, parse_matrix, pointwise_min,
                      trop_eye, trop_line_eval, trop_zeros)
from tropwfst.oracles import floyd_warshall

from generators import edges_matrix, random_edges

INF = math.inf


def weights(allow_neg_inf=False):
    finite = st.integers(min_value=-5, max_value=9).map(float)
    extra = [st.just(INF)]
    if allow_neg_inf:
        extra.append(st.just(-INF))
    return st.one_of(finite, *extra)


def square_matrices(max_n=8):
    return st.integers(1, max_n).flatmap(
        lambda n: arrays(np.float64, (n, n), elements=weights()))


class TestMinplusMul:
    def test_hand_example(self):
        a = np.array([[0.0, 1.0], [INF, 0.0]])
        b = np.array([[2.0, INF], [3.0, 4.0]])
        assert np.array_equal(minplus_mul(a, b), [[2, 5], [3, 4]])

    def test_identity(self):
        a = np.array([[1.0, INF], [4.0, -2.0]])
        assert np.array_equal(minplus_mul(trop_eye(2), a), a)
        assert np.array_equal(minplus_mul(a, trop_eye(2)), a)

    def test_absorbing_null(self):
        a = np.array([[1.0, 2.0], [3.0, 4.0]])
        assert np.all(np.isinf(minplus_mul(a, trop_zeros((2, 2)))))

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            minplus_mul(np.zeros((2, 3)), np.zeros((2, 3)))

    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 8).flatmap(lambda n: st.tuples(
        arrays(np.float64, (n, n), elements=weights()),
        arrays(np.float64, (n, n), elements=weights()),
        arrays(np.float64, (n, n), elements=weights()))))
    def test_associative(self, abc):
        a, b, c = abc
        left = minplus_mul(minplus_mul(a, b), c)
        right = minplus_mul(a, minplus_mul(b, c))
        assert np.array_equal(left, right)

    @settings(max_examples=40, deadline=None)
    @given(square_matrices())
    def test_identity_both_sides(self, a):
        i = trop_eye(a.shape[0])
        assert np.array_equal(minplus_mul(i, a), a)
        assert np.array_equal(minplus_mul(a, i), a)


class TestMaxplusMul:
    def test_identity(self):
        i = np.array([[0.0, -INF], [-INF, 0.0]])
        b = np.array([[1.0, 2.0], [3.0, 4.0]])
        assert np.array_equal(maxplus_mul(i, b), b)

    def test_hand_example(self):
        a = np.array([[1.0, 2.0]])
        b = np.array([[0.0], [3.0]])
        assert maxplus_mul(a, b)[0, 0] == 5.0

    def test_diagonal_broadcast(self):
        # diag(-x) (x)' constant eta gives eta - x_i, the pruning indicator
        x = np.array([3.0, 5.0, 9.0])
        d = np.full((3, 3), -INF)
        np.fill_diagonal(d, -x)
        eta = np.full((3, 1), 7.0)
        assert np.array_equal(maxplus_mul(d, eta)[:, 0], 7.0 - x)


class TestPointwiseMin:
    def test_hand(self):
        assert np.array_equal(
            pointwise_min(np.array([[1.0, 5.0]]), np.array([[3.0, 2.0]])),
            [[1, 2]])

    def test_idempotent_and_identity(self):
        a = np.array([[1.0, INF], [0.0, -2.0]])
        assert np.array_equal(pointwise_min(a, a), a)
        assert np.array_equal(pointwise_min(a, trop_zeros((2, 2))), a)

    def test_shape_error(self):
        with pytest.raises(ValueError):
            pointwise_min(np.zeros((2, 2)), np.zeros((3, 3)))


class TestMatPower:
    def test_two_cycle(self):
        a = np.array([[INF, 1.0], [1.0, INF]])
        assert np.array_equal(mat_power(a, 2), [[2, INF], [INF, 2]])

    def test_first_power_and_identity(self):
        a = np.array([[INF, 1.0], [1.0, INF]])
        assert np.array_equal(mat_power(a, 1), a)
        for k in (1, 2, 5):
            assert np.array_equal(mat_power(trop_eye(3), k), trop_eye(3))

    def test_non_square(self):
        with pytest.raises(ValueError):
            mat_power(np.zeros((2, 3)), 2)


class TestGammaDelta:
    def test_two_cycle(self):
        a = np.array([[INF, 1.0], [1.0, INF]])
        assert np.array_equal(gamma(a), [[2, 1], [1, 2]])
        assert np.array_equal(delta(a), [[0, 1], [1, 0]])

    def test_all_inf(self):
        assert np.all(np.isinf(gamma(trop_zeros((3, 3)))))
        assert np.array_equal(delta(trop_zeros((3, 3))), trop_eye(3))

    def test_negative_self_loop(self):
        with pytest.raises(NegativeCycleError):
            gamma(np.array([[-1.0]]))

    def test_negative_two_cycle(self):
        with pytest.raises(NegativeCycleError):
            gamma(np.array([[INF, 2.0], [-3.0, INF]]))

    def test_closure_idempotent(self):
        a = np.array([[INF, 1.0], [1.0, INF]])
        d = delta(a)
        assert np.array_equal(minplus_mul(d, d), d)

    @pytest.mark.parametrize("seed", range(25))
    @pytest.mark.parametrize("negative", [False, True])
    def test_matches_floyd_warshall(self, seed, negative):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(2, 11))
        edges = random_edges(rng, n, negative=negative)
        assert np.array_equal(gamma(edges_matrix(n, edges)),
                              floyd_warshall(n, edges))

    @pytest.mark.parametrize("seed", range(10))
    def test_gamma_delta_relations(self, seed):
        rng = np.random.default_rng(100 + seed)
        n = int(rng.integers(2, 9))
        a = edges_matrix(n, random_edges(rng, n))
        g, d = gamma(a), delta(a)
        assert np.array_equal(d, pointwise_min(trop_eye(n), g))
        assert np.array_equal(g, minplus_mul(a, d))
        assert np.array_equal(minplus_mul(d, d), d)

    @pytest.mark.parametrize("seed", range(10))
    def test_stabilizes_by_n_minus_1(self, seed):
        rng = np.random.default_rng(200 + seed)
        n = int(rng.integers(3, 9))
        a = edges_matrix(n, random_edges(rng, n))
        acc = a.copy()
        partial = None
        power = a.copy()
        for k in range(2, n + 1):
            power = minplus_mul(power, a)
            acc = pointwise_min(acc, power)
            if k == n - 1:
                partial = acc.copy()
        assert np.array_equal(partial, acc)


class TestCgConjugate:
    def test_hand(self):
        x = np.array([[1.0, INF], [0.0, 2.0]])
        assert np.array_equal(cg_conjugate(x), [[-1, 0], [-INF, -2]])

    def test_zero_matrix(self):
        z = np.zeros((2, 3))
        assert np.array_equal(cg_conjugate(z), np.zeros((3, 2)))

    def test_diagonal(self):
        d = np.full((3, 3), INF)
        np.fill_diagonal(d, [1.0, 2.0, 3.0])
        c = cg_conjugate(d)
        assert np.array_equal(np.diagonal(c), [-1, -2, -3])
        assert c[0, 1] == -INF

    @settings(max_examples=30, deadline=None)
    @given(st.integers(1, 5).flatmap(lambda n: arrays(
        np.float64, (n, n),
        elements=st.integers(-9, 9).map(float))))
    def test_involution_on_finite(self, x):
        assert np.array_equal(cg_conjugate(cg_conjugate(x)), x)


class TestHalfspace:
    def test_lower_bound_form(self):
        h = Halfspace(np.array([0.0, INF]), np.array([INF, 0.0]))
        assert halfspace_contains(h, np.array([3.0]))
        assert not halfspace_contains(h, np.array([-1.0]))

    def test_reflexive(self):
        a = np.array([1.0, 2.0, 3.0])
        h = Halfspace(a, a.copy())
        assert halfspace_contains(h, np.array([0.0, 5.0]))

    def test_mixed_inf(self):
        h = Halfspace(np.array([INF, 5.0]), np.array([0.0, INF]))
        assert halfspace_contains(h, np.array([1.0]))

    def test_dim_mismatch(self):
        h = Halfspace(np.array([0.0, INF]), np.array([INF, 0.0]))
        with pytest.raises(ValueError):
            halfspace_contains(h, np.array([1.0, 2.0]))


class TestTropLine:
    @pytest.mark.parametrize("alpha,beta,x,expect", [
        (1.0, 3.0, 0.0, 1.0),
        (1.0, 3.0, 5.0, 3.0),
        (INF, 3.0, -100.0, 3.0),
    ])
    def test_eval(self, alpha, beta, x, expect):
        assert trop_line_eval(alpha, beta, x) == expect


class TestMatrixText:
    def test_round_trip(self):
        a = np.array([[0.0, INF], [-INF, 2.5]])
        text = format_matrix(a)
        assert text == "2 2\n0 inf\n-inf 2.5\n"
        assert np.array_equal(parse_matrix(text), a)

    def test_bad_row_count(self):
        with pytest.raises(ValueError):
            parse_matrix("2 2\n0 1\n")
