import string

import numpy as np
import pytest

from hankeltensor.core import (CONV_CROSSOVER, HankelMatrix, HankelTensor,
                               as_tensor, associated_matrix, contraction_matrix,
                               conv_power, conv_power_rows, convolve, grad_eval,
                               grad_rows, higher_order_associate, hilbert_tensor,
                               make_hankel, poly_eval, tvp_fft, tvp_naive)
from hankeltensor.errors import DimensionError, StructureError

from conftest import dense


def einsum_tvp(T, xs):
    letters = string.ascii_lowercase[:T.order]
    spec = letters + "," + ",".join(letters) + "->"
    return float(np.einsum(spec, dense(T), *xs))


def random_tensor(rng, m, n):
    return HankelTensor(m, n, rng.standard_normal(m * (n - 1) + 1))


EX1 = make_hankel([1, 0, 1, 0, 1, 0, 1, 0, 1], 4, 3)


class TestConstruction:
    def test_generator_length_checked(self):
        with pytest.raises(DimensionError, match="expected length 9"):
            HankelTensor(4, 3, np.ones(8))

    def test_entries_depend_on_index_sum(self, rng):
        T = random_tensor(rng, 3, 4)
        assert T[(1, 2, 3)] == T[(3, 3, 0)] == T.generator[6]
        with pytest.raises(IndexError):
            T[(0, 0, 4)]

    def test_generator_is_read_only(self):
        with pytest.raises(ValueError):
            EX1.generator[0] = 5.0

    def test_hilbert_generator(self):
        T = hilbert_tensor(4, 5)
        assert T.size == 17
        assert T.generator[-1] == 1 / 17

    def test_associated_matrix_example1(self):
        H = associated_matrix(EX1).to_array()
        expected = np.array([[1, 0, 1, 0, 1], [0, 1, 0, 1, 0]] * 2 + [[1, 0, 1, 0, 1]])
        np.testing.assert_array_equal(H, expected)

    def test_associated_matrix_needs_even_degree(self):
        with pytest.raises(StructureError, match="no associated Hankel matrix"):
            associated_matrix(HankelTensor(3, 2, np.ones(4)))

    def test_higher_order_associate(self, rng):
        T = random_tensor(rng, 2, 7)
        for q, k in [(1, 7), (2, 4), (3, 3), (6, 2)]:
            Th = higher_order_associate(T, q)
            assert (Th.order, Th.dim) == (2 * q, k)
            np.testing.assert_array_equal(Th.generator, T.generator)
        with pytest.raises(DimensionError):
            higher_order_associate(T, 4)

    def test_matrix_as_tensor(self, rng):
        H = HankelMatrix(3, rng.standard_normal(5))
        np.testing.assert_array_equal(dense(as_tensor(H)), H.to_array())


class TestProducts:
    def test_example1_all_ones(self):
        x = np.ones(3)
        # 81 index tuples; sums 0..8 with h = 1 on even sums
        assert tvp_naive(EX1, [x] * 4) == 41
        assert tvp_fft(EX1, [x] * 4) == pytest.approx(41, rel=1e-14)
        assert poly_eval(EX1, x) == pytest.approx(41, rel=1e-14)

    @pytest.mark.parametrize("m,n", [(2, 4), (3, 3), (4, 3), (5, 2), (3, 5)])
    def test_distinct_vectors_against_dense(self, rng, m, n):
        T = random_tensor(rng, m, n)
        xs = [rng.standard_normal(n) for _ in range(m)]
        ref = einsum_tvp(T, xs)
        assert tvp_naive(T, xs) == pytest.approx(ref, rel=1e-12, abs=1e-12)
        assert tvp_fft(T, xs) == pytest.approx(ref, rel=1e-10, abs=1e-12)

    def test_full_anticirculant_embedding(self, rng):
        # entries h[(i1+..+im) mod N] on an N^m grid, vectors zero-padded
        m, n = 3, 3
        T = random_tensor(rng, m, n)
        N = T.size
        idx = np.indices((N,) * m).sum(axis=0) % N
        C = T.generator[idx]
        xs = [np.pad(rng.standard_normal(n), (0, N - n)) for _ in range(m)]
        full = np.einsum("abc,a,b,c->", C, *xs)
        assert tvp_fft(T, [x[:n] for x in xs]) == pytest.approx(full, rel=1e-12)
        np.testing.assert_allclose(T.embedding.spectrum, np.fft.ifft(T.generator))
        assert T.embedding.N == N

    def test_length_mismatch(self):
        with pytest.raises(DimensionError):
            tvp_fft(EX1, [np.ones(4)] * 4)
        with pytest.raises(DimensionError):
            tvp_naive(EX1, [np.ones(3)] * 3)
        with pytest.raises(DimensionError):
            poly_eval(EX1, np.ones(2))

    @pytest.mark.parametrize("m,n", [(2, 5), (3, 4), (4, 3), (6, 2)])
    def test_grad_matches_dense_and_gradient(self, rng, m, n):
        T = random_tensor(rng, m, n)
        x = rng.standard_normal(n)
        A = dense(T)
        for _ in range(m - 1):
            A = A @ x
        np.testing.assert_allclose(grad_eval(T, x), A, rtol=1e-12, atol=1e-12)
        eps = 1e-6
        fd = np.array([(poly_eval(T, x + eps * e) - poly_eval(T, x - eps * e)) / (2 * eps)
                       for e in np.eye(n)])
        np.testing.assert_allclose(m * grad_eval(T, x), fd, rtol=1e-6, atol=1e-6)

    def test_grad_rows_batches(self, rng):
        T = random_tensor(rng, 4, 5)
        X = rng.standard_normal((7, 5))
        G = grad_rows(T, X)
        for x, g in zip(X, G):
            np.testing.assert_allclose(g, grad_eval(T, x), rtol=1e-10, atol=1e-12)

    def test_contraction_matrix(self, rng):
        T = random_tensor(rng, 4, 3)
        x = rng.standard_normal(3)
        M = dense(T) @ x @ x
        np.testing.assert_allclose(contraction_matrix(T, x), M, rtol=1e-12, atol=1e-12)
        np.testing.assert_allclose(contraction_matrix(T, x) @ x, grad_eval(T, x), rtol=1e-12)


class TestConvolution:
    @pytest.mark.parametrize("lu,lv", [(3, 4), (40, 40), (1, 7), (100, 3)])
    def test_convolve_matches_numpy(self, rng, lu, lv):
        u, v = rng.standard_normal(lu), rng.standard_normal(lv)
        np.testing.assert_allclose(convolve(u, v), np.convolve(u, v), rtol=1e-12, atol=1e-12)

    def test_both_paths_used(self, rng):
        u = rng.standard_normal(CONV_CROSSOVER)
        np.testing.assert_allclose(convolve(u, u[:1]), u * u[0], rtol=1e-13)
        np.testing.assert_allclose(convolve(u[:5], u[:5]), np.convolve(u[:5], u[:5]))

    @pytest.mark.parametrize("q", [0, 1, 2, 3, 5, 8])
    def test_conv_power_is_polynomial_power(self, rng, q):
        x = rng.standard_normal(4)
        ref = np.polynomial.polynomial.polypow(x, q)
        np.testing.assert_allclose(conv_power(x, q), ref, rtol=1e-11, atol=1e-11)
        np.testing.assert_allclose(conv_power_rows(x[None], q)[0], ref, rtol=1e-11, atol=1e-11)

    def test_conv_power_rejects_negative(self):
        with pytest.raises(ValueError):
            conv_power(np.ones(2), -1)
