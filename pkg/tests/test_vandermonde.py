import numpy as np
import pytest

from hankeltensor.core import HankelMatrix, HankelTensor, hilbert_tensor
from hankeltensor.errors import NotStrongError
from hankeltensor.generate import example3_tensor, planted_tensor, random_strong
from hankeltensor.linalg import takagi_psd
from hankeltensor.vandermonde import (avd_decompose, matrix_avd, peel_corner,
                                      reconstruct)


def test_hilbert_is_gauss_legendre():
    # with the 18th moment supplied, the 9-node decomposition of the moments
    # 1/(j+1) of [0, 1] is the 9-point Gauss rule
    dec = avd_decompose(hilbert_tensor(4, 5), gamma=1 / 18)
    x, w = np.polynomial.legendre.leggauss(9)
    np.testing.assert_allclose(dec.poles, (x[::-1] + 1) / 2, atol=1e-6)
    np.testing.assert_allclose(dec.alphas, w[::-1] / 2, atol=1e-6)
    assert dec.alpha_inf == 0


def test_hilbert_default_gamma_is_valid():
    T = hilbert_tensor(4, 5)
    dec = avd_decompose(T)
    assert np.all(dec.alphas > 0)
    assert np.linalg.norm(dec.generator() - T.generator) <= 1e-8 * np.linalg.norm(T.generator)


@pytest.mark.parametrize("m,n,r", [(2, 7, 3), (4, 5, 4), (3, 7, 5), (4, 10, 6)])
def test_planted_round_trip(rng, m, n, r):
    poles = np.sort(np.linspace(-0.9, 0.9, r) + rng.uniform(-0.05, 0.05, r))[::-1]
    alphas = rng.uniform(0.5, 1.5, r)
    T = planted_tensor(m, n, poles, alphas)
    dec = avd_decompose(T)
    np.testing.assert_allclose(dec.poles, poles, atol=1e-7)
    np.testing.assert_allclose(dec.alphas, alphas, rtol=1e-6)
    assert dec.alpha_inf == 0
    np.testing.assert_allclose(reconstruct(dec).generator, T.generator, atol=1e-9)


def test_planted_with_corner(rng):
    poles = np.array([0.7, 0.1, -0.6])
    T = planted_tensor(4, 4, poles, [1.0, 2.0, 0.5], alpha_inf=0.75)
    dec = avd_decompose(T)
    assert dec.alpha_inf == pytest.approx(0.75, abs=1e-9)
    np.testing.assert_allclose(dec.poles, poles, atol=1e-8)
    assert dec.rank == 4


def test_example3_instance():
    T, xi = example3_tensor(np.random.default_rng(3))
    dec = avd_decompose(T)
    assert dec.alpha_inf == pytest.approx(1, abs=1e-6)
    np.testing.assert_allclose(dec.poles, np.sort(np.r_[xi, 0.0])[::-1], atol=1e-8)


def test_corner_only():
    g = np.zeros(9)
    g[-1] = 2.0
    dec = avd_decompose(HankelTensor(4, 3, g))
    assert dec.poles.size == 0 and dec.alpha_inf == pytest.approx(2.0)


def test_zero_tensor():
    dec = avd_decompose(HankelTensor(4, 3, np.zeros(9)))
    assert dec.rank == 0


def test_peel_drops_rank_by_one(rng):
    for _ in range(20):
        T, poles, alphas, ainf = random_strong(4, 5, 3, rng, corner=True)
        H = HankelMatrix(9, T.generator)
        F = takagi_psd(H)
        a = peel_corner(F)
        assert a == pytest.approx(ainf, rel=1e-8)
        g = np.array(T.generator)
        g[-1] -= a
        assert takagi_psd(HankelMatrix(9, g)).rank == F.rank - 1


def test_leading_block_positive_definite(rng):
    # the r x r leading block used for the recurrence is PD for planted input
    T, poles, *_ = random_strong(4, 6, 5, rng)
    H = HankelMatrix(11, T.generator).to_array()
    assert np.linalg.eigvalsh(H[:5, :5]).min() > 0


def test_rejects_not_strong():
    with pytest.raises(NotStrongError):
        matrix_avd(HankelMatrix(2, [1.0, 2.0, 1.0]))


def test_json_shape():
    dec = avd_decompose(planted_tensor(4, 3, [0.5], [2.0], 1.0))
    d = dec.to_json()
    assert set(d) == {"poles", "alphas", "alpha_inf", "order", "dim"}
    assert all(np.isfinite(d["poles"]))
