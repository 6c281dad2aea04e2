"""Hankel tensors and their fast products.

A square Hankel tensor of order ``m`` and dimension ``n`` is stored only by
its generating vector ``h`` of length ``m(n-1)+1``; entry ``(i1, ..., im)``
is ``h[i1 + ... + im]``. Products with vectors go either through an
anti-circulant embedding of size ``N = m(n-1)+1`` diagonalized by the DFT,
or through repeated convolution, since ``T x^m = h . (x * x * ... * x)``.
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

import numpy as np
from scipy.fft import next_fast_len

from ._backend import kernels
from .errors import DimensionError, NumericalError, StructureError

#: direct convolution below this combined input length, FFT above
CONV_CROSSOVER = 64

#: bound on the discarded imaginary part of FFT products, relative to the
#: absolute-value sum of the spectral terms
IMAG_RTOL = 1e-10


def _readonly(a):
    a = np.array(a, dtype=float, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class HankelTensor:
    """Square Hankel tensor of order ``order`` and dimension ``dim``."""

    order: int
    dim: int
    generator: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.order < 1 or self.dim < 1:
            raise DimensionError(
                f"order and dim must be positive, got m={self.order}, n={self.dim}")
        h = np.asarray(self.generator, dtype=float)
        if h.ndim != 1:
            raise DimensionError("generator must be a 1-D vector")
        expected = self.order * (self.dim - 1) + 1
        if h.size != expected:
            raise DimensionError(
                f"generator length {h.size} does not match order {self.order}, "
                f"dim {self.dim}: expected length {expected}")
        object.__setattr__(self, "generator", _readonly(h))

    @property
    def size(self):
        """Generator length, also the anti-circulant embedding dimension."""
        return self.generator.size

    def __getitem__(self, idx):
        if len(idx) != self.order:
            raise DimensionError(f"expected {self.order} indices, got {len(idx)}")
        if any(i < 0 or i >= self.dim for i in idx):
            raise IndexError(f"index {idx} out of range for dim {self.dim}")
        return float(self.generator[sum(idx)])

    def __neg__(self):
        return HankelTensor(self.order, self.dim, -self.generator)

    def __mul__(self, c):
        return HankelTensor(self.order, self.dim, float(c) * self.generator)

    __rmul__ = __mul__

    def __repr__(self):
        return f"HankelTensor(order={self.order}, dim={self.dim}, h={self.generator.tolist()!r})"

    @cached_property
    def embedding(self):
        return AntiCirculantEmbedding.from_tensor(self)


@dataclass(frozen=True, eq=False)
class AntiCirculantEmbedding:
    """Order-m anti-circulant tensor of dimension N whose compressed
    generator is ``h``; the Hankel tensor is its leading n x ... x n block.

    ``spectrum`` is the diagonal of the DFT-diagonalized form, ``ifft(h)``.
    """

    source: HankelTensor
    spectrum: np.ndarray = field(repr=False)

    @classmethod
    def from_tensor(cls, T):
        return cls(T, np.fft.ifft(T.generator))

    @property
    def N(self):
        return self.source.size


@dataclass(frozen=True, eq=False)
class HankelMatrix:
    size: int
    generator: np.ndarray = field(repr=False)

    def __post_init__(self):
        h = np.asarray(self.generator, dtype=float)
        if self.size < 1 or h.ndim != 1 or h.size != 2 * self.size - 1:
            raise DimensionError(
                f"Hankel matrix of size {self.size} needs a generator of length "
                f"{2 * self.size - 1}, got {h.size}")
        object.__setattr__(self, "generator", _readonly(h))

    def to_array(self):
        s = self.size
        i = np.arange(s)
        return self.generator[i[:, None] + i[None, :]]

    def __repr__(self):
        return f"HankelMatrix(size={self.size}, h={self.generator.tolist()!r})"


def make_hankel(h, m, n):
    return HankelTensor(int(m), int(n), h)


def hilbert_tensor(m, n):
    """Order-m, dim-n Hilbert tensor: entries ``1/(i1+...+im+1)``."""
    return HankelTensor(m, n, 1.0 / np.arange(1, m * (n - 1) + 2))


def associated_matrix(T):
    """Square Hankel matrix sharing the generator of ``T``."""
    deg = T.order * (T.dim - 1)
    if deg % 2:
        raise StructureError(
            f"no associated Hankel matrix: m(n-1) = {deg} is odd")
    return HankelMatrix(deg // 2 + 1, T.generator)


def as_tensor(H):
    """View a Hankel matrix as an order-2 Hankel tensor."""
    return HankelTensor(2, H.size, H.generator)


def higher_order_associate(T, q):
    """Order-qm Hankel tensor with the same generator as ``T``.

    The dimension shrinks to ``k = (n-1)/q + 1`` so the generator lengths
    agree; ``q`` must divide ``n-1``.
    """
    q = int(q)
    if q < 1:
        raise DimensionError(f"q must be positive, got {q}")
    if (T.dim - 1) % q:
        raise DimensionError(
            f"q={q} does not divide n-1={T.dim - 1}; no order-{q * T.order} "
            f"Hankel tensor shares this generator")
    return HankelTensor(q * T.order, (T.dim - 1) // q + 1, T.generator)


# -- convolution ------------------------------------------------------------

def _fft_convolve(u, v):
    L = len(u) + len(v) - 1
    nfft = next_fast_len(L, real=True)
    return np.fft.irfft(np.fft.rfft(u, nfft) * np.fft.rfft(v, nfft), nfft)[:L]


def convolve(u, v):
    """Full linear convolution, i.e. the coefficients of ``p_u * p_v``."""
    u = np.ascontiguousarray(u, dtype=float)
    v = np.ascontiguousarray(v, dtype=float)
    if u.ndim != 1 or v.ndim != 1 or u.size == 0 or v.size == 0:
        raise DimensionError("convolve needs two nonempty 1-D vectors")
    if u.size + v.size > CONV_CROSSOVER:
        return _fft_convolve(u, v)
    return kernels.conv_direct(u, v)


def conv_power(x, q):
    """``x * x * ... * x`` with ``q`` factors; ``q = 0`` gives ``[1]``."""
    x = np.ascontiguousarray(x, dtype=float)
    q = int(q)
    if q < 0:
        raise ValueError(f"q must be nonnegative, got {q}")
    out = np.ones(1)
    base = x
    # binary powering keeps the FFT path for long results
    while q:
        if q & 1:
            out = convolve(out, base)
        q >>= 1
        if q:
            base = convolve(base, base)
    return out


def conv_power_rows(X, q):
    """Row-wise ``conv_power`` for a batch of vectors via one FFT."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    n = X.shape[1]
    if q == 0:
        return np.ones((X.shape[0], 1))
    if q == 1:
        return X.copy()
    L = q * (n - 1) + 1
    nfft = next_fast_len(L, real=True)
    F = np.fft.rfft(X, nfft, axis=1)
    return np.fft.irfft(F ** q, nfft, axis=1)[:, :L]


# -- tensor-vector products -------------------------------------------------

def _check_vectors(T, xs):
    xs = [np.asarray(x, dtype=float) for x in xs]
    if len(xs) != T.order:
        raise DimensionError(f"need {T.order} vectors, got {len(xs)}")
    for x in xs:
        if x.shape != (T.dim,):
            raise DimensionError(
                f"vector of length {x.size} does not match dim {T.dim}")
    return xs


def _check_vector(T, x):
    x = np.asarray(x, dtype=float)
    if x.shape != (T.dim,):
        raise DimensionError(
            f"vector of length {x.size} does not match dim {T.dim}")
    return x


def tvp_naive(T, xs):
    """Full m-fold sum over all index tuples; O(n^m), for checking only."""
    xs = _check_vectors(T, xs)
    h = T.generator
    total = 0.0
    for idx in product(range(T.dim), repeat=T.order):
        term = h[sum(idx)]
        for x, i in zip(xs, idx):
            term *= x[i]
        total += term
    return float(total)


def _tvp_fft_rect(h, xs):
    # rectangular n1 x ... x nm layout: embedding size sum(n_k) - m + 1
    N = sum(len(x) for x in xs) - len(xs) + 1
    if len(h) != N:
        raise DimensionError(f"generator length {len(h)} != {N}")
    terms = np.fft.ifft(h)
    for x in xs:
        terms = terms * np.fft.fft(x, N)
    val = terms.sum()
    scale = np.abs(terms).sum()
    if abs(val.imag) > IMAG_RTOL * max(scale, np.finfo(float).tiny):
        raise NumericalError(
            f"FFT product leaked imaginary part {val.imag:.3g} "
            f"(scale {scale:.3g})", residual=abs(val.imag))
    return float(val.real)


def tvp_fft(T, xs):
    """``T x_1 x_2 ... x_m`` through the anti-circulant embedding."""
    xs = _check_vectors(T, xs)
    return _tvp_fft_rect(T.generator, xs)


def poly_eval(T, x):
    """``T x^m`` computed as ``h . x^{*m}``."""
    x = _check_vector(T, x)
    return float(T.generator @ conv_power(x, T.order))


def grad_eval(T, x):
    """``T x^{m-1}``: correlation of ``h`` with ``x^{*(m-1)}``.

    ``m * grad_eval(T, x)`` is the gradient of ``poly_eval(T, .)`` at ``x``.
    """
    x = _check_vector(T, x)
    if T.order < 2:
        raise DimensionError("grad_eval needs order >= 2")
    w = conv_power(x, T.order - 1)
    return kernels.hankel_correlate(T.generator, w, T.dim)


def grad_rows(T, X, power=None):
    """Batched ``T x^{power}`` (default ``m-1``) for the rows of ``X``."""
    p = T.order - 1 if power is None else power
    W = conv_power_rows(X, p)
    n = T.dim
    idx = np.arange(n)[:, None] + np.arange(W.shape[1])[None, :]
    return W @ T.generator[idx].T


def contraction_matrix(T, x):
    """The n x n Hankel matrix ``T x^{m-2}``, generated by correlating
    ``h`` with ``x^{*(m-2)}``."""
    x = _check_vector(T, x)
    w = conv_power(x, T.order - 2)
    g = kernels.hankel_correlate(T.generator, w, 2 * T.dim - 1)
    return HankelMatrix(T.dim, g).to_array()
