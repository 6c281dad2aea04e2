"""Compiled vs pure-Python kernels, one line per kernel.

    python benchmarks/bench_kernels.py [--repeat 5]

The end-to-end rows time a full decomposition with each backend swapped in.
"""

import argparse
import timeit

import numpy as np

from hankeltensor import _kernels_py, core, linalg
from hankeltensor.core import hilbert_tensor
from hankeltensor.generate import example3_tensor
from hankeltensor.vandermonde import avd_decompose

try:
    from hankeltensor import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def cases(rng):
    A = rng.standard_normal((19, 19))
    A = A + A.T
    u, v = rng.standard_normal(30), rng.standard_normal(30)
    h, w = rng.standard_normal(37), rng.standard_normal(28)
    x = np.sort(rng.uniform(-1, 1, 12))
    b = rng.standard_normal(12)
    coeffs = np.poly(rng.uniform(-1, 1, 9)).astype(float)
    z0 = 1.5 * np.exp(1j * (2 * np.pi * np.arange(9) / 9 + 0.4))
    return {
        "jacobi_eigh 19x19": lambda k: k.jacobi_eigh(A.copy(), 60),
        "conv_direct 30*30": lambda k: k.conv_direct(u, v),
        "hankel_correlate n=10": lambda k: k.hankel_correlate(h, w, 10),
        "bjorck_pereyra r=12": lambda k: k.bjorck_pereyra(x, b),
        "aberth degree 9": lambda k: k.aberth(coeffs, z0, 500, 1e-15),
    }


def with_backend(k, f):
    saved = core.kernels, linalg.kernels
    core.kernels = linalg.kernels = k
    try:
        return f()
    finally:
        core.kernels, linalg.kernels = saved


def end_to_end(rng):
    T3, _ = example3_tensor(rng)
    H = hilbert_tensor(4, 5)
    return {
        "avd example-3 tensor": lambda: avd_decompose(T3),
        "avd hilbert 4x5": lambda: avd_decompose(H, gamma=1 / 18),
    }


def bench(f, repeat):
    n, _ = timeit.Timer(f).autorange()
    return min(timeit.repeat(f, number=n, repeat=repeat)) / n


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    rng = np.random.default_rng(0)
    backends = [("python", _kernels_py)]
    if _kernels_c is not None:
        backends.append(("cython", _kernels_c))
    else:
        print("compiled kernels not built; timing the fallback only")
    print(f"{'kernel':26s}" + "".join(f"{name:>14s}" for name, _ in backends) + f"{'speedup':>10s}")
    rows = [(name, [bench(lambda k=k, f=f: f(k), args.repeat) for _, k in backends])
            for name, f in cases(rng).items()]
    rows += [(name, [bench(lambda k=k, f=f: with_backend(k, f), args.repeat) for _, k in backends])
             for name, f in end_to_end(rng).items()]
    for name, times in rows:
        speed = f"{times[0] / times[-1]:9.1f}x" if len(times) > 1 else ""
        print(f"{name:26s}" + "".join(f"{t * 1e6:12.1f}us" for t in times) + speed)


if __name__ == "__main__":
    main()
