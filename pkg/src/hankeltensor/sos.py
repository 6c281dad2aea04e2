"""Sum-of-squares decomposition of even-order strong Hankel tensors.

For ``T`` of order ``2q`` with PSD associated matrix ``H = U diag(d) U^T``,

    T y^{2q} = sum_k (q_k . y^{*q})^2,    q_k = sqrt(d_k) u_k,

and each ``q_k`` generates the order-q Hankel tensor of one squared term.
"""

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import factorial
from collections import Counter

import numpy as np

from .core import associated_matrix, conv_power, HankelTensor
from .errors import DimensionError, NotPSDError, NotStrongError, StructureError
from .linalg import RANK_TOL, takagi_psd


@dataclass(frozen=True, eq=False)
class SOSDecomposition:
    q: int
    dim: int
    terms: np.ndarray  # shape (r, q(n-1)+1)

    @property
    def rank(self):
        return self.terms.shape[0]

    def term_tensors(self):
        return [HankelTensor(self.q, self.dim, t) for t in self.terms]

    def to_json(self):
        return {"q": self.q, "terms": self.terms.tolist()}


def sos_decompose(T, tol=RANK_TOL):
    if T.order % 2:
        raise StructureError(f"SOS decomposition needs even order, got {T.order}")
    H = associated_matrix(T)
    try:
        F = takagi_psd(H, tol)
    except NotPSDError as exc:
        raise NotStrongError(exc.eigenvalue) from exc
    terms = (F.U * np.sqrt(F.d)).T
    return SOSDecomposition(T.order // 2, T.dim, np.ascontiguousarray(terms).reshape(F.rank, H.size))


def sos_eval(dec, y):
    """Return ``(sum_k p_k(y)^2, [p_k(y)])`` with ``p_k(y) = q_k . y^{*q}``."""
    y = np.asarray(y, dtype=float)
    if y.shape != (dec.dim,):
        raise DimensionError(f"vector of length {y.size} does not match dim {dec.dim}")
    vals = dec.terms @ conv_power(y, dec.q) if dec.rank else np.zeros(0)
    return float(np.sum(vals ** 2)), vals


def render_term(coeffs, q, n, digits=6):
    """Expand ``c . y^{*q}`` into a monomial string in ``y1..yn``."""
    parts = []
    for combo in combinations_with_replacement(range(n), q):
        c = coeffs[sum(combo)]
        if abs(c) < 10.0 ** (-digits):
            continue
        counts = Counter(combo)
        mult = factorial(q)
        for k in counts.values():
            mult //= factorial(k)
        coef = round(c * mult, digits)
        mono = "*".join(f"y{i + 1}" if k == 1 else f"y{i + 1}^{k}"
                        for i, k in sorted(counts.items()))
        parts.append(f"{coef:g}*{mono}" if coef != 1 else mono)
    if not parts:
        return "0"
    return " + ".join(parts).replace("+ -", "- ")
