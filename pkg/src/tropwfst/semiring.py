"""Min-plus / max-plus matrix algebra on dense float64 arrays.

Matrices and vectors are plain numpy arrays over the extended reals.
+inf is the null element of the min-plus semiring, -inf that of max-plus.
A sum of the form inf + (-inf) cannot arise from valid inputs and is
reported as an error rather than silently propagated as NaN.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NegativeCycleError
from .textio import format_weight, parse_weight

INF = float("inf")


def as_trop(values) -> np.ndarray:
    """Coerce to a float64 array and reject NaN entries."""
    a = np.asarray(values, dtype=np.float64)
    if np.isnan(a).any():
        raise ValueError("NaN is not a valid tropical weight")
    return a


def trop_eye(n: int) -> np.ndarray:
    """Min-plus identity: 0 on the diagonal, +inf elsewhere."""
    m = np.full((n, n), INF)
    np.fill_diagonal(m, 0.0)
    return m


def trop_zeros(shape) -> np.ndarray:
    """Min-plus null matrix (all entries +inf)."""
    return np.full(shape, INF)


def _pairwise_sums(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.ndim != 2 or b.ndim != 2:
        raise ValueError("expected 2-d matrices")
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    with np.errstate(invalid="ignore"):
        sums = a[:, :, None] + b[None, :, :]
    if np.isnan(sums).any():
        raise ValueError("inf + (-inf) encountered in tropical product")
    return sums


def minplus_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Min-plus matrix product: out[i, j] = min_k a[i, k] + b[k, j]."""
    return _pairwise_sums(a, b).min(axis=1)


def maxplus_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Max-plus matrix product: out[i, j] = max_k a[i, k] + b[k, j]."""
    return _pairwise_sums(a, b).max(axis=1)


def pointwise_min(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Entrywise minimum of two equally shaped matrices."""
    a, b = np.asarray(a, float), np.asarray(b, float)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return np.minimum(a, b)


def mat_power(a: np.ndarray, k: int) -> np.ndarray:
    """k-fold min-plus power of a square matrix, k >= 1."""
    a = np.asarray(a, float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if k < 1:
        raise ValueError("power must be >= 1")
    out = a.copy()
    for _ in range(k - 1):
        out = minplus_mul(out, a)
    return out


def gamma(a: np.ndarray) -> np.ndarray:
    """All-pairs shortest nonempty-path matrix: min of the powers a^1 .. a^n.

    Raises NegativeCycleError if any power up to n develops a negative
    diagonal entry, which witnesses a negative-weight cycle.
    """
    a = np.asarray(a, float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    n = a.shape[0]
    power = a.copy()
    acc = a.copy()
    if (np.diagonal(power) < 0).any():
        raise NegativeCycleError("negative-weight cycle detected")
    for _ in range(n - 1):
        power = minplus_mul(power, a)
        if (np.diagonal(power) < 0).any():
            raise NegativeCycleError("negative-weight cycle detected")
        acc = np.minimum(acc, power)
    return acc


def delta(a: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure: identity min gamma(a)."""
    return pointwise_min(trop_eye(np.asarray(a).shape[0]), gamma(a))


def cg_conjugate(x: np.ndarray) -> np.ndarray:
    """Cuninghame-Green conjugate: negated transpose (+inf maps to -inf)."""
    return -np.asarray(x, float).T


def trop_line_eval(alpha: float, beta: float, x: float) -> float:
    """Tropical line y = min(alpha + x, beta)."""
    return min(alpha + x, beta)


@dataclass(frozen=True)
class Halfspace:
    """Affine tropical halfspace: points x with
    min(min_i a_i + x_i, a_{n+1}) >= min(min_i b_i + x_i, b_{n+1})."""

    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        a, b = as_trop(self.a), as_trop(self.b)
        if a.ndim != 1 or a.shape != b.shape or a.shape[0] < 2:
            raise ValueError("coefficient vectors must share a dim >= 2")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)


def halfspace_contains(h: Halfspace, x: np.ndarray) -> bool:
    """Membership test for a point in an affine tropical halfspace."""
    x = as_trop(x)
    n = h.a.shape[0] - 1
    if x.shape != (n,):
        raise ValueError(f"point must have dim {n}")
    lhs = min(np.min(h.a[:n] + x), h.a[n])
    rhs = min(np.min(h.b[:n] + x), h.b[n])
    return lhs >= rhs


def format_matrix(a: np.ndarray) -> str:
    """Debug text form: 'rows cols' header, then space-separated rows."""
    a = np.atleast_2d(np.asarray(a, float))
    lines = [f"{a.shape[0]} {a.shape[1]}"]
    for row in a:
        lines.append(" ".join(format_weight(w) for w in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> np.ndarray:
    """Inverse of format_matrix."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix text")
    rows, cols = (int(tok) for tok in lines[0].split())
    if len(lines) - 1 != rows:
        raise ValueError(f"expected {rows} rows, got {len(lines) - 1}")
    out = np.empty((rows, cols))
    for i, line in enumerate(lines[1:]):
        toks = line.split()
        if len(toks) != cols:
            raise ValueError(f"row {i}: expected {cols} entries, got {len(toks)}")
        out[i] = [parse_weight(t) for t in toks]
    return out
