"""Complex vectors, roots of unity, and small dense-matrix helpers.

Vectors are 1-D numpy complex128 arrays and matrices are 2-D arrays
throughout. Inputs are validated once at these boundaries so the algorithm
modules can assume clean data.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionError

# exp(2*pi*i*k/n) at 4k/n = 0, 1, 2, 3. These are snapped to the exact
# lattice values so that e.g. Boolean-cube character matrices contain
# literal +-1 entries (math.sin(math.pi) alone is ~1.2e-16, not 0).
_QUARTER_TURNS = np.array([1.0 + 0.0j, 1.0j, -1.0 + 0.0j, -1.0j])


def as_vector(x) -> np.ndarray:
    """Coerce x to a finite 1-D complex128 vector of length >= 1."""
    v = np.asarray(x, dtype=np.complex128)
    if v.ndim != 1:
        raise ValueError(f"expected a 1-D vector, got shape {v.shape}")
    if v.size == 0:
        raise ValueError("vectors must have length >= 1")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector entries must be finite")
    return v


def as_matrix(m) -> np.ndarray:
    """Coerce m to a finite 2-D complex128 matrix."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {a.shape}")
    if a.size == 0:
        raise ValueError("matrices must be non-empty")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    return a


def check_same_length(u: np.ndarray, v: np.ndarray) -> None:
    if u.shape[0] != v.shape[0]:
        raise DimensionError(f"length mismatch: {u.shape[0]} vs {v.shape[0]}")


def roots_of_unity(n: int, ks) -> np.ndarray:
    """exp(2*pi*i*k/n) elementwise for an integer array k.

    The angle is computed directly as 2*pi*(k mod n)/n — never by repeated
    multiplication — and quarter-turn results are exactly 1, i, -1, -i.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    k = np.remainder(np.asarray(ks, dtype=np.int64), n)
    flat = np.atleast_1d(k)  # ufuncs turn 0-d arrays into scalars; keep 1-D
    w = np.exp((2j * np.pi / n) * flat)
    quarter, rem = np.divmod(4 * flat, n)
    hit = rem == 0
    if hit.any():
        w[hit] = _QUARTER_TURNS[quarter[hit]]
    return w.reshape(k.shape)


def root_of_unity(n: int, k: int) -> complex:
    """The n-th root of unity e^{2*pi*i*k/n}; k is reduced modulo n first."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    return complex(roots_of_unity(n, int(k) % n)[()])


def hadamard(u, v) -> np.ndarray:
    """Componentwise product of two equal-length vectors."""
    a, b = as_vector(u), as_vector(v)
    check_same_length(a, b)
    return a * b


def inner_product(u, v) -> complex:
    """sum_j conj(u_j) * v_j — the first argument is conjugated."""
    a, b = as_vector(u), as_vector(v)
    check_same_length(a, b)
    return complex(np.vdot(a, b))


def max_abs_diff(u, v) -> float:
    """Worst componentwise distance max_j |u_j - v_j|."""
    a, b = as_vector(u), as_vector(v)
    check_same_length(a, b)
    return float(np.max(np.abs(a - b)))


def mat_vec(m, x) -> np.ndarray:
    """Dense matrix-vector product — the O(rows*cols) oracle workhorse."""
    a = as_matrix(m)
    b = as_vector(x)
    if a.shape[1] != b.shape[0]:
        raise DimensionError(
            f"matrix is {a.shape[0]}x{a.shape[1]} but vector has length {b.shape[0]}"
        )
    return a @ b


def scaled_tolerance(x, base: float = 1e-9) -> float:
    """base * max(1, ||x||_inf): the default comparison tolerance."""
    v = np.asarray(x)
    scale = float(np.max(np.abs(v))) if v.size else 0.0
    return base * max(1.0, scale)
