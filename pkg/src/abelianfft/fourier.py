"""Characters, the dense Fourier matrix, and the naive transforms.

Conventions, fixed once here and relied on everywhere else:

* the Fourier matrix F has F[x, g] = chi_g(x) = e^{2*pi*i * sum_i g_i x_i / k_i},
  so its columns are the characters; for Z_n that is F[j, k] = w^{jk} with
  w = e^{2*pi*i/n} (positive exponent);
* "synthesis" multiplies by F, "analysis" multiplies by D = (1/|G|) F^*;
  D F = I, and the columns of F are orthogonal with squared norm |G|.

Everything in this module is deliberately dense and O(|G|^2) or worse — it is
the oracle the fast paths in `transforms` are checked against.
"""

from __future__ import annotations

import math

import numpy as np

from .circulant import GCirculant, oracle_cap
from .errors import DimensionError, ResourceLimitError
from .groups import FiniteAbelianGroup, as_group, cyclic
from .vectors import as_vector, roots_of_unity


def fourier_column(n: int, k: int) -> np.ndarray:
    """The k-th Fourier basis vector of Z_n: (w^{0k}, w^{1k}, ..., w^{(n-1)k})."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    if not 0 <= int(k) < n:
        raise ValueError(f"column index {k} out of range for Z_{n}")
    return roots_of_unity(n, int(k) * np.arange(n, dtype=np.int64))


def _character_exponents(group: FiniteAbelianGroup, g) -> tuple[int, np.ndarray]:
    """(N, e) with chi_g(x) = w_N^{e_x}; exact integer arithmetic throughout."""
    coords = group.check_element(g)
    n = math.lcm(*group.factors) if group.factors else 1
    weights = np.array(
        [gi * (n // ki) for gi, ki in zip(coords, group.factors)], dtype=np.int64
    )
    return n, group.coordinates @ weights


def character(group, g) -> np.ndarray:
    """The character chi_g as a vector over the group, chi_g(x) = e(sum_i g_i x_i / k_i).

    Evaluated through a single exact rational angle per entry (common
    denominator lcm(k_i)), so order-2 factors contribute literal +-1.
    """
    grp = as_group(group)
    n, exponents = _character_exponents(grp, g)
    return roots_of_unity(n, exponents)


def character_kron(group, g) -> np.ndarray:
    """chi_g built as the Kronecker product of per-factor columns.

    Independent construction used to cross-check `character`: for
    G = Z_{k_1} x G' the character of g = (g_1, g') is
    kron(fourier_column(k_1, g_1), chi_{g'}).
    """
    grp = as_group(group)
    coords = grp.check_element(g)
    out = np.ones(1, dtype=np.complex128)
    for gi, ki in zip(coords, grp.factors):
        out = np.kron(out, fourier_column(ki, gi))
    return out


def boolean_character(n: int, subset) -> np.ndarray:
    """Character of the Boolean cube Z_2^n for S ⊆ {1..n}: x -> (-1)^{sum_{i in S} x_i}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    indicator = [0] * n
    for i in subset:
        i = int(i)
        if not 1 <= i <= n:
            raise ValueError(f"subset member {i} out of range 1..{n}")
        indicator[i - 1] = 1
    return character(FiniteAbelianGroup((2,) * n), tuple(indicator))


def dft_matrix(group) -> np.ndarray:
    """The dense |G| x |G| Fourier matrix; column g is character(group, g).

    F[x, g] = w_N^{sum_i x_i g_i (N/k_i)} with N = lcm(k_i), built from one
    integer exponent matrix, which makes F exactly symmetric.
    """
    grp = as_group(group)
    if not grp.factors:
        return np.ones((1, 1), dtype=np.complex128)
    n = math.lcm(*grp.factors)
    coords = grp.coordinates
    scaled = coords * np.array([n // k for k in grp.factors], dtype=np.int64)
    return roots_of_unity(n, scaled @ coords.T)


def apply_F(group, x) -> np.ndarray:
    """Naive synthesis: multiply by the dense Fourier matrix, O(|G|^2)."""
    grp = as_group(group)
    v = as_vector(x)
    if v.shape[0] != grp.order:
        raise DimensionError(f"vector length {v.shape[0]} != group order {grp.order}")
    return dft_matrix(grp) @ v


def apply_D(group, y) -> np.ndarray:
    """Naive analysis: multiply by D = (1/|G|) F^*; inverts apply_F."""
    grp = as_group(group)
    v = as_vector(y)
    if v.shape[0] != grp.order:
        raise DimensionError(f"vector length {v.shape[0]} != group order {grp.order}")
    return dft_matrix(grp).conj().T @ v / grp.order


def apply_F_inverse(group, y) -> np.ndarray:
    """F^{-1} = (1/|G|) conj(F); identical to apply_D."""
    return apply_D(group, y)


def circulant_eigenvalues(c) -> np.ndarray:
    """Eigenvalues of the circulant generated by c, ordered by frequency.

    Lambda = conj(F) c, i.e. Lambda_k = sum_j c_j w^{-jk}; the eigenvector for
    Lambda_k is fourier_column(n, k).
    """
    v = as_vector(c)
    return dft_matrix(cyclic(v.shape[0])).conj() @ v


def g_circulant_eigenvalues(group, v) -> np.ndarray:
    """Eigenvalues Lambda_g = sum_x v(x) conj(chi_g(x)) of a group circulant.

    chi_g is the eigenvector for Lambda_g; equals conj(F) v because F is
    symmetric.
    """
    grp = as_group(group)
    a = as_vector(v)
    if a.shape[0] != grp.order:
        raise DimensionError(f"vector length {a.shape[0]} != group order {grp.order}")
    return dft_matrix(grp).conj().T @ a


def diagonalize_check(group, v, cap: int | None = None) -> float:
    """Residual ||F diag(Lambda) (1/|G|) F^* - C||_inf for the circulant of v.

    Dense reconstruction at oracle scale; raises ResourceLimitError above the
    cap.
    """
    grp = as_group(group)
    circ = GCirculant(grp, v)
    limit = oracle_cap(cap)
    if grp.order > limit:
        raise ResourceLimitError(
            f"diagonalization check of order {grp.order} exceeds the oracle cap {limit}"
        )
    c = circ.materialize(cap=limit)
    f = dft_matrix(grp)
    lam = g_circulant_eigenvalues(grp, circ.generator)
    rebuilt = (f * lam) @ f.conj().T / grp.order
    return float(np.max(np.abs(rebuilt - c)))
