"""Circulant and group-circulant operators, naive convolution, and the
shift-matrix decomposition.

A circulant C is stored by its generator (first column) c with
C[i, j] = c[(i - j) mod n]; multiplying by C is circular convolution with c.
The group version indexes rows and columns by group elements:
C(x, y) = v(x - y).
"""

from __future__ import annotations

import os

import numpy as np

from .errors import DimensionError, ResourceLimitError
from .groups import FiniteAbelianGroup, as_group
from .vectors import as_vector

DEFAULT_ORACLE_CAP = 4096

_CONVOLVE_CHUNK = 1024


def oracle_cap(cap: int | None = None) -> int:
    """Effective dense-materialization cap.

    An explicit cap wins; otherwise the ABELIANFFT_ORACLE_CAP environment
    variable overrides the default of 4096.
    """
    if cap is not None:
        return int(cap)
    env = os.environ.get("ABELIANFFT_ORACLE_CAP")
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise ValueError(f"ABELIANFFT_ORACLE_CAP={env!r} is not an integer") from exc
    return DEFAULT_ORACLE_CAP


def _check_cap(n: int, cap: int | None) -> None:
    limit = oracle_cap(cap)
    if n > limit:
        raise ResourceLimitError(
            f"dense materialization of size {n} exceeds the oracle cap {limit}"
        )


class Circulant:
    """n x n circulant matrix generated by its first column."""

    def __init__(self, generator):
        self.generator = as_vector(generator).copy()
        self.generator.setflags(write=False)

    @property
    def n(self) -> int:
        return self.generator.shape[0]

    def entry(self, i: int, j: int) -> complex:
        n = self.n
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"indices ({i}, {j}) out of range for a {n}x{n} matrix")
        return complex(self.generator[(i - j) % n])

    def materialize(self, cap: int | None = None) -> np.ndarray:
        _check_cap(self.n, cap)
        idx = np.arange(self.n)
        return self.generator[(idx[:, None] - idx[None, :]) % self.n]

    def __repr__(self) -> str:
        return f"Circulant(n={self.n})"


class GCirculant:
    """|G| x |G| operator C(x, y) = v(x - y) stored by its generator v."""

    def __init__(self, group, generator):
        self.group = as_group(group)
        self.generator = as_vector(generator).copy()
        if self.generator.shape[0] != self.group.order:
            raise DimensionError(
                f"generator has length {self.generator.shape[0]}, group {self.group} has order {self.group.order}"
            )
        self.generator.setflags(write=False)

    def entry(self, x, y) -> complex:
        diff = self.group.sub(x, y)
        return complex(self.generator[self.group.index_of(diff)])

    def materialize(self, cap: int | None = None) -> np.ndarray:
        _check_cap(self.group.order, cap)
        return self.generator[self.group.subtraction_table()]

    def blocks(self) -> list["GCirculant"]:
        return block_decompose(self)

    def __repr__(self) -> str:
        return f"GCirculant(group={self.group})"


def shift_matrix(n: int) -> np.ndarray:
    """The cyclic shift P with P[i, (i+1) mod n] = 1, so P x = (x_1, ..., x_{n-1}, x_0)."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    p = np.zeros((n, n), dtype=np.complex128)
    p[np.arange(n), (np.arange(n) + 1) % n] = 1.0
    return p


def decompose_in_powers_of_P(c) -> np.ndarray:
    """Coefficients (a_0, ..., a_{n-1}) with C = sum_m a_m P^m.

    a_0 = c_0 and a_m = c_{n-m}: the generator read backwards after the
    constant term.
    """
    v = as_vector(c)
    return np.concatenate([v[:1], v[1:][::-1]])


def naive_convolve(c, d) -> np.ndarray:
    """Circular convolution by direct O(n^2) summation: out_i = sum_j c_{(i-j) mod n} d_j."""
    a, b = as_vector(c), as_vector(d)
    if a.shape[0] != b.shape[0]:
        raise DimensionError(f"length mismatch: {a.shape[0]} vs {b.shape[0]}")
    n = a.shape[0]
    out = np.empty(n, dtype=np.complex128)
    cols = np.arange(n, dtype=np.int64)
    for start in range(0, n, _CONVOLVE_CHUNK):
        rows = np.arange(start, min(start + _CONVOLVE_CHUNK, n), dtype=np.int64)
        out[start : start + rows.shape[0]] = a[(rows[:, None] - cols[None, :]) % n] @ b
    return out


def g_naive_convolve(group, v, u) -> np.ndarray:
    """Group convolution by direct summation: out(x) = sum_y v(x - y) u(y).

    Identical, summand for summand, to mat_vec(GCirculant(group, v).materialize(), u);
    O(|G|^2) time and memory.
    """
    g = as_group(group)
    a, b = as_vector(v), as_vector(u)
    if a.shape[0] != g.order or b.shape[0] != g.order:
        raise DimensionError(
            f"vectors of length {a.shape[0]}, {b.shape[0]} do not match group order {g.order}"
        )
    return a[g.subtraction_table()] @ b


def block_decompose(circ: GCirculant) -> list[GCirculant]:
    """Split a circulant over Z_k x G' into k circulants over G'.

    Block m is generated by the m-th length-|G'| slice of the generator, and
    the full matrix is recovered as sum_i kron(P^i, block[(k - i) mod k]) with
    P the k x k shift matrix.
    """
    group = circ.group
    if group.num_factors < 2:
        raise ValueError(f"group {group} has no product structure to split")
    k = group.factors[0]
    tail = FiniteAbelianGroup(group.factors[1:])
    step = tail.order
    return [
        GCirculant(tail, circ.generator[m * step : (m + 1) * step]) for m in range(k)
    ]
