"""Shared fixtures and independent oracles for the test suite.

The oracles here are written against the definitions directly (explicit
np.exp outer products, cmath loops over factors), deliberately not sharing
code with the library, so the two routes can disagree when one is wrong.
"""

import cmath

import numpy as np
import pytest

from abelianfft.groups import FiniteAbelianGroup


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def oracle_dft_matrix(n: int) -> np.ndarray:
    """F[j, k] = e^{2 pi i jk/n} via a plain floating outer product."""
    j = np.arange(n)
    return np.exp(2j * np.pi * np.outer(j, j) / n)


def oracle_character(factors, g, x) -> complex:
    """chi_g(x) = prod_i e^{2 pi i g_i x_i / k_i}, one cmath.exp per factor."""
    z = 1.0 + 0.0j
    for ki, gi, xi in zip(factors, g, x):
        z *= cmath.exp(2j * cmath.pi * gi * xi / ki)
    return z


def oracle_group_dft(factors, v) -> np.ndarray:
    """Synthesis by summation: y[x] = sum_g chi_g(x) v[g], no matrix reuse."""
    grp = FiniteAbelianGroup(tuple(factors)) if factors else FiniteAbelianGroup(())
    elems = grp.elements()
    out = np.zeros(grp.order, dtype=np.complex128)
    for ix, x in enumerate(elems):
        out[ix] = sum(
            oracle_character(grp.factors, g, x) * v[ig] for ig, g in enumerate(elems)
        )
    return out


def oracle_cyclic_convolve(a, b) -> np.ndarray:
    """Schoolbook cyclic convolution, double loop."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    n = len(a)
    out = np.zeros(n, dtype=np.complex128)
    for m in range(n):
        for j in range(n):
            out[m] += a[j] * b[(m - j) % n]
    return out


# The acceptance test set:  Z_n up to 64, Boolean cubes up to 2^6, a few
# mixed products, and one deliberately non-canonical factor order.
def small_cyclic_groups():
    return [FiniteAbelianGroup((n,)) for n in range(2, 65)] + [FiniteAbelianGroup(())]


def cube_groups():
    return [FiniteAbelianGroup((2,) * k) for k in range(1, 7)]


def mixed_groups():
    return [
        FiniteAbelianGroup((2, 3)),
        FiniteAbelianGroup((3, 4)),
        FiniteAbelianGroup((2, 2, 9)),
        FiniteAbelianGroup((3, 2)),
    ]


def acceptance_groups():
    return small_cyclic_groups() + cube_groups() + mixed_groups()
