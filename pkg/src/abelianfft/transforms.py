"""Fast transforms: radix-2 FFT, separable group FFT, Walsh-Hadamard, and
fast convolution.

The radix-2 path is the textbook iterative decimation-in-time scheme —
bit-reversal permutation followed by log2(n) butterfly stages — vectorized
over whole stages so large sizes run at numpy speed. It computes the same
synthesis product F x as `fourier.apply_F` (positive-exponent convention),
which is the oracle it is tested against.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

import numpy as np

from . import fourier
from .errors import DimensionError, UnsupportedLengthError
from .groups import as_group
from .vectors import as_vector, check_same_length, roots_of_unity


def is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


@dataclass(frozen=True)
class TwiddleTable:
    """Read-only roots w_n^k for k < n/2.

    The stage with half-block m uses powers[::n // (2m)], which is
    (w_{2m}^0, ..., w_{2m}^{m-1}).
    """

    n: int
    powers: np.ndarray


_tables: dict[int, TwiddleTable] = {}
_bitrev: dict[int, np.ndarray] = {}
_cache_lock = threading.Lock()


def twiddle_table(n: int) -> TwiddleTable:
    """The cached table for size n (built at most once, safe to share)."""
    if not is_power_of_two(n):
        raise UnsupportedLengthError(f"twiddle tables exist for powers of two, got {n}")
    table = _tables.get(n)
    if table is None:
        with _cache_lock:
            table = _tables.get(n)
            if table is None:
                powers = roots_of_unity(n, np.arange(n // 2, dtype=np.int64))
                powers.setflags(write=False)
                table = TwiddleTable(n, powers)
                _tables[n] = table
    return table


def _bit_reversal(n: int) -> np.ndarray:
    perm = _bitrev.get(n)
    if perm is None:
        with _cache_lock:
            perm = _bitrev.get(n)
            if perm is None:
                idx = np.arange(n, dtype=np.intp)
                perm = np.zeros(n, dtype=np.intp)
                for b in range(n.bit_length() - 1):
                    perm = (perm << 1) | ((idx >> b) & 1)
                perm.setflags(write=False)
                _bitrev[n] = perm
    return perm


def _radix2_batch(a: np.ndarray) -> np.ndarray:
    """Butterflies over the last axis of a (batch, n) complex array."""
    n = a.shape[-1]
    # The gather copies, but not necessarily into C order; the stage loop
    # below mutates through reshape views, which need a contiguous buffer.
    out = np.ascontiguousarray(a[..., _bit_reversal(n)])
    if n == 1:
        return out
    powers = twiddle_table(n).powers
    half = 1
    while half < n:
        w = powers[:: n // (2 * half)]
        b = out.reshape(-1, 2, half)
        t = b[:, 1, :] * w
        hi = b[:, 0, :] - t
        b[:, 0, :] += t
        b[:, 1, :] = hi
        half *= 2
    return out


def fft(x) -> np.ndarray:
    """Multiply by the synthesis matrix F (entries w_n^{jk}) in O(n log n)."""
    v = as_vector(x)
    n = v.shape[0]
    if not is_power_of_two(n):
        raise UnsupportedLengthError(f"fft needs a power-of-two length, got {n}")
    return _radix2_batch(v[None, :])[0]


def ifft(y) -> np.ndarray:
    """Inverse of fft: (1/n) conj(F) y, computed as conj(fft(conj(y))) / n."""
    v = as_vector(y)
    return np.conj(fft(np.conj(v))) / v.shape[0]


def fast_convolve(c, d) -> np.ndarray:
    """Circular convolution via the spectrum: c * d = n fft(ifft(c) ∘ ifft(d)).

    Three FFT-length passes; agrees with naive_convolve.
    """
    a, b = as_vector(c), as_vector(d)
    check_same_length(a, b)
    n = a.shape[0]
    if not is_power_of_two(n):
        raise UnsupportedLengthError(f"fast_convolve needs a power-of-two length, got {n}")
    return n * fft(ifft(a) * ifft(b))


def linear_convolve(c, d) -> np.ndarray:
    """Polynomial (non-circular) convolution by zero-padding to a power of two."""
    a, b = as_vector(c), as_vector(d)
    m = a.shape[0] + b.shape[0] - 1
    n = 1 << max(m - 1, 0).bit_length()
    pa = np.zeros(n, dtype=np.complex128)
    pb = np.zeros(n, dtype=np.complex128)
    pa[: a.shape[0]] = a
    pb[: b.shape[0]] = b
    return fast_convolve(pa, pb)[:m]


@dataclass(frozen=True)
class FactorStep:
    size: int
    method: str  # "radix2" or "dense"


def transform_plan(group) -> tuple[FactorStep, ...]:
    """Per-factor strategy for g_fft: radix-2 when the factor is a power of
    two, dense multiply otherwise."""
    grp = as_group(group)
    return tuple(
        FactorStep(k, "radix2" if is_power_of_two(k) else "dense") for k in grp.factors
    )


def g_fft(group, x, direction: str = "synthesis") -> np.ndarray:
    """Separable Fourier transform on a finite abelian group.

    The vector is reshaped to the mixed-radix tensor (k_1, ..., k_u) and each
    axis is transformed in turn, which realizes F = kron(F_{k_1}, ..., F_{k_u})
    in O(|G| sum k_i) — O(|G| log |G|) when all factors are powers of two.
    'synthesis' multiplies by F; 'analysis' multiplies by (1/|G|) F^*, with the
    normalization applied once at the end.
    """
    grp = as_group(group)
    v = as_vector(x)
    if v.shape[0] != grp.order:
        raise DimensionError(f"vector length {v.shape[0]} != group order {grp.order}")
    if direction == "analysis":
        return np.conj(g_fft(grp, np.conj(v), "synthesis")) / grp.order
    if direction != "synthesis":
        raise ValueError(f"direction must be 'analysis' or 'synthesis', got {direction!r}")
    if not grp.factors:
        return v.copy()
    a = v.reshape(grp.factors)
    for axis, k in enumerate(grp.factors):
        moved = np.moveaxis(a, axis, -1)
        flat = np.ascontiguousarray(moved).reshape(-1, k)
        if is_power_of_two(k):
            flat = _radix2_batch(flat)
        else:
            flat = flat @ fourier.dft_matrix(k).T
        a = np.moveaxis(flat.reshape(moved.shape), -1, axis)
    return a.reshape(grp.order)


def g_fast_convolve(group, v, u) -> np.ndarray:
    """Group convolution through the spectrum: |G| * synth(analysis(v) ∘ analysis(u))."""
    grp = as_group(group)
    a, b = as_vector(v), as_vector(u)
    if a.shape[0] != grp.order or b.shape[0] != grp.order:
        raise DimensionError(
            f"vectors of length {a.shape[0]}, {b.shape[0]} do not match group order {grp.order}"
        )
    spectra = g_fft(grp, a, "analysis") * g_fft(grp, b, "analysis")
    return grp.order * g_fft(grp, spectra, "synthesis")


def walsh_hadamard(x) -> np.ndarray:
    """Transform by the +-1 character matrix of Z_2^m using n log2(n) additions.

    Integer input stays integer (int64), so results are exact as long as they
    fit; float/complex input is transformed in its own precision. Applying the
    transform twice gives 2^m times the input.
    """
    a = np.asarray(x)
    if a.ndim != 1 or a.size == 0:
        raise ValueError(f"expected a non-empty 1-D vector, got shape {a.shape}")
    n = a.shape[0]
    if not is_power_of_two(n):
        raise UnsupportedLengthError(f"walsh_hadamard needs a power-of-two length, got {n}")
    if a.dtype.kind in "iub":
        out = a.astype(np.int64)
    elif a.dtype.kind == "f":
        out = a.astype(np.float64)
    else:
        out = np.asarray(a, dtype=np.complex128).copy()
    if out.dtype.kind != "i" and not np.all(np.isfinite(out)):
        raise ValueError("vector entries must be finite")
    half = 1
    while half < n:
        b = out.reshape(-1, 2, half)
        lo = b[:, 0, :].copy()
        hi = b[:, 1, :]
        b[:, 0, :] = lo + hi
        b[:, 1, :] = lo - hi
        half *= 2
    return out
