"""scikit-learn compatible wrappers so the transforms drop into Pipelines.

These are stateless transformers in the sklearn sense (fit only validates and
resolves parameters). sklearn's own check_array rejects complex data, so
batch validation is done locally.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import circulant, fourier, transforms
from .groups import as_group
from .vectors import as_vector


def _as_batch(X, width: int | None = None) -> np.ndarray:
    """Validate a (n_samples, n) complex batch; 1-D input is one sample."""
    a = np.asarray(X, dtype=np.complex128)
    if a.ndim == 1:
        a = a[None, :]
    if a.ndim != 2 or a.shape[0] == 0 or a.shape[1] == 0:
        raise ValueError(f"expected a non-empty 2-D batch, got shape {np.shape(X)}")
    if not np.all(np.isfinite(a)):
        raise ValueError("batch entries must be finite")
    if width is not None and a.shape[1] != width:
        raise ValueError(f"expected rows of length {width}, got {a.shape[1]}")
    return a


class GroupFourierTransform(BaseEstimator, TransformerMixin):
    """Row-wise Fourier transform on a finite abelian group.

    Parameters
    ----------
    group : group spec (int n, 'Z4'-style string, factor tuple, or group object)
    direction : 'analysis' multiplies by (1/|G|) F*, 'synthesis' by F
    engine : 'fast' for the separable FFT, 'naive' for the dense oracle
    """

    def __init__(self, group=2, direction="analysis", engine="fast"):
        self.group = group
        self.direction = direction
        self.engine = engine

    def fit(self, X, y=None):
        if self.direction not in ("analysis", "synthesis"):
            raise ValueError(f"direction must be 'analysis' or 'synthesis', got {self.direction!r}")
        if self.engine not in ("fast", "naive"):
            raise ValueError(f"engine must be 'fast' or 'naive', got {self.engine!r}")
        self.group_ = as_group(self.group)
        _as_batch(X, self.group_.order)
        self.n_features_in_ = self.group_.order
        return self

    def _apply(self, X, direction):
        a = _as_batch(X, self.group_.order)
        if self.engine == "fast":
            rows = [transforms.g_fft(self.group_, row, direction) for row in a]
        elif direction == "analysis":
            rows = [fourier.apply_D(self.group_, row) for row in a]
        else:
            rows = [fourier.apply_F(self.group_, row) for row in a]
        return np.stack(rows)

    def transform(self, X):
        check_is_fitted(self)
        return self._apply(X, self.direction)

    def inverse_transform(self, X):
        check_is_fitted(self)
        other = "synthesis" if self.direction == "analysis" else "analysis"
        return self._apply(X, other)


class CirculantConvolution(BaseEstimator, TransformerMixin):
    """Convolve every row with a fixed generator over a finite abelian group.

    fit() precomputes the generator's spectrum so transform() costs three fast
    transforms per row; engine='naive' uses direct summation instead.
    """

    def __init__(self, generator=(1.0,), group=None, engine="fast"):
        self.generator = generator
        self.group = group
        self.engine = engine

    def fit(self, X, y=None):
        if self.engine not in ("fast", "naive"):
            raise ValueError(f"engine must be 'fast' or 'naive', got {self.engine!r}")
        gen = as_vector(self.generator)
        self.group_ = as_group(self.group if self.group is not None else gen.shape[0])
        if gen.shape[0] != self.group_.order:
            raise ValueError(
                f"generator length {gen.shape[0]} != group order {self.group_.order}"
            )
        self.generator_ = gen
        # eigenvalues conj(F) c = |G| * analysis(c)
        self.spectrum_ = self.group_.order * transforms.g_fft(self.group_, gen, "analysis")
        _as_batch(X, self.group_.order)
        self.n_features_in_ = self.group_.order
        return self

    def transform(self, X):
        check_is_fitted(self)
        a = _as_batch(X, self.group_.order)
        if self.engine == "naive":
            rows = [circulant.g_naive_convolve(self.group_, self.generator_, row) for row in a]
        else:
            rows = [
                transforms.g_fft(
                    self.group_,
                    self.spectrum_ * transforms.g_fft(self.group_, row, "analysis"),
                    "synthesis",
                )
                for row in a
            ]
        return np.stack(rows)


class WalshHadamardTransform(BaseEstimator, TransformerMixin):
    """Row-wise Walsh-Hadamard transform (the +-1 character matrix of Z_2^m)."""

    def __init__(self):
        pass

    def fit(self, X, y=None):
        a = _as_batch(X)
        if not transforms.is_power_of_two(a.shape[1]):
            raise ValueError(f"row length {a.shape[1]} is not a power of two")
        self.n_features_in_ = a.shape[1]
        return self

    def transform(self, X):
        check_is_fitted(self)
        a = _as_batch(X, self.n_features_in_)
        return np.stack([transforms.walsh_hadamard(row) for row in a])

    def inverse_transform(self, X):
        check_is_fitted(self)
        return self.transform(X) / self.n_features_in_
