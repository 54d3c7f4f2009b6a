"""The sklearn-style wrappers: fitted state, pipelines, agreement with the core."""

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import Pipeline

from abelianfft import fourier, transforms
from abelianfft.circulant import g_naive_convolve
from abelianfft.estimators import (
    CirculantConvolution,
    GroupFourierTransform,
    WalshHadamardTransform,
)
from abelianfft.groups import FiniteAbelianGroup


def batch(rng, rows, n):
    return rng.standard_normal((rows, n)) + 1j * rng.standard_normal((rows, n))


class TestGroupFourierTransform:
    def test_fit_resolves_group(self, rng):
        est = GroupFourierTransform(group="Z3xZ2")
        est.fit(batch(rng, 3, 6))
        assert est.group_ == FiniteAbelianGroup((3, 2))
        assert est.n_features_in_ == 6

    def test_transform_matches_core(self, rng):
        X = batch(rng, 4, 12)
        got = GroupFourierTransform(group=12).fit(X).transform(X)
        for i in range(4):
            want = transforms.g_fft(12, X[i], "analysis")
            assert np.max(np.abs(got[i] - want)) == 0.0

    def test_engines_agree(self, rng):
        X = batch(rng, 3, 6)
        fast = GroupFourierTransform(group=(3, 2), engine="fast").fit_transform(X)
        naive = GroupFourierTransform(group=(3, 2), engine="naive").fit_transform(X)
        assert np.max(np.abs(fast - naive)) < 1e-10

    def test_inverse_transform_roundtrips(self, rng):
        X = batch(rng, 5, 8)
        est = GroupFourierTransform(group=8, direction="analysis").fit(X)
        back = est.inverse_transform(est.transform(X))
        assert np.max(np.abs(back - X)) < 1e-10

    def test_synthesis_direction(self, rng):
        X = batch(rng, 2, 4)
        est = GroupFourierTransform(group=4, direction="synthesis").fit(X)
        want = np.stack([fourier.apply_F(4, row) for row in X])
        assert np.max(np.abs(est.transform(X) - want)) < 1e-12

    def test_single_vector_becomes_one_row(self, rng):
        x = rng.standard_normal(4)
        est = GroupFourierTransform(group=4).fit(x)
        assert est.transform(x).shape == (1, 4)

    def test_unfitted_raises(self, rng):
        with pytest.raises(NotFittedError):
            GroupFourierTransform(group=4).transform(batch(rng, 1, 4))

    def test_wrong_width_raises(self, rng):
        est = GroupFourierTransform(group=4).fit(batch(rng, 2, 4))
        with pytest.raises(ValueError):
            est.transform(batch(rng, 2, 5))

    def test_bad_params_fail_at_fit(self, rng):
        with pytest.raises(ValueError):
            GroupFourierTransform(group=4, direction="sideways").fit(batch(rng, 1, 4))
        with pytest.raises(ValueError):
            GroupFourierTransform(group=4, engine="gpu").fit(batch(rng, 1, 4))

    def test_clone_and_get_params(self):
        est = GroupFourierTransform(group="Z2^3", direction="synthesis", engine="naive")
        params = est.get_params()
        assert params == {"group": "Z2^3", "direction": "synthesis", "engine": "naive"}
        twin = clone(est)
        assert twin.get_params() == params

    def test_in_a_pipeline(self, rng):
        X = batch(rng, 3, 8)
        pipe = Pipeline(
            [
                ("analyze", GroupFourierTransform(group=8, direction="analysis")),
                ("synthesize", GroupFourierTransform(group=8, direction="synthesis")),
            ]
        )
        out = pipe.fit_transform(X)
        assert np.max(np.abs(out - X)) < 1e-10


class TestCirculantConvolution:
    def test_matches_naive_convolution(self, rng):
        gen = rng.standard_normal(6)
        X = batch(rng, 4, 6)
        est = CirculantConvolution(generator=gen, group=(3, 2)).fit(X)
        got = est.transform(X)
        for i in range(4):
            want = g_naive_convolve((3, 2), gen, X[i])
            assert np.max(np.abs(got[i] - want)) < 1e-10

    def test_group_defaults_to_cyclic(self, rng):
        est = CirculantConvolution(generator=[1.0, 2.0, 3.0, 4.0]).fit(batch(rng, 1, 4))
        assert est.group_.factors == (4,)
        lam = fourier.circulant_eigenvalues([1.0, 2.0, 3.0, 4.0])
        assert np.max(np.abs(est.spectrum_ - lam)) < 1e-12

    def test_engines_agree(self, rng):
        gen = rng.standard_normal(8)
        X = batch(rng, 3, 8)
        fast = CirculantConvolution(generator=gen, engine="fast").fit_transform(X)
        naive = CirculantConvolution(generator=gen, engine="naive").fit_transform(X)
        assert np.max(np.abs(fast - naive)) < 1e-9

    def test_generator_length_must_match_group(self, rng):
        with pytest.raises(ValueError):
            CirculantConvolution(generator=[1.0, 2.0], group=(3, 2)).fit(batch(rng, 1, 6))

    def test_fitted_attributes(self, rng):
        est = CirculantConvolution(generator=[1.0, 0.0]).fit(batch(rng, 1, 2))
        assert est.n_features_in_ == 2
        assert est.generator_.tolist() == [1.0, 0.0]


class TestWalshHadamardTransform:
    def test_matches_core(self, rng):
        X = rng.integers(-10, 10, size=(5, 16)).astype(float)
        est = WalshHadamardTransform().fit(X)
        got = est.transform(X)
        for i in range(5):
            assert np.array_equal(got[i], transforms.walsh_hadamard(X[i].astype(complex)))

    def test_inverse(self, rng):
        X = batch(rng, 3, 8)
        est = WalshHadamardTransform().fit(X)
        back = est.inverse_transform(est.transform(X))
        assert np.max(np.abs(back - X)) < 1e-12

    def test_needs_power_of_two(self, rng):
        with pytest.raises(ValueError):
            WalshHadamardTransform().fit(batch(rng, 2, 6))

    def test_clone(self):
        clone(WalshHadamardTransform())
