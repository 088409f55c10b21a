"""Synthetic generator tests: determinism and distributional oracles."""

import numpy as np
import pytest

import psvg.synth as synth
from psvg.exceptions import EmbeddingNotPositiveDefiniteError
from psvg.synth import (
    FbmConfig,
    gen_constant,
    gen_fbm,
    gen_fgn,
    gen_monotone,
    gen_uniform_random,
)
from psvg.visibility import build_graph_fast, degree_sequence


def lag1_autocorr(values):
    return float(np.corrcoef(values[:-1], values[1:])[0, 1])


class TestFbmConfig:
    @pytest.mark.parametrize("hurst", [0.0, 1.0, 1.2, -0.1])
    def test_hurst_out_of_range(self, hurst):
        with pytest.raises(ValueError):
            FbmConfig(hurst=hurst, length=64, seed=0)

    def test_length_too_small(self):
        with pytest.raises(ValueError):
            FbmConfig(hurst=0.5, length=1, seed=0)


class TestGenFgn:
    def test_memoryless_at_half(self):
        g = gen_fgn(FbmConfig(hurst=0.5, length=4096, seed=123))
        assert abs(lag1_autocorr(g.values)) <= 3.0 / np.sqrt(4096)

    def test_persistence_above_half(self):
        g = gen_fgn(FbmConfig(hurst=0.8, length=4096, seed=123))
        assert lag1_autocorr(g.values) > 0.3

    def test_antipersistence_below_half(self):
        g = gen_fgn(FbmConfig(hurst=0.2, length=4096, seed=123))
        assert lag1_autocorr(g.values) < -0.2

    @pytest.mark.parametrize("hurst", [0.2, 0.5, 0.8])
    def test_unit_variance(self, hurst):
        g = gen_fgn(FbmConfig(hurst=hurst, length=4096, seed=42))
        assert abs(float(np.var(g.values)) - 1.0) <= 5.0 / np.sqrt(4096)

    def test_deterministic(self):
        cfg = FbmConfig(hurst=0.7, length=512, seed=99)
        assert np.array_equal(gen_fgn(cfg).values, gen_fgn(cfg).values)

    def test_seeds_differ(self):
        a = gen_fgn(FbmConfig(hurst=0.7, length=512, seed=1)).values
        b = gen_fgn(FbmConfig(hurst=0.7, length=512, seed=2)).values
        assert not np.array_equal(a, b)

    def test_embedding_psd_across_parameter_grid(self):
        # includes the tiny-n high-H corner where zero-padded embeddings
        # go indefinite
        for hurst in (0.05, 0.3, 0.5, 0.7, 0.95, 0.99):
            for n in (2, 3, 16, 257, 1024):
                lam = synth._embedding_eigenvalues(n, hurst)
                assert lam.min() >= 0.0

    def test_cholesky_fallback(self, monkeypatch):
        def boom(n, hurst):
            raise EmbeddingNotPositiveDefiniteError("forced")

        monkeypatch.setattr(synth, "_embedding_eigenvalues", boom)
        cfg = FbmConfig(hurst=0.8, length=256, seed=5)
        g = gen_fgn(cfg)
        assert len(g) == 256
        assert np.array_equal(g.values, gen_fgn(cfg).values)
        assert lag1_autocorr(g.values) > 0.2

    def test_cholesky_refused_at_large_length(self, monkeypatch):
        def boom(n, hurst):
            raise EmbeddingNotPositiveDefiniteError("forced")

        monkeypatch.setattr(synth, "_embedding_eigenvalues", boom)
        with pytest.raises(EmbeddingNotPositiveDefiniteError):
            gen_fgn(FbmConfig(hurst=0.8, length=8192, seed=5))


class TestGenFbm:
    def test_starts_at_zero_and_sums_noise(self):
        cfg = FbmConfig(hurst=0.6, length=1000, seed=7)
        path = gen_fbm(cfg)
        noise = gen_fgn(cfg)
        assert path.values[0] == 0.0
        assert len(path) == 1000
        assert np.array_equal(path.values[1:], np.cumsum(noise.values)[:999])

    def test_deterministic(self):
        cfg = FbmConfig(hurst=0.4, length=256, seed=21)
        assert np.array_equal(gen_fbm(cfg).values, gen_fbm(cfg).values)

    @pytest.mark.parametrize("hurst", [0.3, 0.5, 0.7])
    def test_self_similar_growth(self, hurst):
        # mean-square displacement at dyadic lags grows like t^(2H);
        # ensemble of 10 seeded paths, log-log regression
        paths = np.stack([
            gen_fbm(FbmConfig(hurst=hurst, length=4096, seed=s)).values
            for s in range(10)])
        ts = 2 ** np.arange(0, 12)
        msq = (paths[:, ts] ** 2).mean(axis=0)
        x = np.log(ts.astype(float))
        design = np.vstack([x, np.ones_like(x)]).T
        slope, _ = np.linalg.lstsq(design, np.log(msq), rcond=None)[0]
        assert abs(slope - 2.0 * hurst) <= 0.15


class TestGenUniformRandom:
    def test_range_and_length(self):
        s = gen_uniform_random(5, 3)
        assert len(s) == 5
        assert np.all((s.values > 0.0) & (s.values < 1.0))

    def test_deterministic(self):
        assert np.array_equal(gen_uniform_random(64, 9).values,
                              gen_uniform_random(64, 9).values)

    def test_seeds_differ(self):
        assert not np.array_equal(gen_uniform_random(64, 1).values,
                                  gen_uniform_random(64, 2).values)

    def test_length_too_small(self):
        with pytest.raises(ValueError):
            gen_uniform_random(1, 0)


class TestGenMonotone:
    def test_values(self):
        assert list(gen_monotone(4).values) == [1.0, 2.0, 3.0, 4.0]

    def test_boundary_length(self):
        assert list(gen_monotone(2).values) == [1.0, 2.0]

    def test_graph_is_path(self):
        g = build_graph_fast(gen_monotone(30))
        assert degree_sequence(g) == [1] + [2] * 28 + [1]

    def test_length_too_small(self):
        with pytest.raises(ValueError):
            gen_monotone(1)


class TestGenConstant:
    def test_graph_is_path(self):
        g = build_graph_fast(gen_constant(4))
        assert degree_sequence(g) == [1, 2, 2, 1]

    def test_length_too_small(self):
        with pytest.raises(ValueError):
            gen_constant(1)
