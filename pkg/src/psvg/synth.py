"""Synthetic series with known structure, used as pipeline oracles.

Fractional Gaussian noise is synthesised by circulant embedding of its
autocovariance (Davies & Harte 1987): the covariance is embedded in a
2n-circulant whose FFT gives the eigenvalues, and one FFT of scaled complex
Gaussians yields a sample with exactly the target covariance. If the
embedding has materially negative eigenvalues (only known for pathological
parameter/length combinations, cf. Wood & Chan 1994) a dense Cholesky
factorisation is used instead at small lengths. All generators are pure
functions of their configuration, so identical seeds give identical series.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import EmbeddingNotPositiveDefiniteError
from .series_io import TimeSeries

# Relative tolerance for classifying embedding eigenvalues as negative
# noise vs a genuinely indefinite embedding.
_EIG_REL_TOL = 1e-8
# Above this length the dense Cholesky fallback is refused (O(n^2) memory).
_CHOLESKY_MAX_LENGTH = 4096


@dataclass(frozen=True)
class FbmConfig:
    """Parameters for fractional noise/motion generation."""

    hurst: float
    length: int
    seed: int

    def __post_init__(self):
        if not 0.0 < self.hurst < 1.0:
            raise ValueError(f"hurst must lie in (0, 1), got {self.hurst}")
        if self.length < 2:
            raise ValueError(f"length must be >= 2, got {self.length}")


def _fgn_autocovariance(max_lag: int, hurst: float) -> np.ndarray:
    """gamma(tau) = 0.5 (|tau+1|^2H - 2|tau|^2H + |tau-1|^2H), tau = 0..max_lag."""
    tau = np.arange(max_lag + 1, dtype=np.float64)
    h2 = 2.0 * hurst
    return 0.5 * ((tau + 1.0) ** h2 - 2.0 * tau ** h2 + np.abs(tau - 1.0) ** h2)


def _embedding_eigenvalues(n: int, hurst: float) -> np.ndarray:
    # fold gamma(0..n) into the first row of a 2n circulant; keeping
    # gamma(n) at the fold (rather than zero) is what keeps the embedding
    # positive semidefinite across the whole Hurst range
    gamma = _fgn_autocovariance(n, hurst)
    row = np.concatenate([gamma, gamma[-2:0:-1]])
    lam = np.fft.fft(row).real
    floor = lam.min()
    if floor < -_EIG_REL_TOL * lam.max():
        raise EmbeddingNotPositiveDefiniteError(
            f"hurst={hurst}, length={n}: minimum eigenvalue {floor:.3e}")
    return np.clip(lam, 0.0, None)


def _fgn_circulant(n: int, hurst: float, rng: np.random.Generator) -> np.ndarray:
    lam = _embedding_eigenvalues(n, hurst)
    m = 2 * n
    z = rng.standard_normal(m) + 1j * rng.standard_normal(m)
    return np.fft.fft(np.sqrt(lam / m) * z)[:n].real


def _fgn_cholesky(n: int, hurst: float, rng: np.random.Generator) -> np.ndarray:
    gamma = _fgn_autocovariance(n, hurst)
    idx = np.arange(n)
    cov = gamma[np.abs(idx[:, None] - idx[None, :])]
    chol = np.linalg.cholesky(cov)
    return chol @ rng.standard_normal(n)


def gen_fgn(config: FbmConfig) -> TimeSeries:
    """Stationary fractional Gaussian noise with unit-variance increments.

    Exact-covariance synthesis; deterministic per seed. Hurst 1/2 gives
    white Gaussian noise, above persistence, below anti-persistence.
    """
    rng = np.random.default_rng(config.seed)
    try:
        values = _fgn_circulant(config.length, config.hurst, rng)
    except EmbeddingNotPositiveDefiniteError:
        if config.length > _CHOLESKY_MAX_LENGTH:
            raise
        values = _fgn_cholesky(config.length, config.hurst, rng)
    return TimeSeries.from_values(values)


def gen_fbm(config: FbmConfig) -> TimeSeries:
    """Fractional Brownian motion: cumulative sum of gen_fgn, starting at 0.

    The output has config.length samples: a leading zero followed by the
    partial sums of the first length-1 noise increments, so diff(fbm)
    reproduces the leading samples of the matching gen_fgn stream exactly.
    """
    noise = gen_fgn(config)
    path = np.concatenate([[0.0], np.cumsum(noise.values)])[:config.length]
    return TimeSeries.from_values(path)


def gen_uniform_random(length: int, seed: int) -> TimeSeries:
    """I.i.d. uniform(0, 1) values; the no-structure control series."""
    if length < 2:
        raise ValueError(f"length must be >= 2, got {length}")
    rng = np.random.default_rng(seed)
    return TimeSeries.from_values(rng.uniform(0.0, 1.0, length))


def gen_monotone(length: int) -> TimeSeries:
    """Strictly linear ramp 1..length; its visibility graph is a path."""
    if length < 2:
        raise ValueError(f"length must be >= 2, got {length}")
    return TimeSeries.from_values(np.arange(1.0, length + 1.0))


def gen_constant(length: int, value: float = 4.0) -> TimeSeries:
    """Constant series; equal values block, so the graph is a path."""
    if length < 2:
        raise ValueError(f"length must be >= 2, got {length}")
    return TimeSeries.from_values(np.full(length, float(value)))
