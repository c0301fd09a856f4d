"""The three PCM stages: uniform sampling, uniform quantization, binary coding.

Also provides conversion metrics (peak error, SQNR, bit rate, payload size)
and ideal band-limited reconstruction from the samples via a truncated sinc
sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import InternalInconsistency, InvalidArgument, InvalidRange
from .harmonics import HarmonicSpec, evaluate, window

MAX_BITS = 16

#: Relative spacing tolerance accepted when validating uniform instants.
_SPACING_RTOL = 1e-12


@dataclass(frozen=True)
class SampledSignal:
    """Uniform samples x[n] taken at t_n = n*T, n = 0..N-1."""

    sample_count: int
    period_t: float
    instants: np.ndarray = field(repr=False)
    values: np.ndarray = field(repr=False)
    sample_rate: float = 0.0

    def __post_init__(self):
        if self.sample_count < 2:
            raise InvalidArgument("need at least 2 samples", field="samples")
        if not self.period_t > 0:
            raise InvalidArgument("sampling period must be > 0", field="period_t")
        if len(self.instants) != self.sample_count or len(self.values) != self.sample_count:
            raise InvalidArgument("instants/values length must equal sample_count")
        dt = np.diff(self.instants)
        # t_n = n*T carries rounding of order ulp(n*T), so judge spacing
        # relative to the instant magnitude, not only the period.
        tol = _SPACING_RTOL * np.maximum(self.period_t, np.abs(self.instants[1:]))
        if not np.all(dt > 0) or np.any(np.abs(dt - self.period_t) > tol):
            raise InvalidArgument("instants must be uniformly spaced and increasing")
        if self.sample_rate == 0.0:
            object.__setattr__(self, "sample_rate", 1.0 / self.period_t)

    @classmethod
    def from_values(cls, values, period_t: float) -> "SampledSignal":
        """Wrap an arbitrary value sequence as uniform samples with period ``period_t``."""
        v = np.asarray(values, dtype=float)
        t = np.arange(len(v)) * float(period_t)
        return cls(sample_count=len(v), period_t=float(period_t), instants=t, values=v)


@dataclass(frozen=True)
class QuantizerConfig:
    """Uniform quantizer over [range_lo, range_hi] with 2**bits midpoint levels.

    Interval k (1-based) is the half-open cell (lo + (k-1)*step, lo + k*step];
    the reconstruction level of interval k is its midpoint. A value exactly at
    the bottom edge, which the half-open rule leaves unassigned, is given
    level 1.
    """

    bits: int
    range_lo: float
    range_hi: float
    level_count: int = 0
    step: float = 0.0

    def __post_init__(self):
        if not (1 <= self.bits <= MAX_BITS):
            raise InvalidArgument(f"bits must be in 1..{MAX_BITS}", field="bits")
        if not self.range_lo < self.range_hi:
            raise InvalidRange("quantizer range must satisfy lo < hi", field="range")
        levels = 2 ** self.bits
        object.__setattr__(self, "level_count", levels)
        object.__setattr__(self, "step", (self.range_hi - self.range_lo) / levels)

    def edges(self) -> np.ndarray:
        """The L+1 interval boundaries lo + k*step, k = 0..L."""
        return self.range_lo + np.arange(self.level_count + 1) * self.step

    def level_value(self, level) -> float | np.ndarray:
        """Reconstruction value (interval midpoint) of a 1-based level index."""
        v = self.range_lo + (np.asarray(level, dtype=float) - 0.5) * self.step
        return float(v) if v.ndim == 0 else v

    def level_values(self) -> np.ndarray:
        """All L reconstruction values, level 1 first."""
        return self.level_value(np.arange(1, self.level_count + 1))


@dataclass(frozen=True)
class QuantizedSignal:
    """Per-sample level index (1..L), reconstruction value, error and clip flag."""

    levels: np.ndarray = field(repr=False)
    values: np.ndarray = field(repr=False)
    errors: np.ndarray = field(repr=False)
    clipped: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class CodedStream:
    """Fixed-width binary codewords, MSB first, plus the resulting bit rate."""

    bits_per_word: int
    codewords: tuple[str, ...]
    bit_rate: float


@dataclass(frozen=True)
class ConversionMetrics:
    max_abs_error: float
    sqnr_db: float  # math.inf marks an exactly reproduced signal (zero error energy)
    bit_rate_bps: float
    payload_bytes_per_second: float


class NyquistCheck(NamedTuple):
    satisfied: bool
    limit_hz: float


def sample(spec: HarmonicSpec, n_samples: int) -> SampledSignal:
    """Take ``n_samples`` uniform samples over the display window.

    Left-aligned: t_n = n*T with T = window/n_samples, so the window endpoint
    itself is not sampled and the sample rate is exactly n_samples/window.
    """
    if n_samples < 2:
        raise InvalidArgument("samples must be at least 2", field="samples")
    n_samples = int(n_samples)
    t_window = window(spec)
    period = t_window / n_samples
    instants = np.arange(n_samples) * period
    return SampledSignal(
        sample_count=n_samples,
        period_t=period,
        instants=instants,
        values=evaluate(spec, instants),
        sample_rate=n_samples / t_window,
    )


def nyquist_check(spec: HarmonicSpec, sample_rate: float) -> NyquistCheck:
    """Compare a sample rate against twice the highest nonzero harmonic frequency."""
    if not sample_rate > 0:
        raise InvalidArgument("sample rate must be > 0", field="sample_rate")
    limit = 2.0 * spec.highest_harmonic * spec.f1
    return NyquistCheck(satisfied=sample_rate >= limit, limit_hz=limit)


def make_quantizer(bits: int, lo: float, hi: float) -> QuantizerConfig:
    """Build a uniform midpoint quantizer with 2**bits levels over [lo, hi]."""
    return QuantizerConfig(bits=int(bits), range_lo=float(lo), range_hi=float(hi))


def default_range(spec: HarmonicSpec) -> tuple[float, float]:
    """Symmetric quantizer range covering the analytic peak bound of ``spec``.

    An all-zero signal has peak bound 0; fall back to [-1, 1] so the quantizer
    stays well formed.
    """
    p = spec.peak_bound
    if p == 0.0:
        p = 1.0
    return -p, p


def quantize(s: SampledSignal, q: QuantizerConfig) -> QuantizedSignal:
    """Map each sample into its quantization interval and midpoint level.

    Out-of-range inputs saturate to the extreme levels and are flagged as
    clipped instead of raising, so under-provisioned bit depths are visible
    rather than fatal.
    """
    x = s.values
    edges = q.edges()
    # side='left' puts a value equal to an interior edge into the interval
    # that closes at that edge, matching the half-open cell rule.
    idx = np.searchsorted(edges, x, side="left")
    levels = np.clip(idx, 1, q.level_count).astype(int)
    values = q.level_value(levels)
    return QuantizedSignal(
        levels=levels,
        values=values,
        errors=x - values,
        clipped=(x < q.range_lo) | (x > q.range_hi),
    )


def encode(qs: QuantizedSignal, q: QuantizerConfig, sample_rate: float) -> CodedStream:
    """Emit one unsigned (level-1) codeword per sample, MSB first, b bits wide."""
    b = q.bits
    if np.any(qs.levels < 1) or np.any(qs.levels > q.level_count):
        raise InternalInconsistency("quantized level outside 1..L")
    words = tuple(format(int(k) - 1, f"0{b}b") for k in qs.levels)
    return CodedStream(bits_per_word=b, codewords=words, bit_rate=sample_rate * b)


def decode_words(cs: CodedStream) -> np.ndarray:
    """Recover the 1-based level indices from a coded stream."""
    return np.array([int(w, 2) + 1 for w in cs.codewords], dtype=int)


def metrics(s: SampledSignal, qs: QuantizedSignal, cs: CodedStream) -> ConversionMetrics:
    """Summarize a conversion: peak error, SQNR in dB, rate and payload size."""
    if not (len(s.values) == len(qs.errors) == len(cs.codewords)):
        raise InvalidArgument("metrics inputs must describe the same samples")
    err_energy = float(np.sum(qs.errors**2))
    sig_energy = float(np.sum(s.values**2))
    if err_energy == 0.0:
        sqnr_db = math.inf  # quantization was exact on this input
    else:
        sqnr_db = 10.0 * math.log10(sig_energy / err_energy) if sig_energy > 0 else -math.inf
    return ConversionMetrics(
        max_abs_error=float(np.max(np.abs(qs.errors))),
        sqnr_db=sqnr_db,
        bit_rate_bps=cs.bit_rate,
        payload_bytes_per_second=cs.bit_rate / 8.0,
    )


def reconstruct(s: SampledSignal, at) -> np.ndarray:
    """Band-limited reconstruction v(t) = sum_n x[n] * sinc((t - n*T)/T).

    The sinc sum is truncated to the available samples and not windowed, so
    accuracy is best away from the window edges.
    """
    t = np.atleast_1d(np.asarray(at, dtype=float))
    # np.sinc is the normalized sinc sin(pi u)/(pi u): 1 at 0, 0 at integers.
    kernel = np.sinc((t[:, None] - s.instants[None, :]) / s.period_t)
    return kernel @ s.values
