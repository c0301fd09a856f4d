"""Differential codecs: DPCM over quantized differences and delta modulation.

Both encoders track the signal with the values the decoder will rebuild
(closed loop), so decoding reproduces the encoder-side reconstruction
bit-exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DecodeError, InvalidArgument
from .pipeline import MAX_BITS, QuantizerConfig, SampledSignal, make_quantizer


@dataclass(frozen=True)
class DpcmStream:
    """First sample as a full PCM word, then quantized sample-to-sample differences."""

    first_word: str
    diff_bits: int
    diff_range: float
    diff_codewords: tuple[str, ...]
    reconstruction: np.ndarray = field(repr=False)

    @property
    def payload_bits(self) -> int:
        return len(self.first_word) + sum(len(w) for w in self.diff_codewords)


@dataclass(frozen=True)
class DeltaStream:
    """One up/down bit per sample driving a fixed-step staircase from 0."""

    step: float
    bits: np.ndarray = field(repr=False)
    reconstruction: np.ndarray = field(repr=False)

    @property
    def payload_bits(self) -> int:
        return len(self.bits)

    def bit_rate(self, sample_rate: float) -> float:
        return sample_rate * 1.0


def _checked_word(word: str, width: int) -> int:
    """Parse a binary codeword of exactly ``width`` bits into a 1-based level."""
    if len(word) != width or any(c not in "01" for c in word):
        raise DecodeError(f"malformed {width}-bit codeword {word!r}")
    return int(word, 2) + 1


def dpcm_encode(
    s: SampledSignal, pcm_q: QuantizerConfig, diff_bits: int, diff_range: float
) -> DpcmStream:
    """Encode: PCM-quantize sample 0, then quantize each difference to the
    previous reconstructed value on a symmetric [-diff_range, diff_range]
    midpoint quantizer with 2**diff_bits levels (saturating)."""
    if not (1 <= diff_bits <= MAX_BITS):
        raise InvalidArgument(f"diff bits must be in 1..{MAX_BITS}", field="diff_bits")
    if not diff_range > 0:
        raise InvalidArgument("diff range must be > 0", field="diff_range")
    diff_q = make_quantizer(diff_bits, -diff_range, diff_range)
    pcm_edges = pcm_q.edges()
    diff_edges = diff_q.edges()

    x = s.values
    level0 = int(np.clip(np.searchsorted(pcm_edges, x[0], side="left"), 1, pcm_q.level_count))
    prev = pcm_q.level_value(level0)
    recon = [prev]
    words = []
    for n in range(1, len(x)):
        d = x[n] - prev
        k = int(np.clip(np.searchsorted(diff_edges, d, side="left"), 1, diff_q.level_count))
        words.append(format(k - 1, f"0{diff_bits}b"))
        prev = prev + diff_q.level_value(k)
        recon.append(prev)
    return DpcmStream(
        first_word=format(level0 - 1, f"0{pcm_q.bits}b"),
        diff_bits=diff_bits,
        diff_range=float(diff_range),
        diff_codewords=tuple(words),
        reconstruction=np.array(recon),
    )


def dpcm_decode(stream: DpcmStream, pcm_q: QuantizerConfig) -> np.ndarray:
    """Rebuild the staircase from the codewords; equals the encoder's
    reconstruction exactly because both run the same closed loop."""
    level0 = _checked_word(stream.first_word, pcm_q.bits)
    diff_q = make_quantizer(stream.diff_bits, -stream.diff_range, stream.diff_range)
    prev = pcm_q.level_value(level0)
    out = [prev]
    for word in stream.diff_codewords:
        k = _checked_word(word, stream.diff_bits)
        prev = prev + diff_q.level_value(k)
        out.append(prev)
    return np.array(out)


def delta_encode(s: SampledSignal, step: float) -> DeltaStream:
    """One bit per sample: up when x[n] >= tracker (ties go up), else down.

    The tracker starts at 0 and always moves by exactly ``step``.
    """
    if not step > 0:
        raise InvalidArgument("delta step must be > 0", field="step")
    step = float(step)
    prev = 0.0
    bits = np.empty(len(s.values), dtype=bool)
    recon = np.empty(len(s.values))
    for n, xn in enumerate(s.values):
        up = xn >= prev
        prev = prev + step if up else prev - step
        bits[n] = up
        recon[n] = prev
    return DeltaStream(step=step, bits=bits, reconstruction=recon)


def delta_decode(stream: DeltaStream) -> np.ndarray:
    """Replay the staircase from the bits; bit-exact match of the encoder's."""
    prev = 0.0
    out = np.empty(len(stream.bits))
    for n, up in enumerate(stream.bits):
        prev = prev + stream.step if up else prev - stream.step
        out[n] = prev
    return out
