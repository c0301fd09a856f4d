"""pcmlab: a step-through workbench for PCM analog-to-digital conversion.

Builds a periodic signal from its first six harmonics, samples it, quantizes
it uniformly, codes it into fixed-width binary words, and also offers DPCM
and delta-modulation codecs plus band-limited reconstruction. Exposed as a
library, a CLI (``pcmlab``) and a small HTTP session API for the web UI.
"""

from .harmonics import HarmonicSpec, RenderedCurve, evaluate, preset, render, window
from .pipeline import (
    CodedStream,
    ConversionMetrics,
    QuantizedSignal,
    QuantizerConfig,
    SampledSignal,
    encode,
    make_quantizer,
    metrics,
    nyquist_check,
    quantize,
    reconstruct,
    sample,
)
from .diffcodecs import DeltaStream, DpcmStream, delta_decode, delta_encode, dpcm_decode, dpcm_encode
from .session import Session, Stage, create_session, reset, stage_payload, step

__version__ = "0.1.0"

__all__ = [
    "HarmonicSpec",
    "RenderedCurve",
    "evaluate",
    "preset",
    "render",
    "window",
    "SampledSignal",
    "QuantizerConfig",
    "QuantizedSignal",
    "CodedStream",
    "ConversionMetrics",
    "sample",
    "nyquist_check",
    "make_quantizer",
    "quantize",
    "encode",
    "metrics",
    "reconstruct",
    "DpcmStream",
    "DeltaStream",
    "dpcm_encode",
    "dpcm_decode",
    "delta_encode",
    "delta_decode",
    "Session",
    "Stage",
    "create_session",
    "step",
    "reset",
    "stage_payload",
    "__version__",
]
