"""Step-through conversion sessions: Analog -> Sampled -> Quantized -> Encoded.

A session computes every stage artifact eagerly at creation; stepping only
moves a cursor, so navigation is instant and artifacts stay consistent by
construction. The stage views returned by :func:`stage_payload` are plain
JSON-ready dicts shared by the CLI reports and the HTTP API.
"""

from __future__ import annotations

import enum
import math
import threading
import uuid
from dataclasses import dataclass, field

from .harmonics import DEFAULT_RENDER_POINTS, HarmonicSpec, RenderedCurve, render, window
from .pipeline import (
    CodedStream,
    ConversionMetrics,
    NyquistCheck,
    QuantizedSignal,
    QuantizerConfig,
    SampledSignal,
    default_range,
    encode,
    make_quantizer,
    metrics,
    nyquist_check,
    quantize,
    sample,
)
from .errors import InvalidArgument, UnknownSession


class Stage(enum.IntEnum):
    ANALOG = 0
    SAMPLED = 1
    QUANTIZED = 2
    ENCODED = 3


class Direction(enum.Enum):
    FORWARD = "forward"
    BACK = "back"


@dataclass
class Session:
    """One conversion with all artifacts precomputed; only ``stage`` mutates."""

    id: str
    spec: HarmonicSpec
    n_samples: int
    bits: int
    curve: RenderedCurve
    sampled: SampledSignal
    quantizer: QuantizerConfig
    quantized: QuantizedSignal
    coded: CodedStream
    conversion: ConversionMetrics
    nyquist: NyquistCheck
    stage: Stage = Stage.ANALOG
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)


def create_session(
    spec: HarmonicSpec,
    n_samples: int,
    bits: int,
    quant_range: tuple[float, float] | None = None,
    render_points: int = DEFAULT_RENDER_POINTS,
) -> Session:
    """Run the full pipeline once and park the session at the Analog stage.

    The quantizer spans the analytic peak bound of the signal unless an
    explicit range is given (a narrower range demonstrates clipping).
    """
    curve = render(spec, render_points)
    sampled = sample(spec, n_samples)
    lo, hi = quant_range if quant_range is not None else default_range(spec)
    quantizer = make_quantizer(bits, lo, hi)
    quantized = quantize(sampled, quantizer)
    coded = encode(quantized, quantizer, sampled.sample_rate)
    return Session(
        id=uuid.uuid4().hex,
        spec=spec,
        n_samples=int(n_samples),
        bits=int(bits),
        curve=curve,
        sampled=sampled,
        quantizer=quantizer,
        quantized=quantized,
        coded=coded,
        conversion=metrics(sampled, quantized, coded),
        nyquist=nyquist_check(spec, sampled.sample_rate),
    )


def step(session: Session, direction: Direction | str) -> Session:
    """Move the stage cursor one stage forward or back, clamped at the ends."""
    direction = Direction(direction)
    delta = 1 if direction is Direction.FORWARD else -1
    with session._lock:
        session.stage = Stage(min(max(int(session.stage) + delta, Stage.ANALOG), Stage.ENCODED))
    return session


def reset(session: Session) -> Session:
    """Return the cursor to the Analog stage; inputs and artifacts stay put."""
    with session._lock:
        session.stage = Stage.ANALOG
    return session


def _floats(values) -> list[float]:
    return [float(v) for v in values]


def spec_payload(spec: HarmonicSpec) -> dict:
    """JSON-ready echo of a harmonic spec (used by reports and /presets)."""
    return {
        "a": list(spec.a),
        "b": list(spec.b),
        "f1_mantissa": spec.f1_mantissa,
        "f1_exponent": spec.f1_exponent,
        "f1_hz": spec.f1,
        "dc": spec.u_dc,
        "periods": spec.periods,
    }


def _metrics_payload(m: ConversionMetrics) -> dict:
    exact = math.isinf(m.sqnr_db) and m.sqnr_db > 0
    return {
        "max_abs_error": m.max_abs_error,
        "sqnr_db": None if exact else m.sqnr_db,
        "exact": exact,
        "bit_rate_bps": m.bit_rate_bps,
        "payload_bytes_per_second": m.payload_bytes_per_second,
    }


def stage_payload(session: Session, stage: Stage | int) -> dict:
    """JSON-ready view of one stage's artifacts."""
    try:
        stage = Stage(stage)
    except ValueError:
        raise InvalidArgument(
            f"stage must be in {int(Stage.ANALOG)}..{int(Stage.ENCODED)}", field="stage"
        ) from None
    spec = session.spec
    if stage is Stage.ANALOG:
        return {
            "stage": int(stage),
            "name": "analog",
            "window_s": window(spec),
            "f1_hz": spec.f1,
            "periods": spec.periods,
            "u_dc": spec.u_dc,
            "curve": {"t": _floats(session.curve.t), "v": _floats(session.curve.v)},
        }
    if stage is Stage.SAMPLED:
        s = session.sampled
        return {
            "stage": int(stage),
            "name": "sampled",
            "sample_count": s.sample_count,
            "period_s": s.period_t,
            "sample_rate_hz": s.sample_rate,
            "nyquist_limit_hz": session.nyquist.limit_hz,
            "nyquist_satisfied": session.nyquist.satisfied,
            "curve": {"t": _floats(session.curve.t), "v": _floats(session.curve.v)},
            "samples": {"t": _floats(s.instants), "x": _floats(s.values)},
        }
    if stage is Stage.QUANTIZED:
        q, qs = session.quantizer, session.quantized
        return {
            "stage": int(stage),
            "name": "quantized",
            "bits": q.bits,
            "level_count": q.level_count,
            "step": q.step,
            "range_lo": q.range_lo,
            "range_hi": q.range_hi,
            "grid": _floats(q.level_values()),
            "samples": {"t": _floats(session.sampled.instants), "x": _floats(session.sampled.values)},
            "levels": [int(k) for k in qs.levels],
            "y": _floats(qs.values),
            "errors": _floats(qs.errors),
            "clipped": [bool(c) for c in qs.clipped],
        }
    cs = session.coded
    return {
        "stage": int(stage),
        "name": "encoded",
        "bits_per_word": cs.bits_per_word,
        "codewords": list(cs.codewords),
        "bit_rate_bps": cs.bit_rate,
        "metrics": _metrics_payload(session.conversion),
    }


class SessionRegistry:
    """In-memory session store safe for concurrent create/get/step."""

    def __init__(self):
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def create(self, *args, **kwargs) -> Session:
        session = create_session(*args, **kwargs)
        with self._lock:
            self._sessions[session.id] = session
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            try:
                return self._sessions[session_id]
            except KeyError:
                raise UnknownSession(f"no session {session_id!r}") from None

    def __len__(self) -> int:
        with self._lock:
            return len(self._sessions)
