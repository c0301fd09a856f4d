"""Analog source signals built from the first six harmonics of a fundamental.

A signal is ``u_dc + sum_{i=1..6} a_i*sin(2*pi*i*f1*t) + b_i*cos(2*pi*i*f1*t)``
with the fundamental frequency entered as mantissa times a power of ten, the
way lab instruments take it; it collapses to one Hz value immediately.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidArgument, UnknownPreset

N_HARMONICS = 6

#: Dense plot resolution used when no explicit point count is requested.
DEFAULT_RENDER_POINTS = 512


@dataclass(frozen=True)
class HarmonicSpec:
    """Six sine and six cosine amplitudes plus DC, fundamental and window size."""

    a: tuple[float, ...] = (0.0,) * N_HARMONICS
    b: tuple[float, ...] = (0.0,) * N_HARMONICS
    f1_mantissa: float = 1.0
    f1_exponent: int = 0
    u_dc: float = 0.0
    periods: int = 1

    def __post_init__(self):
        a = tuple(float(x) for x in self.a)
        b = tuple(float(x) for x in self.b)
        if len(a) != N_HARMONICS or len(b) != N_HARMONICS:
            raise InvalidArgument(
                f"expected {N_HARMONICS} sine and {N_HARMONICS} cosine amplitudes",
                field="a" if len(a) != N_HARMONICS else "b",
            )
        if not all(math.isfinite(x) for x in a + b + (self.u_dc,)):
            raise InvalidArgument("amplitudes must be finite", field="a")
        if not (math.isfinite(self.f1_mantissa) and self.f1_mantissa > 0):
            raise InvalidArgument("f1 mantissa must be > 0", field="f1_mantissa")
        if int(self.f1_exponent) != self.f1_exponent:
            raise InvalidArgument("f1 exponent must be an integer", field="f1_exponent")
        try:
            f1 = self.f1_mantissa * 10.0 ** int(self.f1_exponent)
        except OverflowError:
            f1 = math.inf
        if not (math.isfinite(f1) and f1 > 0):
            raise InvalidArgument("fundamental frequency must be finite and > 0", field="f1_exponent")
        if int(self.periods) != self.periods or self.periods < 1:
            raise InvalidArgument("periods must be an integer >= 1", field="periods")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "u_dc", float(self.u_dc))
        object.__setattr__(self, "f1_mantissa", float(self.f1_mantissa))
        object.__setattr__(self, "f1_exponent", int(self.f1_exponent))
        object.__setattr__(self, "periods", int(self.periods))

    @property
    def f1(self) -> float:
        """Fundamental frequency in Hz."""
        return self.f1_mantissa * 10.0 ** self.f1_exponent

    @property
    def peak_bound(self) -> float:
        """Analytic bound on |signal|: |u_dc| + sum of all amplitude magnitudes."""
        return abs(self.u_dc) + sum(abs(x) for x in self.a) + sum(abs(x) for x in self.b)

    @property
    def highest_harmonic(self) -> int:
        """Index of the highest nonzero harmonic, 0 for a DC-only signal."""
        for i in range(N_HARMONICS, 0, -1):
            if self.a[i - 1] != 0.0 or self.b[i - 1] != 0.0:
                return i
        return 0


@dataclass(frozen=True)
class RenderedCurve:
    """Dense (t, v) trace of the analog signal over the display window."""

    t: np.ndarray = field(repr=False)
    v: np.ndarray = field(repr=False)

    def __post_init__(self):
        if len(self.t) != len(self.v) or len(self.t) < 2:
            raise InvalidArgument("curve needs equal-length t/v with >= 2 points")
        if not np.all(np.diff(self.t) > 0):
            raise InvalidArgument("curve instants must be strictly increasing")


def evaluate(spec: HarmonicSpec, t):
    """Evaluate the signal at time(s) ``t`` (seconds); scalar in, scalar out."""
    tt = np.asarray(t, dtype=float)
    w = 2.0 * math.pi * spec.f1
    out = np.full_like(tt, spec.u_dc, dtype=float)
    for i in range(1, N_HARMONICS + 1):
        ai, bi = spec.a[i - 1], spec.b[i - 1]
        if ai != 0.0:
            out = out + ai * np.sin(i * w * tt)
        if bi != 0.0:
            out = out + bi * np.cos(i * w * tt)
    return float(out) if tt.ndim == 0 else out


def window(spec: HarmonicSpec) -> float:
    """Duration of the display window in seconds: periods / f1."""
    return spec.periods / spec.f1


def render(spec: HarmonicSpec, points: int = DEFAULT_RENDER_POINTS) -> RenderedCurve:
    """Sample the signal densely on ``points`` uniform instants over [0, window]."""
    if points < 2:
        raise InvalidArgument("render needs at least 2 points", field="points")
    t = np.linspace(0.0, window(spec), int(points))
    return RenderedCurve(t=t, v=evaluate(spec, t))


# Demo signals. Triangle and square use the first-six-harmonic truncation of
# the standard odd-sine series, rescaled so the truncated waveform peaks at
# exactly 1: triangle coefficients (1, -1/9, 1/25)/(259/225) on harmonics
# 1,3,5; square coefficients (1, 1/3, 1/5)/(14/15) (max of the 3-term sum is
# 14/15, attained where all terms align). "one-period" is this project's own
# mixed-harmonic demo signal; the shape is a free choice.
PRESETS: dict[str, HarmonicSpec] = {
    "sinusoid": HarmonicSpec(
        a=(1.0, 0.0, 0.0, 0.0, 0.0, 0.0),
        f1_mantissa=1.0, f1_exponent=3, periods=2,
    ),
    "triangular": HarmonicSpec(
        a=(225.0 / 259.0, 0.0, -25.0 / 259.0, 0.0, 9.0 / 259.0, 0.0),
        f1_mantissa=1.0, f1_exponent=3, periods=2,
    ),
    "rectangular": HarmonicSpec(
        a=(15.0 / 14.0, 0.0, 5.0 / 14.0, 0.0, 3.0 / 14.0, 0.0),
        f1_mantissa=1.0, f1_exponent=3, periods=4,
    ),
    "one-period": HarmonicSpec(
        a=(0.9, 0.45, 0.0, 0.2, 0.0, 0.0),
        b=(0.0, 0.3, 0.25, 0.0, 0.0, 0.1),
        u_dc=0.15,
        f1_mantissa=1.0, f1_exponent=3, periods=1,
    ),
}

PRESET_NAMES = tuple(PRESETS)


def preset(name: str) -> HarmonicSpec:
    """Look up one of the built-in demo signals by name."""
    try:
        return PRESETS[name]
    except KeyError:
        known = ", ".join(PRESET_NAMES)
        raise UnknownPreset(f"unknown preset {name!r} (known: {known})", field="preset") from None
