"""Turning user-facing requests (CLI flags, API bodies) into harmonic specs.

Kept in one place so the CLI and the HTTP API validate identically and
report the same reason codes for the same bad input.
"""

from __future__ import annotations

from typing import Sequence

from .errors import InvalidArgument
from .harmonics import N_HARMONICS, HarmonicSpec, preset as lookup_preset

# Defaults applied to unspecified fields of a custom (non-preset) signal:
# 1 kHz fundamental shown over two periods, no DC.
DEFAULT_F1_MANTISSA = 1.0
DEFAULT_F1_EXPONENT = 3
DEFAULT_DC = 0.0
DEFAULT_PERIODS = 2


def resolve_spec(
    preset: str | None = None,
    a: Sequence[float] | None = None,
    b: Sequence[float] | None = None,
    f1_mantissa: float | None = None,
    f1_exponent: int | None = None,
    dc: float | None = None,
    periods: int | None = None,
) -> HarmonicSpec:
    """Build the signal from either a preset name or explicit coefficients.

    The two input styles are mutually exclusive, and at least one of them
    must be present.
    """
    custom = [a, b, f1_mantissa, f1_exponent, dc, periods]
    if preset is not None:
        if any(v is not None for v in custom):
            raise InvalidArgument(
                "preset and explicit coefficients are mutually exclusive", field="preset"
            )
        return lookup_preset(preset)
    if all(v is None for v in custom):
        raise InvalidArgument("specify a preset or signal coefficients", field="preset")

    def six(values, name):
        if values is None:
            return (0.0,) * N_HARMONICS
        values = tuple(float(v) for v in values)
        if len(values) != N_HARMONICS:
            raise InvalidArgument(f"{name} needs exactly {N_HARMONICS} values", field=name)
        return values

    return HarmonicSpec(
        a=six(a, "a"),
        b=six(b, "b"),
        f1_mantissa=DEFAULT_F1_MANTISSA if f1_mantissa is None else float(f1_mantissa),
        f1_exponent=DEFAULT_F1_EXPONENT if f1_exponent is None else int(f1_exponent),
        u_dc=DEFAULT_DC if dc is None else float(dc),
        periods=DEFAULT_PERIODS if periods is None else periods,
    )
