"""Acceptance suite: one test per release criterion, one printed line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the PASS/FAIL line
per criterion alongside the pytest verdicts.
"""

import json
import math
import subprocess
import sys
import time

import numpy as np
from fastapi.testclient import TestClient

from pcmlab.api import create_app
from pcmlab.diffcodecs import delta_decode, delta_encode, dpcm_decode, dpcm_encode
from pcmlab.harmonics import HarmonicSpec, evaluate, preset, window
from pcmlab.pipeline import (
    SampledSignal,
    default_range,
    encode,
    make_quantizer,
    metrics,
    nyquist_check,
    quantize,
    reconstruct,
    sample,
)
from pcmlab.session import Stage, create_session, reset, step


def report(name: str, ok: bool, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[ACCEPTANCE] {name}: {status}{suffix}")
    assert ok, f"{name}{suffix}"


def random_spec(rng) -> HarmonicSpec:
    return HarmonicSpec(
        a=tuple(rng.uniform(-2, 2, 6)),
        b=tuple(rng.uniform(-2, 2, 6)),
        f1_mantissa=float(rng.uniform(0.5, 9.5)),
        f1_exponent=int(rng.integers(-2, 4)),
        u_dc=float(rng.uniform(-1, 1)),
        periods=int(rng.integers(1, 6)),
    )


def test_rate_formula_64kbps():
    q = make_quantizer(8, -1, 1)
    s = sample(preset("sinusoid"), 4)
    qs = quantize(s, q)
    encode(qs, q, 8000.0)  # warm-up
    t0 = time.perf_counter()
    cs = encode(qs, q, 8000.0)
    elapsed = time.perf_counter() - t0
    ok = q.level_count == 256 and cs.bit_rate == 64000 and elapsed < 1e-3
    report("rate formula 8000 Hz x 256 levels -> 64000 bps", ok,
           f"bit_rate={cs.bit_rate}, {elapsed * 1e6:.0f} us")


def test_storage_arithmetic():
    cases = [(8000.0, 8, 8000.0), (16000.0, 16, 32000.0), (44000.0, 16, 88000.0)]
    results = []
    for rate, bits, expected in cases:
        q = make_quantizer(bits, -1, 1)
        s = sample(preset("sinusoid"), 8)
        qs = quantize(s, q)
        m = metrics(s, qs, encode(qs, q, rate))
        results.append(m.payload_bytes_per_second == expected)
    report("storage arithmetic 8000/32000/88000 bytes per second", all(results),
           ", ".join(f"{int(c[0])}Hz/{c[1]}b" for c in cases))


def test_error_bound_randomized():
    rng = np.random.default_rng(2024)
    t0 = time.perf_counter()
    checked = 0
    worst = 0.0
    ok = True
    while checked < 100_000:
        spec = random_spec(rng)
        bits = int(rng.integers(1, 17))
        lo, hi = default_range(spec)
        # half the cases widen or shrink the range to exercise clipping
        if rng.random() < 0.5:
            lo, hi = lo - rng.uniform(0, 1), hi + rng.uniform(0, 1)
        if rng.random() < 0.25:
            lo, hi = lo * 0.5, hi * 0.4
        if not lo < hi:
            continue
        q = make_quantizer(bits, lo, hi)
        s = sample(spec, 500)
        qs = quantize(s, q)
        free = ~qs.clipped
        checked += int(np.count_nonzero(free))
        if np.any(free):
            worst = max(worst, float(np.max(np.abs(qs.errors[free])) - q.step / 2))
            ok = ok and np.all(np.abs(qs.errors[free]) <= q.step / 2 + 1e-12)
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 10.0
    report("quantization error bound |e| <= step/2 + 1e-12", ok,
           f"{checked} non-clipped samples, worst slack {worst:.2e}, {elapsed:.1f}s")


def scan_level(x, q):
    if x <= q.range_lo:
        return 1
    for k in range(1, q.level_count + 1):
        if q.range_lo + (k - 1) * q.step < x <= q.range_lo + k * q.step:
            return k
    return q.level_count


def test_quantizer_oracle_equivalence():
    rng = np.random.default_rng(77)
    checked = 0
    mismatches = 0
    for _ in range(60):
        bits = int(rng.integers(1, 9))
        lo = float(rng.uniform(-4, 2))
        hi = lo + float(rng.uniform(0.25, 5))
        q = make_quantizer(bits, lo, hi)
        edges = [lo + k * q.step for k in range(q.level_count + 1)]
        inputs = np.concatenate([
            rng.uniform(lo - 0.5, hi + 0.5, 150),
            np.asarray(edges),  # boundary values x = lo + k*step
        ])
        levels = quantize(SampledSignal.from_values(inputs, 1.0), q).levels
        for x, lv in zip(inputs, levels):
            checked += 1
            if lv != scan_level(float(x), q):
                mismatches += 1
    report("quantizer level matches interval-scan oracle", checked >= 10_000 and mismatches == 0,
           f"{checked} inputs incl. edges, {mismatches} mismatches")


def test_sqnr_law_full_scale_sinusoid():
    # full-scale sinusoid: amplitude 1 against range [-1, 1]; 7 periods and
    # 10^4 samples are coprime, so the samples sweep 10^4 distinct phases
    spec = HarmonicSpec(a=(1, 0, 0, 0, 0, 0), f1_mantissa=1.0, f1_exponent=0, periods=7)
    s = sample(spec, 10_000)
    deviations = {}
    for bits in (6, 8, 10, 12):
        q = make_quantizer(bits, -1, 1)
        qs = quantize(s, q)
        m = metrics(s, qs, encode(qs, q, s.sample_rate))
        deviations[bits] = m.sqnr_db - (6.02 * bits + 1.76)
    ok = all(abs(d) <= 1.0 for d in deviations.values())
    report("SQNR within 1 dB of 6.02*b + 1.76 for b in {6,8,10,12}", ok,
           ", ".join(f"b={b}: {d:+.2f} dB" for b, d in deviations.items()))


def test_nyquist_reconstruction_demonstration():
    spec = HarmonicSpec(a=(0, 0, 0, 0, 0, 1), f1_mantissa=1.0, f1_exponent=0, periods=5)
    w = window(spec)
    limit = nyquist_check(spec, 1.0).limit_hz  # 12 Hz for the 6th harmonic
    ts = np.linspace(w / 4, 3 * w / 4, 801)  # middle half of the window

    def max_recon_error(rate_multiple):
        n = round(rate_multiple * limit * w)
        s = sample(spec, n)
        return float(np.max(np.abs(reconstruct(s, ts) - evaluate(spec, ts))))

    good = max_recon_error(4.0)
    bad = max_recon_error(0.8)
    ok = good <= 0.05 and bad >= 10 * good
    report("6th harmonic: recon error <= 0.05 at 4x limit, >= 10x worse at 0.8x", ok,
           f"4x err {good:.4f}, 0.8x err {bad:.3f}")


def test_figure_one_scenario():
    spec = preset("sinusoid")
    s = sample(spec, 20)
    uniform = np.allclose(np.diff(s.instants), s.period_t, rtol=1e-12, atol=0)
    ok = (
        spec.periods == 2
        and s.sample_count == 20
        and len(s.instants) == 20
        and uniform
        and make_quantizer(3, -1, 1).level_count == 8
        and make_quantizer(4, -1, 1).level_count == 16
    )
    report("sinusoid preset: 20 uniform samples over 2 periods; 8/16 levels at 3/4 bits", ok)


def test_differential_codecs_bit_exact():
    rng = np.random.default_rng(4242)
    pcm_q = make_quantizer(6, -2, 2)
    dpcm_ok = delta_ok = payload_ok = True
    for _ in range(1000):
        n = int(rng.integers(2, 50))
        x = rng.uniform(-2, 2, n)
        s = SampledSignal.from_values(x, 1e-3)
        diff_bits = int(rng.integers(1, 6))
        stream = dpcm_encode(s, pcm_q, diff_bits, float(rng.uniform(0.2, 2.0)))
        dpcm_ok = dpcm_ok and np.array_equal(dpcm_decode(stream, pcm_q), stream.reconstruction)
        payload_ok = payload_ok and stream.payload_bits == pcm_q.bits + (n - 1) * diff_bits
        dstream = delta_encode(s, float(rng.uniform(0.01, 1.0)))
        delta_ok = delta_ok and np.array_equal(delta_decode(dstream), dstream.reconstruction)
        payload_ok = payload_ok and dstream.bit_rate(s.sample_rate) == s.sample_rate * 1
    report("DPCM and delta-mod decoders bit-exact on 1000 random signals",
           dpcm_ok and delta_ok and payload_ok)


def test_session_algebra():
    session = create_session(preset("sinusoid"), 20, 3)
    checks = []
    for start in Stage:
        for direction, delta in (("forward", 1), ("back", -1)):
            session.stage = start
            end = step(session, direction).stage
            checks.append(int(end) == min(max(int(start) + delta, 0), 3))
    for start in (Stage.ANALOG, Stage.SAMPLED, Stage.QUANTIZED):  # away from top clamp
        session.stage = start
        checks.append(step(step(session, "forward"), "back").stage is start)
    session.stage = Stage.ENCODED
    checks.append(reset(session).stage is Stage.ANALOG)
    checks.append(reset(session).stage is Stage.ANALOG)
    report("session algebra: clamps, reset idempotence, back o forward identity", all(checks))


def test_cli_and_api_determinism():
    argv = [sys.executable, "-m", "pcmlab.cli", "convert", "--preset", "sinusoid",
            "--samples", "20", "--bits", "3", "--format", "csv"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    csv_ok = first == second and first.startswith(b"t,x,level,y,e,codeword")

    def wire_payloads():
        client = TestClient(create_app())
        sid = client.post("/sessions",
                          json={"preset": "sinusoid", "samples": 20, "bits": 3}).json()["id"]
        return [client.get(f"/sessions/{sid}/stages/{k}").content for k in range(4)]

    api_ok = wire_payloads() == wire_payloads()
    report("CLI CSV and API stage payloads byte-identical across runs", csv_ok and api_ok)
