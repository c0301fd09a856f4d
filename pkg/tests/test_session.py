from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pytest

from pcmlab.errors import InvalidArgument, UnknownSession
from pcmlab.harmonics import preset
from pcmlab.pipeline import encode, make_quantizer, quantize, sample
from pcmlab.session import (
    Direction,
    SessionRegistry,
    Stage,
    create_session,
    reset,
    stage_payload,
    step,
)


@pytest.fixture
def session():
    return create_session(preset("sinusoid"), 20, 3)


class TestCreate:
    def test_starts_analog(self, session):
        assert session.stage is Stage.ANALOG

    def test_figure_one_scenario(self, session):
        assert session.sampled.sample_count == 20
        assert session.spec.periods == 2
        np.testing.assert_allclose(np.diff(session.sampled.instants),
                                   session.sampled.period_t, rtol=1e-12)

    def test_four_bits_sixteen_levels(self):
        s = create_session(preset("sinusoid"), 20, 4)
        assert s.quantizer.level_count == 16

    def test_default_range_is_peak_bound(self, session):
        p = session.spec.peak_bound
        assert (session.quantizer.range_lo, session.quantizer.range_hi) == (-p, p)
        assert not session.quantized.clipped.any()

    def test_range_override(self):
        s = create_session(preset("sinusoid"), 20, 3, quant_range=(-0.5, 0.5))
        assert s.quantized.clipped.any()

    def test_invalid_inputs_propagate(self):
        with pytest.raises(InvalidArgument):
            create_session(preset("sinusoid"), 1, 3)
        with pytest.raises(InvalidArgument):
            create_session(preset("sinusoid"), 20, 0)

    def test_determinism(self):
        a = create_session(preset("one-period"), 33, 5)
        b = create_session(preset("one-period"), 33, 5)
        assert a.id != b.id
        np.testing.assert_array_equal(a.curve.v, b.curve.v)
        np.testing.assert_array_equal(a.sampled.values, b.sampled.values)
        np.testing.assert_array_equal(a.quantized.levels, b.quantized.levels)
        assert a.coded.codewords == b.coded.codewords
        assert a.conversion == b.conversion

    def test_eager_consistency(self, session):
        resampled = sample(session.spec, session.n_samples)
        np.testing.assert_array_equal(resampled.values, session.sampled.values)
        q = make_quantizer(session.bits, session.quantizer.range_lo, session.quantizer.range_hi)
        requantized = quantize(resampled, q)
        np.testing.assert_array_equal(requantized.levels, session.quantized.levels)
        np.testing.assert_array_equal(requantized.values, session.quantized.values)
        recoded = encode(requantized, q, resampled.sample_rate)
        assert recoded.codewords == session.coded.codewords
        assert recoded.bit_rate == session.coded.bit_rate


class TestNavigation:
    def test_forward_walk(self, session):
        stages = [session.stage]
        for _ in range(5):
            stages.append(step(session, "forward").stage)
        assert stages == [Stage.ANALOG, Stage.SAMPLED, Stage.QUANTIZED,
                          Stage.ENCODED, Stage.ENCODED, Stage.ENCODED]

    def test_back_clamps_at_analog(self, session):
        assert step(session, "back").stage is Stage.ANALOG

    def test_back_forward_identity_away_from_clamps(self, session):
        for start in (Stage.SAMPLED, Stage.QUANTIZED):
            session.stage = start
            assert step(step(session, "forward"), "back").stage is start

    def test_direction_enum_accepted(self, session):
        assert step(session, Direction.FORWARD).stage is Stage.SAMPLED

    def test_exhaustive_pairs_stay_in_range(self, session):
        for start in Stage:
            for direction in ("forward", "back"):
                session.stage = start
                end = step(session, direction).stage
                assert Stage.ANALOG <= end <= Stage.ENCODED
                expected = min(max(int(start) + (1 if direction == "forward" else -1), 0), 3)
                assert int(end) == expected

    def test_reset(self, session):
        for _ in range(3):
            step(session, "forward")
        assert reset(session).stage is Stage.ANALOG
        assert reset(session).stage is Stage.ANALOG  # idempotent

    def test_artifacts_survive_navigation(self, session):
        before = session.coded.codewords
        step(session, "forward")
        reset(session)
        assert session.coded.codewords == before


class TestStagePayload:
    def test_analog_curve(self, session):
        p = stage_payload(session, Stage.ANALOG)
        assert p["name"] == "analog"
        assert len(p["curve"]["t"]) == len(p["curve"]["v"]) == 512
        assert p["curve"]["v"][0] == float(session.curve.v[0])

    def test_sampled_counts(self, session):
        p = stage_payload(session, Stage.SAMPLED)
        assert len(p["samples"]["t"]) == session.n_samples
        assert p["sample_rate_hz"] == session.sampled.sample_rate

    def test_quantized_grid_lines(self, session):
        p = stage_payload(session, Stage.QUANTIZED)
        assert len(p["grid"]) == 2**session.bits
        assert p["level_count"] == 8
        assert len(p["errors"]) == session.n_samples

    def test_encoded_rate(self):
        # 8 kHz-equivalent: 8000 samples over a 1 s window, 8 bits
        spec = preset("sinusoid")
        n = 8000 * spec.periods // int(spec.f1)  # rate = n*f1/periods = 8000
        session = create_session(spec, n, 8)
        p = stage_payload(session, Stage.ENCODED)
        assert p["bit_rate_bps"] == 64000.0
        assert p["metrics"]["payload_bytes_per_second"] == 8000.0

    def test_payload_is_json_ready(self, session):
        import json

        for stage in Stage:
            json.dumps(stage_payload(session, stage), allow_nan=False)

    def test_invalid_stage(self, session):
        with pytest.raises(InvalidArgument):
            stage_payload(session, 4)


class TestRegistry:
    def test_create_get_unknown(self):
        registry = SessionRegistry()
        session = registry.create(preset("sinusoid"), 20, 3)
        assert registry.get(session.id) is session
        with pytest.raises(UnknownSession):
            registry.get("nope")

    def test_concurrent_create_and_step(self):
        registry = SessionRegistry()
        base = registry.create(preset("sinusoid"), 20, 3)

        def hammer(i):
            s = registry.create(preset("one-period"), 10, 2)
            step(registry.get(base.id), "forward")
            return s.id

        with ThreadPoolExecutor(max_workers=8) as pool:
            ids = list(pool.map(hammer, range(40)))
        assert len(set(ids)) == 40
        assert len(registry) == 41
        # 40 forward steps from Analog, clamped at the top
        assert registry.get(base.id).stage is Stage.ENCODED
