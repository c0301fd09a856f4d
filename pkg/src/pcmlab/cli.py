"""Command line front end: synth | convert | dpcm | dm | serve.

Reports are deterministic: identical invocations produce byte-identical
output, and nothing is emitted until the whole report has been built.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

import numpy as np

from . import diffcodecs, pipeline
from .errors import PcmError
from .harmonics import DEFAULT_RENDER_POINTS, PRESET_NAMES, render
from .inputs import resolve_spec
from .session import Stage, create_session, spec_payload, stage_payload

RATE_EPILOG = (
    "The coded bit rate is sample_rate * log2(levels) bps: for example "
    "8000 Hz at 8 bits per sample (256 levels) needs 64000 bps, i.e. 8000 "
    "payload bytes per second."
)

FORMATS = ("table", "csv", "json")


def _signal_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("signal (preset or explicit coefficients)")
    g.add_argument("--preset", help=f"built-in demo signal: {', '.join(PRESET_NAMES)}")
    for i in range(1, 7):
        g.add_argument(f"--a{i}", type=float, help=f"sine amplitude of harmonic {i}")
    for i in range(1, 7):
        g.add_argument(f"--b{i}", type=float, help=f"cosine amplitude of harmonic {i}")
    g.add_argument("--f1-mantissa", type=float, help="fundamental frequency mantissa (> 0)")
    g.add_argument("--f1-exp", type=int, help="fundamental frequency decimal exponent")
    g.add_argument("--dc", type=float, help="DC component")
    g.add_argument("--periods", type=int, help="fundamental periods in the display window")


def _output_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=FORMATS, default="table", help="report format")
    p.add_argument("-o", "--output", default="-", help="output path, or - for stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pcmlab",
        description="PCM conversion workbench: harmonic synthesis, sampling, "
        "quantization, binary coding and differential codecs.",
        epilog=RATE_EPILOG,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="render the analog signal", epilog=RATE_EPILOG)
    _signal_args(p)
    p.add_argument("--points", type=int, default=DEFAULT_RENDER_POINTS, help="curve resolution")
    _output_args(p)

    p = sub.add_parser("convert", help="run the full PCM chain", epilog=RATE_EPILOG)
    _signal_args(p)
    p.add_argument("--samples", type=int, default=20, help="number of samples (>= 2)")
    p.add_argument("--bits", type=int, default=3, help="quantizer bit depth (1..16)")
    p.add_argument(
        "--range", type=float, nargs=2, metavar=("LO", "HI"),
        help="quantizer range override (default: analytic peak bound)",
    )
    _output_args(p)

    p = sub.add_parser("dpcm", help="differential PCM over sample differences", epilog=RATE_EPILOG)
    _signal_args(p)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--bits", type=int, default=3, help="PCM bit depth for the first sample")
    p.add_argument("--range", type=float, nargs=2, metavar=("LO", "HI"))
    p.add_argument("--diff-bits", type=int, default=4, help="bits per difference word")
    p.add_argument(
        "--diff-range", type=float,
        help="symmetric difference bound (default: quantizer range / 4)",
    )
    _output_args(p)

    p = sub.add_parser("dm", help="delta modulation (one bit per sample)", epilog=RATE_EPILOG)
    _signal_args(p)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--bits", type=int, default=4, help="bit depth the default step derives from")
    p.add_argument("--range", type=float, nargs=2, metavar=("LO", "HI"))
    p.add_argument("--step", type=float, help="tracker step (default: 2 * quantizer step)")
    _output_args(p)

    p = sub.add_parser("serve", help="serve the session HTTP API", epilog=RATE_EPILOG)
    p.add_argument("--host", default=os.environ.get("PCMLAB_HOST", "127.0.0.1"))
    p.add_argument("--port", type=int, default=int(os.environ.get("PCMLAB_PORT", "8000")))
    p.add_argument(
        "--allow-origin", action="append", default=None,
        help="restrict CORS to this origin (repeatable; default: any origin)",
    )
    p.add_argument("--ui-dir", help="also serve this directory as the web UI at /")
    return parser


def _spec_from_args(args: argparse.Namespace):
    coeff_names = [f"a{i}" for i in range(1, 7)] + [f"b{i}" for i in range(1, 7)]
    a = [getattr(args, n) for n in coeff_names[:6]]
    b = [getattr(args, n) for n in coeff_names[6:]]
    return resolve_spec(
        preset=args.preset,
        a=None if all(v is None for v in a) else [v or 0.0 for v in a],
        b=None if all(v is None for v in b) else [v or 0.0 for v in b],
        f1_mantissa=args.f1_mantissa,
        f1_exponent=args.f1_exp,
        dc=args.dc,
        periods=args.periods,
    )


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2, allow_nan=False) + "\n"


def _num(x) -> str:
    """Shortest exact decimal form of a float (round-trips to the same value)."""
    return repr(float(x))


def _table(header: list[str], rows: list[list]) -> str:
    cells = [[str(c) for c in row] for row in rows]
    widths = [max(len(h), *(len(r[i]) for r in cells)) if cells else len(h)
              for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    for row in cells:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _run_synth(args) -> str:
    spec = _spec_from_args(args)
    curve = render(spec, args.points)
    if args.format == "csv":
        return _csv_text(["t", "v"], [[_num(t), _num(v)] for t, v in zip(curve.t, curve.v)])
    if args.format == "json":
        return _json_text({
            "f1_hz": spec.f1,
            "periods": spec.periods,
            "points": int(args.points),
            "curve": {"t": [float(t) for t in curve.t], "v": [float(v) for v in curve.v]},
        })
    return _table(["t", "v"], [[_num(t), _num(v)] for t, v in zip(curve.t, curve.v)])


def _session_from_args(args):
    spec = _spec_from_args(args)
    quant_range = tuple(args.range) if args.range is not None else None
    return create_session(spec, args.samples, args.bits, quant_range=quant_range)


def _run_convert(args) -> str:
    session = _session_from_args(args)
    s, qs, cs = session.sampled, session.quantized, session.coded
    rows = [
        [_num(t), _num(x), int(k), _num(y), _num(e), w]
        for t, x, k, y, e, w in zip(s.instants, s.values, qs.levels, qs.values, qs.errors, cs.codewords)
    ]
    if args.format == "csv":
        return _csv_text(["t", "x", "level", "y", "e", "codeword"], rows)
    if args.format == "json":
        return _json_text({
            "inputs": {
                "preset": args.preset,
                "spec": spec_payload(session.spec),
                "samples": int(args.samples),
                "bits": int(args.bits),
                "range": [session.quantizer.range_lo, session.quantizer.range_hi],
            },
            "stages": [stage_payload(session, st) for st in Stage],
        })
    m = session.conversion
    summary = [
        f"sample rate: {_num(s.sample_rate)} Hz ({s.sample_count} samples over "
        f"{_num(s.sample_count * s.period_t)} s)",
        f"quantizer: {session.quantizer.bits} bits, {session.quantizer.level_count} levels, "
        f"step {_num(session.quantizer.step)} over "
        f"[{_num(session.quantizer.range_lo)}, {_num(session.quantizer.range_hi)}]",
        f"bit rate: {_num(cs.bit_rate)} bps ({_num(m.payload_bytes_per_second)} bytes/s)",
        f"max |error|: {_num(m.max_abs_error)}",
        "sqnr: exact" if np.isinf(m.sqnr_db) else f"sqnr: {_num(m.sqnr_db)} dB",
    ]
    return _table(["t", "x", "level", "y", "e", "codeword"], rows) + "\n" + "\n".join(summary) + "\n"


def _run_dpcm(args) -> str:
    session = _session_from_args(args)
    q = session.quantizer
    diff_range = args.diff_range
    if diff_range is None:
        diff_range = (q.range_hi - q.range_lo) / 4.0
    stream = diffcodecs.dpcm_encode(session.sampled, q, args.diff_bits, diff_range)
    s = session.sampled
    words = [stream.first_word, *stream.diff_codewords]
    rows = [
        [n, _num(t), _num(x), w, _num(y)]
        for n, (t, x, w, y) in enumerate(zip(s.instants, s.values, words, stream.reconstruction))
    ]
    if args.format == "csv":
        return _csv_text(["n", "t", "x", "word", "yhat"], rows)
    if args.format == "json":
        return _json_text({
            "pcm_bits": q.bits,
            "diff_bits": stream.diff_bits,
            "diff_range": stream.diff_range,
            "first_word": stream.first_word,
            "codewords": list(stream.diff_codewords),
            "payload_bits": stream.payload_bits,
            "pcm_payload_bits": q.bits * s.sample_count,
            "reconstruction": [float(v) for v in stream.reconstruction],
            "samples": {"t": [float(t) for t in s.instants], "x": [float(x) for x in s.values]},
        })
    text = _table(["n", "t", "x", "word", "yhat"], rows)
    text += (
        f"\npayload: {stream.payload_bits} bits vs {q.bits * s.sample_count} bits "
        f"for plain PCM at {q.bits} bits/sample\n"
    )
    return text


def _run_dm(args) -> str:
    session = _session_from_args(args)
    step = args.step
    if step is None:
        step = 2.0 * session.quantizer.step
    stream = diffcodecs.delta_encode(session.sampled, step)
    s = session.sampled
    rows = [
        [n, _num(t), _num(x), "1" if b else "0", _num(y)]
        for n, (t, x, b, y) in enumerate(zip(s.instants, s.values, stream.bits, stream.reconstruction))
    ]
    if args.format == "csv":
        return _csv_text(["n", "t", "x", "bit", "yhat"], rows)
    if args.format == "json":
        return _json_text({
            "step": stream.step,
            "bits": ["1" if b else "0" for b in stream.bits],
            "payload_bits": stream.payload_bits,
            "bit_rate_bps": stream.bit_rate(s.sample_rate),
            "reconstruction": [float(v) for v in stream.reconstruction],
            "samples": {"t": [float(t) for t in s.instants], "x": [float(x) for x in s.values]},
        })
    text = _table(["n", "t", "x", "bit", "yhat"], rows)
    text += f"\nstep: {_num(stream.step)}  bit rate: {_num(stream.bit_rate(s.sample_rate))} bps\n"
    return text


def _run_serve(args) -> int:
    import uvicorn

    from .api import create_app

    origins = tuple(args.allow_origin) if args.allow_origin else ("*",)
    app = create_app(allow_origins=origins, ui_dir=args.ui_dir)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def _emit(text: str, output: str) -> None:
    if output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", newline="") as fh:
            fh.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    runners = {
        "synth": _run_synth,
        "convert": _run_convert,
        "dpcm": _run_dpcm,
        "dm": _run_dm,
    }
    try:
        if args.command == "serve":
            return _run_serve(args)
        text = runners[args.command](args)
    except PcmError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 2
    _emit(text, args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
