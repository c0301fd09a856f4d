import type { StageView } from "./types.js";

export interface InfoField {
  key: string; // machine-readable: the payload field the value came from
  label: string;
  value: string; // String(number) keeps the exact round-trip decimal form
}

export const STAGE_TITLES = ["Analog signal", "Sampled", "Quantized", "Encoded"] as const;

// The info panel shows API numbers verbatim; nothing here computes.
export function infoFields(view: StageView): InfoField[] {
  switch (view.name) {
    case "analog":
      return [
        { key: "f1_hz", label: "fundamental f1 [Hz]", value: String(view.f1_hz) },
        { key: "periods", label: "periods shown", value: String(view.periods) },
        { key: "window_s", label: "window [s]", value: String(view.window_s) },
        { key: "u_dc", label: "DC component", value: String(view.u_dc) },
      ];
    case "sampled":
      return [
        { key: "sample_count", label: "samples", value: String(view.sample_count) },
        { key: "period_s", label: "sampling period T [s]", value: String(view.period_s) },
        { key: "sample_rate_hz", label: "sample rate [Hz]", value: String(view.sample_rate_hz) },
        { key: "nyquist_limit_hz", label: "Nyquist limit [Hz]", value: String(view.nyquist_limit_hz) },
        { key: "nyquist_satisfied", label: "rate sufficient", value: view.nyquist_satisfied ? "yes" : "no" },
      ];
    case "quantized":
      return [
        { key: "bits", label: "bits", value: String(view.bits) },
        { key: "level_count", label: "levels", value: String(view.level_count) },
        { key: "step", label: "step size", value: String(view.step) },
        { key: "range_lo", label: "range low", value: String(view.range_lo) },
        { key: "range_hi", label: "range high", value: String(view.range_hi) },
      ];
    case "encoded":
      return [
        { key: "bits_per_word", label: "bits per word", value: String(view.bits_per_word) },
        { key: "bit_rate_bps", label: "bit rate [bps]", value: String(view.bit_rate_bps) },
        {
          key: "payload_bytes_per_second",
          label: "payload [bytes/s]",
          value: String(view.metrics.payload_bytes_per_second),
        },
        { key: "max_abs_error", label: "max |error|", value: String(view.metrics.max_abs_error) },
        {
          key: "sqnr_db",
          label: "SQNR [dB]",
          value: view.metrics.exact ? "exact" : String(view.metrics.sqnr_db),
        },
      ];
  }
}
