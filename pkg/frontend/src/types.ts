// Wire types mirroring the session API payloads. The UI never recomputes
// any of these numbers; it only renders them.

export interface SpecPayload {
  a: number[];
  b: number[];
  f1_mantissa: number;
  f1_exponent: number;
  f1_hz: number;
  dc: number;
  periods: number;
}

export interface PresetEntry {
  name: string;
  spec: SpecPayload;
}

export interface Curve {
  t: number[];
  v: number[];
}

export interface AnalogView {
  stage: 0;
  name: "analog";
  window_s: number;
  f1_hz: number;
  periods: number;
  u_dc: number;
  curve: Curve;
}

export interface SampledView {
  stage: 1;
  name: "sampled";
  sample_count: number;
  period_s: number;
  sample_rate_hz: number;
  nyquist_limit_hz: number;
  nyquist_satisfied: boolean;
  curve: Curve;
  samples: { t: number[]; x: number[] };
}

export interface QuantizedView {
  stage: 2;
  name: "quantized";
  bits: number;
  level_count: number;
  step: number;
  range_lo: number;
  range_hi: number;
  grid: number[];
  samples: { t: number[]; x: number[] };
  levels: number[];
  y: number[];
  errors: number[];
  clipped: boolean[];
}

export interface MetricsPayload {
  max_abs_error: number;
  sqnr_db: number | null;
  exact: boolean;
  bit_rate_bps: number;
  payload_bytes_per_second: number;
}

export interface EncodedView {
  stage: 3;
  name: "encoded";
  bits_per_word: number;
  codewords: string[];
  bit_rate_bps: number;
  metrics: MetricsPayload;
}

export type StageView = AnalogView | SampledView | QuantizedView | EncodedView;

export interface SessionResponse {
  id?: string;
  stage: number;
  view: StageView;
}

export interface CreateSessionRequest {
  preset?: string;
  a?: number[];
  b?: number[];
  f1_mantissa?: number;
  f1_exponent?: number;
  dc?: number;
  periods?: number;
  samples: number;
  bits: number;
}

export interface ApiErrorBody {
  code: string;
  field?: string | null;
  message: string;
}
