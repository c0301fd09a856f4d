import type { CreateSessionRequest } from "./types.js";

// Raw strings as read from the form inputs.
export interface FormValues {
  preset: string; // "" means custom coefficients
  a: string[];
  b: string[];
  f1Mantissa: string;
  f1Exponent: string;
  dc: string;
  periods: string;
  samples: string;
  bits: string;
}

export interface FieldError {
  field: string;
  message: string;
}

export type FormResult =
  | { ok: true; request: CreateSessionRequest }
  | { ok: false; errors: FieldError[] };

function parseNumber(raw: string): number | null {
  if (raw.trim() === "") return null;
  const value = Number(raw);
  return Number.isFinite(value) ? value : null;
}

// Client-side mirror of the service's validation rules so obviously bad
// input never produces a request.
export function buildRequest(values: FormValues): FormResult {
  const errors: FieldError[] = [];

  const samples = parseNumber(values.samples);
  if (samples === null || !Number.isInteger(samples) || samples < 2) {
    errors.push({ field: "samples", message: "samples must be an integer >= 2" });
  }
  const bits = parseNumber(values.bits);
  if (bits === null || !Number.isInteger(bits) || bits < 1 || bits > 16) {
    errors.push({ field: "bits", message: "bits must be an integer in 1..16" });
  }

  if (values.preset !== "") {
    if (errors.length > 0) return { ok: false, errors };
    return {
      ok: true,
      request: { preset: values.preset, samples: samples as number, bits: bits as number },
    };
  }

  const a: number[] = [];
  const b: number[] = [];
  for (let i = 0; i < 6; i++) {
    const ai = parseNumber(values.a[i] ?? "");
    const bi = parseNumber(values.b[i] ?? "");
    if (ai === null) errors.push({ field: `a${i + 1}`, message: "must be a finite number" });
    else a.push(ai);
    if (bi === null) errors.push({ field: `b${i + 1}`, message: "must be a finite number" });
    else b.push(bi);
  }
  const mantissa = parseNumber(values.f1Mantissa);
  if (mantissa === null || mantissa <= 0) {
    errors.push({ field: "f1_mantissa", message: "mantissa must be > 0" });
  }
  const exponent = parseNumber(values.f1Exponent);
  if (exponent === null || !Number.isInteger(exponent)) {
    errors.push({ field: "f1_exponent", message: "exponent must be an integer" });
  }
  const dc = parseNumber(values.dc);
  if (dc === null) errors.push({ field: "dc", message: "must be a finite number" });
  const periods = parseNumber(values.periods);
  if (periods === null || !Number.isInteger(periods) || periods < 1) {
    errors.push({ field: "periods", message: "periods must be an integer >= 1" });
  }

  if (errors.length > 0) return { ok: false, errors };
  return {
    ok: true,
    request: {
      a,
      b,
      f1_mantissa: mantissa as number,
      f1_exponent: exponent as number,
      dc: dc as number,
      periods: periods as number,
      samples: samples as number,
      bits: bits as number,
    },
  };
}
