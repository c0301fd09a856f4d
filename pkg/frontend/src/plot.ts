import type { StageView } from "./types.js";
import { DataWindow, Viewport, projector } from "./viewport.js";

const CURVE = "#2563eb";
const STEM = "#0f766e";
const STAIR = "#b45309";
const GRID = "#d1d5db";
const ERROR = "#dc2626";
const AXIS = "#6b7280";

function dataWindow(view: StageView): DataWindow | null {
  if (view.name === "encoded") return null;
  const t = view.name === "quantized" ? view.samples.t : view.curve.t;
  let vMin = Infinity;
  let vMax = -Infinity;
  const track = (vs: number[]) => {
    for (const v of vs) {
      if (v < vMin) vMin = v;
      if (v > vMax) vMax = v;
    }
  };
  if (view.name !== "quantized") track(view.curve.v);
  if (view.name === "sampled") track(view.samples.x);
  if (view.name === "quantized") {
    track(view.samples.x);
    track([view.range_lo, view.range_hi]);
  }
  if (vMin === vMax) {
    vMin -= 1;
    vMax += 1;
  }
  return { tMin: t[0] ?? 0, tMax: t[t.length - 1] ?? 1, vMin, vMax };
}

function polyline(ctx: CanvasRenderingContext2D, xs: number[], ys: number[], color: string) {
  ctx.strokeStyle = color;
  ctx.lineWidth = 1.5;
  ctx.beginPath();
  xs.forEach((x, i) => (i === 0 ? ctx.moveTo(x, ys[i]) : ctx.lineTo(x, ys[i])));
  ctx.stroke();
}

// Immediate-mode redraw of the whole stage. Canvas-less environments (tests)
// get a silent no-op because getContext returns null there.
export function drawStage(canvas: HTMLCanvasElement, view: StageView, vp: Viewport): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  const { width, height } = canvas;
  ctx.clearRect(0, 0, width, height);

  const window = dataWindow(view);
  if (!window) {
    ctx.fillStyle = AXIS;
    ctx.font = "14px sans-serif";
    ctx.fillText("Binary words and rate figures are listed in the panel.", 16, 28);
    return;
  }
  const p = projector(window, width, height, vp);

  // time axis at v = 0 when visible
  ctx.strokeStyle = AXIS;
  ctx.lineWidth = 1;
  ctx.beginPath();
  ctx.moveTo(0, p.y(0));
  ctx.lineTo(width, p.y(0));
  ctx.stroke();

  if (view.name === "analog" || view.name === "sampled") {
    polyline(ctx, view.curve.t.map(p.x), view.curve.v.map(p.y), CURVE);
  }
  if (view.name === "sampled") {
    ctx.strokeStyle = STEM;
    ctx.fillStyle = STEM;
    view.samples.t.forEach((t, i) => {
      const x = p.x(t);
      ctx.beginPath();
      ctx.moveTo(x, p.y(0));
      ctx.lineTo(x, p.y(view.samples.x[i]));
      ctx.stroke();
      ctx.beginPath();
      ctx.arc(x, p.y(view.samples.x[i]), 3, 0, 2 * Math.PI);
      ctx.fill();
    });
  }
  if (view.name === "quantized") {
    ctx.strokeStyle = GRID;
    ctx.lineWidth = 1;
    for (const level of view.grid) {
      ctx.beginPath();
      ctx.moveTo(0, p.y(level));
      ctx.lineTo(width, p.y(level));
      ctx.stroke();
    }
    // staircase of reconstruction values
    const xs: number[] = [];
    const ys: number[] = [];
    view.samples.t.forEach((t, i) => {
      const tNext = view.samples.t[i + 1] ?? t + (t - (view.samples.t[i - 1] ?? t - 1));
      xs.push(p.x(t), p.x(tNext));
      ys.push(p.y(view.y[i]), p.y(view.y[i]));
    });
    polyline(ctx, xs, ys, STAIR);
    // error whiskers sample -> level
    ctx.strokeStyle = ERROR;
    view.samples.t.forEach((t, i) => {
      const x = p.x(t);
      ctx.beginPath();
      ctx.moveTo(x, p.y(view.samples.x[i]));
      ctx.lineTo(x, p.y(view.y[i]));
      ctx.stroke();
      ctx.fillStyle = view.clipped[i] ? ERROR : STEM;
      ctx.beginPath();
      ctx.arc(x, p.y(view.samples.x[i]), 2.5, 0, 2 * Math.PI);
      ctx.fill();
    });
  }
}
