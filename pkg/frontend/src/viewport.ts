// Pan/zoom is pure view state. Counts are integers and the affine transform
// is derived from them, so every control has an exact inverse: X+ then X-
// lands on the identical transform, bit for bit.

export interface ViewCounts {
  panX: number;
  panY: number;
  zoomX: number;
  zoomY: number;
}

export interface Viewport {
  xOffset: number;
  yOffset: number;
  xScale: number;
  yScale: number;
}

export const ZOOM_BASE = 1.25;
export const PAN_STEP = 0.25; // normalized plot units per arrow press

export function initialCounts(): ViewCounts {
  return { panX: 0, panY: 0, zoomX: 0, zoomY: 0 };
}

export function viewportFrom(counts: ViewCounts): Viewport {
  return {
    xOffset: PAN_STEP * counts.panX,
    yOffset: PAN_STEP * counts.panY,
    xScale: Math.pow(ZOOM_BASE, counts.zoomX),
    yScale: Math.pow(ZOOM_BASE, counts.zoomY),
  };
}

export type ViewControl =
  | "pan-left"
  | "pan-right"
  | "pan-up"
  | "pan-down"
  | "zoom-x-in"
  | "zoom-x-out"
  | "zoom-y-in"
  | "zoom-y-out";

export function applyControl(counts: ViewCounts, control: ViewControl): ViewCounts {
  const next = { ...counts };
  switch (control) {
    case "pan-left":
      next.panX -= 1;
      break;
    case "pan-right":
      next.panX += 1;
      break;
    case "pan-up":
      next.panY += 1;
      break;
    case "pan-down":
      next.panY -= 1;
      break;
    case "zoom-x-in":
      next.zoomX += 1;
      break;
    case "zoom-x-out":
      next.zoomX -= 1;
      break;
    case "zoom-y-in":
      next.zoomY += 1;
      break;
    case "zoom-y-out":
      next.zoomY -= 1;
      break;
  }
  return next;
}

export const INVERSE: Record<ViewControl, ViewControl> = {
  "pan-left": "pan-right",
  "pan-right": "pan-left",
  "pan-up": "pan-down",
  "pan-down": "pan-up",
  "zoom-x-in": "zoom-x-out",
  "zoom-x-out": "zoom-x-in",
  "zoom-y-in": "zoom-y-out",
  "zoom-y-out": "zoom-y-in",
};

export interface DataWindow {
  tMin: number;
  tMax: number;
  vMin: number;
  vMax: number;
}

// Maps data coordinates to canvas pixels: the data window fills the canvas
// (with a margin) at the identity viewport; pan/zoom act on normalized
// coordinates so they are independent of the data ranges.
export function projector(window: DataWindow, width: number, height: number, vp: Viewport) {
  const tMid = (window.tMin + window.tMax) / 2;
  const tHalf = Math.max((window.tMax - window.tMin) / 2, 1e-30);
  const vMid = (window.vMin + window.vMax) / 2;
  const vHalf = Math.max((window.vMax - window.vMin) / 2, 1e-30);
  const margin = 0.88;
  return {
    x(t: number): number {
      const u = ((t - tMid) / tHalf - vp.xOffset) * vp.xScale;
      return width / 2 + (u * margin * width) / 2;
    },
    y(v: number): number {
      const u = ((v - vMid) / vHalf - vp.yOffset) * vp.yScale;
      return height / 2 - (u * margin * height) / 2;
    },
  };
}
