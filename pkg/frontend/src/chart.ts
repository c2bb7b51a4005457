/** Profile chart: pure coordinate scales plus a canvas renderer.
 *
 * All geometry (pits, peaks, intersections, water polygons) arrives
 * precomputed from the server; this module only maps data coordinates to
 * pixels and draws.
 */

import type { OverlayJson } from "./api.js";

export interface Margin {
  top: number;
  right: number;
  bottom: number;
  left: number;
}

export const DEFAULT_MARGIN: Margin = { top: 16, right: 16, bottom: 34, left: 56 };

/** Affine map from a data domain to a pixel range. */
export class LinearScale {
  constructor(
    readonly d0: number,
    readonly d1: number,
    readonly r0: number,
    readonly r1: number,
  ) {}

  apply(v: number): number {
    const span = this.d1 - this.d0;
    if (span === 0) return (this.r0 + this.r1) / 2;
    return this.r0 + ((v - this.d0) / span) * (this.r1 - this.r0);
  }

  /** Evenly spaced round-valued ticks covering the domain. */
  ticks(count = 5): number[] {
    const lo = Math.min(this.d0, this.d1);
    const hi = Math.max(this.d0, this.d1);
    if (lo === hi) return [lo];
    const rawStep = (hi - lo) / count;
    const mag = Math.pow(10, Math.floor(Math.log10(rawStep)));
    const norm = rawStep / mag;
    const step = (norm >= 5 ? 5 : norm >= 2 ? 2 : 1) * mag;
    const out: number[] = [];
    for (let t = Math.ceil(lo / step) * step; t <= hi + step * 1e-9; t += step) {
      out.push(Math.abs(t) < step * 1e-9 ? 0 : t);
    }
    return out;
  }
}

export interface ChartScales {
  x: LinearScale;
  y: LinearScale;
}

/** Build x/y scales for a profile with 5 % vertical padding. */
export function buildScales(
  z: number[],
  dx: number,
  width: number,
  height: number,
  margin: Margin = DEFAULT_MARGIN,
): ChartScales {
  const xMax = (z.length - 1) * dx;
  let zMin = Infinity;
  let zMax = -Infinity;
  for (const v of z) {
    if (v < zMin) zMin = v;
    if (v > zMax) zMax = v;
  }
  const pad = zMax === zMin ? 1 : 0.05 * (zMax - zMin);
  return {
    x: new LinearScale(0, xMax, margin.left, width - margin.right),
    // y grows downward in pixel space
    y: new LinearScale(zMin - pad, zMax + pad, height - margin.bottom, margin.top),
  };
}

export interface RenderOptions {
  /** horizontal significance level for Open/Closed, in µm */
  significanceLevel?: number | null;
}

const COLORS = {
  axis: "#888",
  grid: "#e4e4e4",
  profile: "#1a4f8a",
  water: "rgba(64, 148, 212, 0.45)",
  waterDim: "rgba(150, 150, 150, 0.25)",
  boundary: "#c07828",
  boundaryDim: "#cbbba6",
  pit: "#b03030",
  pitDim: "#c9a0a0",
  peak: "#2a7d2a",
  peakDim: "#9fba9f",
  sigLine: "#9030a0",
};

export function renderChart(
  ctx: CanvasRenderingContext2D,
  z: number[],
  dx: number,
  overlays: OverlayJson[],
  width: number,
  height: number,
  options: RenderOptions = {},
): void {
  const margin = DEFAULT_MARGIN;
  const { x, y } = buildScales(z, dx, width, height, margin);
  ctx.clearRect(0, 0, width, height);

  // grid + axes
  ctx.font = "11px sans-serif";
  ctx.strokeStyle = COLORS.grid;
  ctx.fillStyle = COLORS.axis;
  ctx.lineWidth = 1;
  for (const t of x.ticks(8)) {
    const px = x.apply(t);
    line(ctx, px, margin.top, px, height - margin.bottom);
    ctx.textAlign = "center";
    ctx.fillText(fmt(t), px, height - margin.bottom + 14);
  }
  for (const t of y.ticks(5)) {
    const py = y.apply(t);
    line(ctx, margin.left, py, width - margin.right, py);
    ctx.textAlign = "right";
    ctx.fillText(fmt(t), margin.left - 6, py + 3);
  }
  ctx.strokeStyle = COLORS.axis;
  ctx.strokeRect(margin.left, margin.top,
    width - margin.left - margin.right, height - margin.top - margin.bottom);
  ctx.textAlign = "center";
  ctx.fillText("x [µm]", (margin.left + width - margin.right) / 2, height - 4);
  ctx.save();
  ctx.translate(12, (margin.top + height - margin.bottom) / 2);
  ctx.rotate(-Math.PI / 2);
  ctx.fillText("z [µm]", 0, 0);
  ctx.restore();

  // water-level regions (behind the profile line)
  for (const ov of overlays) {
    ctx.fillStyle = ov.sig ? COLORS.water : COLORS.waterDim;
    for (const poly of ov.waterPolygons) {
      if (poly.length < 3) continue;
      ctx.beginPath();
      ctx.moveTo(x.apply(poly[0][0]), y.apply(poly[0][1]));
      for (let i = 1; i < poly.length; i++) {
        ctx.lineTo(x.apply(poly[i][0]), y.apply(poly[i][1]));
      }
      ctx.closePath();
      ctx.fill();
    }
  }

  // motif boundaries at the peak positions
  for (const ov of overlays) {
    ctx.strokeStyle = ov.sig ? COLORS.boundary : COLORS.boundaryDim;
    for (const peak of [ov.lowerPeak, ov.higherPeak]) {
      const px = x.apply(peak[0]);
      dashed(ctx, () => line(ctx, px, margin.top, px, height - margin.bottom));
    }
  }

  // significance level (Open/Closed)
  if (options.significanceLevel != null && Number.isFinite(options.significanceLevel)) {
    ctx.strokeStyle = COLORS.sigLine;
    const py = y.apply(options.significanceLevel);
    dashed(ctx, () => line(ctx, margin.left, py, width - margin.right, py));
  }

  // profile line
  ctx.strokeStyle = COLORS.profile;
  ctx.lineWidth = 1.25;
  ctx.beginPath();
  ctx.moveTo(x.apply(0), y.apply(z[0]));
  for (let i = 1; i < z.length; i++) {
    ctx.lineTo(x.apply(i * dx), y.apply(z[i]));
  }
  ctx.stroke();
  ctx.lineWidth = 1;

  // pit / peak markers
  for (const ov of overlays) {
    dot(ctx, x.apply(ov.pit[0]), y.apply(ov.pit[1]), 4,
      ov.sig ? COLORS.pit : COLORS.pitDim);
    for (const peak of [ov.lowerPeak, ov.higherPeak]) {
      dot(ctx, x.apply(peak[0]), y.apply(peak[1]), 3,
        ov.sig ? COLORS.peak : COLORS.peakDim);
    }
  }
}

/** Index of the motif whose pit is nearest to the data-x position, for hover. */
export function nearestMotifIndex(overlays: OverlayJson[], dataX: number): number {
  let best = -1;
  let bestDist = Infinity;
  for (let i = 0; i < overlays.length; i++) {
    const d = Math.abs(overlays[i].pit[0] - dataX);
    if (d < bestDist) {
      bestDist = d;
      best = i;
    }
  }
  return best;
}

function line(ctx: CanvasRenderingContext2D, x0: number, y0: number, x1: number, y1: number) {
  ctx.beginPath();
  ctx.moveTo(x0, y0);
  ctx.lineTo(x1, y1);
  ctx.stroke();
}

function dashed(ctx: CanvasRenderingContext2D, draw: () => void) {
  ctx.setLineDash([4, 3]);
  draw();
  ctx.setLineDash([]);
}

function dot(ctx: CanvasRenderingContext2D, px: number, py: number, r: number, color: string) {
  ctx.fillStyle = color;
  ctx.beginPath();
  ctx.arc(px, py, r, 0, 2 * Math.PI);
  ctx.fill();
}

function fmt(v: number): string {
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 10000 || a < 0.001) return v.toExponential(1);
  return String(Number(v.toPrecision(6)));
}
