/** Figure assembly: benchmark CSV tables in, SVG text out. */

import { Table, num, requireColumns } from "./csv.js";
import { Scale, fmt, fmtTick, linearScale, logScale, padDomain } from "./scale.js";
import { SCHEME_ORDER, document as svgDocument, el, heatColor, seriesColor, text } from "./svg.js";

export const WIDTH = 640;
export const HEIGHT = 440;
const MARGIN = { left: 70, right: 160, top: 30, bottom: 50 };

export type SeriesKind = "err-vs-dt" | "efficiency" | "invariant" | "err-vs-n";

export interface SeriesOptions {
  kind: SeriesKind;
  yColumn?: string; // invariant figures may pick eps_mass or eps_ham
  title?: string;
}

interface AxisSpec {
  xColumn: string;
  yColumn: string;
  xLog: boolean;
  yLog: boolean;
  xLabel: string;
  yLabel: string;
}

function axisSpec(options: SeriesOptions): AxisSpec {
  switch (options.kind) {
    case "err-vs-dt":
      return { xColumn: "dt", yColumn: "err_inf", xLog: true, yLog: true,
               xLabel: "dt", yLabel: "E_inf" };
    case "efficiency":
      return { xColumn: "cost", yColumn: "err_inf", xLog: true, yLog: true,
               xLabel: "propagator evaluations", yLabel: "E_inf" };
    case "invariant":
      return { xColumn: "dt", yColumn: options.yColumn ?? "eps_mass",
               xLog: true, yLog: true, xLabel: "dt",
               yLabel: options.yColumn ?? "eps_mass" };
    case "err-vs-n":
      return { xColumn: "n", yColumn: "err_inf", xLog: true, yLog: true,
               xLabel: "basis size N", yLabel: "E_inf" };
  }
}

function schemeNames(rows: Record<string, string>[]): string[] {
  const seen = new Set<string>();
  for (const row of rows) {
    seen.add(row["scheme"] ?? "series");
  }
  const names = Array.from(seen);
  names.sort((a, b) => {
    const ia = SCHEME_ORDER.indexOf(a);
    const ib = SCHEME_ORDER.indexOf(b);
    if (ia >= 0 && ib >= 0) return ia - ib;
    if (ia >= 0) return -1;
    if (ib >= 0) return 1;
    return a < b ? -1 : 1;
  });
  return names;
}

function axes(x: Scale, y: Scale, spec: AxisSpec): string[] {
  const [x0, x1] = x.range;
  const [y0, y1] = y.range;
  const parts: string[] = [];
  parts.push(el("rect", {
    x: fmt(x0), y: fmt(y1), width: fmt(x1 - x0), height: fmt(y0 - y1),
    fill: "none", stroke: "#333333", "stroke-width": 1,
  }));
  for (const tick of x.ticks()) {
    const px = x(tick);
    if (px < x0 - 0.5 || px > x1 + 0.5) continue;
    parts.push(el("line", { x1: fmt(px), y1: fmt(y0), x2: fmt(px), y2: fmt(y0 + 5),
                            stroke: "#333333", "stroke-width": 1 }));
    parts.push(el("line", { x1: fmt(px), y1: fmt(y0), x2: fmt(px), y2: fmt(y1),
                            stroke: "#eeeeee", "stroke-width": 0.5 }));
    parts.push(text(fmt(px), fmt(y0 + 18), fmtTick(tick, x.log),
                    { "text-anchor": "middle" }));
  }
  for (const tick of y.ticks()) {
    const py = y(tick);
    if (py < Math.min(y0, y1) - 0.5 || py > Math.max(y0, y1) + 0.5) continue;
    parts.push(el("line", { x1: fmt(x0 - 5), y1: fmt(py), x2: fmt(x0), y2: fmt(py),
                            stroke: "#333333", "stroke-width": 1 }));
    parts.push(el("line", { x1: fmt(x0), y1: fmt(py), x2: fmt(x1), y2: fmt(py),
                            stroke: "#eeeeee", "stroke-width": 0.5 }));
    parts.push(text(fmt(x0 - 8), fmt(py + 3), fmtTick(tick, y.log),
                    { "text-anchor": "end" }));
  }
  parts.push(text(fmt((x0 + x1) / 2), fmt(y0 + 36), spec.xLabel,
                  { "text-anchor": "middle" }));
  parts.push(text(fmt(x0 - 52), fmt((y0 + y1) / 2), spec.yLabel, {
    "text-anchor": "middle",
    transform: `rotate(-90 ${fmt(x0 - 52)} ${fmt((y0 + y1) / 2)})`,
  }));
  return parts;
}

/** One polyline per scheme; blown-up rows become markers on the top edge. */
export function renderSeriesFigure(table: Table, options: SeriesOptions): string {
  const spec = axisSpec(options);
  requireColumns(table, [spec.xColumn, spec.yColumn], options.kind);
  const hasScheme = table.columns.includes("scheme");
  const hasStatus = table.columns.includes("status");
  const rows = table.rows;
  if (rows.length === 0) {
    throw new Error(`${options.kind}: no data rows`);
  }

  const completed = rows.filter((r) => !hasStatus || r["status"] === "completed");
  const blown = rows.filter((r) => hasStatus && r["status"] !== "completed");
  const xs = rows.map((r) => num(r, spec.xColumn));
  const ys = completed.map((r) => num(r, spec.yColumn));
  const finiteYs = ys.filter((v) => Number.isFinite(v) && (!spec.yLog || v > 0));
  if (finiteYs.length === 0) {
    throw new Error(`${options.kind}: no finite positive values in '${spec.yColumn}'`);
  }

  const x = (spec.xLog ? logScale : linearScale)(
    padDomain(xs, spec.xLog), [MARGIN.left, WIDTH - MARGIN.right]);
  const y = (spec.yLog ? logScale : linearScale)(
    padDomain(finiteYs, spec.yLog), [HEIGHT - MARGIN.bottom, MARGIN.top]);

  const body = axes(x, y, spec);
  const names = hasScheme ? schemeNames(rows) : ["series"];
  names.forEach((name, index) => {
    const color = seriesColor(name, index);
    const mine = completed
      .filter((r) => !hasScheme || r["scheme"] === name)
      .map((r) => [num(r, spec.xColumn), num(r, spec.yColumn)] as [number, number])
      .filter(([px, py]) => Number.isFinite(px) && Number.isFinite(py)
        && (!spec.yLog || py > 0) && (!spec.xLog || px > 0))
      .sort((a, b) => a[0] - b[0]);
    if (mine.length > 0) {
      const points = mine.map(([px, py]) => `${fmt(x(px))},${fmt(y(py))}`).join(" ");
      body.push(el("polyline", {
        points, fill: "none", stroke: color, "stroke-width": 1.5,
        "data-series": name,
      }));
      for (const [px, py] of mine) {
        body.push(el("circle", { cx: fmt(x(px)), cy: fmt(y(py)), r: 2.5,
                                 fill: color }));
      }
    }
    // instability is data: blown-up rows sit on the top axis boundary
    const dead = blown.filter((r) => !hasScheme || r["scheme"] === name);
    for (const r of dead) {
      const px = num(r, spec.xColumn);
      if (!Number.isFinite(px) || (spec.xLog && px <= 0)) continue;
      const cx = fmt(x(px));
      const cy = fmt(MARGIN.top);
      body.push(el("path", {
        d: `M ${cx} ${cy} m -4 4 l 4 -8 l 4 8 z`,
        fill: color, stroke: "#333333", "stroke-width": 0.5,
        "data-blowup": name,
      }));
    }
  });

  const legendX = WIDTH - MARGIN.right + 12;
  names.forEach((name, index) => {
    const yPos = MARGIN.top + 14 + index * 16;
    body.push(el("line", { x1: fmt(legendX), y1: fmt(yPos - 4),
                           x2: fmt(legendX + 18), y2: fmt(yPos - 4),
                           stroke: seriesColor(name, index), "stroke-width": 2 }));
    body.push(text(fmt(legendX + 24), fmt(yPos), name));
  });
  if (options.title) {
    body.push(text(fmt(WIDTH / 2), fmt(18), options.title,
                   { "text-anchor": "middle", "font-size": 13 }));
  }
  if (blown.length > 0) {
    body.push(text(fmt(legendX), fmt(MARGIN.top + 14 + names.length * 16 + 8),
                   "▲ = blow-up", { "font-size": 10 }));
  }
  return svgDocument(WIDTH, HEIGHT, body);
}

export interface Snapshot {
  t: number;
  x: number[];
  abs: number[];
}

/** Space-time heat map of |u| from a snapshot sequence. */
export function renderEvolutionFigure(snapshots: Snapshot[], title?: string): string {
  if (snapshots.length < 2) {
    throw new Error("evolution: need at least two snapshots");
  }
  const sorted = [...snapshots].sort((a, b) => a.t - b.t);
  const nX = sorted[0].x.length;
  for (const snap of sorted) {
    if (snap.x.length !== nX || snap.abs.length !== nX) {
      throw new Error("evolution: snapshots have inconsistent grids");
    }
  }
  const xValues = sorted[0].x;
  const peak = Math.max(...sorted.map((s) => Math.max(...s.abs)));
  if (!(peak > 0)) {
    throw new Error("evolution: all snapshots are zero");
  }

  const plotW = WIDTH - MARGIN.left - MARGIN.right;
  const plotH = HEIGHT - MARGIN.top - MARGIN.bottom;
  const x = linearScale([xValues[0], xValues[nX - 1]],
                        [MARGIN.left, WIDTH - MARGIN.right]);
  const y = linearScale([sorted[0].t, sorted[sorted.length - 1].t],
                        [HEIGHT - MARGIN.bottom, MARGIN.top]);

  // downsample columns so the file stays small on fine grids
  const maxCols = 220;
  const stride = Math.max(1, Math.ceil(nX / maxCols));
  const body: string[] = [];
  const cellH = plotH / sorted.length;
  sorted.forEach((snap, row) => {
    const yTop = MARGIN.top + plotH - (row + 1) * cellH;
    for (let i = 0; i < nX; i += stride) {
      const lo = i;
      const hi = Math.min(nX, i + stride);
      let value = 0;
      for (let j = lo; j < hi; j++) value = Math.max(value, snap.abs[j]);
      const xLeft = x(xValues[lo]);
      const xRight = x(xValues[Math.min(nX - 1, hi)]);
      body.push(el("rect", {
        x: fmt(xLeft), y: fmt(yTop),
        width: fmt(Math.max(0.1, xRight - xLeft)), height: fmt(cellH + 0.5),
        fill: heatColor(value / peak),
      }));
    }
  });
  body.push(...axes(x, y, { xColumn: "x", yColumn: "t", xLog: false, yLog: false,
                            xLabel: "x", yLabel: "t" }));
  // color bar
  const barX = WIDTH - MARGIN.right + 24;
  const steps = 40;
  for (let i = 0; i < steps; i++) {
    const frac = i / (steps - 1);
    body.push(el("rect", {
      x: fmt(barX), y: fmt(HEIGHT - MARGIN.bottom - (i + 1) * (plotH / steps)),
      width: fmt(14), height: fmt(plotH / steps + 0.5),
      fill: heatColor(frac),
    }));
  }
  body.push(text(fmt(barX + 20), fmt(MARGIN.top + 10), `${peak.toFixed(3)}`));
  body.push(text(fmt(barX + 20), fmt(HEIGHT - MARGIN.bottom), "0"));
  body.push(text(fmt(barX), fmt(MARGIN.top - 8), "|u|"));
  if (title) {
    body.push(text(fmt(WIDTH / 2), fmt(18), title,
                   { "text-anchor": "middle", "font-size": 13 }));
  }
  return svgDocument(WIDTH, HEIGHT, body);
}
