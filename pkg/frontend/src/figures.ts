/**
 * SVG scatter-plot generation from a batch stats CSV.
 *
 * Three figures: running time vs adm₂, peak memory vs adm₂, and adm₂ vs
 * degeneracy with the fitted power curve and residual outliers highlighted.
 * Marker area is proportional to the edge count m; dashed percentile guide
 * lines annotate the y axis. A JSON sidecar records the fit parameters.
 */

import * as fs from "node:fs";
import * as path from "node:path";
import type { StatsRow } from "./csv.js";
import { fitModels, MODELS, type FitInput } from "./fit.js";
import { outliers, type OutlierReport } from "./outliers.js";

interface Scale {
  toPx: (v: number) => number;
  ticks: number[];
  log: boolean;
}

const WIDTH = 640;
const HEIGHT = 440;
const MARGIN = { left: 64, right: 20, top: 28, bottom: 48 };

function makeScale(
  values: number[],
  pxLo: number,
  pxHi: number,
  log: boolean,
): Scale {
  const pos = values.filter((v) => Number.isFinite(v) && (!log || v > 0));
  let lo = Math.min(...pos);
  let hi = Math.max(...pos);
  if (lo === hi) {
    lo = log ? lo / 2 : lo - 1;
    hi = log ? hi * 2 : hi + 1;
  }
  if (log) {
    const la = Math.log10(lo);
    const lb = Math.log10(hi);
    const ticks: number[] = [];
    for (let e = Math.floor(la); e <= Math.ceil(lb); e++) {
      ticks.push(10 ** e);
    }
    return {
      toPx: (v) =>
        pxLo + ((Math.log10(Math.max(v, lo / 10)) - la) / (lb - la)) * (pxHi - pxLo),
      ticks,
      log: true,
    };
  }
  const ticks: number[] = [];
  const step = (hi - lo) / 5;
  for (let i = 0; i <= 5; i++) ticks.push(lo + i * step);
  return {
    toPx: (v) => pxLo + ((v - lo) / (hi - lo)) * (pxHi - pxLo),
    ticks,
    log: false,
  };
}

function fmtTick(v: number): string {
  if (v === 0) return "0";
  const abs = Math.abs(v);
  if (abs >= 1e5 || abs < 1e-2) return v.toExponential(0);
  return abs >= 100 ? v.toFixed(0) : String(Math.round(v * 100) / 100);
}

function percentile(sorted: number[], q: number): number {
  const i = (sorted.length - 1) * q;
  const lo = Math.floor(i);
  const hi = Math.ceil(i);
  return sorted[lo] + (sorted[hi] - sorted[lo]) * (i - lo);
}

function markerRadius(m: number, mMax: number): number {
  // area proportional to edge count, clamped to a readable range
  const r = 12 * Math.sqrt(Math.max(m, 1) / Math.max(mMax, 1));
  return Math.max(2, r);
}

interface ScatterSpec {
  title: string;
  xLabel: string;
  yLabel: string;
  x: (r: StatsRow) => number;
  y: (r: StatsRow) => number;
  logX: boolean;
  logY: boolean;
  curve?: { alpha: number; label: string };
  highlight?: OutlierReport;
}

function renderScatter(rows: StatsRow[], spec: ScatterSpec): string {
  const xs = rows.map(spec.x);
  const ys = rows.map(spec.y);
  const mMax = Math.max(...rows.map((r) => r.m));
  const sx = makeScale(xs, MARGIN.left, WIDTH - MARGIN.right, spec.logX);
  const sy = makeScale(ys, HEIGHT - MARGIN.bottom, MARGIN.top, spec.logY);
  const flagged = new Set([
    ...(spec.highlight?.below ?? []),
    ...(spec.highlight?.above ?? []),
  ]);

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}">`,
    `<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`,
    `<text x="${WIDTH / 2}" y="18" text-anchor="middle" font-size="14">${spec.title}</text>`,
  );

  // axes
  parts.push(
    `<line x1="${MARGIN.left}" y1="${HEIGHT - MARGIN.bottom}" x2="${WIDTH - MARGIN.right}" y2="${HEIGHT - MARGIN.bottom}" stroke="black"/>`,
    `<line x1="${MARGIN.left}" y1="${MARGIN.top}" x2="${MARGIN.left}" y2="${HEIGHT - MARGIN.bottom}" stroke="black"/>`,
  );
  for (const t of sx.ticks) {
    const px = sx.toPx(t);
    parts.push(
      `<line x1="${px}" y1="${HEIGHT - MARGIN.bottom}" x2="${px}" y2="${HEIGHT - MARGIN.bottom + 4}" stroke="black"/>`,
      `<text x="${px}" y="${HEIGHT - MARGIN.bottom + 16}" text-anchor="middle" font-size="10">${fmtTick(t)}</text>`,
    );
  }
  for (const t of sy.ticks) {
    const py = sy.toPx(t);
    parts.push(
      `<line x1="${MARGIN.left - 4}" y1="${py}" x2="${MARGIN.left}" y2="${py}" stroke="black"/>`,
      `<text x="${MARGIN.left - 7}" y="${py + 3}" text-anchor="end" font-size="10">${fmtTick(t)}</text>`,
    );
  }
  parts.push(
    `<text x="${(MARGIN.left + WIDTH - MARGIN.right) / 2}" y="${HEIGHT - 10}" text-anchor="middle" font-size="12">${spec.xLabel}</text>`,
    `<text x="16" y="${(MARGIN.top + HEIGHT - MARGIN.bottom) / 2}" text-anchor="middle" font-size="12" transform="rotate(-90 16 ${(MARGIN.top + HEIGHT - MARGIN.bottom) / 2})">${spec.yLabel}</text>`,
  );

  // percentile guide lines (median and 90th of y)
  const ysSorted = [...ys].filter(Number.isFinite).sort((a, b) => a - b);
  for (const [q, label] of [
    [0.5, "median"],
    [0.9, "p90"],
  ] as const) {
    const v = percentile(ysSorted, q);
    if (!spec.logY || v > 0) {
      const py = sy.toPx(v);
      parts.push(
        `<line class="guide" x1="${MARGIN.left}" y1="${py}" x2="${WIDTH - MARGIN.right}" y2="${py}" stroke="#999" stroke-dasharray="4 3"/>`,
        `<text x="${WIDTH - MARGIN.right - 2}" y="${py - 3}" text-anchor="end" font-size="9" fill="#666">${label}</text>`,
      );
    }
  }

  // fitted curve, if requested
  if (spec.curve) {
    const xLo = Math.min(...xs.filter((v) => !spec.logX || v > 0));
    const xHi = Math.max(...xs);
    const pts: string[] = [];
    for (let i = 0; i <= 100; i++) {
      const x = spec.logX
        ? xLo * Math.pow(xHi / xLo, i / 100)
        : xLo + ((xHi - xLo) * i) / 100;
      const y = MODELS.power(x, spec.curve.alpha);
      pts.push(`${sx.toPx(x).toFixed(2)},${sy.toPx(y).toFixed(2)}`);
    }
    parts.push(
      `<polyline class="fit-curve" points="${pts.join(" ")}" fill="none" stroke="#d62728" stroke-width="1.5"/>`,
      `<text x="${WIDTH - MARGIN.right - 2}" y="${MARGIN.top + 12}" text-anchor="end" font-size="11" fill="#d62728">${spec.curve.label}</text>`,
    );
  }

  // markers, outliers drawn in a distinct style
  for (const r of rows) {
    const x = spec.x(r);
    const y = spec.y(r);
    if (!Number.isFinite(x) || !Number.isFinite(y)) continue;
    if ((spec.logX && x <= 0) || (spec.logY && y <= 0)) continue;
    const rad = markerRadius(r.m, mMax);
    const isOut = flagged.has(r.name);
    const cls = isOut ? "marker outlier" : "marker";
    const style = isOut
      ? 'fill="#ff7f0e" fill-opacity="0.85" stroke="black" stroke-width="1.2"'
      : 'fill="#1f77b4" fill-opacity="0.55" stroke="#1f77b4"';
    parts.push(
      `<circle class="${cls}" cx="${sx.toPx(x).toFixed(2)}" cy="${sy.toPx(y).toFixed(2)}" r="${rad.toFixed(2)}" ${style}><title>${r.name}</title></circle>`,
    );
    if (isOut) {
      parts.push(
        `<text x="${sx.toPx(x).toFixed(2)}" y="${(sy.toPx(y) - rad - 3).toFixed(2)}" text-anchor="middle" font-size="9">${r.name}</text>`,
      );
    }
  }

  parts.push("</svg>");
  return parts.join("\n");
}

export interface FigureOutput {
  files: string[];
  sidecar: string;
}

export function makeFigures(rows: StatsRow[], outDir: string): FigureOutput {
  if (rows.length === 0) {
    throw new Error("no usable rows");
  }
  for (const col of ["m", "timeMs", "peakMemKb"] as const) {
    if (rows.some((r) => !Number.isFinite(r[col]))) {
      const names: Record<string, string> = {
        m: "m",
        timeMs: "time_ms",
        peakMemKb: "peak_mem_kb",
      };
      throw new Error(`missing column: ${names[col]}`);
    }
  }
  fs.mkdirSync(outDir, { recursive: true });

  const points: FitInput[] = rows.map((r) => ({
    name: r.name,
    degeneracy: r.degeneracy,
    adm2: r.adm2,
  }));
  const fits = fitModels(points);
  const out = outliers(points, fits.power);

  const figures: Array<[string, string]> = [
    [
      "time_vs_adm2.svg",
      renderScatter(rows, {
        title: "Running time vs 2-admissibility",
        xLabel: "adm2",
        yLabel: "time (ms)",
        x: (r) => r.adm2,
        y: (r) => r.timeMs,
        logX: true,
        logY: true,
      }),
    ],
    [
      "memory_vs_adm2.svg",
      renderScatter(rows, {
        title: "Peak memory vs 2-admissibility",
        xLabel: "adm2",
        yLabel: "peak memory (kB)",
        x: (r) => r.adm2,
        y: (r) => r.peakMemKb,
        logX: true,
        logY: true,
      }),
    ],
    [
      "adm2_vs_degeneracy.svg",
      renderScatter(rows, {
        title: "2-admissibility vs degeneracy",
        xLabel: "degeneracy",
        yLabel: "adm2",
        x: (r) => r.degeneracy,
        y: (r) => r.adm2,
        logX: true,
        logY: true,
        curve: {
          alpha: fits.power.alpha,
          label: `d^${fits.power.alpha.toFixed(4)}`,
        },
        highlight: out,
      }),
    ],
  ];

  const files: string[] = [];
  for (const [name, svg] of figures) {
    const p = path.join(outDir, name);
    fs.writeFileSync(p, svg);
    files.push(p);
  }

  const sidecar = path.join(outDir, "fit.json");
  fs.writeFileSync(
    sidecar,
    JSON.stringify(
      {
        fits: Object.fromEntries(
          Object.entries(fits).map(([k, f]) => [
            k,
            { alpha: f.alpha, r_squared: f.rSquared },
          ]),
        ),
        outliers: out,
      },
      null,
      2,
    ) + "\n",
  );
  return { files, sidecar };
}
