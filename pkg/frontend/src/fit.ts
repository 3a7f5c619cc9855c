/**
 * One-parameter least-squares fits of 2-admissibility against degeneracy.
 *
 * Three model shapes: a2 = alpha * d, a2 = d ^ alpha, a2 = alpha ^ d.
 * Each is fitted by minimizing the sum of squared residuals over alpha
 * (coarse scan, then golden-section refinement); residual z-scores are
 * computed on the raw residuals.
 */

export type ModelKind = "linear" | "power" | "exponential";

export interface FitResult {
  model: ModelKind;
  alpha: number;
  rSquared: number;
  /** raw residual (observed - predicted) per input point */
  residuals: number[];
  /** z-score of each residual over the dataset */
  residualZ: number[];
}

export interface FitInput {
  name: string;
  degeneracy: number;
  adm2: number;
}

export const MODELS: Record<ModelKind, (d: number, alpha: number) => number> = {
  linear: (d, alpha) => alpha * d,
  power: (d, alpha) => Math.pow(d, alpha),
  exponential: (d, alpha) => Math.pow(alpha, d),
};

const SEARCH_RANGE: Record<ModelKind, [number, number]> = {
  linear: [0, 1000],
  power: [-5, 5],
  exponential: [1e-6, 3],
};

function sse(points: FitInput[], model: ModelKind, alpha: number): number {
  let total = 0;
  for (const p of points) {
    const r = p.adm2 - MODELS[model](p.degeneracy, alpha);
    total += r * r;
  }
  return total;
}

/** Golden-section minimization of a unimodal-enough 1-D objective. */
function goldenSection(
  f: (x: number) => number,
  lo: number,
  hi: number,
  tol = 1e-13,
): number {
  const phi = (Math.sqrt(5) - 1) / 2;
  let a = lo;
  let b = hi;
  let c = b - phi * (b - a);
  let d = a + phi * (b - a);
  let fc = f(c);
  let fd = f(d);
  while (b - a > tol * Math.max(1, Math.abs(a) + Math.abs(b))) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = f(d);
    }
  }
  return (a + b) / 2;
}

function minimizeAlpha(points: FitInput[], model: ModelKind): number {
  const [lo, hi] = SEARCH_RANGE[model];
  // coarse scan to bracket the global minimum before refining
  const steps = 2000;
  let bestX = lo;
  let bestF = Infinity;
  for (let i = 0; i <= steps; i++) {
    const x = lo + ((hi - lo) * i) / steps;
    const f = sse(points, model, x);
    if (f < bestF) {
      bestF = f;
      bestX = x;
    }
  }
  const span = (hi - lo) / steps;
  return goldenSection(
    (x) => sse(points, model, x),
    Math.max(lo, bestX - 2 * span),
    Math.min(hi, bestX + 2 * span),
  );
}

export function mean(xs: number[]): number {
  return xs.reduce((acc, x) => acc + x, 0) / xs.length;
}

export function populationStd(xs: number[], avg = mean(xs)): number {
  return Math.sqrt(mean(xs.map((x) => (x - avg) ** 2)));
}

export function fitModel(points: FitInput[], model: ModelKind): FitResult {
  if (points.length < 3) {
    throw new Error("need at least 3 rows to fit");
  }
  const ys = points.map((p) => p.adm2);
  const ds = points.map((p) => p.degeneracy);
  if (new Set(ds).size === 1) {
    throw new Error("degenerate data: degeneracy column is constant");
  }
  if (new Set(ys).size === 1 && new Set(ds).size === 1) {
    throw new Error("degenerate data: constant columns");
  }
  const alpha = minimizeAlpha(points, model);
  const residuals = points.map(
    (p) => p.adm2 - MODELS[model](p.degeneracy, alpha),
  );
  const ssRes = residuals.reduce((acc, r) => acc + r * r, 0);
  const yMean = mean(ys);
  const ssTot = ys.reduce((acc, y) => acc + (y - yMean) ** 2, 0);
  const rSquared = ssTot === 0 ? 1 : 1 - ssRes / ssTot;
  const rMean = mean(residuals);
  const rStd = populationStd(residuals, rMean);
  const residualZ = residuals.map((r) =>
    rStd === 0 ? 0 : (r - rMean) / rStd,
  );
  return { model, alpha, rSquared, residuals, residualZ };
}

export function fitModels(
  points: FitInput[],
): Record<ModelKind, FitResult> {
  return {
    linear: fitModel(points, "linear"),
    power: fitModel(points, "power"),
    exponential: fitModel(points, "exponential"),
  };
}
