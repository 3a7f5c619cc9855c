import type { FitInput, FitResult } from "./fit.js";

export interface OutlierReport {
  /** names whose observation sits below the fitted curve, |z| >= threshold */
  below: string[];
  /** names whose observation sits above the fitted curve, |z| >= threshold */
  above: string[];
}

/**
 * Split the networks whose residual z-score has absolute value at least
 * `threshold` (default 3) by the side of the fitted curve they fall on.
 * `points` must be the same rows, in the same order, that produced `fit`.
 */
export function outliers(
  points: FitInput[],
  fit: FitResult,
  threshold = 3,
): OutlierReport {
  if (points.length !== fit.residualZ.length) {
    throw new Error(
      `fit has ${fit.residualZ.length} residuals but ${points.length} rows given`,
    );
  }
  const below: string[] = [];
  const above: string[] = [];
  for (let i = 0; i < points.length; i++) {
    const z = fit.residualZ[i];
    if (Math.abs(z) >= threshold) {
      (fit.residuals[i] < 0 ? below : above).push(points[i].name);
    }
  }
  return { below, above };
}
