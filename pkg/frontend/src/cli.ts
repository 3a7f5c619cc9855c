#!/usr/bin/env node
/**
 * adm2-analysis: post-processing for admkit batch CSVs.
 *
 *   adm2-analysis fit <stats.csv>
 *   adm2-analysis outliers <stats.csv> [--threshold Z] [--model power]
 *   adm2-analysis figures <stats.csv> <outdir>
 */

import * as fs from "node:fs";
import { parseStatsCsv } from "./csv.js";
import { fitModels, type FitInput, type ModelKind } from "./fit.js";
import { outliers } from "./outliers.js";
import { makeFigures } from "./figures.js";

function loadPoints(csvPath: string): {
  points: FitInput[];
  rows: ReturnType<typeof parseStatsCsv>["rows"];
  skipped: string[];
} {
  const { rows, skipped } = parseStatsCsv(fs.readFileSync(csvPath, "utf8"));
  const points = rows.map((r) => ({
    name: r.name,
    degeneracy: r.degeneracy,
    adm2: r.adm2,
  }));
  return { points, rows, skipped };
}

export function main(argv: string[]): number {
  const [cmd, ...rest] = argv;
  try {
    if (cmd === "fit") {
      const { points, skipped } = loadPoints(rest[0]);
      const fits = fitModels(points);
      for (const f of Object.values(fits)) {
        console.log(
          `${f.model}: alpha=${f.alpha.toFixed(6)} r_squared=${f.rSquared.toFixed(4)}`,
        );
      }
      if (skipped.length > 0) {
        console.error(`skipped ${skipped.length} marker rows`);
      }
      return 0;
    }
    if (cmd === "outliers") {
      let threshold = 3;
      let model: ModelKind = "power";
      const pos: string[] = [];
      for (let i = 0; i < rest.length; i++) {
        if (rest[i] === "--threshold") threshold = Number(rest[++i]);
        else if (rest[i] === "--model") model = rest[++i] as ModelKind;
        else pos.push(rest[i]);
      }
      const { points } = loadPoints(pos[0]);
      const fits = fitModels(points);
      const rep = outliers(points, fits[model], threshold);
      console.log(`below: ${rep.below.join(", ") || "(none)"}`);
      console.log(`above: ${rep.above.join(", ") || "(none)"}`);
      return 0;
    }
    if (cmd === "figures") {
      const { rows } = loadPoints(rest[0]);
      const out = makeFigures(rows, rest[1] ?? ".");
      for (const f of out.files) console.log(f);
      console.log(out.sidecar);
      return 0;
    }
    console.error(
      "usage: adm2-analysis {fit|outliers|figures} <stats.csv> [args]",
    );
    return 2;
  } catch (err) {
    console.error(`error: ${err instanceof Error ? err.message : err}`);
    return 2;
  }
}

if (import.meta.url === `file://${process.argv[1]}`) {
  process.exit(main(process.argv.slice(2)));
}
