/**
 * Reader for the admkit batch CSV schema:
 * name,n,m,avg_degree,max_degree,degeneracy,adm2,time_ms,peak_mem_kb,graph_mem_kb
 *
 * Marker rows (timeouts, per-file errors) carry a non-numeric adm2 and are
 * dropped with a note in `skipped`.
 */

export interface StatsRow {
  name: string;
  n: number;
  m: number;
  avgDegree: number;
  maxDegree: number;
  degeneracy: number;
  adm2: number;
  timeMs: number;
  peakMemKb: number;
  graphMemKb: number;
}

export interface ParsedCsv {
  rows: StatsRow[];
  skipped: string[];
}

const REQUIRED = ["name", "degeneracy", "adm2"];

export function parseStatsCsv(text: string): ParsedCsv {
  const lines = text.split(/\r?\n/).filter((l) => l.trim().length > 0);
  if (lines.length === 0) {
    throw new Error("empty CSV");
  }
  const header = lines[0].split(",").map((h) => h.trim());
  for (const col of REQUIRED) {
    if (!header.includes(col)) {
      throw new Error(`missing column: ${col}`);
    }
  }
  const idx = (col: string) => header.indexOf(col);
  const num = (fields: string[], col: string): number => {
    const i = idx(col);
    return i === -1 || fields[i] === "" ? NaN : Number(fields[i]);
  };

  const rows: StatsRow[] = [];
  const skipped: string[] = [];
  for (const line of lines.slice(1)) {
    const fields = line.split(",");
    const name = fields[idx("name")] ?? "";
    const adm2 = num(fields, "adm2");
    const degeneracy = num(fields, "degeneracy");
    if (!Number.isFinite(adm2) || !Number.isFinite(degeneracy)) {
      skipped.push(name);
      continue;
    }
    rows.push({
      name,
      n: num(fields, "n"),
      m: num(fields, "m"),
      avgDegree: num(fields, "avg_degree"),
      maxDegree: num(fields, "max_degree"),
      degeneracy,
      adm2,
      timeMs: num(fields, "time_ms"),
      peakMemKb: num(fields, "peak_mem_kb"),
      graphMemKb: num(fields, "graph_mem_kb"),
    });
  }
  return { rows, skipped };
}
