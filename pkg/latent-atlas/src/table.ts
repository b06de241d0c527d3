/**
 * Typed loading of latent CSV exports.
 *
 * The CSV contract (one row per control decision of an evaluation episode):
 *
 *   episode_id,step,task_label,mu_l_0..mu_l_{T-1},feat_0..feat_{F-1},agent_variant
 *
 * `mu_l_*` cells are empty for agents without a task belief (the vanilla
 * variant); every other numeric cell must parse as a finite float.
 */

import * as fs from "node:fs";
import Papa from "papaparse";

export class ContractViolation extends Error {}

export interface LatentRow {
  episodeId: number;
  step: number;
  taskLabel: string;
  /** Belief mean over the task, or null when the export has no belief. */
  muL: number[] | null;
  /** World-model state features concat(h, s). */
  features: number[];
  agentVariant: string;
}

export interface LatentTable {
  rows: LatentRow[];
  taskDim: number;
  featDim: number;
  /** False when every mu_l cell is empty (state-space analysis only). */
  hasTaskSpace: boolean;
}

export type Space = "task" | "state";

function headerDims(header: string[]): { taskDim: number; featDim: number } {
  const muCols = header.filter((h) => /^mu_l_\d+$/.test(h));
  const featCols = header.filter((h) => /^feat_\d+$/.test(h));
  const expected = [
    "episode_id",
    "step",
    "task_label",
    ...muCols.map((_, i) => `mu_l_${i}`),
    ...featCols.map((_, i) => `feat_${i}`),
    "agent_variant",
  ];
  if (header.length !== expected.length || header.some((h, i) => h !== expected[i])) {
    throw new ContractViolation(
      `header does not match the latent CSV contract: got [${header.join(",")}]`,
    );
  }
  if (featCols.length === 0) {
    throw new ContractViolation("header has no feat_* columns");
  }
  return { taskDim: muCols.length, featDim: featCols.length };
}

export function loadExport(path: string): LatentTable {
  const text = fs.readFileSync(path, "utf8");
  const parsed = Papa.parse<string[]>(text.trim(), { skipEmptyLines: true });
  if (parsed.errors.length > 0) {
    throw new ContractViolation(`CSV parse error: ${parsed.errors[0].message}`);
  }
  const data = parsed.data;
  if (data.length === 0) {
    throw new ContractViolation("empty file (no header row)");
  }
  const { taskDim, featDim } = headerDims(data[0]);
  if (data.length === 1) {
    throw new ContractViolation("no data rows");
  }

  const num = (cell: string, what: string, line: number): number => {
    const v = Number(cell);
    if (cell === "" || !Number.isFinite(v)) {
      throw new ContractViolation(`non-numeric ${what} on line ${line + 1}: "${cell}"`);
    }
    return v;
  };

  const rows: LatentRow[] = [];
  let anyTask = false;
  for (let i = 1; i < data.length; i++) {
    const cells = data[i];
    if (cells.length !== 3 + taskDim + featDim + 1) {
      throw new ContractViolation(
        `line ${i + 1} has ${cells.length} cells, expected ${3 + taskDim + featDim + 1}`,
      );
    }
    const muCells = cells.slice(3, 3 + taskDim);
    const empty = muCells.every((c) => c === "");
    if (!empty && muCells.some((c) => c === "")) {
      throw new ContractViolation(`line ${i + 1} has partially empty mu_l cells`);
    }
    const muL = empty ? null : muCells.map((c, j) => num(c, `mu_l_${j}`, i));
    if (muL !== null) anyTask = true;
    rows.push({
      episodeId: num(cells[0], "episode_id", i),
      step: num(cells[1], "step", i),
      taskLabel: cells[2],
      muL,
      features: cells
        .slice(3 + taskDim, 3 + taskDim + featDim)
        .map((c, j) => num(c, `feat_${j}`, i)),
      agentVariant: cells[3 + taskDim + featDim],
    });
  }
  return { rows, taskDim, featDim, hasTaskSpace: anyTask };
}

/** Matrix of the chosen latent space, one row per CSV row, plus its labels. */
export function spaceMatrix(table: LatentTable, space: Space): { X: number[][]; labels: string[] } {
  if (space === "task" && !table.hasTaskSpace) {
    throw new ContractViolation(
      "this export has no task space (empty mu_l columns); only state-space analysis is possible",
    );
  }
  const X: number[][] = [];
  const labels: string[] = [];
  for (const row of table.rows) {
    if (space === "task") {
      if (row.muL === null) continue;
      X.push(row.muL);
    } else {
      X.push(row.features);
    }
    labels.push(row.taskLabel);
  }
  return { X, labels };
}
