import * as fs from "node:fs";
import * as os from "node:os";
import * as path from "node:path";
import { describe, expect, it } from "vitest";

import { ContractViolation, loadExport, spaceMatrix } from "../src/table.js";

const FIXTURES = path.join(__dirname, "fixtures");

function tmpCsv(content: string): string {
  const p = path.join(fs.mkdtempSync(path.join(os.tmpdir(), "atlas-")), "x.csv");
  fs.writeFileSync(p, content);
  return p;
}

describe("loadExport", () => {
  it("loads a taskinfer export with typed columns", () => {
    const table = loadExport(path.join(FIXTURES, "synthetic.csv"));
    expect(table.taskDim).toBe(2);
    expect(table.featDim).toBe(3);
    expect(table.hasTaskSpace).toBe(true);
    expect(table.rows).toHaveLength(9);
    expect(table.rows[0].muL).toEqual([1.25, -0.5]);
    expect(table.rows[0].features).toEqual([0.1, 0.2, 0.30000000000000004]);
    expect(table.rows[0].agentVariant).toBe("taskinfer");
  });

  it("unescapes quoted task labels containing commas", () => {
    const table = loadExport(path.join(FIXTURES, "synthetic.csv"));
    expect(table.rows[6].taskLabel).toBe("skill=swing,fast");
  });

  it("treats all-empty mu_l cells as a missing task space", () => {
    const table = loadExport(path.join(FIXTURES, "vanilla.csv"));
    expect(table.hasTaskSpace).toBe(false);
    expect(table.rows[0].muL).toBeNull();
    // State-space analysis still works ...
    expect(spaceMatrix(table, "state").X).toHaveLength(4);
    // ... but asking for the task space is a contract error, not an empty plot.
    expect(() => spaceMatrix(table, "task")).toThrow(ContractViolation);
  });

  it("rejects a header that does not match the contract", () => {
    const p = tmpCsv("episode,step,label,feat_0,agent_variant\n1,2,a,0.5,x\n");
    expect(() => loadExport(p)).toThrow(ContractViolation);
  });

  it("rejects an empty file instead of producing an empty table", () => {
    expect(() => loadExport(tmpCsv(""))).toThrow(ContractViolation);
    expect(() =>
      loadExport(tmpCsv("episode_id,step,task_label,mu_l_0,feat_0,agent_variant\n")),
    ).toThrow(ContractViolation);
  });

  it("rejects non-numeric feature cells", () => {
    const p = tmpCsv(
      "episode_id,step,task_label,mu_l_0,feat_0,agent_variant\n0,0,a,0.5,oops,taskinfer\n",
    );
    expect(() => loadExport(p)).toThrow(ContractViolation);
  });

  it("round-trips full-precision floats", () => {
    const table = loadExport(path.join(FIXTURES, "synthetic.csv"));
    expect(table.rows[0].features[2]).toBe(0.30000000000000004);
  });
});
