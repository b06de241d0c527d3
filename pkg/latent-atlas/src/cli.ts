/** Command-line interface: `latent-atlas plot` and `latent-atlas probe`. */

import * as fs from "node:fs";
import yargs from "yargs";
import { hideBin } from "yargs/helpers";

import { loadExport, spaceMatrix, Space } from "./table.js";
import { project2d, Method } from "./project.js";
import { probeScore } from "./probe.js";
import { renderScatter } from "./scatter.js";

export async function main(argv: string[]): Promise<number> {
  await yargs(argv)
    .scriptName("latent-atlas")
    .command(
      "plot <csv>",
      "render a 2-D projection scatter of a latent space, colored by task",
      (y) =>
        y
          .positional("csv", { type: "string", demandOption: true })
          .option("space", { choices: ["task", "state"] as const, default: "task" as Space })
          .option("method", { choices: ["pca", "tsne"] as const, default: "pca" as Method })
          .option("seed", { type: "number", default: 0 })
          .option("out", { type: "string", demandOption: true }),
      (args) => {
        const table = loadExport(args.csv as string);
        const { X, labels } = spaceMatrix(table, args.space);
        const { coords } = project2d(X, args.method, args.seed);
        const svg = renderScatter(coords, labels,
          `${args.space} space (${args.method})`);
        fs.writeFileSync(args.out, svg);
        console.log(args.out);
      },
    )
    .command(
      "probe <csv>",
      "5-fold cross-validated linear-probe accuracy of task labels",
      (y) =>
        y
          .positional("csv", { type: "string", demandOption: true })
          .option("space", { choices: ["task", "state"] as const, default: "task" as Space })
          .option("seed", { type: "number", default: 0 }),
      (args) => {
        const table = loadExport(args.csv as string);
        const { X, labels } = spaceMatrix(table, args.space);
        const result = probeScore(X, labels, args.seed);
        console.log(JSON.stringify(result, null, 2));
      },
    )
    .demandCommand(1)
    .strict()
    .fail((msg, err) => {
      throw err ?? new Error(msg);
    })
    .parseAsync();
  return 0;
}
