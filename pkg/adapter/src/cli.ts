#!/usr/bin/env node
/**
 * embed-export: run a sentence encoder over a pair dataset and write
 * embedding or score files in the pairsim wire formats.
 */

import { realpathSync } from "node:fs";
import { fileURLToPath } from "node:url";

import yargs from "yargs";
import { hideBin } from "yargs/helpers";

import { exportEmbeddings, exportPairScores, type ExportConfig } from "./export.js";
import { createEncoder, createPairScorer } from "./models.js";
import type { PairFormat } from "./dataset.js";

interface CommonArgs {
  model: string;
  dataset: string;
  format: string;
  output: string;
  "batch-size": number;
}

function config(argv: CommonArgs): ExportConfig {
  return {
    dataset: argv.dataset,
    format: argv.format as PairFormat,
    output: argv.output,
    batchSize: argv["batch-size"],
  };
}

const common = {
  model: { type: "string", default: "stub", describe: "stub, stub:<dim> or use" },
  dataset: { type: "string", demandOption: true, describe: "labeled pair file" },
  format: {
    type: "string",
    default: "qqp-tsv",
    choices: ["qqp-tsv", "generic-csv"],
    describe: "dataset layout",
  },
  output: { type: "string", demandOption: true, describe: "file to write" },
  "batch-size": { type: "number", default: 32, describe: "texts per encoder call" },
} as const;

export async function run(argv: string[]): Promise<number> {
  try {
    await yargs(argv)
      .scriptName("embed-export")
      .command(
        "embeddings",
        "write one embedding line per unique text id",
        common,
        async (args) => {
          const report = await exportEmbeddings(config(args as CommonArgs), createEncoder(args.model as string));
          console.log(`wrote ${report.records} embedding(s) of dim ${report.dim ?? "n/a"} -> ${args.output}`);
        },
      )
      .command(
        "scores",
        "write one score line per pair",
        common,
        async (args) => {
          const report = await exportPairScores(config(args as CommonArgs), createPairScorer(args.model as string));
          console.log(`wrote ${report.records} score(s) -> ${args.output}`);
        },
      )
      .demandCommand(1)
      .strict()
      .fail(false)
      .parseAsync();
    return 0;
  } catch (error) {
    const message = error instanceof Error ? error.message : String(error);
    console.error(`embed-export: ${message}`);
    return 1;
  }
}

const invokedDirectly = (() => {
  if (!process.argv[1]) return false;
  try {
    // realpath so the npm bin symlink counts as direct invocation
    return fileURLToPath(import.meta.url) === realpathSync(process.argv[1]);
  } catch {
    return false;
  }
})();
if (invokedDirectly) {
  run(hideBin(process.argv)).then((code) => {
    process.exitCode = code;
  });
}
