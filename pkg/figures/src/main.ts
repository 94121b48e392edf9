#!/usr/bin/env node
/**
 * Region-figure CLI.
 *
 * Usage:
 *   figures --mode cube3d --in sweep.csv --out figure.svg
 *   figures --mode pc2d   --in sweep.csv --out figure.svg
 *
 * Reads a nonloc sweep CSV and writes a deterministic SVG: identical input
 * bytes give identical output bytes. Only .svg output is supported.
 */

import { readFile, writeFile } from "node:fs/promises";
import { parseSweepCsv } from "./csv.js";
import { MODES, render } from "./render.js";

const USAGE = "usage: figures --mode <cube3d|pc2d> --in <sweep.csv> --out <figure.svg>";

interface Args {
  mode: string;
  inPath: string;
  outPath: string;
}

function parseArgs(argv: string[]): Args {
  let mode: string | undefined;
  let inPath: string | undefined;
  let outPath: string | undefined;
  for (let i = 0; i < argv.length; i += 2) {
    const flag = argv[i];
    const value = argv[i + 1];
    if (value === undefined) throw new Error(`missing value for ${flag}\n${USAGE}`);
    if (flag === "--mode") mode = value;
    else if (flag === "--in") inPath = value;
    else if (flag === "--out") outPath = value;
    else throw new Error(`unknown flag: ${flag}\n${USAGE}`);
  }
  if (!mode || !inPath || !outPath) throw new Error(USAGE);
  if (!(MODES as readonly string[]).includes(mode)) {
    throw new Error(`unknown mode: ${mode} (expected cube3d or pc2d)`);
  }
  if (!outPath.endsWith(".svg")) {
    throw new Error(
      `unsupported output format for ${outPath}: only vector output is produced, use a .svg path`
    );
  }
  return { mode, inPath, outPath };
}

async function main(): Promise<void> {
  const args = parseArgs(process.argv.slice(2));
  const text = await readFile(args.inPath, "utf-8");
  const rows = parseSweepCsv(text);
  const svg = render(args.mode, rows);
  await writeFile(args.outPath, svg, "utf-8");
  const drawn = rows.filter((r) => r.cp).length;
  console.log(`SVG → ${args.outPath} (${drawn} CP nodes of ${rows.length} rows)`);
}

main().catch((err: unknown) => {
  console.error(err instanceof Error ? err.message : String(err));
  process.exit(1);
});
