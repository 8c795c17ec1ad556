#!/usr/bin/env node
/** plots <kind> --in <csv|dir ...> --out <figure.svg> [--title T] [--y-col C]
 *
 * Kinds: err-vs-dt | efficiency | invariant | err-vs-n | evolution.
 * Series figures read one or more sweep CSV files (rows are concatenated);
 * the evolution figure reads a directory of snap_*.csv snapshots with their
 * JSON sidecars. Output is deterministic SVG.
 */

import { readFileSync, readdirSync, statSync, writeFileSync } from "fs";
import { basename, join } from "path";

import { Table, parseCsv } from "./csv.js";
import {
  SeriesKind,
  Snapshot,
  renderEvolutionFigure,
  renderSeriesFigure,
} from "./figures.js";

const SERIES_KINDS = ["err-vs-dt", "efficiency", "invariant", "err-vs-n"];

interface CliArgs {
  kind: string;
  inputs: string[];
  out: string;
  title?: string;
  yColumn?: string;
}

export function parseArgs(argv: string[]): CliArgs {
  if (argv.length === 0) {
    throw new Error(
      "usage: plots <err-vs-dt|efficiency|invariant|err-vs-n|evolution> " +
      "--in <path...> --out <figure.svg> [--title T] [--y-col C]",
    );
  }
  const [kind, ...rest] = argv;
  const inputs: string[] = [];
  let out = "";
  let title: string | undefined;
  let yColumn: string | undefined;
  for (let i = 0; i < rest.length; i++) {
    const flag = rest[i];
    if (flag === "--in") {
      while (i + 1 < rest.length && !rest[i + 1].startsWith("--")) {
        inputs.push(rest[++i]);
      }
    } else if (flag === "--out") {
      out = rest[++i] ?? "";
    } else if (flag === "--title") {
      title = rest[++i];
    } else if (flag === "--y-col") {
      yColumn = rest[++i];
    } else {
      throw new Error(`unknown argument '${flag}'`);
    }
  }
  if (inputs.length === 0) throw new Error("--in requires at least one path");
  if (!out) throw new Error("--out is required");
  return { kind, inputs, out, title, yColumn };
}

function mergeTables(paths: string[]): Table {
  const tables = paths.map((p) => parseCsv(readFileSync(p, "utf8")));
  const columns = tables[0].columns;
  for (const [i, table] of tables.entries()) {
    if (table.columns.join(",") !== columns.join(",")) {
      throw new Error(`${paths[i]}: column mismatch with ${paths[0]}`);
    }
  }
  return { columns, rows: tables.flatMap((t) => t.rows) };
}

export function loadSnapshots(dir: string): Snapshot[] {
  const files = readdirSync(dir)
    .filter((f) => f.endsWith(".csv"))
    .sort();
  if (files.length === 0) {
    throw new Error(`${dir}: no snapshot CSV files`);
  }
  return files.map((file) => {
    const table = parseCsv(readFileSync(join(dir, file), "utf8"));
    const meta = JSON.parse(
      readFileSync(join(dir, file.replace(/\.csv$/, ".json")), "utf8"),
    );
    const x: number[] = [];
    const abs: number[] = [];
    for (const row of table.rows) {
      x.push(Number(row["x"]));
      abs.push(Math.hypot(Number(row["re"]), Number(row["im"])));
    }
    return { t: Number(meta.t), x, abs };
  });
}

export function run(argv: string[]): string {
  const args = parseArgs(argv);
  let svg: string;
  if (SERIES_KINDS.includes(args.kind)) {
    const table = mergeTables(args.inputs);
    svg = renderSeriesFigure(table, {
      kind: args.kind as SeriesKind,
      yColumn: args.yColumn,
      title: args.title ?? basename(args.inputs[0]),
    });
  } else if (args.kind === "evolution") {
    const target = args.inputs[0];
    const snaps = statSync(target).isDirectory()
      ? loadSnapshots(target)
      : args.inputs.map((p, i) => {
          const table = parseCsv(readFileSync(p, "utf8"));
          return {
            t: i,
            x: table.rows.map((r) => Number(r["x"])),
            abs: table.rows.map((r) => Math.hypot(Number(r["re"]), Number(r["im"]))),
          };
        });
    svg = renderEvolutionFigure(snaps, args.title ?? basename(target));
  } else {
    throw new Error(
      `unknown figure kind '${args.kind}' (expected ${SERIES_KINDS.join("|")}|evolution)`,
    );
  }
  writeFileSync(args.out, svg);
  return args.out;
}

const isMain = process.argv[1] !== undefined &&
  import.meta.url.endsWith(basename(process.argv[1]));
if (isMain) {
  try {
    const out = run(process.argv.slice(2));
    console.log(`wrote ${out}`);
  } catch (err) {
    console.error(String(err instanceof Error ? err.message : err));
    process.exit(1);
  }
}
