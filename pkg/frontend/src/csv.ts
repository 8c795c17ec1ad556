/** Minimal reader for the harness CSV outputs (no quoting, no escapes). */

export interface Table {
  columns: string[];
  rows: Record<string, string>[];
}

export function parseCsv(text: string): Table {
  const lines = text
    .split(/\r?\n/)
    .map((l) => l.trim())
    .filter((l) => l.length > 0);
  if (lines.length === 0) {
    throw new Error("empty CSV input");
  }
  const columns = lines[0].split(",");
  const rows = lines.slice(1).map((line) => {
    const cells = line.split(",");
    const row: Record<string, string> = {};
    columns.forEach((c, i) => {
      row[c] = cells[i] ?? "";
    });
    return row;
  });
  return { columns, rows };
}

export function requireColumns(table: Table, needed: string[], source: string): void {
  for (const column of needed) {
    if (!table.columns.includes(column)) {
      throw new Error(
        `${source}: missing column '${column}' (has: ${table.columns.join(", ")})`,
      );
    }
  }
}

/** Numeric cell value; NaN for blank/nan cells. */
export function num(row: Record<string, string>, column: string): number {
  const cell = row[column];
  if (cell === undefined || cell === "") return NaN;
  return Number(cell);
}
