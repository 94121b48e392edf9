/**
 * Reader for the nonloc sweep CSV contract.
 *
 * A sweep file has exactly these 10 columns, in this order:
 *
 *   lambda1,lambda2,lambda3,t3,cp,ch1,ch2,paper_generating,breaks_chsh_direct,horodecki_m
 *
 * Reals are written with up to 17 significant digits, booleans as 0/1.
 * Anything that deviates from the contract is rejected here; the renderers
 * never reclassify, so a bad file must fail loudly rather than draw wrong.
 */

export const SWEEP_COLUMNS = [
  "lambda1",
  "lambda2",
  "lambda3",
  "t3",
  "cp",
  "ch1",
  "ch2",
  "paper_generating",
  "breaks_chsh_direct",
  "horodecki_m",
] as const;

export interface SweepRow {
  lambda1: number;
  lambda2: number;
  lambda3: number;
  t3: number;
  cp: boolean;
  ch1: boolean;
  ch2: boolean;
  paperGenerating: boolean;
  breaksChshDirect: boolean;
  horodeckiM: number;
}

function parseReal(field: string, column: string, line: number): number {
  const v = Number(field);
  if (field.trim() === "" || Number.isNaN(v)) {
    throw new Error(`line ${line}: column ${column} is not a number: ${JSON.stringify(field)}`);
  }
  return v;
}

function parseBool(field: string, column: string, line: number): boolean {
  if (field === "0") return false;
  if (field === "1") return true;
  throw new Error(`line ${line}: column ${column} must be 0 or 1, got ${JSON.stringify(field)}`);
}

/** Parse sweep CSV text into rows, preserving file order (canonical grid order). */
export function parseSweepCsv(text: string): SweepRow[] {
  const lines = text.trim().split("\n");
  const header = lines[0];
  if (header === undefined || header.trim() !== SWEEP_COLUMNS.join(",")) {
    throw new Error(
      `header does not match the sweep column contract; expected ${SWEEP_COLUMNS.join(",")}`
    );
  }

  const rows: SweepRow[] = [];
  for (let i = 1; i < lines.length; i++) {
    const raw = lines[i];
    if (raw === undefined || raw.trim() === "") continue;
    const f = raw.split(",");
    if (f.length !== SWEEP_COLUMNS.length) {
      throw new Error(`line ${i + 1}: expected ${SWEEP_COLUMNS.length} fields, got ${f.length}`);
    }
    const n = i + 1;
    rows.push({
      lambda1: parseReal(f[0]!, "lambda1", n),
      lambda2: parseReal(f[1]!, "lambda2", n),
      lambda3: parseReal(f[2]!, "lambda3", n),
      t3: parseReal(f[3]!, "t3", n),
      cp: parseBool(f[4]!, "cp", n),
      ch1: parseBool(f[5]!, "ch1", n),
      ch2: parseBool(f[6]!, "ch2", n),
      paperGenerating: parseBool(f[7]!, "paper_generating", n),
      breaksChshDirect: parseBool(f[8]!, "breaks_chsh_direct", n),
      horodeckiM: parseReal(f[9]!, "horodecki_m", n),
    });
  }
  if (rows.length === 0) throw new Error("CSV contains a header but no data rows");
  return rows;
}
