/** Client-side CSV parsing for uploaded profiles.
 *
 * Accepts one-column (z) or two-column (x, z) numeric files; comment lines
 * start with # or //, and comma/semicolon/tab/space delimiters all work.
 * Two-column files must be equidistant in x; the spacing becomes dx.
 */

export interface ParsedCsv {
  z: number[];
  /** derived from the x column; null for one-column files (user supplies dx) */
  dx: number | null;
}

export class CsvError extends Error {
  constructor(message: string, readonly line: number | null = null) {
    super(line === null ? message : `line ${line}: ${message}`);
    this.name = "CsvError";
  }
}

const DX_RELATIVE_TOLERANCE = 1e-6;

export function parseCsv(text: string): ParsedCsv {
  const rows: number[][] = [];
  const lines = text.split(/\r\n|\r|\n/);
  for (let i = 0; i < lines.length; i++) {
    const raw = lines[i].trim();
    if (raw === "" || raw.startsWith("#") || raw.startsWith("//")) continue;
    const fields = raw.split(/[,;\t ]+/).filter((f) => f !== "");
    const values = fields.map((f) => Number(f));
    if (values.some((v) => Number.isNaN(v))) {
      throw new CsvError(`non-numeric value in ${JSON.stringify(raw)}`, i + 1);
    }
    if (values.length < 1 || values.length > 2) {
      throw new CsvError(`expected 1 or 2 columns, got ${values.length}`, i + 1);
    }
    if (rows.length > 0 && values.length !== rows[0].length) {
      throw new CsvError(
        `inconsistent column count (${values.length} vs ${rows[0].length})`, i + 1);
    }
    rows.push(values);
  }
  if (rows.length < 2) {
    throw new CsvError("a profile needs at least 2 data points");
  }
  if (rows[0].length === 1) {
    return { z: rows.map((r) => r[0]), dx: null };
  }
  const x = rows.map((r) => r[0]);
  const z = rows.map((r) => r[1]);
  const dx = (x[x.length - 1] - x[0]) / (x.length - 1);
  if (!(dx > 0)) {
    throw new CsvError("x values must be strictly increasing");
  }
  for (let i = 1; i < x.length; i++) {
    const step = x[i] - x[i - 1];
    if (Math.abs(step - dx) > DX_RELATIVE_TOLERANCE * Math.max(Math.abs(dx), 1)) {
      throw new CsvError(
        `x values are not equidistant (step ${step} vs ${dx})`, i + 1);
    }
  }
  return { z, dx };
}
