import { HEADER_TAG } from "../src/csv.js";

/** Build a minimal valid omega-grid CSV for parser and renderer tests. */
export function syntheticCsv(
  rows: Array<[number, number, number, number | null]>,
  overrides: Partial<{ hemisphere: string; scaled: string }> = {},
): string {
  const lines = [
    HEADER_TAG,
    "# A=1 0 0",
    "# B=0 1 0",
    "# C=0 0 1",
    "# S=1.5707963267948966",
    `# scaled=${overrides.scaled ?? "true"}`,
    `# hemisphere=${overrides.hemisphere ?? "upper"}`,
    "# note=synthetic fixture",
    "x,y,z,value",
  ];
  for (const [x, y, z, v] of rows) {
    lines.push(`${x},${y},${z},${v === null ? "" : v}`);
  }
  return lines.join("\n") + "\n";
}
