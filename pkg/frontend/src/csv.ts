/**
 * Parser for the `sphwhitney omega-grid v1` CSV contract.
 *
 * Layout:
 *
 *     # sphwhitney omega-grid v1
 *     # A=<x> <y> <z>
 *     # B=<x> <y> <z>
 *     # C=<x> <y> <z>
 *     # S=<area>
 *     # scaled=true|false
 *     # hemisphere=upper|lower
 *     # note=<free text>       (zero or more)
 *     x,y,z,value
 *     <x>,<y>,<z>,<value-or-empty>
 *
 * Rows with an empty value field are guard-band masked samples.
 */

export const HEADER_TAG = "# sphwhitney omega-grid v1";

export type Vec3 = [number, number, number];

export interface GridRow {
  x: number;
  y: number;
  z: number;
  /** null for masked (guard band) samples */
  value: number | null;
}

export interface OmegaGrid {
  vertices: { A: Vec3; B: Vec3; C: Vec3 };
  area: number;
  scaled: boolean;
  hemisphere: "upper" | "lower";
  notes: string[];
  rows: GridRow[];
  /** grid points per axis, inferred from the distinct x coordinates */
  resolution: number;
  /** spacing of the planar grid, 2 / (resolution - 1) */
  cellSize: number;
}

function parseVec3(text: string, key: string): Vec3 {
  const parts = text.trim().split(/\s+/).map(Number);
  if (parts.length !== 3 || parts.some((v) => !Number.isFinite(v))) {
    throw new Error(`malformed vertex line for ${key}: ${text}`);
  }
  return [parts[0], parts[1], parts[2]];
}

export function parseOmegaGrid(text: string): OmegaGrid {
  const lines = text.split(/\r?\n/);
  if (lines[0] !== HEADER_TAG) {
    throw new Error(`not an omega-grid v1 file (first line: ${JSON.stringify(lines[0] ?? "")})`);
  }

  const vertices: Partial<Record<"A" | "B" | "C", Vec3>> = {};
  let area: number | null = null;
  let scaled: boolean | null = null;
  let hemisphere: "upper" | "lower" | null = null;
  const notes: string[] = [];

  let i = 1;
  for (; i < lines.length; i++) {
    const line = lines[i];
    if (!line.startsWith("#")) break;
    const body = line.slice(1).trim();
    const eq = body.indexOf("=");
    if (eq < 0) continue;
    const key = body.slice(0, eq);
    const value = body.slice(eq + 1);
    switch (key) {
      case "A":
      case "B":
      case "C":
        vertices[key] = parseVec3(value, key);
        break;
      case "S":
        area = Number(value);
        break;
      case "scaled":
        scaled = value === "true";
        break;
      case "hemisphere":
        if (value !== "upper" && value !== "lower") {
          throw new Error(`invalid hemisphere: ${value}`);
        }
        hemisphere = value;
        break;
      case "note":
        notes.push(value);
        break;
      default:
        break; // unknown comment keys are ignored for forward compatibility
    }
  }

  if (!vertices.A || !vertices.B || !vertices.C) {
    throw new Error("missing vertex header lines");
  }
  if (area === null || !Number.isFinite(area)) {
    throw new Error("missing or malformed area header line");
  }
  if (scaled === null) {
    throw new Error("missing scaled header line");
  }
  if (hemisphere === null) {
    throw new Error("missing hemisphere header line");
  }
  if (lines[i] !== "x,y,z,value") {
    throw new Error(`missing column header (got ${JSON.stringify(lines[i] ?? "")})`);
  }

  const rows: GridRow[] = [];
  const xs = new Set<number>();
  for (i += 1; i < lines.length; i++) {
    const line = lines[i];
    if (line === "") continue;
    const parts = line.split(",");
    if (parts.length !== 4) {
      throw new Error(`malformed data row: ${line}`);
    }
    const x = Number(parts[0]);
    const y = Number(parts[1]);
    const z = Number(parts[2]);
    if (![x, y, z].every(Number.isFinite)) {
      throw new Error(`non-finite coordinates in row: ${line}`);
    }
    let value: number | null = null;
    if (parts[3] !== "") {
      value = Number(parts[3]);
      if (!Number.isFinite(value)) {
        throw new Error(`non-finite value in row: ${line}`);
      }
    }
    xs.add(x);
    rows.push({ x, y, z, value });
  }
  if (rows.length === 0) {
    throw new Error("no data rows");
  }

  const sorted = [...xs].sort((a, b) => a - b);
  let spacing = Infinity;
  for (let k = 1; k < sorted.length; k++) {
    const d = sorted[k] - sorted[k - 1];
    if (d > 1e-12 && d < spacing) spacing = d;
  }
  if (!Number.isFinite(spacing)) {
    throw new Error("cannot infer grid spacing");
  }
  const resolution = Math.round(2 / spacing) + 1;

  return {
    vertices: vertices as { A: Vec3; B: Vec3; C: Vec3 },
    area,
    scaled,
    hemisphere,
    notes,
    rows,
    resolution,
    cellSize: 2 / (resolution - 1),
  };
}
