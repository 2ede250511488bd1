import { describe, expect, it } from "vitest";

import { HEADER_TAG, parseOmegaGrid } from "../src/csv.js";
import { syntheticCsv } from "./helpers.js";

describe("parseOmegaGrid", () => {
  it("parses a well-formed file", () => {
    const grid = parseOmegaGrid(
      syntheticCsv([
        [-0.5, -0.5, 0.7071067811865476, 1.25],
        [0.5, -0.5, 0.7071067811865476, -0.75],
        [-0.5, 0.5, 0.7071067811865476, null],
        [0.5, 0.5, 0.7071067811865476, 0.125],
      ]),
    );
    expect(grid.vertices.A).toEqual([1, 0, 0]);
    expect(grid.area).toBeCloseTo(Math.PI / 2, 12);
    expect(grid.scaled).toBe(true);
    expect(grid.hemisphere).toBe("upper");
    expect(grid.notes).toEqual(["synthetic fixture"]);
    expect(grid.rows).toHaveLength(4);
    expect(grid.rows[2].value).toBeNull();
    expect(grid.resolution).toBe(3); // spacing 1 over [-1, 1]
  });

  it("round-trips 17-digit float values exactly", () => {
    const value = 0.8863687937532722;
    const grid = parseOmegaGrid(
      syntheticCsv([
        [0.25, -0.25, 0.93, value],
        [-0.25, -0.25, 0.93, 0],
      ]),
    );
    expect(grid.rows[0].value).toBe(value);
  });

  it("rejects a wrong first line", () => {
    expect(() => parseOmegaGrid("# some other format\nx,y,z,value\n")).toThrow(
      /not an omega-grid v1 file/,
    );
  });

  it("rejects missing vertex lines", () => {
    const text = [HEADER_TAG, "# S=1", "# scaled=true", "# hemisphere=upper", "x,y,z,value", "0,0,1,1"].join("\n");
    expect(() => parseOmegaGrid(text)).toThrow(/missing vertex/);
  });

  it("rejects a missing column header", () => {
    const text = [HEADER_TAG, "# A=1 0 0", "# B=0 1 0", "# C=0 0 1", "# S=1", "# scaled=true", "# hemisphere=upper", "0,0,1,1"].join("\n");
    expect(() => parseOmegaGrid(text)).toThrow(/column header/);
  });

  it("rejects non-finite values", () => {
    const text = syntheticCsv([
      [0.5, 0.5, 0.7, 1.0],
      [-0.5, 0.5, 0.7, 2.0],
    ]).replace("1", "nan");
    expect(() => parseOmegaGrid(text)).toThrow();
  });

  it("rejects an invalid hemisphere", () => {
    expect(() =>
      parseOmegaGrid(
        syntheticCsv(
          [
            [0, 0, 1, 1],
            [0.5, 0, 0.86, 1],
          ],
          { hemisphere: "both" },
        ),
      ),
    ).toThrow(/hemisphere/);
  });

  it("parses scaled=false", () => {
    const grid = parseOmegaGrid(
      syntheticCsv(
        [
          [0.5, 0.5, 0.7, 1.0],
          [-0.5, 0.5, 0.7, 2.0],
        ],
        { scaled: "false" },
      ),
    );
    expect(grid.scaled).toBe(false);
  });
});
