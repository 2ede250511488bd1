import { inflateSync } from "node:zlib";

import { describe, expect, it } from "vitest";

import { encodePng } from "../src/png.js";

function chunks(buf: Buffer): Array<{ type: string; data: Buffer }> {
  const out = [];
  let offset = 8;
  while (offset < buf.length) {
    const length = buf.readUInt32BE(offset);
    const type = buf.subarray(offset + 4, offset + 8).toString("ascii");
    const data = buf.subarray(offset + 8, offset + 8 + length);
    out.push({ type, data });
    offset += 12 + length;
  }
  return out;
}

describe("encodePng", () => {
  it("writes the PNG signature and chunk skeleton", () => {
    const png = encodePng(2, 2, new Uint8Array(16).fill(128));
    expect([...png.subarray(0, 8)]).toEqual([0x89, 0x50, 0x4e, 0x47, 0x0d, 0x0a, 0x1a, 0x0a]);
    expect(chunks(png).map((c) => c.type)).toEqual(["IHDR", "IDAT", "IEND"]);
  });

  it("encodes dimensions and recoverable pixel data", () => {
    const width = 3;
    const height = 2;
    const rgba = new Uint8Array(width * height * 4);
    for (let i = 0; i < rgba.length; i++) rgba[i] = (i * 7) % 256;
    const png = encodePng(width, height, rgba);
    const parsed = chunks(png);
    const ihdr = parsed[0].data;
    expect(ihdr.readUInt32BE(0)).toBe(width);
    expect(ihdr.readUInt32BE(4)).toBe(height);
    expect(ihdr[9]).toBe(6); // RGBA

    const raw = inflateSync(parsed[1].data);
    expect(raw.length).toBe(height * (1 + width * 4));
    for (let row = 0; row < height; row++) {
      expect(raw[row * (1 + width * 4)]).toBe(0); // filter byte
      const scanline = raw.subarray(row * (1 + width * 4) + 1, (row + 1) * (1 + width * 4));
      expect([...scanline]).toEqual([...rgba.subarray(row * width * 4, (row + 1) * width * 4)]);
    }
  });

  it("rejects a mismatched buffer size", () => {
    expect(() => encodePng(2, 2, new Uint8Array(3))).toThrow(/does not match/);
  });
});
