/**
 * Rasterize an omega-grid into an RGBA heatmap.
 *
 * Each grid cell becomes a square block of pixels.  Values are colored on
 * a symmetric diverging scale clipped at a percentile of |value| (the
 * field diverges near the vertex antipodes); masked rows render as dark
 * cells, points outside the unit disc as white background.  Triangle
 * vertices (upper hemisphere) or their negations (lower hemisphere) are
 * overplotted as black dots with a white ring.
 */

import { colorize, symmetricClipLimit, RGB } from "./colormap.js";
import { OmegaGrid } from "./csv.js";

export interface RenderOptions {
  /** percentile of |value| used as the symmetric clip limit (default 99) */
  clipPercentile?: number;
  /** pixel block size per grid cell; default targets a ~512px image */
  scale?: number;
  /** overplot vertex/antipode markers (default true) */
  markers?: boolean;
}

export interface Rendered {
  width: number;
  height: number;
  rgba: Uint8Array;
  /** symmetric clip limit actually used */
  limit: number;
  /** marker positions in the (x, y) projection plane */
  markers: Array<[number, number]>;
}

const BACKGROUND: RGB = [255, 255, 255];
const MASKED: RGB = [40, 40, 40];

export function markerPositions(grid: OmegaGrid): Array<[number, number]> {
  const sign = grid.hemisphere === "upper" ? 1 : -1;
  const { A, B, C } = grid.vertices;
  return [A, B, C].map(([x, y]) => [sign * x, sign * y]);
}

function cellIndex(coord: number, resolution: number): number {
  return Math.round(((coord + 1) / 2) * (resolution - 1));
}

export function renderGrid(grid: OmegaGrid, options: RenderOptions = {}): Rendered {
  const clipPercentile = options.clipPercentile ?? 99;
  const n = grid.resolution;
  const scale = options.scale ?? Math.max(1, Math.round(512 / n));
  const size = n * scale;

  const values = grid.rows
    .filter((r) => r.value !== null)
    .map((r) => r.value as number);
  const limit = symmetricClipLimit(values, clipPercentile);

  const rgba = new Uint8Array(size * size * 4);
  const paintCell = (i: number, j: number, [r, g, b]: RGB) => {
    // i: x index (column), j: y index; image rows run top-down, +y up
    const row0 = (n - 1 - j) * scale;
    const col0 = i * scale;
    for (let dy = 0; dy < scale; dy++) {
      for (let dx = 0; dx < scale; dx++) {
        const p = ((row0 + dy) * size + col0 + dx) * 4;
        rgba[p] = r;
        rgba[p + 1] = g;
        rgba[p + 2] = b;
        rgba[p + 3] = 255;
      }
    }
  };

  for (let j = 0; j < n; j++) {
    for (let i = 0; i < n; i++) {
      paintCell(i, j, BACKGROUND);
    }
  }
  for (const row of grid.rows) {
    const i = cellIndex(row.x, n);
    const j = cellIndex(row.y, n);
    paintCell(i, j, row.value === null ? MASKED : colorize(row.value, limit));
  }

  const markers = markerPositions(grid);
  const drawnMarkers = options.markers ?? true ? markers : [];
  const radius = Math.min(Math.max(2, Math.round(scale * 1.2)), Math.max(2, Math.floor(size / 16)));
  for (const [mx, my] of drawnMarkers) {
    const cx = ((mx + 1) / 2) * (size - 1);
    const cy = ((1 - my) / 2) * (size - 1);
    for (let py = Math.floor(cy - radius - 2); py <= Math.ceil(cy + radius + 2); py++) {
      for (let px = Math.floor(cx - radius - 2); px <= Math.ceil(cx + radius + 2); px++) {
        if (px < 0 || py < 0 || px >= size || py >= size) continue;
        const d = Math.hypot(px - cx, py - cy);
        if (d > radius + 1.5) continue;
        const p = (py * size + px) * 4;
        const color: RGB = d <= radius ? [0, 0, 0] : [255, 255, 255];
        rgba[p] = color[0];
        rgba[p + 1] = color[1];
        rgba[p + 2] = color[2];
        rgba[p + 3] = 255;
      }
    }
  }

  return { width: size, height: size, rgba, limit, markers };
}
