/** Diverging blue-white-red colormap with symmetric percentile clipping. */

export type RGB = [number, number, number];

// control points of a RdBu-style diverging ramp, t in [0, 1]
const STOPS: Array<[number, RGB]> = [
  [0.0, [33, 102, 172]],
  [0.25, [103, 169, 207]],
  [0.5, [247, 247, 247]],
  [0.75, [239, 138, 98]],
  [1.0, [178, 24, 43]],
];

export function diverging(t: number): RGB {
  const tc = Math.max(0, Math.min(1, t));
  for (let i = 1; i < STOPS.length; i++) {
    const [t1, c1] = STOPS[i];
    if (tc <= t1) {
      const [t0, c0] = STOPS[i - 1];
      const f = (tc - t0) / (t1 - t0);
      return [
        Math.round(c0[0] + f * (c1[0] - c0[0])),
        Math.round(c0[1] + f * (c1[1] - c0[1])),
        Math.round(c0[2] + f * (c1[2] - c0[2])),
      ];
    }
  }
  return STOPS[STOPS.length - 1][1];
}

/**
 * Symmetric clip limit: the p-th percentile of |values|.  The field is
 * unbounded near the vertex antipodes, so a fixed percentile keeps the
 * color scale useful while saturating the divergence spots.
 */
export function symmetricClipLimit(values: number[], percentile: number): number {
  if (percentile <= 0 || percentile > 100) {
    throw new Error(`clip percentile must be in (0, 100], got ${percentile}`);
  }
  const magnitudes = values.map(Math.abs).sort((a, b) => a - b);
  if (magnitudes.length === 0) return 1;
  const idx = Math.min(
    magnitudes.length - 1,
    Math.floor((percentile / 100) * (magnitudes.length - 1)),
  );
  const limit = magnitudes[idx];
  return limit > 0 ? limit : 1;
}

/** Map a value in [-limit, limit] (clipped) onto the diverging ramp. */
export function colorize(value: number, limit: number): RGB {
  return diverging(0.5 + 0.5 * Math.max(-1, Math.min(1, value / limit)));
}
