#!/usr/bin/env node
/**
 * render <in.csv> <out.png> [--clip-percentile P]
 *
 * Reads a `sphwhitney omega-grid v1` CSV and writes a hemisphere heatmap
 * PNG.  Exits nonzero on a malformed header or unreadable input.
 */

import { readFileSync, writeFileSync } from "node:fs";

import { parseOmegaGrid } from "./csv.js";
import { encodePng } from "./png.js";
import { renderGrid } from "./render.js";

function usage(): never {
  console.error("usage: render <in.csv> <out.png> [--clip-percentile P]");
  process.exit(2);
}

export function main(argv: string[]): number {
  const args = [...argv];
  if (args[0] === "render") args.shift(); // tolerate the verb when run via node
  const positional: string[] = [];
  let clipPercentile = 99;
  for (let i = 0; i < args.length; i++) {
    if (args[i] === "--clip-percentile") {
      const raw = args[++i];
      clipPercentile = Number(raw);
      if (!Number.isFinite(clipPercentile)) {
        console.error(`error: invalid clip percentile: ${raw}`);
        return 2;
      }
    } else if (args[i].startsWith("--")) {
      console.error(`error: unknown option ${args[i]}`);
      return 2;
    } else {
      positional.push(args[i]);
    }
  }
  if (positional.length !== 2) usage();
  const [input, output] = positional;

  let text: string;
  try {
    text = readFileSync(input, "utf8");
  } catch (exc) {
    console.error(`error: cannot read ${input}: ${(exc as Error).message}`);
    return 1;
  }
  try {
    const grid = parseOmegaGrid(text);
    const image = renderGrid(grid, { clipPercentile });
    writeFileSync(output, encodePng(image.width, image.height, image.rgba));
    console.error(
      `wrote ${output} (${image.width}x${image.height}, ` +
        `${grid.hemisphere} hemisphere, clip |value| <= ${image.limit.toPrecision(5)})`,
    );
  } catch (exc) {
    console.error(`error: ${(exc as Error).message}`);
    return 1;
  }
  return 0;
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  import.meta.url.endsWith(process.argv[1].split("/").pop() as string);

if (invokedDirectly) {
  process.exit(main(process.argv.slice(2)));
}
