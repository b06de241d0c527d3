/**
 * Deterministic SVG scatter plots: one color per task label, legend
 * included. Same inputs always produce byte-identical files.
 */

export class RenderError extends Error {}

// Categorical palette (10 distinguishable hues); labels beyond ten cycle.
const PALETTE = [
  "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
];

const WIDTH = 640;
const HEIGHT = 480;
const MARGIN = 40;
const LEGEND_WIDTH = 170;

function fmt(v: number): string {
  return v.toFixed(3);
}

export function renderScatter(
  coords: Array<[number, number]>,
  labels: string[],
  title = "",
): string {
  if (coords.length !== labels.length) {
    throw new RenderError("coords and labels must have the same length");
  }
  if (coords.length === 0) {
    throw new RenderError("nothing to plot: empty label set");
  }
  const classes = [...new Set(labels)].sort();
  const color = new Map(classes.map((c, i) => [c, PALETTE[i % PALETTE.length]]));

  const xs = coords.map((p) => p[0]);
  const ys = coords.map((p) => p[1]);
  const xMin = Math.min(...xs);
  const xMax = Math.max(...xs);
  const yMin = Math.min(...ys);
  const yMax = Math.max(...ys);
  const xSpan = xMax - xMin || 1;
  const ySpan = yMax - yMin || 1;
  const plotW = WIDTH - 2 * MARGIN - LEGEND_WIDTH;
  const plotH = HEIGHT - 2 * MARGIN;
  const sx = (x: number) => MARGIN + ((x - xMin) / xSpan) * plotW;
  const sy = (y: number) => HEIGHT - MARGIN - ((y - yMin) / ySpan) * plotH;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}">`,
  );
  parts.push(`<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`);
  if (title) {
    parts.push(
      `<text x="${MARGIN}" y="24" font-family="sans-serif" font-size="16">${escapeXml(title)}</text>`,
    );
  }
  parts.push(
    `<rect x="${MARGIN}" y="${MARGIN}" width="${plotW}" height="${plotH}" fill="none" stroke="#cccccc"/>`,
  );
  for (let i = 0; i < coords.length; i++) {
    parts.push(
      `<circle cx="${fmt(sx(coords[i][0]))}" cy="${fmt(sy(coords[i][1]))}" r="3" ` +
        `fill="${color.get(labels[i])}" fill-opacity="0.7"/>`,
    );
  }
  // Legend, one entry per label in sorted order.
  const lx = WIDTH - LEGEND_WIDTH - MARGIN / 2;
  classes.forEach((c, i) => {
    const ly = MARGIN + 16 + i * 20;
    parts.push(`<circle cx="${lx}" cy="${ly - 4}" r="5" fill="${color.get(c)}" class="legend"/>`);
    parts.push(
      `<text x="${lx + 12}" y="${ly}" font-family="sans-serif" font-size="12">${escapeXml(c)}</text>`,
    );
  });
  parts.push("</svg>");
  return parts.join("\n") + "\n";
}

function escapeXml(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}
