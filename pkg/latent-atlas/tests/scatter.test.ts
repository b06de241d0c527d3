import { describe, expect, it } from "vitest";

import { RenderError, renderScatter } from "../src/scatter.js";

const COORDS: Array<[number, number]> = [
  [0, 0], [1, 1], [2, 0], [1, -1], [0.5, 0.5], [1.5, -0.5],
];
const LABELS = ["spin", "balance", "spin", "swing", "hold", "swing"];

describe("renderScatter", () => {
  it("emits one legend entry per distinct label (4 labels -> 4 entries)", () => {
    const svg = renderScatter(COORDS, LABELS);
    const legendDots = svg.match(/class="legend"/g) ?? [];
    expect(legendDots).toHaveLength(4);
    for (const label of ["spin", "balance", "swing", "hold"]) {
      expect(svg).toContain(`>${label}</text>`);
    }
  });

  it("assigns colors deterministically by sorted label order", () => {
    const a = renderScatter(COORDS, LABELS);
    const shuffledCoords = [...COORDS].reverse() as Array<[number, number]>;
    const shuffledLabels = [...LABELS].reverse();
    const b = renderScatter(shuffledCoords, shuffledLabels);
    // Same label set in a different row order: legend block is identical.
    const legend = (s: string) => s.split("\n").filter((l) => l.includes("legend") || l.includes("</text>")).join("\n");
    expect(legend(a)).toBe(legend(b));
  });

  it("is byte-identical across calls with the same inputs", () => {
    expect(renderScatter(COORDS, LABELS, "t")).toBe(renderScatter(COORDS, LABELS, "t"));
  });

  it("escapes XML-significant characters in labels", () => {
    const svg = renderScatter([[0, 0], [1, 1]], ["a<b", "c&d"]);
    expect(svg).toContain("a&lt;b");
    expect(svg).toContain("c&amp;d");
  });

  it("rejects an empty label set", () => {
    expect(() => renderScatter([], [])).toThrow(RenderError);
  });

  it("rejects mismatched lengths", () => {
    expect(() => renderScatter([[0, 0]], ["a", "b"])).toThrow(RenderError);
  });
});
