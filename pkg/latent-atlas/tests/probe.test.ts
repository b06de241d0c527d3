import { describe, expect, it } from "vitest";

import { makeGaussianRng, makeRng } from "../src/linalg.js";
import { ProbeError, probeScore } from "../src/probe.js";

describe("probeScore", () => {
  it("scores near chance for random labels on isotropic noise", () => {
    const gauss = makeGaussianRng(10);
    const uniform = makeRng(11);
    const X = Array.from({ length: 400 }, () =>
      Array.from({ length: 8 }, () => gauss()),
    );
    const labels = Array.from({ length: 400 }, () => `c${Math.floor(uniform() * 4)}`);
    const { accuracy, chance } = probeScore(X, labels);
    expect(chance).toBe(0.25);
    expect(Math.abs(accuracy - chance)).toBeLessThan(0.1);
  });

  it("scores above 0.99 for perfectly separated clusters", () => {
    const gauss = makeGaussianRng(12);
    const X: number[][] = [];
    const labels: string[] = [];
    for (let c = 0; c < 4; c++) {
      for (let i = 0; i < 50; i++) {
        X.push([10 * Math.cos((c * Math.PI) / 2) + 0.05 * gauss(),
                10 * Math.sin((c * Math.PI) / 2) + 0.05 * gauss()]);
        labels.push(`cluster-${c}`);
      }
    }
    const { accuracy } = probeScore(X, labels);
    expect(accuracy).toBeGreaterThan(0.99);
  });

  it("is deterministic under a fixed fold seed", () => {
    const gauss = makeGaussianRng(13);
    const X = Array.from({ length: 100 }, () => [gauss(), gauss(), gauss()]);
    const labels = X.map((row) => (row[0] + row[1] > 0 ? "a" : "b"));
    expect(probeScore(X, labels, 3)).toEqual(probeScore(X, labels, 3));
  });

  it("rejects single-class input", () => {
    const X = [[0, 1], [1, 0], [2, 2]];
    expect(() => probeScore(X, ["same", "same", "same"])).toThrow(ProbeError);
  });

  it("rejects mismatched lengths", () => {
    expect(() => probeScore([[0], [1]], ["a"])).toThrow(ProbeError);
  });
});
