import { describe, expect, it } from "vitest";

import { makeGaussianRng } from "../src/linalg.js";
import { ProjectionError, projectPca, projectTsne } from "../src/project.js";

function randomCloud(n: number, d: number, seed: number): number[][] {
  const gauss = makeGaussianRng(seed);
  return Array.from({ length: n }, () => Array.from({ length: d }, () => gauss()));
}

describe("projectPca", () => {
  it("is a rotation for data that is already 2-D (pairwise distances preserved)", () => {
    const X = randomCloud(60, 2, 1);
    const { coords } = projectPca(X);
    for (let i = 0; i < X.length; i++) {
      for (let j = i + 1; j < X.length; j++) {
        const orig = Math.hypot(X[i][0] - X[j][0], X[i][1] - X[j][1]);
        const proj = Math.hypot(
          coords[i][0] - coords[j][0],
          coords[i][1] - coords[j][1],
        );
        expect(Math.abs(orig - proj)).toBeLessThan(1e-8);
      }
    }
  });

  it("orders axes by variance (axis 1 >= axis 2)", () => {
    const X = randomCloud(200, 6, 2);
    const { coords } = projectPca(X);
    const varOf = (k: 0 | 1) => {
      const mean = coords.reduce((a, p) => a + p[k], 0) / coords.length;
      return coords.reduce((a, p) => a + (p[k] - mean) ** 2, 0) / coords.length;
    };
    expect(varOf(0)).toBeGreaterThanOrEqual(varOf(1) - 1e-12);
  });

  it("recovers planted cluster structure from high dimensions", () => {
    // Two clusters separated along one axis of a 10-D space must remain
    // separated in the top principal component.
    const gauss = makeGaussianRng(3);
    const X: number[][] = [];
    for (let i = 0; i < 50; i++) {
      const offset = i < 25 ? 8 : -8;
      X.push(Array.from({ length: 10 }, (_, j) => (j === 4 ? offset : 0) + 0.1 * gauss()));
    }
    const { coords } = projectPca(X);
    const a = coords.slice(0, 25).map((p) => p[0]);
    const b = coords.slice(25).map((p) => p[0]);
    expect(Math.min(...a)).toBeGreaterThan(Math.max(...b));
  });

  it("is deterministic", () => {
    const X = randomCloud(40, 5, 4);
    expect(projectPca(X)).toEqual(projectPca(X));
  });

  it("rejects degenerate all-equal input", () => {
    const X = Array.from({ length: 10 }, () => [1, 2, 3]);
    expect(() => projectPca(X)).toThrow(ProjectionError);
  });

  it("rejects fewer than 2 rows", () => {
    expect(() => projectPca([[1, 2]])).toThrow(ProjectionError);
  });
});

describe("projectTsne", () => {
  it("produces an identical layout for the same seed", () => {
    const X = randomCloud(40, 4, 5);
    const a = projectTsne(X, 7, 10, 60);
    const b = projectTsne(X, 7, 10, 60);
    expect(a).toEqual(b);
  });

  it("produces a different layout for a different seed", () => {
    const X = randomCloud(40, 4, 5);
    const a = projectTsne(X, 7, 10, 60);
    const b = projectTsne(X, 8, 10, 60);
    expect(a).not.toEqual(b);
  });

  it("keeps well-separated clusters separated", () => {
    const gauss = makeGaussianRng(6);
    const X: number[][] = [];
    for (let i = 0; i < 40; i++) {
      const offset = i < 20 ? 20 : -20;
      X.push([offset + 0.1 * gauss(), 0.1 * gauss()]);
    }
    const { coords } = projectTsne(X, 0, 10, 300);
    // Every within-cluster distance should be below every cross-cluster one.
    const dist = (i: number, j: number) =>
      Math.hypot(coords[i][0] - coords[j][0], coords[i][1] - coords[j][1]);
    let maxWithin = 0;
    let minAcross = Infinity;
    for (let i = 0; i < 40; i++) {
      for (let j = i + 1; j < 40; j++) {
        const same = (i < 20) === (j < 20);
        if (same) maxWithin = Math.max(maxWithin, dist(i, j));
        else minAcross = Math.min(minAcross, dist(i, j));
      }
    }
    expect(minAcross).toBeGreaterThan(maxWithin);
  });
});
