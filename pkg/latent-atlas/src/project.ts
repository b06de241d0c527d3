/**
 * 2-D projections of a latent space: deterministic PCA by default, seeded
 * t-SNE as an opt-in alternative for non-linear structure.
 */

import { centered, covariance, makeGaussianRng, symmetricEigen } from "./linalg.js";

export class ProjectionError extends Error {}

export type Method = "pca" | "tsne";

export interface Projection {
  coords: Array<[number, number]>;
}

function checkInput(X: number[][]): void {
  if (X.length < 2) {
    throw new ProjectionError(`need at least 2 rows, got ${X.length}`);
  }
  const first = X[0];
  if (X.every((row) => row.every((v, j) => v === first[j]))) {
    throw new ProjectionError("degenerate input: all rows identical");
  }
}

/**
 * PCA onto the top-2 principal axes. Axes are variance-ordered and the sign
 * of each axis is fixed so its largest-magnitude loading is positive, making
 * the output fully deterministic.
 */
export function projectPca(X: number[][]): Projection {
  checkInput(X);
  const Xc = centered(X);
  const { vectors } = symmetricEigen(covariance(Xc));
  const axes = vectors.slice(0, 2).map((axis) => {
    let k = 0;
    for (let j = 1; j < axis.length; j++) if (Math.abs(axis[j]) > Math.abs(axis[k])) k = j;
    return axis[k] < 0 ? axis.map((v) => -v) : axis;
  });
  if (axes.length < 2) {
    // 1-D input: second coordinate is identically zero.
    axes.push(new Array(X[0].length).fill(0));
  }
  const coords = Xc.map(
    (row) =>
      [
        row.reduce((acc, v, j) => acc + v * axes[0][j], 0),
        row.reduce((acc, v, j) => acc + v * axes[1][j], 0),
      ] as [number, number],
  );
  return { coords };
}

/**
 * Exact (O(n^2)) t-SNE with a fixed seed: binary-search perplexity
 * calibration, early exaggeration, and momentum gradient descent. Suited to
 * the few thousand rows a latent export contains.
 */
export function projectTsne(
  X: number[][],
  seed: number,
  perplexity = 30,
  iterations = 300,
  learningRate = 10,
): Projection {
  checkInput(X);
  const n = X.length;
  const perp = Math.min(perplexity, Math.max(2, Math.floor((n - 1) / 3)));

  // Pairwise squared distances.
  const d2 = Array.from({ length: n }, () => new Array(n).fill(0));
  for (let i = 0; i < n; i++) {
    for (let j = i + 1; j < n; j++) {
      let s = 0;
      for (let k = 0; k < X[i].length; k++) {
        const diff = X[i][k] - X[j][k];
        s += diff * diff;
      }
      d2[i][j] = s;
      d2[j][i] = s;
    }
  }

  // Per-point bandwidths matched to the target perplexity.
  const P = Array.from({ length: n }, () => new Array(n).fill(0));
  const logPerp = Math.log(perp);
  for (let i = 0; i < n; i++) {
    let lo = 0;
    let hi = Infinity;
    let beta = 1;
    for (let iter = 0; iter < 50; iter++) {
      let sum = 0;
      let dotSum = 0;
      for (let j = 0; j < n; j++) {
        if (j === i) continue;
        const p = Math.exp(-d2[i][j] * beta);
        sum += p;
        dotSum += d2[i][j] * p;
      }
      const entropy = sum > 0 ? Math.log(sum) + (beta * dotSum) / sum : 0;
      if (Math.abs(entropy - logPerp) < 1e-5) break;
      if (entropy > logPerp) {
        lo = beta;
        beta = hi === Infinity ? beta * 2 : (beta + hi) / 2;
      } else {
        hi = beta;
        beta = (beta + lo) / 2;
      }
    }
    let sum = 0;
    for (let j = 0; j < n; j++) if (j !== i) sum += Math.exp(-d2[i][j] * beta);
    for (let j = 0; j < n; j++) {
      if (j !== i) P[i][j] = Math.exp(-d2[i][j] * beta) / Math.max(sum, 1e-12);
    }
  }
  // Symmetrize.
  for (let i = 0; i < n; i++) {
    for (let j = i + 1; j < n; j++) {
      const p = Math.max((P[i][j] + P[j][i]) / (2 * n), 1e-12);
      P[i][j] = p;
      P[j][i] = p;
    }
  }

  const gauss = makeGaussianRng(seed);
  let Y = Array.from({ length: n }, () => [gauss() * 1e-4, gauss() * 1e-4]);
  const velocity = Array.from({ length: n }, () => [0, 0]);
  const lr = learningRate;
  for (let iter = 0; iter < iterations; iter++) {
    const exaggeration = iter < 100 ? 4 : 1;
    const momentum = iter < 100 ? 0.5 : 0.8;
    // Student-t affinities in the embedding.
    const Qnum = Array.from({ length: n }, () => new Array(n).fill(0));
    let qSum = 0;
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        const dx = Y[i][0] - Y[j][0];
        const dy = Y[i][1] - Y[j][1];
        const q = 1 / (1 + dx * dx + dy * dy);
        Qnum[i][j] = q;
        Qnum[j][i] = q;
        qSum += 2 * q;
      }
    }
    for (let i = 0; i < n; i++) {
      let gx = 0;
      let gy = 0;
      for (let j = 0; j < n; j++) {
        if (j === i) continue;
        const q = Qnum[i][j];
        const coeff = 4 * (exaggeration * P[i][j] - q / Math.max(qSum, 1e-12)) * q;
        gx += coeff * (Y[i][0] - Y[j][0]);
        gy += coeff * (Y[i][1] - Y[j][1]);
      }
      velocity[i][0] = momentum * velocity[i][0] - lr * gx;
      velocity[i][1] = momentum * velocity[i][1] - lr * gy;
    }
    for (let i = 0; i < n; i++) {
      Y[i][0] += velocity[i][0];
      Y[i][1] += velocity[i][1];
    }
  }
  return { coords: Y.map((p) => [p[0], p[1]] as [number, number]) };
}

export function project2d(X: number[][], method: Method, seed: number): Projection {
  return method === "pca" ? projectPca(X) : projectTsne(X, seed);
}
