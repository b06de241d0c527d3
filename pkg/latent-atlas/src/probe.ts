/**
 * Linear-probe separability: how well a multinomial linear classifier can
 * predict the ground-truth task label from a latent space. Reported as
 * 5-fold cross-validated accuracy, so structure claims are quantified
 * instead of eyeballed from scatter plots.
 */

import { makeRng, meanColumns } from "./linalg.js";

export class ProbeError extends Error {}

export interface ProbeResult {
  accuracy: number;
  numClasses: number;
  chance: number;
}

function standardize(X: number[][]): number[][] {
  const mu = meanColumns(X);
  const d = mu.length;
  const sd = new Array(d).fill(0);
  for (const row of X) for (let j = 0; j < d; j++) sd[j] += (row[j] - mu[j]) ** 2;
  for (let j = 0; j < d; j++) sd[j] = Math.sqrt(sd[j] / X.length) || 1;
  return X.map((row) => row.map((v, j) => (v - mu[j]) / sd[j]));
}

/** Softmax regression by full-batch gradient descent with L2 regularization. */
function fitSoftmax(
  X: number[][],
  y: number[],
  numClasses: number,
  steps = 300,
  lr = 0.5,
  l2 = 1e-3,
): { W: number[][]; b: number[] } {
  const n = X.length;
  const d = X[0].length;
  const W = Array.from({ length: numClasses }, () => new Array(d).fill(0));
  const b = new Array(numClasses).fill(0);
  for (let step = 0; step < steps; step++) {
    const gW = Array.from({ length: numClasses }, () => new Array(d).fill(0));
    const gb = new Array(numClasses).fill(0);
    for (let i = 0; i < n; i++) {
      const logits = new Array(numClasses).fill(0);
      for (let c = 0; c < numClasses; c++) {
        let z = b[c];
        for (let j = 0; j < d; j++) z += W[c][j] * X[i][j];
        logits[c] = z;
      }
      const zmax = Math.max(...logits);
      const exps = logits.map((z) => Math.exp(z - zmax));
      const sum = exps.reduce((a, v) => a + v, 0);
      for (let c = 0; c < numClasses; c++) {
        const err = exps[c] / sum - (y[i] === c ? 1 : 0);
        for (let j = 0; j < d; j++) gW[c][j] += err * X[i][j];
        gb[c] += err;
      }
    }
    for (let c = 0; c < numClasses; c++) {
      for (let j = 0; j < d; j++) W[c][j] -= lr * (gW[c][j] / n + l2 * W[c][j]);
      b[c] -= (lr * gb[c]) / n;
    }
  }
  return { W, b };
}

function predict(W: number[][], b: number[], x: number[]): number {
  let best = 0;
  let bestZ = -Infinity;
  for (let c = 0; c < W.length; c++) {
    let z = b[c];
    for (let j = 0; j < x.length; j++) z += W[c][j] * x[j];
    if (z > bestZ) {
      bestZ = z;
      best = c;
    }
  }
  return best;
}

export function probeScore(X: number[][], labels: string[], foldSeed = 0): ProbeResult {
  if (X.length !== labels.length) {
    throw new ProbeError("X and labels must have the same length");
  }
  const classes = [...new Set(labels)].sort();
  if (classes.length < 2) {
    throw new ProbeError(`need at least 2 distinct task labels, got ${classes.length}`);
  }
  const classIndex = new Map(classes.map((c, i) => [c, i]));
  const y = labels.map((l) => classIndex.get(l)!);
  const Xs = standardize(X);

  // Deterministic shuffled 5-fold assignment.
  const rng = makeRng(foldSeed);
  const order = Array.from({ length: Xs.length }, (_, i) => i);
  for (let i = order.length - 1; i > 0; i--) {
    const j = Math.floor(rng() * (i + 1));
    [order[i], order[j]] = [order[j], order[i]];
  }
  const folds = 5;
  let correct = 0;
  for (let f = 0; f < folds; f++) {
    const trainX: number[][] = [];
    const trainY: number[] = [];
    const testIdx: number[] = [];
    order.forEach((idx, pos) => {
      if (pos % folds === f) testIdx.push(idx);
      else {
        trainX.push(Xs[idx]);
        trainY.push(y[idx]);
      }
    });
    const { W, b } = fitSoftmax(trainX, trainY, classes.length);
    for (const idx of testIdx) {
      if (predict(W, b, Xs[idx]) === y[idx]) correct++;
    }
  }
  return {
    accuracy: correct / Xs.length,
    numClasses: classes.length,
    chance: 1 / classes.length,
  };
}
