/** Small dense linear-algebra helpers shared by the projections and probe. */

export function meanColumns(X: number[][]): number[] {
  const d = X[0].length;
  const mu = new Array(d).fill(0);
  for (const row of X) for (let j = 0; j < d; j++) mu[j] += row[j];
  return mu.map((v) => v / X.length);
}

export function centered(X: number[][]): number[][] {
  const mu = meanColumns(X);
  return X.map((row) => row.map((v, j) => v - mu[j]));
}

/** Covariance matrix (d x d) of already-centered data. */
export function covariance(Xc: number[][]): number[][] {
  const n = Xc.length;
  const d = Xc[0].length;
  const C = Array.from({ length: d }, () => new Array(d).fill(0));
  for (const row of Xc) {
    for (let i = 0; i < d; i++) {
      for (let j = i; j < d; j++) C[i][j] += row[i] * row[j];
    }
  }
  for (let i = 0; i < d; i++) {
    for (let j = i; j < d; j++) {
      C[i][j] /= n;
      C[j][i] = C[i][j];
    }
  }
  return C;
}

/**
 * Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
 * Returns eigenvalues in descending order with matching unit eigenvectors
 * (as rows). Deterministic for a given input.
 */
export function symmetricEigen(A: number[][]): { values: number[]; vectors: number[][] } {
  const d = A.length;
  const M = A.map((row) => row.slice());
  const V: number[][] = Array.from({ length: d }, (_, i) =>
    Array.from({ length: d }, (_, j) => (i === j ? 1 : 0)),
  );
  for (let sweep = 0; sweep < 100; sweep++) {
    let off = 0;
    for (let p = 0; p < d; p++) for (let q = p + 1; q < d; q++) off += M[p][q] * M[p][q];
    if (off < 1e-22) break;
    for (let p = 0; p < d; p++) {
      for (let q = p + 1; q < d; q++) {
        if (Math.abs(M[p][q]) < 1e-30) continue;
        const theta = (M[q][q] - M[p][p]) / (2 * M[p][q]);
        const t = Math.sign(theta) / (Math.abs(theta) + Math.sqrt(theta * theta + 1));
        const c = 1 / Math.sqrt(t * t + 1);
        const s = t * c;
        for (let k = 0; k < d; k++) {
          const mkp = M[k][p];
          const mkq = M[k][q];
          M[k][p] = c * mkp - s * mkq;
          M[k][q] = s * mkp + c * mkq;
        }
        for (let k = 0; k < d; k++) {
          const mpk = M[p][k];
          const mqk = M[q][k];
          M[p][k] = c * mpk - s * mqk;
          M[q][k] = s * mpk + c * mqk;
        }
        for (let k = 0; k < d; k++) {
          const vkp = V[k][p];
          const vkq = V[k][q];
          V[k][p] = c * vkp - s * vkq;
          V[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  const order = Array.from({ length: d }, (_, i) => i).sort((a, b) => M[b][b] - M[a][a]);
  return {
    values: order.map((i) => M[i][i]),
    vectors: order.map((i) => V.map((row) => row[i])),
  };
}

/** Deterministic 32-bit PRNG (mulberry32); uniform floats in [0, 1). */
export function makeRng(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

/** Standard normal samples via Box-Muller from a seeded uniform RNG. */
export function makeGaussianRng(seed: number): () => number {
  const uniform = makeRng(seed);
  let spare: number | null = null;
  return () => {
    if (spare !== null) {
      const v = spare;
      spare = null;
      return v;
    }
    const u = Math.max(uniform(), 1e-12);
    const v = uniform();
    const r = Math.sqrt(-2 * Math.log(u));
    spare = r * Math.sin(2 * Math.PI * v);
    return r * Math.cos(2 * Math.PI * v);
  };
}
