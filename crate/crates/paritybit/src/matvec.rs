//! Minimal dense real-matrix kernel.
//!
//! Symmetric matrices, Kronecker products, permutation conjugation and
//! projective-measurement probabilities — just enough linear algebra for the
//! brute-force parity oracles. Everything is real: the signal states and all
//! matrices built from them have real entries.

use crate::error::{Error, Result};

/// Largest dimension a tensor product is allowed to produce.
pub const MAX_TENSOR_DIM: usize = 1 << 20;

/// Dense real symmetric matrix, row-major.
///
/// Used both for normalized states (trace 1, PSD by construction) and for
/// difference matrices (trace 0); the caller decides which contract applies.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    dim: usize,
    entries: Vec<f64>,
}

impl DensityMatrix {
    /// Builds a matrix from row-major entries, rejecting asymmetry exactly
    /// (tolerance 0 — construction is expected to guarantee symmetry).
    pub fn new(dim: usize, entries: Vec<f64>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                left: dim * dim,
                right: entries.len(),
            });
        }
        for i in 0..dim {
            for j in (i + 1)..dim {
                if entries[i * dim + j] != entries[j * dim + i] {
                    return Err(Error::Structure(format!(
                        "entry ({i},{j}) != entry ({j},{i})"
                    )));
                }
            }
        }
        Ok(Self { dim, entries })
    }

    /// Builds a matrix by evaluating `f` on the upper triangle and mirroring.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut entries = vec![0.0; dim * dim];
        for i in 0..dim {
            for j in i..dim {
                let v = f(i, j);
                entries[i * dim + j] = v;
                entries[j * dim + i] = v;
            }
        }
        Self { dim, entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![0.0; dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.dim + j]
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// `tr(M^p)` for small powers; used to compare eigenvalue multisets
    /// without an eigendecomposition.
    pub fn trace_of_power(&self, p: u32) -> f64 {
        assert!(p >= 1);
        let mut m = self.clone();
        for _ in 1..p {
            m = m.matmul(self);
        }
        m.trace()
    }

    fn matmul(&self, other: &DensityMatrix) -> DensityMatrix {
        assert_eq!(self.dim, other.dim);
        let d = self.dim;
        let mut out = vec![0.0; d * d];
        for i in 0..d {
            for l in 0..d {
                let a = self.entries[i * d + l];
                if a == 0.0 {
                    continue;
                }
                for j in 0..d {
                    out[i * d + j] += a * other.entries[l * d + j];
                }
            }
        }
        DensityMatrix { dim: d, entries: out }
    }

    /// Kronecker product; `self`'s indices form the high-order block index.
    pub fn tensor(&self, other: &DensityMatrix) -> Result<DensityMatrix> {
        let dim = self
            .dim
            .checked_mul(other.dim)
            .filter(|&d| d <= MAX_TENSOR_DIM)
            .ok_or(Error::SizeExceeded {
                dim: self.dim.saturating_mul(other.dim),
                max: MAX_TENSOR_DIM,
            })?;
        let (da, db) = (self.dim, other.dim);
        let mut entries = vec![0.0; dim * dim];
        for ia in 0..da {
            for ja in 0..da {
                let a = self.entries[ia * da + ja];
                if a == 0.0 {
                    continue;
                }
                for ib in 0..db {
                    let row = (ia * db + ib) * dim + ja * db;
                    for jb in 0..db {
                        entries[row + jb] = a * other.entries[ib * db + jb];
                    }
                }
            }
        }
        Ok(DensityMatrix { dim, entries })
    }

    /// Conjugation by a basis permutation: `result[i][j] = m[map[i]][map[j]]`.
    /// The trace is preserved exactly (entries are only moved).
    pub fn conjugate_by_permutation(&self, p: &BasisPermutation) -> Result<DensityMatrix> {
        if self.dim != p.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: p.dim(),
            });
        }
        let d = self.dim;
        let mut entries = vec![0.0; d * d];
        for i in 0..d {
            for j in 0..d {
                entries[i * d + j] = self.entries[p.map[i] * d + p.map[j]];
            }
        }
        Ok(DensityMatrix { dim: d, entries })
    }

    /// Outcome probabilities `v^T m v` of rank-1 projectors onto an
    /// orthonormal basis. Tiny negative values (>= -1e-12) are clamped to 0
    /// so downstream entropies stay defined.
    pub fn projective_probabilities(&self, basis: &[Vec<f64>]) -> Result<Vec<f64>> {
        if basis.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: basis.len(),
            });
        }
        for v in basis {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    left: self.dim,
                    right: v.len(),
                });
            }
        }
        // Supports keep the orthonormality check and the quadratic forms
        // cheap for sparse bases such as the generalized Bell basis.
        let supports: Vec<Vec<usize>> = basis
            .iter()
            .map(|v| (0..v.len()).filter(|&i| v[i] != 0.0).collect())
            .collect();
        check_orthonormal(basis, &supports)?;
        let probs = basis
            .iter()
            .zip(&supports)
            .map(|(v, supp)| {
                let mut p = 0.0;
                for &i in supp {
                    for &j in supp {
                        p += v[i] * self.get(i, j) * v[j];
                    }
                }
                if (-1e-12..0.0).contains(&p) {
                    0.0
                } else {
                    p
                }
            })
            .collect();
        Ok(probs)
    }

    pub fn max_abs_diff(&self, other: &DensityMatrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Entrywise sum/difference with a sign, for `rho +/- Delta`.
    pub fn add_scaled(&self, other: &DensityMatrix, scale: f64) -> Result<DensityMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + scale * b)
            .collect();
        Ok(DensityMatrix {
            dim: self.dim,
            entries,
        })
    }
}

const ORTHONORMALITY_TOL: f64 = 1e-10;

fn check_orthonormal(basis: &[Vec<f64>], supports: &[Vec<usize>]) -> Result<()> {
    for (i, vi) in basis.iter().enumerate() {
        for (j, vj) in basis.iter().enumerate().skip(i) {
            let dot: f64 = supports[i].iter().map(|&t| vi[t] * vj[t]).sum();
            let expect = if i == j { 1.0 } else { 0.0 };
            if (dot - expect).abs() > ORTHONORMALITY_TOL {
                return Err(Error::NonOrthonormalBasis(format!(
                    "<v{i}, v{j}> = {dot}"
                )));
            }
        }
    }
    Ok(())
}

/// Permutation of the computational basis of `n` qubits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisPermutation {
    n: usize,
    map: Vec<usize>,
}

impl BasisPermutation {
    /// The reordering that pairs each basis vector with its bitwise
    /// complement: `map[i] = i/2` for even `i`, `map[i] = 2^n - (i+1)/2` for
    /// odd `i`. Conjugating an X-shaped parity matrix by it produces the
    /// block-diagonal form of 2x2 blocks.
    pub fn complement_pairing(n: usize) -> Self {
        let dim = 1usize << n;
        let map = (0..dim)
            .map(|i| if i % 2 == 0 { i / 2 } else { dim - i.div_ceil(2) })
            .collect();
        Self { n, map }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            n,
            map: (0..1usize << n).collect(),
        }
    }

    /// Arbitrary permutation; rejects maps that are not bijections.
    pub fn from_map(n: usize, map: Vec<usize>) -> Result<Self> {
        let dim = 1usize << n;
        if map.len() != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: map.len(),
            });
        }
        let mut seen = vec![false; dim];
        for &m in &map {
            if m >= dim || seen[m] {
                return Err(Error::Parameter(format!(
                    "map is not a bijection on 0..{dim}"
                )));
            }
            seen[m] = true;
        }
        Ok(Self { n, map })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.map.len()];
        for (i, &m) in self.map.iter().enumerate() {
            inv[m] = i;
        }
        Self {
            n: self.n,
            map: inv,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        1 << self.n
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }
}
