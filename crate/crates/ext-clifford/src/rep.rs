//! Exact integer matrix representations.
//!
//! Each canonical decomposition gets explicit generator matrices built
//! from four fixed base representations by Kronecker products with
//! identity padding, so generators of different factors commute. Any
//! generator system additionally has its left-regular representation on
//! the blade basis. All relation checks are exact integer arithmetic;
//! matrices are stored as sparse rows since every generator matrix here
//! is a signed permutation.

use std::ops::Mul;

use crate::blade::{Blade, GeneratorSystem};
use crate::classify::{BaseFactor, ClassLabel};
use crate::error::{Error, Result};

/// Default cap on the matrix dimension of `canonical_rep`.
pub const DEFAULT_REP_DIM_CAP: u64 = 1024;

/// Default cap on the generator count of `regular_rep` (dimension 2^k).
pub const DEFAULT_REGULAR_CAP: usize = 12;

/// A square matrix of exact integers, stored as sorted sparse rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    /// Per row: (column, value) with value != 0, sorted by column.
    rows: Vec<Vec<(usize, i64)>>,
}

impl IntMatrix {
    pub fn identity(dim: usize) -> IntMatrix {
        IntMatrix {
            dim,
            rows: (0..dim).map(|i| vec![(i, 1)]).collect(),
        }
    }

    /// Build from dense rows; must be square.
    pub fn from_rows(dense: &[Vec<i64>]) -> Result<IntMatrix> {
        let dim = dense.len();
        if dense.iter().any(|row| row.len() != dim) {
            return Err(Error::Malformed("matrix rows must form a square"));
        }
        let rows = dense
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, &v)| v != 0)
                    .map(|(j, &v)| (j, v))
                    .collect()
            })
            .collect();
        Ok(IntMatrix { dim, rows })
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .map(|row| {
                let mut dense = vec![0i64; self.dim];
                for &(j, v) in row {
                    dense[j] = v;
                }
                dense
            })
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.rows[i]
            .binary_search_by_key(&j, |&(col, _)| col)
            .map(|pos| self.rows[i][pos].1)
            .unwrap_or(0)
    }

    pub fn trace(&self) -> i64 {
        (0..self.dim).map(|i| self.entry(i, i)).sum()
    }

    pub fn scale(&self, factor: i64) -> IntMatrix {
        if factor == 0 {
            return IntMatrix {
                dim: self.dim,
                rows: vec![Vec::new(); self.dim],
            };
        }
        IntMatrix {
            dim: self.dim,
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|&(j, v)| (j, v * factor)).collect())
                .collect(),
        }
    }

    /// Exactly c times the identity?
    pub fn is_scaled_identity(&self, c: i64) -> bool {
        self.rows.iter().enumerate().all(|(i, row)| {
            if c == 0 {
                row.is_empty()
            } else {
                row.as_slice() == [(i, c)]
            }
        })
    }

    /// Kronecker product; the right factor varies fastest.
    pub fn kron(&self, rhs: &IntMatrix) -> IntMatrix {
        let dim = self.dim * rhs.dim;
        let mut rows = Vec::with_capacity(dim);
        for left_row in &self.rows {
            for right_row in &rhs.rows {
                let mut row = Vec::with_capacity(left_row.len() * right_row.len());
                for &(j1, a) in left_row {
                    for &(j2, b) in right_row {
                        row.push((j1 * rhs.dim + j2, a * b));
                    }
                }
                rows.push(row);
            }
        }
        IntMatrix { dim, rows }
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc: Vec<(usize, i64)> = Vec::new();
                for &(k, a) in row {
                    for &(j, b) in &rhs.rows[k] {
                        acc.push((j, a * b));
                    }
                }
                acc.sort_unstable_by_key(|&(j, _)| j);
                let mut merged: Vec<(usize, i64)> = Vec::with_capacity(acc.len());
                for (j, v) in acc {
                    match merged.last_mut() {
                        Some((last_j, last_v)) if *last_j == j => *last_v += v,
                        _ => merged.push((j, v)),
                    }
                }
                merged.retain(|&(_, v)| v != 0);
                merged
            })
            .collect();
        IntMatrix {
            dim: self.dim,
            rows,
        }
    }
}

/// Generator matrices together with the generator system whose relations
/// they must satisfy.
#[derive(Debug, Clone)]
pub struct RepSet {
    pub system: GeneratorSystem,
    pub matrices: Vec<IntMatrix>,
}

impl RepSet {
    /// Matrix dimension (1 for the empty representation of R).
    pub fn dim(&self) -> usize {
        self.matrices.first().map_or(1, IntMatrix::dim)
    }
}

/// The fixed base representations of the four building blocks:
///
/// * Cl(1,1): [[0,1],[1,0]] and [[0,1],[-1,0]]
/// * Cl(1,0): [[1,0],[0,-1]]
/// * Cl(0,1): [[0,-1],[1,0]]
/// * Cl(0,2): the 4x4 left-multiplication matrices of the quaternion
///   units i and j on the basis (1, i, j, k)
pub fn base_rep(kind: BaseFactor) -> RepSet {
    let rows = |m: &[&[i64]]| {
        IntMatrix::from_rows(&m.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    };
    let matrices = match kind {
        BaseFactor::Cl11 => vec![
            rows(&[&[0, 1], &[1, 0]]),
            rows(&[&[0, 1], &[-1, 0]]),
        ],
        BaseFactor::Cl10 => vec![rows(&[&[1, 0], &[0, -1]])],
        BaseFactor::Cl01 => vec![rows(&[&[0, -1], &[1, 0]])],
        BaseFactor::Cl02 => vec![
            rows(&[
                &[0, -1, 0, 0],
                &[1, 0, 0, 0],
                &[0, 0, 0, -1],
                &[0, 0, 1, 0],
            ]),
            rows(&[
                &[0, 0, -1, 0],
                &[0, 0, 0, 1],
                &[1, 0, 0, 0],
                &[0, -1, 0, 0],
            ]),
        ],
    };
    RepSet {
        system: GeneratorSystem::from_signature(kind.signature()),
        matrices,
    }
}

/// Explicit integer generators for the canonical decomposition of a
/// label: Kronecker products of the base representations with identity
/// padding, in type-list order (odd factors, then Cl(0,2), then the
/// Cl(1,1) power).
pub fn canonical_rep(label: ClassLabel) -> Result<RepSet> {
    canonical_rep_with_cap(label, DEFAULT_REP_DIM_CAP)
}

pub fn canonical_rep_with_cap(label: ClassLabel, dim_cap: u64) -> Result<RepSet> {
    let decomposition = label.decomposition()?;
    // dimension check before materializing anything; 2 per factor, 4 for
    // the Cl(0,2) one
    let exponent =
        decomposition.odd_count + 2 * u64::from(decomposition.has_02) + decomposition.count_11;
    let total_dim = 1u64.checked_shl(exponent.min(64) as u32).unwrap_or(u64::MAX);
    if total_dim > dim_cap {
        return Err(Error::TooLarge {
            what: "canonical representation dimension",
            required: total_dim,
            cap: dim_cap,
        });
    }

    let factors = decomposition.factors();
    let parts: Vec<RepSet> = factors.iter().map(|&f| base_rep(f)).collect();

    let system = GeneratorSystem::tensor_of(
        &parts.iter().map(|p| p.system.clone()).collect::<Vec<_>>(),
    )?;

    let mut matrices = Vec::new();
    for (i, part) in parts.iter().enumerate() {
        let before: usize = parts[..i].iter().map(RepSet::dim).product();
        let after: usize = parts[i + 1..].iter().map(RepSet::dim).product();
        let pre = IntMatrix::identity(before);
        let post = IntMatrix::identity(after);
        for g in &part.matrices {
            matrices.push(pre.kron(g).kron(&post));
        }
    }
    Ok(RepSet { system, matrices })
}

/// Left multiplication on the blade basis: a faithful representation of
/// any quasi-Clifford system by 2^k-dimensional signed permutation
/// matrices. Blade e_B sits at basis position B.
pub fn regular_rep(sys: &GeneratorSystem) -> Result<RepSet> {
    regular_rep_with_cap(sys, DEFAULT_REGULAR_CAP)
}

pub fn regular_rep_with_cap(sys: &GeneratorSystem, cap: usize) -> Result<RepSet> {
    if sys.len() > cap {
        return Err(Error::TooLarge {
            what: "regular representation",
            required: sys.len() as u64,
            cap: cap as u64,
        });
    }
    let dim = sys.blade_count() as usize;
    let matrices = (0..sys.len())
        .map(|a| {
            let bit = 1u64 << a;
            let rows = (0..dim as u64)
                .map(|row| {
                    let col = row ^ bit;
                    let (sign, result) = sys.blade_product(Blade(bit), Blade(col));
                    debug_assert_eq!(result.0, row);
                    vec![(col as usize, sign.as_i64())]
                })
                .collect();
            IntMatrix { dim, rows }
        })
        .collect();
    Ok(RepSet {
        system: sys.clone(),
        matrices,
    })
}

/// Check every generator relation exactly: G_a^2 = squares[a] * I and
/// G_a G_b = eps[a][b] * G_b G_a for all pairs.
pub fn verify_relations(reps: &RepSet) -> bool {
    let k = reps.system.len();
    if reps.matrices.len() != k {
        return false;
    }
    let dim = reps.dim();
    if reps.matrices.iter().any(|m| m.dim() != dim) {
        return false;
    }
    for a in 0..k {
        let ga = &reps.matrices[a];
        if !(ga * ga).is_scaled_identity(reps.system.square(a).as_i64()) {
            return false;
        }
        for b in 0..a {
            let gb = &reps.matrices[b];
            let lhs = ga * gb;
            let rhs = (gb * ga).scale(reps.system.eps(a, b).as_i64());
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}
