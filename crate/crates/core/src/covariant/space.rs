//! Block-structured vector spaces and degree matrices.

use std::fmt;
use std::ops::Range;

use num_bigint::BigInt;

use crate::cyclotomic::CycNumber;
use crate::error::CovariantError;

use super::linalg;

/// `V = V_1 + ... + V_n`, by block dimensions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedSpace {
    block_dims: Vec<usize>,
}

impl GradedSpace {
    pub fn new(block_dims: Vec<usize>) -> Result<Self, CovariantError> {
        if block_dims.is_empty() || block_dims.contains(&0) {
            return Err(CovariantError::BlockMismatch(format!(
                "blocks must be nonempty with positive dimensions, got {block_dims:?}"
            )));
        }
        Ok(Self { block_dims })
    }

    pub fn block_dims(&self) -> &[usize] {
        &self.block_dims
    }

    pub fn num_blocks(&self) -> usize {
        self.block_dims.len()
    }

    pub fn total_dim(&self) -> usize {
        self.block_dims.iter().sum()
    }

    pub fn block_range(&self, b: usize) -> Range<usize> {
        let start: usize = self.block_dims[..b].iter().sum();
        start..start + self.block_dims[b]
    }

    /// Block index of every coordinate.
    pub fn block_of_coordinates(&self) -> Vec<usize> {
        self.block_dims.iter().enumerate().flat_map(|(b, &d)| std::iter::repeat_n(b, d)).collect()
    }

    /// Direct sum with another space, blocks appended.
    pub fn extend(&self, other: &GradedSpace) -> GradedSpace {
        let mut dims = self.block_dims.clone();
        dims.extend_from_slice(&other.block_dims);
        GradedSpace { block_dims: dims }
    }
}

/// Integer matrix `A = (alpha_ji)`: rows index codomain blocks, columns
/// domain blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeMatrix {
    entries: Vec<Vec<i64>>,
    rational: bool,
}

impl DegreeMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Self {
        let rational = entries.iter().flatten().any(|&v| v < 0);
        Self { entries, rational }
    }

    pub fn identity(n: usize) -> Self {
        Self::new((0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect())
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn get(&self, j: usize, i: usize) -> i64 {
        self.entries[j][i]
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    /// Whether negative entries occur (a rational map's degree).
    pub fn is_rational(&self) -> bool {
        self.rational
    }

    fn as_field(&self) -> Vec<Vec<CycNumber>> {
        self.entries.iter().map(|r| r.iter().map(|&v| CycNumber::from_int(v)).collect()).collect()
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.as_field())
    }

    /// Exact determinant of a square matrix.
    pub fn det(&self) -> Option<BigInt> {
        if self.rows() != self.cols() {
            return None;
        }
        let d = linalg::det(&self.as_field()).to_rational().expect("integer matrix");
        Some(d.to_integer())
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &DegreeMatrix) -> DegreeMatrix {
        let out = self
            .entries
            .iter()
            .map(|row| {
                (0..rhs.cols()).map(|c| row.iter().zip(&rhs.entries).map(|(a, r)| a * r[c]).sum()).collect()
            })
            .collect();
        DegreeMatrix::new(out)
    }

    /// Whether `mu` lies in the rational column space of the matrix.
    pub fn column_space_contains(&self, mu: &[i64]) -> bool {
        let b: Vec<CycNumber> = mu.iter().map(|&v| CycNumber::from_int(v)).collect();
        mu.len() == self.rows() && linalg::solve(&self.as_field(), &b).is_some()
    }

    /// `A = I (mod p)` entrywise.
    pub fn is_identity_mod(&self, p: i64) -> bool {
        self.entries.iter().enumerate().all(|(j, row)| {
            row.iter().enumerate().all(|(i, &v)| (v - i64::from(i == j)).rem_euclid(p) == 0)
        })
    }

    pub fn is_zero_mod(&self, p: i64) -> bool {
        self.entries.iter().flatten().all(|v| v.rem_euclid(p) == 0)
    }
}

impl fmt::Display for DegreeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}
