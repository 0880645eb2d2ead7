//! Reordering the factors of an iterated Kronecker product.
//!
//! For factors `A_0, ..., A_{m-1}` (0-based, dims of 1 allowed) and
//! `σ ∈ Sym(m)`:
//!
//! ```text
//! L · (A_0 ⊗ ⋯ ⊗ A_{m-1}) · R = A_{σ⁻¹(0)} ⊗ ⋯ ⊗ A_{σ⁻¹(m-1)}
//! ```
//!
//! where `L` is the shuffling matrix over the row dims and `R` the transpose
//! of the shuffling matrix over the column dims.

use crate::error::{Error, Result};
use crate::linalg_kron::{perm_to_matrix, IntMatrix, DEFAULT_ENTRY_LIMIT};
use crate::mixed_radix::checked_product;
use crate::permutation::Permutation;
use crate::shuffling::digit_shuffle;

/// An ordered list of at least two integer matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorList {
    matrices: Vec<IntMatrix>,
}

impl FactorList {
    pub fn new(matrices: Vec<IntMatrix>) -> Result<Self> {
        if matrices.len() < 2 {
            return Err(Error::TooFewBranches(matrices.len()));
        }
        if let Some(m) = matrices.iter().find(|m| m.rows() == 0 || m.cols() == 0) {
            return Err(Error::Shape(format!(
                "empty factor {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        Ok(FactorList { matrices })
    }

    pub fn matrices(&self) -> &[IntMatrix] {
        &self.matrices
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    pub fn row_dims(&self) -> Vec<usize> {
        self.matrices.iter().map(IntMatrix::rows).collect()
    }

    pub fn col_dims(&self) -> Vec<usize> {
        self.matrices.iter().map(IntMatrix::cols).collect()
    }

    fn check_sigma(&self, sigma: &Permutation) -> Result<()> {
        if sigma.degree() != self.len() {
            return Err(Error::DegreeMismatch {
                left: sigma.degree(),
                right: self.len(),
            });
        }
        Ok(())
    }

    fn check_size(&self, limit: usize) -> Result<()> {
        let rows = checked_product(&self.row_dims(), limit)?;
        let cols = checked_product(&self.col_dims(), limit)?;
        checked_product(&[rows, cols], limit)?;
        Ok(())
    }

    /// `A_{σ⁻¹(0)} ⊗ ⋯ ⊗ A_{σ⁻¹(m-1)}`, computed directly.
    pub fn reordered_kron(&self, sigma: &Permutation) -> Result<IntMatrix> {
        self.check_sigma(sigma)?;
        self.check_size(DEFAULT_ENTRY_LIMIT)?;
        let inv = sigma.inverse();
        Ok(IntMatrix::kron_all(
            (0..self.len()).map(|j| &self.matrices[inv.apply(j)]),
        ))
    }

    pub fn kron(&self) -> Result<IntMatrix> {
        self.reordered_kron(&Permutation::identity(self.len()))
    }
}

fn check_dims(dims: &[usize], sigma: &Permutation) -> Result<()> {
    if sigma.degree() != dims.len() {
        return Err(Error::DegreeMismatch {
            left: sigma.degree(),
            right: dims.len(),
        });
    }
    if dims.contains(&0) {
        return Err(Error::Shape("zero dimension".into()));
    }
    checked_product(dims, DEFAULT_ENTRY_LIMIT)?;
    Ok(())
}

/// The row-relabeling permutation behind `L`.
pub fn left_permutation(row_dims: &[usize], sigma: &Permutation) -> Result<Permutation> {
    check_dims(row_dims, sigma)?;
    Ok(digit_shuffle(row_dims, sigma))
}

/// `L`: the shuffling matrix over `row_dims` for `σ`.
pub fn left_matrix(row_dims: &[usize], sigma: &Permutation) -> Result<IntMatrix> {
    Ok(perm_to_matrix(&left_permutation(row_dims, sigma)?))
}

/// `R = Σ E^{j_0, j_{σ⁻¹(0)}} ⊗ ⋯`, the transpose of the shuffling matrix over `col_dims`.
pub fn right_matrix(col_dims: &[usize], sigma: &Permutation) -> Result<IntMatrix> {
    Ok(left_matrix(col_dims, sigma)?.transpose())
}

/// `L · (⊗ A_i) · R`, applied as row and column relabeling of `⊗ A_i`.
pub fn rearrange_kron(factors: &FactorList, sigma: &Permutation) -> Result<IntMatrix> {
    factors.check_sigma(sigma)?;
    let product = factors.kron()?;
    let rows = left_permutation(&factors.row_dims(), sigma)?.inverse();
    let cols = left_permutation(&factors.col_dims(), sigma)?.inverse();
    let mut out = IntMatrix::zeros(product.rows(), product.cols());
    for p in 0..product.rows() {
        let src = rows.apply(p);
        for q in 0..product.cols() {
            out.set(p, q, product.get(src, cols.apply(q)));
        }
    }
    Ok(out)
}

/// `L · (⊗ A_i) · R` by explicit matrix products.
pub fn rearrange_kron_matmul(factors: &FactorList, sigma: &Permutation) -> Result<IntMatrix> {
    factors.check_sigma(sigma)?;
    let l = left_matrix(&factors.row_dims(), sigma)?;
    let r = right_matrix(&factors.col_dims(), sigma)?;
    l.matmul(&factors.kron()?)?.matmul(&r)
}

/// `L · (⊗ A_i) · L⁻¹` for square factors, with `L⁻¹ = Lᵀ`.
pub fn conjugate_kron(factors: &FactorList, sigma: &Permutation) -> Result<IntMatrix> {
    if let Some((index, m)) = factors
        .matrices()
        .iter()
        .enumerate()
        .find(|(_, m)| !m.is_square())
    {
        return Err(Error::NotSquare {
            index,
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    factors.check_sigma(sigma)?;
    let l = left_matrix(&factors.row_dims(), sigma)?;
    l.matmul(&factors.kron()?)?.matmul(&l.transpose())
}
