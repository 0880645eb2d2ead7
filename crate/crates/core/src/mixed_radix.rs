//! Mixed-radix codec for branch-index bases.
//!
//! A basis `(n_1, ..., n_m)` labels the `N = n_1 ⋯ n_m` leaves of a rooted
//! tree in lexicographic order. Digit 1 is the most significant; digit `m`
//! changes fastest. Positions are 1-based in prose and 0-based in storage.

use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// Upper bound on `N` accepted by [`BranchIndices::new`].
pub const DEFAULT_SIZE_LIMIT: usize = 1 << 20;

/// The tuple `(n_1, ..., n_m)` of branch indices, each at least 2, with `m >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BranchIndices {
    indices: Vec<usize>,
    total: usize,
}

impl BranchIndices {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        Self::with_limit(indices, DEFAULT_SIZE_LIMIT)
    }

    pub fn with_limit(indices: Vec<usize>, limit: usize) -> Result<Self> {
        if indices.len() < 2 {
            return Err(Error::TooFewBranches(indices.len()));
        }
        if let Some((position, &value)) = indices.iter().enumerate().find(|(_, &n)| n < 2) {
            return Err(Error::BranchTooSmall { position, value });
        }
        let total = checked_product(&indices, limit)?;
        Ok(BranchIndices { indices, total })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Number of levels `m`.
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `N`, the product of all branch indices.
    pub fn total(&self) -> usize {
        self.total
    }

    /// The last branch index `n_m`.
    pub fn last(&self) -> usize {
        self.indices[self.indices.len() - 1]
    }

    pub fn is_homogeneous(&self) -> bool {
        self.indices.iter().all(|&n| n == self.indices[0])
    }

    pub fn weights(&self) -> WeightVector {
        WeightVector::new(&self.indices)
    }

    /// The reordered basis `(n_{σ⁻¹(1)}, ..., n_{σ⁻¹(m)})`.
    pub fn reordered(&self, sigma: &Permutation) -> Result<BranchIndices> {
        if sigma.degree() != self.len() {
            return Err(Error::DegreeMismatch {
                left: sigma.degree(),
                right: self.len(),
            });
        }
        let inv = sigma.inverse();
        let indices = (0..self.len())
            .map(|j| self.indices[inv.apply(j)])
            .collect();
        Ok(BranchIndices {
            indices,
            total: self.total,
        })
    }

    pub fn word(&self, digits: Vec<usize>) -> Result<DigitWord> {
        DigitWord::new(digits, self.clone())
    }

    /// Encodes a digit slice, validating it against this basis.
    pub fn encode(&self, digits: &[usize]) -> Result<usize> {
        validate_digits(&self.indices, digits)?;
        Ok(encode_digits(&self.indices, digits))
    }

    pub fn decode(&self, x: usize) -> Result<DigitWord> {
        if x >= self.total {
            return Err(Error::OutOfRange {
                value: x,
                bound: self.total,
            });
        }
        let mut digits = vec![0; self.len()];
        decode_into(&self.indices, x, &mut digits);
        Ok(DigitWord {
            digits,
            basis: self.clone(),
        })
    }
}

/// Positional weights `(u_{m-1}, ..., u_0)`, with `u_0 = 1` and `u_i` the
/// product of the last `i` branch indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector(Vec<usize>);

impl WeightVector {
    fn new(radices: &[usize]) -> Self {
        let mut weights = vec![1; radices.len()];
        for j in (0..radices.len().saturating_sub(1)).rev() {
            weights[j] = weights[j + 1] * radices[j + 1];
        }
        WeightVector(weights)
    }

    pub fn weights(&self) -> &[usize] {
        &self.0
    }
}

/// A word `x_1 ⋯ x_m` with `0 <= x_j < n_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitWord {
    digits: Vec<usize>,
    basis: BranchIndices,
}

impl DigitWord {
    pub fn new(digits: Vec<usize>, basis: BranchIndices) -> Result<Self> {
        validate_digits(basis.indices(), &digits)?;
        Ok(DigitWord { digits, basis })
    }

    pub fn digits(&self) -> &[usize] {
        &self.digits
    }

    pub fn basis(&self) -> &BranchIndices {
        &self.basis
    }

    /// `Σ x_j u_{m-j}`.
    pub fn encode(&self) -> usize {
        encode_digits(self.basis.indices(), &self.digits)
    }
}

pub(crate) fn checked_product(dims: &[usize], limit: usize) -> Result<usize> {
    let mut total: u128 = 1;
    for &d in dims {
        total = total.saturating_mul(d as u128);
    }
    if total > limit as u128 {
        return Err(Error::SizeLimit {
            size: total,
            limit: limit as u128,
        });
    }
    Ok(total as usize)
}

fn validate_digits(radices: &[usize], digits: &[usize]) -> Result<()> {
    if digits.len() != radices.len() {
        return Err(Error::WordLength {
            expected: radices.len(),
            found: digits.len(),
        });
    }
    for (position, (&digit, &radix)) in digits.iter().zip(radices).enumerate() {
        if digit >= radix {
            return Err(Error::DigitOutOfRange {
                position,
                digit,
                radix,
            });
        }
    }
    Ok(())
}

/// Horner evaluation, most significant digit first. Radices of 1 are allowed.
#[inline]
pub(crate) fn encode_digits(radices: &[usize], digits: &[usize]) -> usize {
    radices
        .iter()
        .zip(digits)
        .fold(0, |acc, (&radix, &digit)| acc * radix + digit)
}

#[inline]
pub(crate) fn decode_into(radices: &[usize], mut x: usize, digits: &mut [usize]) {
    for (digit, &radix) in digits.iter_mut().zip(radices).rev() {
        *digit = x % radix;
        x /= radix;
    }
}
