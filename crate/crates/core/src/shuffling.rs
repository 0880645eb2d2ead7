//! Shuffling permutations `σ̃ ∈ Sym(N)` induced by `σ ∈ Sym(m)` on a
//! branch-index basis, and the `Sh_k` family.
//!
//! `σ̃` is computed digitwise: decode `x` against `(n_1, ..., n_m)`, move
//! digit `σ⁻¹(j)` into position `j`, and encode against the reordered basis
//! `(n_{σ⁻¹(1)}, ..., n_{σ⁻¹(m)})`. The literal Kronecker-sum matrix lives in
//! [`shuffle_matrix_oracle`] and is only meant for cross-checking.
//!
//! `σ` always acts on 0-based word positions here; user-facing text uses
//! 1-based cycle notation and is converted by [`parse_cycles`](crate::permutation::parse_cycles).

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::linalg_kron::IntMatrix;
use crate::mixed_radix::{checked_product, decode_into, encode_digits, BranchIndices};
use crate::permutation::Permutation;

/// Default bound on `N` for the dense Kronecker-sum oracle.
pub const DEFAULT_ORACLE_LIMIT: usize = 4096;

/// Upper bound on `m` when enumerating all of `Sym(m)`.
pub const MAX_SYM_DEGREE: usize = 8;

/// A basis together with `σ` acting on its word positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShuffleSpec {
    basis: BranchIndices,
    sigma: Permutation,
}

impl ShuffleSpec {
    pub fn new(basis: BranchIndices, sigma: Permutation) -> Result<Self> {
        if sigma.degree() != basis.len() {
            return Err(Error::DegreeMismatch {
                left: sigma.degree(),
                right: basis.len(),
            });
        }
        Ok(ShuffleSpec { basis, sigma })
    }

    pub fn basis(&self) -> &BranchIndices {
        &self.basis
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }
}

/// Digit-position shuffle over arbitrary radices (radix 1 allowed).
///
/// Panics if `sigma.degree() != dims.len()`.
pub(crate) fn digit_shuffle(dims: &[usize], sigma: &Permutation) -> Permutation {
    assert_eq!(sigma.degree(), dims.len());
    let m = dims.len();
    let inv = sigma.inverse();
    let target: Vec<usize> = (0..m).map(|j| dims[inv.apply(j)]).collect();
    let total: usize = dims.iter().product();
    let mut digits = vec![0; m];
    let mut moved = vec![0; m];
    let images = (0..total)
        .map(|x| {
            decode_into(dims, x, &mut digits);
            for j in 0..m {
                moved[j] = digits[inv.apply(j)];
            }
            encode_digits(&target, &moved)
        })
        .collect();
    Permutation::from_images_unchecked(images)
}

/// `σ̃` by the digit formula.
pub fn shuffle_perm(spec: &ShuffleSpec) -> Permutation {
    digit_shuffle(spec.basis.indices(), &spec.sigma)
}

/// The literal sum `Σ E^{i_{σ⁻¹(1)}, i_1} ⊗ ⋯ ⊗ E^{i_{σ⁻¹(m)}, i_m}` over all
/// index tuples, for dims of any size `>= 1`.
pub(crate) fn kron_sum_matrix(dims: &[usize], sigma: &Permutation) -> Result<IntMatrix> {
    let m = dims.len();
    let inv = sigma.inverse();
    let total: usize = dims.iter().product();
    let mut sum = IntMatrix::zeros(total, total);
    let mut idx = vec![0; m];
    for flat in 0..total {
        decode_into(dims, flat, &mut idx);
        let factors = (0..m)
            .map(|j| {
                let src = inv.apply(j);
                IntMatrix::elementary(idx[src] + 1, idx[j] + 1, dims[src], dims[j])
            })
            .collect::<Result<Vec<_>>>()?;
        sum += &IntMatrix::kron_all(&factors);
    }
    Ok(sum)
}

/// The shuffling matrix built from its defining Kronecker sum.
pub fn shuffle_matrix_oracle(spec: &ShuffleSpec, limit: usize) -> Result<IntMatrix> {
    checked_product(spec.basis.indices(), limit)?;
    kron_sum_matrix(spec.basis.indices(), &spec.sigma)
}

/// The perfect shuffle: `σ̃` for the forward cycle `σ = (1 2 ⋯ m)`.
pub fn perfect_shuffle(basis: &BranchIndices) -> Permutation {
    let m = basis.len();
    let cycle = Permutation::new((0..m).map(|j| (j + 1) % m).collect()).expect("m-cycle");
    digit_shuffle(basis.indices(), &cycle)
}

/// `Sh_k` on `{0, ..., N-1}`: horizontal listing `0, k, 2k, ... (mod N-1), N-1`.
///
/// Pointwise this is `x ↦ x·k⁻¹ mod (N-1)` with `N-1` fixed.
pub fn sh_k(n: usize, k: usize) -> Result<Permutation> {
    if n < 3 || k == 0 || k > n - 2 {
        return Err(Error::ShiftRange {
            k,
            max: n.saturating_sub(2),
        });
    }
    let modulus = n - 1;
    if gcd(k, modulus) != 1 {
        return Err(Error::NotCoprime { k, modulus });
    }
    let mut images = vec![0; n];
    for t in 0..modulus {
        images[(t * k) % modulus] = t;
    }
    images[modulus] = modulus;
    Permutation::new(images)
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// All of `Sym(m)` in lexicographic order of image tables.
pub fn symmetric_group(m: usize) -> Result<Vec<Permutation>> {
    if m > MAX_SYM_DEGREE {
        return Err(Error::SizeLimit {
            size: m as u128,
            limit: MAX_SYM_DEGREE as u128,
        });
    }
    Ok((0..m)
        .permutations(m)
        .map(Permutation::from_images_unchecked)
        .collect())
}

/// Points fixed by `σ̃` for every `σ ∈ Sym(m)`.
pub fn common_fixed(basis: &BranchIndices) -> Result<Vec<usize>> {
    let mut fixed = vec![true; basis.total()];
    for sigma in symmetric_group(basis.len())? {
        let p = digit_shuffle(basis.indices(), &sigma);
        for (x, keep) in fixed.iter_mut().enumerate() {
            *keep &= p.apply(x) == x;
        }
    }
    Ok(fixed
        .into_iter()
        .enumerate()
        .filter_map(|(x, keep)| keep.then_some(x))
        .collect())
}

/// `τ̃` on the `σ`-reordered basis composed after `σ̃`; equals `(τσ)~`.
pub fn compose_shuffles(
    basis: &BranchIndices,
    sigma: &Permutation,
    tau: &Permutation,
) -> Result<Permutation> {
    let first = shuffle_perm(&ShuffleSpec::new(basis.clone(), sigma.clone())?);
    let reordered = basis.reordered(sigma)?;
    let second = shuffle_perm(&ShuffleSpec::new(reordered, tau.clone())?);
    second.compose(&first)
}
