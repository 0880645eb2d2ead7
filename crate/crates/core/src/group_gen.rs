//! Permutation groups generated by shuffles, by breadth-first closure.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::mixed_radix::BranchIndices;
use crate::permutation::Permutation;
use crate::shuffling::{digit_shuffle, gcd, sh_k, symmetric_group};

/// Default cap on the number of enumerated elements.
pub const DEFAULT_GROUP_LIMIT: usize = 10_000_000;

/// A finite permutation group with its elements sorted by image table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Permutation>,
    generators: Vec<Permutation>,
}

impl PermGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Checked on generators, which suffices for the whole group.
    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.compose(b).unwrap() == b.compose(a).unwrap())
        })
    }

    /// True when every element fixes `point`.
    pub fn fixes(&self, point: usize) -> bool {
        self.generators.iter().all(|g| g.apply(point) == point)
    }
}

/// The group generated by `generators`, saturating under left multiplication
/// from the identity.
pub fn closure(generators: &[Permutation], degree: usize, limit: usize) -> Result<PermGroup> {
    if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
        return Err(Error::DegreeMismatch {
            left: g.degree(),
            right: degree,
        });
    }
    let identity = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(identity.clone());
    queue.push_back(identity);
    while let Some(current) = queue.pop_front() {
        for g in generators {
            let next = g.compose(&current)?;
            if !seen.contains(&next) {
                if seen.len() >= limit {
                    return Err(Error::GroupLimit(limit));
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut elements: Vec<Permutation> = seen.into_iter().collect();
    elements.sort_unstable();
    Ok(PermGroup {
        degree,
        elements,
        generators: generators.to_vec(),
    })
}

/// `σ̃` for every `σ ∈ Sym(m)`, in the order of [`symmetric_group`].
pub fn shuffle_generators(basis: &BranchIndices) -> Result<Vec<Permutation>> {
    Ok(symmetric_group(basis.len())?
        .iter()
        .map(|sigma| digit_shuffle(basis.indices(), sigma))
        .collect())
}

/// `K_{n_1, ..., n_m} = ⟨σ̃ : σ ∈ Sym(m)⟩`.
pub fn k_group(basis: &BranchIndices, limit: usize) -> Result<PermGroup> {
    closure(&shuffle_generators(basis)?, basis.total(), limit)
}

/// `Sh_k` for every `1 <= k <= N-2` coprime to `N-1`.
pub fn sh_generators(n: usize) -> Result<Vec<Permutation>> {
    if n < 3 {
        return Err(Error::ShiftRange {
            k: 1,
            max: n.saturating_sub(2),
        });
    }
    (1..=n - 2)
        .filter(|&k| gcd(k, n - 1) == 1)
        .map(|k| sh_k(n, k))
        .collect()
}

/// `G_{Sh,N} = ⟨Sh_k : gcd(k, N-1) = 1⟩`.
pub fn gsh_group(n: usize, limit: usize) -> Result<PermGroup> {
    closure(&sh_generators(n)?, n, limit)
}

/// Euler's totient by trial-division factorization; `φ(1) = 1`.
pub fn totient(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// `[Sym(N) : K] >= N(N-1)`, evaluated exactly as `N! >= N(N-1)·|K|`.
pub fn index_lower_bound_check(group: &PermGroup) -> bool {
    let n = group.degree();
    let factorial = (1..=n).fold(BigUint::from(1u32), |acc, k| acc * k);
    let bound =
        BigUint::from(n) * BigUint::from(n.saturating_sub(1)) * BigUint::from(group.order());
    factorial >= bound
}

/// The exact index `N! / |K|`.
pub fn index_in_symmetric(group: &PermGroup) -> BigUint {
    let factorial = (1..=group.degree()).fold(BigUint::from(1u32), |acc, k| acc * k);
    factorial / BigUint::from(group.order())
}

/// True when `σ ↦ σ̃` is an injective homomorphism `Sym(m) → Sym(N)`,
/// checked on the full multiplication table.
pub fn is_injective_homomorphism(basis: &BranchIndices) -> Result<bool> {
    let sym = symmetric_group(basis.len())?;
    let images: Vec<Permutation> = sym
        .iter()
        .map(|s| digit_shuffle(basis.indices(), s))
        .collect();
    let distinct: HashSet<&Permutation> = images.iter().collect();
    if distinct.len() != images.len() {
        return Ok(false);
    }
    for (i, sigma) in sym.iter().enumerate() {
        for (j, tau) in sym.iter().enumerate() {
            let product = digit_shuffle(basis.indices(), &tau.compose(sigma)?);
            if product != images[j].compose(&images[i])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Witnesses that every generator of the group on the `σ`-reordered basis is
/// a word in the generators of the original group: `τ̃' = (τσ)~ ∘ (σ̃)⁻¹`.
///
/// Returns true when the identity holds for all `τ`, which proves
/// `K_{reordered} <= K_{basis}` without enumerating either group.
pub fn reordered_generators_in_group(basis: &BranchIndices, sigma: &Permutation) -> Result<bool> {
    let reordered = basis.reordered(sigma)?;
    let sigma_tilde_inv = digit_shuffle(basis.indices(), sigma).inverse();
    for tau in symmetric_group(basis.len())? {
        let generator = digit_shuffle(reordered.indices(), &tau);
        let word =
            digit_shuffle(basis.indices(), &tau.compose(sigma)?).compose(&sigma_tilde_inv)?;
        if generator != word {
            return Ok(false);
        }
    }
    Ok(true)
}
