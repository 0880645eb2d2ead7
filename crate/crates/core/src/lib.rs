//! Shuffling permutations of mixed-radix index sets and their uses.
//!
//! * [`mixed_radix`]: integers `0..N` as digit words over `(n_1, …, n_m)`.
//! * [`permutation`]: image tables, cycles, horizontal listings.
//! * [`linalg_kron`]: exact integer matrices and Kronecker products.
//! * [`shuffling`]: `σ̃` from `σ ∈ Sym(m)`, perfect shuffles, `Sh_k`.
//! * [`rearrange`]: reordering the factors of a Kronecker product.
//! * [`group_gen`]: groups generated by shuffles.
//! * [`dft_factor`]: exact DFT identities and a mixed-radix FFT.
//! * [`format`]: JSON and CSV encodings.
//!
//! Composition is right to left: `f.compose(&g)` maps `x` to `f(g(x))`.

pub mod dft_factor;
pub mod error;
pub mod format;
pub mod group_gen;
pub mod linalg_kron;
pub mod mixed_radix;
pub mod permutation;
pub mod rearrange;
pub mod shuffling;

pub use error::{Error, Result};
pub use mixed_radix::{BranchIndices, DigitWord, WeightVector};
pub use permutation::{parse_cycles, CycleDecomposition, Permutation};
pub use shuffling::ShuffleSpec;
