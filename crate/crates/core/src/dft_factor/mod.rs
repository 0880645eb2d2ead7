//! DFT matrices in exact exponent arithmetic, the radix identity, the block
//! factorization of `F_N·(P^σ)ᵀ`, and a mixed-radix FFT.
//!
//! Throughout, `ω = exp(+2πi/N)`.

mod fft;
mod omega;

pub use fft::{fft_plan, prime_factors, FftPlan};
pub use omega::{root_table, OmegaCell, OmegaMatrix};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::mixed_radix::BranchIndices;
use crate::permutation::Permutation;
use crate::shuffling::{digit_shuffle, shuffle_perm, ShuffleSpec, DEFAULT_ORACLE_LIMIT};

/// `F_N(ω)`, entry `(i, j) = ω^{ij}`.
pub fn dft_matrix(n: usize) -> Result<OmegaMatrix> {
    scaled_dft(n, n, 1)
}

/// `F_n(ω^step)` where `ω` is a primitive `modulus`-th root.
pub fn scaled_dft(n: usize, modulus: usize, step: usize) -> Result<OmegaMatrix> {
    if n == 0 || modulus == 0 {
        return Err(Error::Shape("DFT size must be positive".into()));
    }
    Ok(OmegaMatrix::from_fn(modulus, n, n, |i, j| {
        Some((i * j % modulus) * step % modulus)
    }))
}

/// Direct `O(N²)` evaluation of `y_j = Σ_k x_k ω^{jk}`.
pub fn naive_dft(x: &[Complex64]) -> Vec<Complex64> {
    let n = x.len();
    let roots = root_table(n);
    (0..n)
        .map(|j| {
            let mut e = 0;
            let mut acc = Complex64::new(0.0, 0.0);
            for &v in x {
                acc += v * roots[e];
                e += j;
                if e >= n {
                    e -= n;
                }
            }
            acc
        })
        .collect()
}

/// `D_s(ω^b) = diag(ω^0, ω^b, …, ω^{(s-1)b})`.
pub fn diag_power(base_exponent: usize, s: usize, modulus: usize) -> OmegaMatrix {
    let exps: Vec<usize> = (0..s).map(|t| t * base_exponent % modulus).collect();
    OmegaMatrix::diagonal(modulus, &exps)
}

/// `T^s_r = D_r(D_s(ω))`: diagonal of size `rs` with `ω^{ij}` at `i·s + j`.
pub fn twiddle(r: usize, s: usize, n: usize) -> Result<OmegaMatrix> {
    if r * s != n || n == 0 {
        return Err(Error::Factorization {
            n,
            reason: format!("{r} x {s} does not equal {n}"),
        });
    }
    let exps: Vec<usize> = (0..n).map(|x| (x / s) * (x % s) % n).collect();
    Ok(OmegaMatrix::diagonal(n, &exps))
}

/// `P_s^r`: the transpose of an `r x s` array, `b1·s + b2 ↦ b2·r + b1`.
pub fn radix_permutation(r: usize, s: usize) -> Permutation {
    digit_shuffle(&[r, s], &Permutation::from_images_unchecked(vec![1, 0]))
}

/// Both sides of `F_n(ω)·P_s^r = (F_r(ω^s) ⊗ I_s)·T^s_r·(I_r ⊗ F_s(ω^r))`.
pub fn radix_identity_sides(r: usize, s: usize) -> Result<(OmegaMatrix, OmegaMatrix)> {
    let n = r * s;
    if r == 0 || s == 0 {
        return Err(Error::Factorization {
            n,
            reason: "radices must be positive".into(),
        });
    }
    let lhs = dft_matrix(n)?.matmul(&OmegaMatrix::permutation(n, &radix_permutation(r, s)))?;
    let outer = scaled_dft(r, n, s)?.kron(&OmegaMatrix::identity(n, s))?;
    let inner = OmegaMatrix::identity(n, r).kron(&scaled_dft(s, n, r)?)?;
    let rhs = outer.matmul(&twiddle(r, s, n)?)?.matmul(&inner)?;
    Ok((lhs, rhs))
}

/// Exact check of the general radix identity.
pub fn radix_identity_check(r: usize, s: usize) -> Result<bool> {
    let (lhs, rhs) = radix_identity_sides(r, s)?;
    Ok(lhs == rhs)
}

/// `F_N·(P^σ)ᵀ`, entry `(i, j) = ω^{i·σ̃⁻¹(j)}`, as a column permutation of
/// the DFT matrix.
pub fn dft_times_shuffle_transpose(spec: &ShuffleSpec) -> OmegaMatrix {
    let n = spec.basis().total();
    let inv = shuffle_perm(spec).inverse();
    OmegaMatrix::from_fn(n, n, n, |i, j| Some(i * inv.apply(j) % n))
}

/// The block family `B_{hk} = C_{hk}·A_h` built from the closed-form
/// expressions for `C_{hk}` and `A_h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorBlocks {
    n_m: usize,
    block_size: usize,
    c: Vec<Vec<OmegaMatrix>>,
    a: Vec<OmegaMatrix>,
    b: Vec<Vec<OmegaMatrix>>,
}

impl FactorBlocks {
    pub fn n_m(&self) -> usize {
        self.n_m
    }

    pub fn block_size(&self) -> usize {
        self.block_size
    }

    pub fn c(&self, h: usize, k: usize) -> &OmegaMatrix {
        &self.c[h][k]
    }

    pub fn a(&self, h: usize) -> &OmegaMatrix {
        &self.a[h]
    }

    pub fn b(&self, h: usize, k: usize) -> &OmegaMatrix {
        &self.b[h][k]
    }

    /// The `N x N` matrix with `B_{hk}` in block position `(h, k)`.
    pub fn assemble(&self) -> OmegaMatrix {
        OmegaMatrix::from_blocks(&self.b).expect("blocks share one shape")
    }
}

/// `C_{hk} = ω^{M·h·c_k}·D_M(ω^{c_k})` and `A_h(i, j) = ω^{(i + hM)·σ̃⁻¹(j)}`,
/// where `M = N/n_m` and `c_k = σ̃⁻¹(kM)`.
pub fn theorem_blocks(spec: &ShuffleSpec) -> FactorBlocks {
    let n = spec.basis().total();
    let n_m = spec.basis().last();
    let size = n / n_m;
    let inv = shuffle_perm(spec).inverse();
    let a: Vec<OmegaMatrix> = (0..n_m)
        .map(|h| {
            OmegaMatrix::from_fn(n, size, size, |i, j| {
                Some((i + h * size) % n * inv.apply(j) % n)
            })
        })
        .collect();
    let c: Vec<Vec<OmegaMatrix>> = (0..n_m)
        .map(|h| {
            (0..n_m)
                .map(|k| {
                    let ck = inv.apply(k * size);
                    diag_power(ck, size, n).scale(size * h % n * ck % n)
                })
                .collect()
        })
        .collect();
    let b = c
        .iter()
        .zip(&a)
        .map(|(row, ah)| {
            row.iter()
                .map(|chk| chk.matmul(ah).expect("diagonal times dense is monomial"))
                .collect()
        })
        .collect();
    FactorBlocks {
        n_m,
        block_size: size,
        c,
        a,
        b,
    }
}

/// Outcome of comparing the block formula with `F_N·(P^σ)ᵀ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationReport {
    pub n_m: usize,
    pub block_size: usize,
    /// Blocks `(h, k)` whose formula disagrees with the direct product.
    pub mismatched_blocks: Vec<(usize, usize)>,
    /// Number of disagreeing entries over the whole matrix.
    pub mismatched_entries: usize,
}

impl FactorizationReport {
    pub fn holds(&self) -> bool {
        self.mismatched_entries == 0
    }
}

pub fn check_factorization(spec: &ShuffleSpec) -> Result<FactorizationReport> {
    check_factorization_with_limit(spec, DEFAULT_ORACLE_LIMIT)
}

pub fn check_factorization_with_limit(
    spec: &ShuffleSpec,
    limit: usize,
) -> Result<FactorizationReport> {
    let n = spec.basis().total();
    if n > limit {
        return Err(Error::SizeLimit {
            size: n as u128,
            limit: limit as u128,
        });
    }
    let direct = dft_times_shuffle_transpose(spec);
    let blocks = theorem_blocks(spec);
    let assembled = blocks.assemble();
    let size = blocks.block_size;
    let mut mismatched_blocks = Vec::new();
    let mut mismatched_entries = 0;
    for h in 0..blocks.n_m {
        for k in 0..blocks.n_m {
            let mut bad = 0;
            for i in 0..size {
                for j in 0..size {
                    let (r, c) = (h * size + i, k * size + j);
                    if direct.get(r, c) != assembled.get(r, c) {
                        bad += 1;
                    }
                }
            }
            if bad > 0 {
                mismatched_blocks.push((h, k));
                mismatched_entries += bad;
            }
        }
    }
    Ok(FactorizationReport {
        n_m: blocks.n_m,
        block_size: size,
        mismatched_blocks,
        mismatched_entries,
    })
}

/// True when the assembled blocks equal `F_N·(P^σ)ᵀ` exactly.
pub fn verify_factorization(spec: &ShuffleSpec) -> Result<bool> {
    Ok(check_factorization(spec)?.holds())
}

/// For `σ = (1 2 … m)`: every block of `F_N·(P^σ)ᵀ` equals
/// `ω^{Mhk}·D_M(ω^k)·F_M(ω^{n_m})`.
pub fn cyclic_blocks_check(basis: &BranchIndices) -> Result<bool> {
    let m = basis.len();
    let cycle = Permutation::new((0..m).map(|i| (i + 1) % m).collect())?;
    let spec = ShuffleSpec::new(basis.clone(), cycle)?;
    let n = basis.total();
    let n_m = basis.last();
    let size = n / n_m;
    let direct = dft_times_shuffle_transpose(&spec);
    let small = scaled_dft(size, n, n_m)?;
    for h in 0..n_m {
        for k in 0..n_m {
            let expected = diag_power(k, size, n)
                .scale(size * h * k % n)
                .matmul(&small)?;
            if direct.submatrix(h * size, k * size, size, size)? != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Both sides of
/// `F_{2n₁}(ω)·(P^{(1 2)}_{n₁,2})ᵀ = [[F, D·F], [F, −D·F]]`
/// with `F = F_{n₁}(ω²)`, `D = D_{n₁}(ω)` and `−1 = ω^{n₁}`.
pub fn two_block_sides(n1: usize) -> Result<(OmegaMatrix, OmegaMatrix)> {
    let basis = BranchIndices::new(vec![n1, 2])?;
    let spec = ShuffleSpec::new(basis, Permutation::new(vec![1, 0])?)?;
    let n = 2 * n1;
    let direct = dft_times_shuffle_transpose(&spec);
    let f = scaled_dft(n1, n, 2)?;
    let df = diag_power(1, n1, n).matmul(&f)?;
    let grid = vec![vec![f.clone(), df.clone()], vec![f, df.scale(n1)]];
    Ok((direct, OmegaMatrix::from_blocks(&grid)?))
}

pub fn two_block_check(n1: usize) -> Result<bool> {
    let (lhs, rhs) = two_block_sides(n1)?;
    Ok(lhs == rhs)
}

/// `max |(1/N)·conj(F_N)·F_N − I|` in floating point.
pub fn unitarity_error(n: usize) -> Result<f64> {
    let f = dft_matrix(n)?.to_complex();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let sum: Complex64 = (0..n).map(|k| f[k * n + i].conj() * f[k * n + j]).sum();
            let expected = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((sum / n as f64 - expected).norm());
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg_kron::perm_to_matrix;
    use crate::permutation::parse_cycles;
    use crate::shuffling::symmetric_group;

    fn spec(b: &[usize], sigma: &str) -> ShuffleSpec {
        ShuffleSpec::new(
            BranchIndices::new(b.to_vec()).unwrap(),
            parse_cycles(sigma, b.len(), true).unwrap(),
        )
        .unwrap()
    }

    fn exps(m: &OmegaMatrix) -> Vec<Vec<usize>> {
        m.exponent_rows()
            .into_iter()
            .map(|row| row.into_iter().map(|e| e.unwrap()).collect())
            .collect()
    }

    /// The explicit 12x12 table of exponents for (2,2,3) and σ = (1 3).
    pub(crate) const EXAMPLE_TABLE: [[usize; 12]; 12] = [
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 6, 3, 9, 1, 7, 4, 10, 2, 8, 5, 11],
        [0, 0, 6, 6, 2, 2, 8, 8, 4, 4, 10, 10],
        [0, 6, 9, 3, 3, 9, 0, 6, 6, 0, 3, 9],
        [0, 0, 0, 0, 4, 4, 4, 4, 8, 8, 8, 8],
        [0, 6, 3, 9, 5, 11, 8, 2, 10, 4, 1, 7],
        [0, 0, 6, 6, 6, 6, 0, 0, 0, 0, 6, 6],
        [0, 6, 9, 3, 7, 1, 4, 10, 2, 8, 11, 5],
        [0, 0, 0, 0, 8, 8, 8, 8, 4, 4, 4, 4],
        [0, 6, 3, 9, 9, 3, 0, 6, 6, 0, 9, 3],
        [0, 0, 6, 6, 10, 10, 4, 4, 8, 8, 2, 2],
        [0, 6, 9, 3, 11, 5, 8, 2, 10, 4, 7, 1],
    ];

    #[test]
    fn dft_matrix_examples() {
        assert_eq!(exps(&dft_matrix(1).unwrap()), vec![vec![0]]);
        assert_eq!(exps(&dft_matrix(2).unwrap()), vec![vec![0, 0], vec![0, 1]]);
        assert_eq!(dft_matrix(4).unwrap().get(2, 3), OmegaCell::Exp(2));
        assert!(dft_matrix(0).is_err());
        let v = dft_matrix(2).unwrap().to_complex();
        assert!((v[3] + Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn naive_dft_examples() {
        let n = 12;
        let mut delta = vec![Complex64::new(0.0, 0.0); n];
        delta[0] = Complex64::new(1.0, 0.0);
        assert!(naive_dft(&delta)
            .iter()
            .all(|y| (y - Complex64::new(1.0, 0.0)).norm() < 1e-12));
        let ones = vec![Complex64::new(1.0, 0.0); n];
        let y = naive_dft(&ones);
        assert!((y[0] - Complex64::new(12.0, 0.0)).norm() < 1e-12);
        assert!(y[1..].iter().all(|v| v.norm() < 1e-12));
        let x: Vec<Complex64> = (0..n)
            .map(|k| Complex64::new((k as f64 * 0.7).sin(), (k as f64 * 1.3).cos()))
            .collect();
        let f = dft_matrix(n).unwrap().to_complex();
        let y = naive_dft(&x);
        for j in 0..n {
            let direct: Complex64 = (0..n).map(|k| f[j * n + k] * x[k]).sum();
            assert!((direct - y[j]).norm() <= 1e-12);
        }
    }

    #[test]
    fn diag_power_examples() {
        assert_eq!(diag_power(0, 3, 12), OmegaMatrix::identity(12, 3));
        let d = diag_power(1, 4, 12);
        assert_eq!(
            (0..4).map(|t| d.get(t, t)).collect::<Vec<_>>(),
            [0, 1, 2, 3].map(OmegaCell::Exp).to_vec()
        );
        let d = diag_power(6, 4, 12);
        assert_eq!(
            (0..4).map(|t| d.get(t, t)).collect::<Vec<_>>(),
            [0, 6, 0, 6].map(OmegaCell::Exp).to_vec()
        );
        assert_eq!(d.get(0, 1), OmegaCell::Zero);
    }

    #[test]
    fn twiddle_examples() {
        assert_eq!(twiddle(1, 5, 5).unwrap(), OmegaMatrix::identity(5, 5));
        let t = twiddle(2, 2, 4).unwrap();
        assert_eq!(
            (0..4).map(|x| t.get(x, x)).collect::<Vec<_>>(),
            [0, 0, 0, 1].map(OmegaCell::Exp).to_vec()
        );
        assert_eq!(twiddle(3, 4, 12).unwrap().get(11, 11), OmegaCell::Exp(6));
        assert!(twiddle(3, 4, 13).is_err());
        // D_r(D_s(ω)): block i is the i-th power of D_s(ω)
        let (r, s) = (3, 4);
        let t = twiddle(r, s, 12).unwrap();
        let ds = diag_power(1, s, 12);
        let mut power = OmegaMatrix::identity(12, s);
        for i in 0..r {
            assert_eq!(t.submatrix(i * s, i * s, s, s).unwrap(), power);
            power = power.matmul(&ds).unwrap();
        }
    }

    #[test]
    fn radix_identity_examples() {
        assert!(radix_identity_check(2, 2).unwrap());
        assert!(radix_identity_check(3, 4).unwrap());
        assert!(radix_identity_check(1, 7).unwrap());
        assert!(radix_identity_check(7, 1).unwrap());
        let (lhs, _) = radix_identity_sides(1, 7).unwrap();
        assert_eq!(lhs, dft_matrix(7).unwrap());
        for r in 2..=5 {
            for s in 2..=5 {
                assert!(radix_identity_check(r, s).unwrap(), "{r} {s}");
            }
        }
    }

    #[test]
    fn radix_permutation_is_m2_shuffle() {
        let basis = BranchIndices::new(vec![3, 4]).unwrap();
        let swap = Permutation::new(vec![1, 0]).unwrap();
        let spec = ShuffleSpec::new(basis, swap).unwrap();
        assert_eq!(radix_permutation(3, 4), shuffle_perm(&spec));
    }

    #[test]
    fn direct_product_matches_matmul() {
        for (b, s) in [
            (&[2, 2, 3][..], "(1 3)"),
            (&[3, 2][..], "(1 2)"),
            (&[2, 3, 2][..], "(1 2 3)"),
        ] {
            let sp = spec(b, s);
            let n = sp.basis().total();
            let p = OmegaMatrix::permutation(n, &shuffle_perm(&sp));
            let product = dft_matrix(n).unwrap().matmul(&p.transpose()).unwrap();
            assert_eq!(product, dft_times_shuffle_transpose(&sp));
            assert!(perm_to_matrix(&shuffle_perm(&sp)).is_permutation_matrix());
        }
    }

    #[test]
    fn example_table() {
        let sp = spec(&[2, 2, 3], "(1 3)");
        let direct = dft_times_shuffle_transpose(&sp);
        let table: Vec<Vec<usize>> = EXAMPLE_TABLE.iter().map(|r| r.to_vec()).collect();
        assert_eq!(exps(&direct), table);
        let blocks = theorem_blocks(&sp);
        assert_eq!(blocks.n_m(), 3);
        assert_eq!(blocks.block_size(), 4);
        assert_eq!(exps(&blocks.assemble()), table);
        assert_eq!(blocks.b(0, 0).get(1, 1), OmegaCell::Exp(6));
        assert_eq!(blocks.a(0), blocks.a(1));
        assert_eq!(blocks.a(1), blocks.a(2));
        for h in 0..3 {
            assert_eq!(blocks.b(h, 0), blocks.a(h));
            assert_eq!(blocks.c(h, 0), &OmegaMatrix::identity(12, 4));
        }
        assert!(verify_factorization(&sp).unwrap());
    }

    #[test]
    fn factorization_truth_table_223() {
        // The block formula needs σ̃⁻¹ to split additively over kM + j.
        let expected = [
            ("()", true),
            ("(1 3)", true),
            ("(1 2 3)", true),
            ("(1 3 2)", true),
            ("(1 2)", false),
            ("(2 3)", false),
        ];
        for (sigma, holds) in expected {
            let report = check_factorization(&spec(&[2, 2, 3], sigma)).unwrap();
            assert_eq!(report.holds(), holds, "{sigma}");
            // the k = 0 column is always right
            assert!(report.mismatched_blocks.iter().all(|&(_, k)| k != 0));
        }
    }

    #[test]
    fn factorization_additivity_criterion() {
        for b in [
            &[2, 2, 3][..],
            &[2, 3, 2],
            &[3, 2, 2],
            &[2, 3],
            &[4, 2, 2],
            &[2, 2, 2, 2],
        ] {
            let basis = BranchIndices::new(b.to_vec()).unwrap();
            let n = basis.total();
            let size = n / basis.last();
            for sigma in symmetric_group(b.len()).unwrap() {
                let sp = ShuffleSpec::new(basis.clone(), sigma.clone()).unwrap();
                let inv = shuffle_perm(&sp).inverse();
                let additive = (0..basis.last()).all(|k| {
                    (0..size).all(|j| {
                        inv.apply(k * size + j) == (inv.apply(k * size) + inv.apply(j)) % n
                    })
                });
                assert_eq!(
                    verify_factorization(&sp).unwrap(),
                    additive,
                    "{b:?} {sigma:?}"
                );
            }
        }
    }

    #[test]
    fn b_h0_equals_a_h_always() {
        for b in [&[2, 2, 3][..], &[3, 2, 4], &[2, 5]] {
            let basis = BranchIndices::new(b.to_vec()).unwrap();
            for sigma in symmetric_group(b.len()).unwrap() {
                let blocks = theorem_blocks(&ShuffleSpec::new(basis.clone(), sigma).unwrap());
                for h in 0..blocks.n_m() {
                    assert_eq!(blocks.b(h, 0), blocks.a(h));
                }
            }
        }
    }

    #[test]
    fn cyclic_proposition() {
        for b in [&[2, 2, 3][..], &[3, 4], &[2, 3, 2, 2], &[5, 2, 3]] {
            let basis = BranchIndices::new(b.to_vec()).unwrap();
            assert!(cyclic_blocks_check(&basis).unwrap(), "{b:?}");
            let m = b.len();
            let cycle = Permutation::new((0..m).map(|i| (i + 1) % m).collect()).unwrap();
            assert!(verify_factorization(&ShuffleSpec::new(basis, cycle).unwrap()).unwrap());
        }
    }

    #[test]
    fn two_block_form() {
        for n1 in 2..=8 {
            assert!(two_block_check(n1).unwrap(), "{n1}");
        }
    }

    #[test]
    fn unitarity() {
        for n in [1, 2, 3, 12, 64] {
            assert!(unitarity_error(n).unwrap() <= 1e-10, "{n}");
        }
    }

    #[test]
    fn oracle_limit_respected() {
        let sp = spec(&[2, 2, 3], "(1 3)");
        assert!(matches!(
            check_factorization_with_limit(&sp, 8),
            Err(Error::SizeLimit { .. })
        ));
    }
}
