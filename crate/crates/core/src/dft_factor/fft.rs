//! Mixed-radix decimation-in-time FFT.
//!
//! For factors `(p_1, …, p_s)` the input is first scattered by the
//! digit-reversal shuffle, then stage `i` (from `s` down to `1`) merges
//! `p_i` transforms of length `L = p_{i+1}⋯p_s` into one of length `L·p_i`.
//! The twiddle factors are folded into the butterfly coefficients, so a
//! radix-`p` stage costs exactly `N·p` complex multiply-adds.

use num_complex::Complex64;

use super::omega::{root_table, OmegaMatrix};
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::shuffling::digit_shuffle;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Stage {
    radix: usize,
    span: usize,
}

/// A precomputed transform of fixed length.
#[derive(Debug, Clone)]
pub struct FftPlan {
    n: usize,
    factors: Vec<usize>,
    input_order: Permutation,
    roots: Vec<Complex64>,
    stages: Vec<Stage>,
}

/// Prime factors of `n` in ascending order; empty for `n = 1`.
pub fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            out.push(p);
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Plans a transform of length `n` using the given radices.
pub fn fft_plan(n: usize, factors: &[usize]) -> Result<FftPlan> {
    if n == 0 {
        return Err(Error::Factorization {
            n,
            reason: "length must be positive".into(),
        });
    }
    if let Some(&p) = factors.iter().find(|&&p| p < 2) {
        return Err(Error::Factorization {
            n,
            reason: format!("factor {p} is smaller than 2"),
        });
    }
    let product = factors
        .iter()
        .try_fold(1usize, |acc, &p| acc.checked_mul(p))
        .filter(|&prod| prod == n);
    if product.is_none() {
        return Err(Error::Factorization {
            n,
            reason: format!("factors {factors:?} do not multiply to {n}"),
        });
    }
    let input_order = if factors.len() < 2 {
        Permutation::identity(n)
    } else {
        let reversed: Vec<usize> = factors.iter().rev().copied().collect();
        let s = factors.len();
        let reversal = Permutation::from_images_unchecked((0..s).rev().collect());
        digit_shuffle(&reversed, &reversal)
    };
    let mut stages = Vec::with_capacity(factors.len());
    let mut span = 1;
    for &radix in factors.iter().rev() {
        stages.push(Stage { radix, span });
        span *= radix;
    }
    Ok(FftPlan {
        n,
        factors: factors.to_vec(),
        input_order,
        roots: root_table(n),
        stages,
    })
}

impl FftPlan {
    /// Plans with the prime factorization of `n`.
    pub fn new(n: usize) -> Result<FftPlan> {
        fft_plan(n, &prime_factors(n))
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn stage_count(&self) -> usize {
        self.stages.len()
    }

    /// Where input sample `k` is placed before the first stage.
    pub fn input_order(&self) -> &Permutation {
        &self.input_order
    }

    /// `N·Σ p_i`, the number of complex multiply-adds per transform.
    pub fn multiply_add_count(&self) -> u64 {
        self.n as u64 * self.factors.iter().map(|&p| p as u64).sum::<u64>()
    }

    pub fn fft(&self, x: &[Complex64]) -> Result<Vec<Complex64>> {
        self.fft_counted(x).map(|(y, _)| y)
    }

    /// Transform plus the number of multiply-adds actually performed.
    pub fn fft_counted(&self, x: &[Complex64]) -> Result<(Vec<Complex64>, u64)> {
        if x.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: x.len(),
            });
        }
        let mut buf = vec![Complex64::new(0.0, 0.0); self.n];
        for (k, &v) in x.iter().enumerate() {
            buf[self.input_order.apply(k)] = v;
        }
        let max_radix = self.factors.iter().copied().max().unwrap_or(1);
        let mut gathered = vec![Complex64::new(0.0, 0.0); max_radix];
        let mut count = 0u64;
        for stage in &self.stages {
            let (p, l) = (stage.radix, stage.span);
            let len = l * p;
            let stride = self.n / len;
            for b0 in (0..self.n).step_by(len) {
                for j in 0..l {
                    for t in 0..p {
                        gathered[t] = buf[b0 + t * l + j];
                    }
                    for q in 0..p {
                        let k = j + q * l;
                        let mut acc = Complex64::new(0.0, 0.0);
                        for (t, &v) in gathered[..p].iter().enumerate() {
                            acc += v * self.roots[(t * k % len) * stride];
                        }
                        buf[b0 + k] = acc;
                    }
                    count += (p * p) as u64;
                }
            }
        }
        Ok((buf, count))
    }

    /// The plan as a product of exact matrices: stages (last applied first)
    /// times the input scatter.
    pub fn expand(&self) -> Result<OmegaMatrix> {
        let n = self.n;
        let mut total = OmegaMatrix::permutation(n, &self.input_order);
        for stage in &self.stages {
            let (p, l) = (stage.radix, stage.span);
            let len = l * p;
            let stride = n / len;
            let stage_matrix = OmegaMatrix::from_fn(n, n, n, |r, c| {
                let (rb, cb) = (r / len, c / len);
                let (ro, co) = (r % len, c % len);
                (rb == cb && ro % l == co % l).then(|| (co / l) * ro % len * stride)
            });
            total = stage_matrix.matmul(&total)?;
        }
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dft_factor::{dft_matrix, naive_dft};
    use rand::{Rng, SeedableRng};

    fn random_vector(n: usize, seed: u64) -> Vec<Complex64> {
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        (0..n)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect()
    }

    fn max_error(a: &[Complex64], b: &[Complex64]) -> f64 {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    #[test]
    fn prime_factor_examples() {
        assert_eq!(prime_factors(1), Vec::<usize>::new());
        assert_eq!(prime_factors(3600), vec![2, 2, 2, 2, 3, 3, 5, 5]);
        assert_eq!(prime_factors(97), vec![97]);
    }

    #[test]
    fn plan_shapes() {
        assert_eq!(fft_plan(4, &[2, 2]).unwrap().stage_count(), 2);
        assert_eq!(fft_plan(12, &[2, 2, 3]).unwrap().stage_count(), 3);
        assert_eq!(fft_plan(7, &[7]).unwrap().stage_count(), 1);
        assert_eq!(fft_plan(1, &[]).unwrap().stage_count(), 0);
        assert!(fft_plan(12, &[2, 5]).is_err());
        assert!(fft_plan(12, &[1, 12]).is_err());
        assert!(fft_plan(0, &[]).is_err());
        assert!(fft_plan(4, &[]).is_err());
    }

    #[test]
    fn expansion_is_exact_dft() {
        for (n, factors) in [
            (12, vec![2, 2, 3]),
            (12, vec![3, 2, 2]),
            (12, vec![4, 3]),
            (4, vec![2, 2]),
            (7, vec![7]),
            (30, vec![5, 3, 2]),
            (16, vec![2, 2, 2, 2]),
            (1, vec![]),
        ] {
            let plan = fft_plan(n, &factors).unwrap();
            assert_eq!(
                plan.expand().unwrap(),
                dft_matrix(n).unwrap(),
                "{n} {factors:?}"
            );
        }
    }

    #[test]
    fn simple_inputs() {
        let plan = FftPlan::new(12).unwrap();
        let mut delta = vec![Complex64::new(0.0, 0.0); 12];
        delta[0] = Complex64::new(1.0, 0.0);
        let y = plan.fft(&delta).unwrap();
        assert!(y
            .iter()
            .all(|v| (v - Complex64::new(1.0, 0.0)).norm() < 1e-12));
        let y = plan.fft(&[Complex64::new(1.0, 0.0); 12]).unwrap();
        assert!((y[0] - Complex64::new(12.0, 0.0)).norm() < 1e-10);
        assert!(y[1..].iter().all(|v| v.norm() < 1e-10));
        assert!(matches!(
            plan.fft(&delta[..5]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn matches_naive() {
        for (i, n) in [1usize, 2, 12, 60, 97, 210, 3600].into_iter().enumerate() {
            let plan = FftPlan::new(n).unwrap();
            let x = random_vector(n, i as u64);
            let err = max_error(&plan.fft(&x).unwrap(), &naive_dft(&x));
            assert!(err <= 1e-9 * n as f64, "{n}: {err}");
        }
        let x = random_vector(64, 9);
        let a = fft_plan(64, &[4, 4, 4]).unwrap().fft(&x).unwrap();
        let b = fft_plan(64, &[2, 8, 4]).unwrap().fft(&x).unwrap();
        assert!(max_error(&a, &b) < 1e-12);
    }

    #[test]
    fn operation_count() {
        let plan = fft_plan(3600, &[2, 2, 2, 2, 3, 3, 5, 5]).unwrap();
        let (_, count) = plan.fft_counted(&random_vector(3600, 3)).unwrap();
        assert_eq!(count, 3600 * 24);
        assert_eq!(count, plan.multiply_add_count());
    }
}
