//! Finite permutations stored as image tables.
//!
//! Composition is right-to-left: `f.compose(&g)` is `x ↦ f(g(x))`, so the
//! matrix of the composite is `P_f · P_g`.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// A bijection of `{0, ..., d-1}`; `images[x]` is the image of `x`.
///
/// Ordering is lexicographic on the image table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &y in &images {
            if y >= d || seen[y] {
                return Err(Error::NotBijective(d));
            }
            seen[y] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// The permutation of `{0, ..., N-1}` whose horizontal representation is `listing`.
    pub fn from_horizontal(listing: &[usize]) -> Result<Self> {
        Ok(Permutation::new(listing.to_vec())?.inverse())
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&y| self.images[y]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, mut k: u64) -> Permutation {
        let mut result = Permutation::identity(self.degree());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = base.compose(&result).expect("same degree");
            }
            base = base.compose(&base).expect("same degree");
            k >>= 1;
        }
        result
    }

    /// Canonical cycle decomposition, singletons included.
    pub fn cycles(&self) -> CycleDecomposition {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            cycles.push(cycle);
        }
        CycleDecomposition { cycles }
    }

    /// Builds a permutation from disjoint cycles; unlisted points are fixed.
    pub fn from_cycles(cycles: &[Vec<usize>], degree: usize) -> Result<Permutation> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(Error::OutOfRange {
                        value: x,
                        bound: degree,
                    });
                }
                if used[x] {
                    return Err(Error::OverlappingCycles(x));
                }
                used[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// The listing `h_0 h_1 ⋯ h_{d-1}` with `h_t = f⁻¹(t)`: position `t`
    /// holds the point that `f` sends to `t`.
    pub fn horizontal(&self) -> Vec<usize> {
        self.inverse().images
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|(x, &y)| *x == y)
            .map(|(x, _)| x)
            .collect()
    }

    /// Least `k >= 1` with `f^k = id`: the lcm of the cycle lengths.
    pub fn order(&self) -> BigUint {
        let mut lengths: Vec<usize> = self.cycles().cycles.iter().map(Vec::len).collect();
        lengths.sort_unstable();
        lengths.dedup();
        lengths.into_iter().fold(BigUint::from(1u32), |acc, len| {
            let len = BigUint::from(len);
            let g = gcd_big(&acc, &len);
            acc * len / g
        })
    }
}

fn gcd_big(a: &BigUint, b: &BigUint) -> BigUint {
    let (mut a, mut b) = (a.clone(), b.clone());
    while b != BigUint::from(0u32) {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// Cycles rotated to start at their minimum and sorted by it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn degree(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }

    pub fn to_permutation(&self) -> Permutation {
        Permutation::from_cycles(&self.cycles, self.degree()).expect("canonical cycles")
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            write!(f, "(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Space-separated integers, as used for horizontal and one-line output.
pub fn join_points(points: &[usize]) -> String {
    points
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses cycle notation such as `"(1 3)(2 4)"`, `"(0)(1 4 6)"` or `"()"`.
///
/// With `one_based` set, points are read as `1..=degree` (how `σ ∈ Sym(m)` is
/// written); otherwise as `0..degree`. Points may be separated by spaces or
/// commas. An empty string or `"()"` is the identity.
pub fn parse_cycles(input: &str, degree: usize, one_based: bool) -> Result<Permutation> {
    let syntax = |reason: &str| Error::CycleSyntax {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    let mut cycles = Vec::new();
    let mut rest = input.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| syntax("expected '('"))?;
        let close = body.find(')').ok_or_else(|| syntax("unclosed '('"))?;
        let inner = &body[..close];
        if inner.contains('(') {
            return Err(syntax("nested '('"));
        }
        let mut cycle = Vec::new();
        for token in inner.split(|c: char| c.is_whitespace() || c == ',') {
            if token.is_empty() {
                continue;
            }
            let value: usize = token
                .parse()
                .map_err(|_| syntax(&format!("not an integer: {token:?}")))?;
            let point = if one_based {
                if value == 0 {
                    return Err(syntax("points are 1-based here, 0 is not allowed"));
                }
                value - 1
            } else {
                value
            };
            if point >= degree {
                return Err(syntax(&format!("point {value} outside a set of {degree}")));
            }
            cycle.push(point);
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = body[close + 1..].trim_start();
    }
    Permutation::from_cycles(&cycles, degree)
}
