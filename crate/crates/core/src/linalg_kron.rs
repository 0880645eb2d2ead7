//! Dense integer matrices: elementary matrices, Kronecker products and
//! permutation matrices. All identities here are checked with exact equality.

use std::fmt;
use std::ops::{Add, AddAssign};

use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// Upper bound on `rows * cols` for any materialized matrix.
pub const DEFAULT_ENTRY_LIMIT: usize = 1 << 26;

/// Row-major dense integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Self::from_entries(rows.len(), cols, rows.concat())
    }

    /// `E^{i,j}` with 1-based `(i, j)`.
    pub fn elementary(i: usize, j: usize, rows: usize, cols: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > rows || j > cols {
            return Err(Error::ElementaryIndex {
                row: i,
                col: j,
                rows,
                cols,
            });
        }
        let mut m = Self::zeros(rows, cols);
        m.entries[(i - 1) * cols + (j - 1)] = 1;
        Ok(m)
    }

    /// The column vector `e_j^n` (1-based `j`).
    pub fn basis_column(j: usize, n: usize) -> Result<Self> {
        Self::elementary(j, 1, n, 1)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: i64) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.cols.max(1))
            .map(<[i64]>::to_vec)
            .collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn matmul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                let row = &other.entries[k * other.cols..(k + 1) * other.cols];
                let dst = &mut out.entries[r * other.cols..(r + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        Ok(out)
    }

    /// The block matrix `(a_ij · B)`.
    pub fn kron(&self, other: &IntMatrix) -> IntMatrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for h in 0..other.rows {
                    for k in 0..other.cols {
                        out.entries[(i * other.rows + h) * cols + j * other.cols + k] =
                            a * other.get(h, k);
                    }
                }
            }
        }
        out
    }

    /// Left-to-right iterated Kronecker product; the empty product is `[1]`.
    pub fn kron_all<'a, I>(factors: I) -> IntMatrix
    where
        I: IntoIterator<Item = &'a IntMatrix>,
    {
        factors
            .into_iter()
            .fold(IntMatrix::identity(1), |acc, f| acc.kron(f))
    }

    /// True when every row and column holds a single 1 and zeros elsewhere.
    pub fn is_permutation_matrix(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let n = self.rows;
        let mut col_sums = vec![0i64; n];
        for r in 0..n {
            let mut row_sum = 0;
            for (c, sum) in col_sums.iter_mut().enumerate() {
                let v = self.get(r, c);
                if v != 0 && v != 1 {
                    return false;
                }
                row_sum += v;
                *sum += v;
            }
            if row_sum != 1 {
                return false;
            }
        }
        col_sums.iter().all(|&s| s == 1)
    }

    /// The permutation `f` with `P e_x = e_{f(x)}`, if this is a permutation matrix.
    pub fn to_permutation(&self) -> Option<Permutation> {
        if !self.is_permutation_matrix() {
            return None;
        }
        let images = (0..self.cols)
            .map(|c| (0..self.rows).position(|r| self.get(r, c) == 1).unwrap())
            .collect();
        Permutation::new(images).ok()
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;

    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&IntMatrix> for IntMatrix {
    fn add_assign(&mut self, rhs: &IntMatrix) {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch"
        );
        for (a, b) in self.entries.iter_mut().zip(&rhs.entries) {
            *a += b;
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// `P` with `p_ij = 1` iff `f(j) = i`, so `P e_x = e_{f(x)}`.
pub fn perm_to_matrix(f: &Permutation) -> IntMatrix {
    let n = f.degree();
    let mut m = IntMatrix::zeros(n, n);
    for x in 0..n {
        m.set(f.apply(x), x, 1);
    }
    m
}
