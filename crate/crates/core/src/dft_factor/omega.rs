//! Matrices whose entries are zero or a single power of a fixed root of unity.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// One entry: zero or `ω^e` with `0 <= e < modulus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OmegaCell {
    Zero,
    Exp(usize),
}

impl OmegaCell {
    pub fn is_zero(self) -> bool {
        matches!(self, OmegaCell::Zero)
    }

    pub fn exponent(self) -> Option<usize> {
        match self {
            OmegaCell::Zero => None,
            OmegaCell::Exp(e) => Some(e),
        }
    }
}

/// Dense grid of [`OmegaCell`]s for `ω = exp(2πi/modulus)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaMatrix {
    modulus: usize,
    rows: usize,
    cols: usize,
    cells: Vec<OmegaCell>,
}

impl OmegaMatrix {
    pub fn zeros(modulus: usize, rows: usize, cols: usize) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        OmegaMatrix {
            modulus,
            rows,
            cols,
            cells: vec![OmegaCell::Zero; rows * cols],
        }
    }

    pub fn identity(modulus: usize, n: usize) -> Self {
        let mut m = Self::zeros(modulus, n, n);
        for i in 0..n {
            m.cells[i * n + i] = OmegaCell::Exp(0);
        }
        m
    }

    /// Builds from a closure returning `Some(exponent)` or `None` for zero.
    /// Exponents are reduced mod `modulus`.
    pub fn from_fn<F>(modulus: usize, rows: usize, cols: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> Option<usize>,
    {
        let mut m = Self::zeros(modulus, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if let Some(e) = f(r, c) {
                    m.cells[r * cols + c] = OmegaCell::Exp(e % modulus);
                }
            }
        }
        m
    }

    /// Diagonal matrix with the given exponents.
    pub fn diagonal(modulus: usize, exponents: &[usize]) -> Self {
        let n = exponents.len();
        Self::from_fn(modulus, n, n, |r, c| (r == c).then(|| exponents[r]))
    }

    /// `P` with `P[f(x)][x] = 1`.
    pub fn permutation(modulus: usize, f: &Permutation) -> Self {
        let n = f.degree();
        let mut m = Self::zeros(modulus, n, n);
        for (x, &y) in f.images().iter().enumerate() {
            m.cells[y * n + x] = OmegaCell::Exp(0);
        }
        m
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn cells(&self) -> &[OmegaCell] {
        &self.cells
    }

    pub fn get(&self, r: usize, c: usize) -> OmegaCell {
        assert!(r < self.rows && c < self.cols, "index out of range");
        self.cells[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, cell: OmegaCell) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        self.cells[r * self.cols + c] = match cell {
            OmegaCell::Exp(e) => OmegaCell::Exp(e % self.modulus),
            zero => zero,
        };
    }

    /// Exponent grid with `None` for zero cells.
    pub fn exponent_rows(&self) -> Vec<Vec<Option<usize>>> {
        self.cells
            .chunks(self.cols.max(1))
            .take(self.rows)
            .map(|row| row.iter().map(|c| c.exponent()).collect())
            .collect()
    }

    pub fn transpose(&self) -> OmegaMatrix {
        let mut out = Self::zeros(self.modulus, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.cells[c * self.rows + r] = self.cells[r * self.cols + c];
            }
        }
        out
    }

    /// Multiplies every nonzero entry by `ω^e`.
    pub fn scale(&self, e: usize) -> OmegaMatrix {
        let n = self.modulus;
        let mut out = self.clone();
        for cell in &mut out.cells {
            if let OmegaCell::Exp(x) = cell {
                *x = (*x + e) % n;
            }
        }
        out
    }

    fn check_modulus(&self, other: &OmegaMatrix) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus,
                right: other.modulus,
            });
        }
        Ok(())
    }

    /// Product in which every output cell must receive at most one nonzero
    /// term; otherwise the result is not representable and `NotMonomial` is
    /// returned.
    pub fn matmul(&self, other: &OmegaMatrix) -> Result<OmegaMatrix> {
        self.check_modulus(other)?;
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let n = self.modulus;
        let mut out = Self::zeros(n, self.rows, other.cols);
        let mut terms = vec![0usize; other.cols];
        for r in 0..self.rows {
            terms.iter_mut().for_each(|t| *t = 0);
            for k in 0..self.cols {
                let OmegaCell::Exp(a) = self.cells[r * self.cols + k] else {
                    continue;
                };
                for (c, count) in terms.iter_mut().enumerate() {
                    if let OmegaCell::Exp(b) = other.cells[k * other.cols + c] {
                        *count += 1;
                        out.cells[r * other.cols + c] = OmegaCell::Exp((a + b) % n);
                    }
                }
            }
            if let Some(c) = terms.iter().position(|&t| t > 1) {
                return Err(Error::NotMonomial {
                    row: r,
                    col: c,
                    terms: terms[c],
                });
            }
        }
        Ok(out)
    }

    pub fn kron(&self, other: &OmegaMatrix) -> Result<OmegaMatrix> {
        self.check_modulus(other)?;
        let n = self.modulus;
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zeros(n, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let OmegaCell::Exp(a) = self.cells[i * self.cols + j] else {
                    continue;
                };
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        if let OmegaCell::Exp(b) = other.cells[p * other.cols + q] {
                            let r = i * other.rows + p;
                            let c = j * other.cols + q;
                            out.cells[r * cols + c] = OmegaCell::Exp((a + b) % n);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// The `rows x cols` submatrix with top-left corner `(r0, c0)`.
    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Result<OmegaMatrix> {
        if r0 + rows > self.rows || c0 + cols > self.cols {
            return Err(Error::Shape(format!(
                "block {rows}x{cols} at ({r0},{c0}) exceeds {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(Self::from_fn(self.modulus, rows, cols, |r, c| {
            self.get(r0 + r, c0 + c).exponent()
        }))
    }

    /// Assembles a square grid of equally sized blocks.
    pub fn from_blocks(grid: &[Vec<OmegaMatrix>]) -> Result<OmegaMatrix> {
        let first = grid
            .first()
            .and_then(|row| row.first())
            .ok_or_else(|| Error::Shape("empty block grid".into()))?;
        let (br, bc, modulus) = (first.rows, first.cols, first.modulus);
        let width = grid[0].len();
        for row in grid {
            if row.len() != width {
                return Err(Error::Shape("ragged block grid".into()));
            }
            for block in row {
                first.check_modulus(block)?;
                if block.rows != br || block.cols != bc {
                    return Err(Error::Shape("blocks differ in shape".into()));
                }
            }
        }
        Ok(Self::from_fn(
            modulus,
            grid.len() * br,
            width * bc,
            |r, c| grid[r / br][c / bc].get(r % br, c % bc).exponent(),
        ))
    }

    /// Numeric entries with `ω = exp(+2πi/modulus)`.
    pub fn to_complex(&self) -> Vec<Complex64> {
        let roots = root_table(self.modulus);
        self.cells
            .iter()
            .map(|c| match c {
                OmegaCell::Zero => Complex64::new(0.0, 0.0),
                OmegaCell::Exp(e) => roots[*e],
            })
            .collect()
    }
}

/// Rows of space-separated exponents, `.` for zero.
impl fmt::Display for OmegaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.modulus.saturating_sub(1).to_string().len();
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                match self.get(r, c) {
                    OmegaCell::Zero => write!(f, "{:>width$}", ".")?,
                    OmegaCell::Exp(e) => write!(f, "{e:>width$}")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// `exp(2πi e / n)` for `0 <= e < n`.
pub fn root_table(n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|e| Complex64::from_polar(1.0, 2.0 * PI * e as f64 / n as f64))
        .collect()
}
