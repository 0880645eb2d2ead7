//! Text formats shared by the library and the command line.
//!
//! * Permutation JSON: `{degree, images, cycles, horizontal, fixed_points}`.
//! * Matrix JSON: `{rows, cols, entries: [[re, im], ...]}`, row-major.
//! * Vector CSV: one `re,im` pair per line.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dft_factor::OmegaMatrix;
use crate::error::{Error, Result};
use crate::linalg_kron::IntMatrix;
use crate::permutation::Permutation;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PermutationRecord {
    pub degree: usize,
    pub images: Vec<usize>,
    pub cycles: Vec<Vec<usize>>,
    pub horizontal: Vec<usize>,
    pub fixed_points: Vec<usize>,
}

impl From<&Permutation> for PermutationRecord {
    fn from(p: &Permutation) -> Self {
        PermutationRecord {
            degree: p.degree(),
            images: p.images().to_vec(),
            cycles: p.cycles().cycles().to_vec(),
            horizontal: p.horizontal(),
            fixed_points: p.fixed_points(),
        }
    }
}

pub fn permutation_json(p: &Permutation) -> String {
    serde_json::to_string(&PermutationRecord::from(p)).expect("plain data serializes")
}

/// Reads a permutation record; only `images` is authoritative, the other
/// fields must agree with it.
pub fn parse_permutation_json(text: &str) -> Result<Permutation> {
    let record: PermutationRecord =
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    let p = Permutation::new(record.images.clone())?;
    if PermutationRecord::from(&p) != record {
        return Err(Error::Format("permutation fields are inconsistent".into()));
    }
    Ok(p)
}

/// A dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Complex64>,
}

impl From<&IntMatrix> for ComplexMatrix {
    fn from(m: &IntMatrix) -> Self {
        ComplexMatrix {
            rows: m.rows(),
            cols: m.cols(),
            entries: m
                .entries()
                .iter()
                .map(|&v| Complex64::new(v as f64, 0.0))
                .collect(),
        }
    }
}

impl From<&OmegaMatrix> for ComplexMatrix {
    fn from(m: &OmegaMatrix) -> Self {
        ComplexMatrix {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.to_complex(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixFile {
    rows: usize,
    cols: usize,
    entries: Vec<[f64; 2]>,
}

pub fn matrix_json(m: &ComplexMatrix) -> String {
    let file = MatrixFile {
        rows: m.rows,
        cols: m.cols,
        entries: m.entries.iter().map(|z| [z.re, z.im]).collect(),
    };
    serde_json::to_string(&file).expect("plain data serializes")
}

pub fn int_matrix_json(m: &IntMatrix) -> String {
    matrix_json(&ComplexMatrix::from(m))
}

pub fn parse_matrix_json(text: &str) -> Result<ComplexMatrix> {
    let file: MatrixFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    if file.rows.checked_mul(file.cols) != Some(file.entries.len()) {
        return Err(Error::Format(format!(
            "{}x{} matrix needs {} entries, found {}",
            file.rows,
            file.cols,
            file.rows.saturating_mul(file.cols),
            file.entries.len()
        )));
    }
    Ok(ComplexMatrix {
        rows: file.rows,
        cols: file.cols,
        entries: file
            .entries
            .iter()
            .map(|&[re, im]| Complex64::new(re, im))
            .collect(),
    })
}

/// Reads a matrix whose entries must be real integers.
pub fn parse_int_matrix_json(text: &str) -> Result<IntMatrix> {
    let m = parse_matrix_json(text)?;
    let entries = m
        .entries
        .iter()
        .map(|z| {
            if z.im == 0.0 && z.re.fract() == 0.0 && z.re.abs() < 9.0e15 {
                Ok(z.re as i64)
            } else {
                Err(Error::Format(format!("entry {z} is not an integer")))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    IntMatrix::from_entries(m.rows, m.cols, entries)
}

pub fn vector_csv(v: &[Complex64]) -> String {
    v.iter().map(|z| format!("{},{}\n", z.re, z.im)).collect()
}

/// Parses `re,im` lines; blank lines are skipped.
pub fn parse_vector_csv(text: &str) -> Result<Vec<Complex64>> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(n, line)| {
            let bad = || Error::Format(format!("line {}: expected `re,im`, found {line:?}", n + 1));
            let (re, im) = line.split_once(',').ok_or_else(bad)?;
            let re: f64 = re.trim().parse().map_err(|_| bad())?;
            let im: f64 = im.trim().parse().map_err(|_| bad())?;
            if !re.is_finite() || !im.is_finite() {
                return Err(bad());
            }
            Ok(Complex64::new(re, im))
        })
        .collect()
}
