//! Matrices over the series field, with an exact fraction-free determinant.

use std::fmt;

use crate::error::{Error, Result};
use crate::series::genpoly::GenPoly;
use crate::series::seriesrat::SeriesRat;
use crate::trop::{TropMatrix, TropScalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<SeriesRat>,
}

impl SeriesMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<SeriesRat>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Dimension(
                "matrix dimensions must be positive".into(),
            ));
        }
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "expected {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(SeriesMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<SeriesRat>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map(|r| r.len()).unwrap_or(0);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        SeriesMatrix::new(n, m, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> SeriesRat) -> Self {
        SeriesMatrix {
            rows,
            cols,
            entries: (0..rows * cols)
                .map(|idx| f(idx / cols, idx % cols))
                .collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        SeriesMatrix::from_fn(n, n, |i, j| {
            if i == j {
                SeriesRat::one()
            } else {
                SeriesRat::zero()
            }
        })
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

    pub fn get(&self, i: usize, j: usize) -> &SeriesRat {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: SeriesRat) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Self {
        SeriesMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        for &i in rows {
            if i >= self.rows {
                return Err(Error::Index(format!("row {i} out of range")));
            }
        }
        for &j in cols {
            if j >= self.cols {
                return Err(Error::Index(format!("column {j} out of range")));
            }
        }
        SeriesMatrix::new(
            rows.len(),
            cols.len(),
            rows.iter()
                .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone()))
                .collect(),
        )
    }

    pub fn matmul(&self, other: &SeriesMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(SeriesMatrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = SeriesRat::zero();
            for k in 0..self.cols {
                acc = &acc + &(self.get(i, k) * other.get(k, j));
            }
            acc
        }))
    }

    /// Entrywise valuation.
    pub fn valuation_matrix(&self) -> TropMatrix {
        TropMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).valuation())
    }

    /// All entries positive series.
    pub fn is_entrywise_positive(&self) -> bool {
        self.entries.iter().all(SeriesRat::is_positive)
    }
}

impl fmt::Display for SeriesMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Exact determinant by fraction-free (Bareiss) Gaussian elimination with
/// row pivoting; quotient entries are first cleared to a polynomial matrix
/// row by row.
pub fn det_series(m: &SeriesMatrix) -> Result<SeriesRat> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "determinant of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();

    // Clear denominators: row i is scaled by the product of its entry
    // denominators, which multiplies the determinant by that product.
    let mut cleared: Vec<Vec<GenPoly>> = Vec::with_capacity(n);
    let mut scale = GenPoly::one();
    for i in 0..n {
        let dens: Vec<&GenPoly> = (0..n).map(|j| m.get(i, j).den()).collect();
        let mut prefix = vec![GenPoly::one(); n + 1];
        for (j, d) in dens.iter().enumerate() {
            prefix[j + 1] = &prefix[j] * d;
        }
        let mut suffix = vec![GenPoly::one(); n + 1];
        for j in (0..n).rev() {
            suffix[j] = &suffix[j + 1] * dens[j];
        }
        scale = &scale * &prefix[n];
        cleared.push(
            (0..n)
                .map(|j| &(m.get(i, j).num() * &prefix[j]) * &suffix[j + 1])
                .collect(),
        );
    }

    let det_poly = bareiss(&mut cleared);
    SeriesRat::new(det_poly, scale)
}

fn bareiss(w: &mut [Vec<GenPoly>]) -> GenPoly {
    let n = w.len();
    let mut sign_flip = false;
    let mut prev = GenPoly::one();
    for k in 0..n.saturating_sub(1) {
        if w[k][k].is_zero() {
            let Some(pivot_row) = (k + 1..n).find(|&r| !w[r][k].is_zero()) else {
                return GenPoly::zero();
            };
            w.swap(k, pivot_row);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let numerator = &(&w[k][k] * &w[i][j]) - &(&w[i][k] * &w[k][j]);
                w[i][j] = numerator
                    .exact_div(&prev)
                    .expect("Bareiss division is exact by the Sylvester identity");
            }
            w[i][k] = GenPoly::zero();
        }
        prev = w[k][k].clone();
    }
    let det = w[n - 1][n - 1].clone();
    if sign_flip {
        det.neg()
    } else {
        det
    }
}
