//! Dense matrices over the max-plus semiring.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rat;
use crate::trop::TropScalar;

/// A dense `rows x cols` matrix of tropical scalars, row major.
/// A matrix is *finite* iff no entry is `-inf`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<TropScalar>,
}

impl TropMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<TropScalar>) -> Result<Self> {
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
        Ok(TropMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<TropScalar>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map(|r| r.len()).unwrap_or(0);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        TropMatrix::new(n, m, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> TropScalar) -> Self {
        let entries = (0..rows * cols)
            .map(|idx| f(idx / cols, idx % cols))
            .collect();
        TropMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// The tropical identity: `0` on the diagonal, `-inf` elsewhere.
    pub fn identity(n: usize) -> Self {
        TropMatrix::from_fn(n, n, |i, j| {
            if i == j {
                TropScalar::one()
            } else {
                TropScalar::zero()
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

    pub fn get(&self, i: usize, j: usize) -> &TropScalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: TropScalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[TropScalar] {
        &self.entries
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(TropScalar::is_finite)
    }

    pub fn transpose(&self) -> Self {
        TropMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// The `rows x cols` submatrix addressed by 0-based index sets.
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
        TropMatrix::new(
            rows.len(),
            cols.len(),
            rows.iter()
                .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone()))
                .collect(),
        )
    }

    /// Max-plus matrix product.
    pub fn matmul(&self, other: &TropMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(TropMatrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = TropScalar::zero();
            for k in 0..self.cols {
                acc = acc.add(&self.get(i, k).mul(other.get(k, j)));
            }
            acc
        }))
    }

    /// `D ⊙ A ⊙ D'` with finite tropical diagonals, i.e. adds `d[i] + dp[j]`
    /// to every entry.
    pub fn diag_scale(&self, d: &[Rat], dp: &[Rat]) -> Result<Self> {
        if d.len() != self.rows || dp.len() != self.cols {
            return Err(Error::Dimension("diagonal scaling length mismatch".into()));
        }
        Ok(TropMatrix::from_fn(self.rows, self.cols, |i, j| {
            match self.get(i, j) {
                TropScalar::NegInf => TropScalar::NegInf,
                TropScalar::Finite(r) => TropScalar::Finite(r + &d[i] + &dp[j]),
            }
        }))
    }

    pub fn diagonal(&self) -> Vec<TropScalar> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }
}

impl fmt::Display for TropMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
