//! Tropical and series-valued Pluecker coordinates, the block embedding of
//! a coefficient matrix into a full row of the Grassmannian, the Stiefel
//! map, and inversion of the Stiefel map on tropical totally nonnegative
//! matrices.

use crate::error::{Error, Result};
use crate::series::{det_series, SeriesMatrix, SeriesRat};
use crate::subsets::{binomial, ksubsets};
use crate::trop::{permanent_assignment, TropMatrix, TropScalar};

/// Pluecker coordinates of a `k x n` matrix, indexed by the k-subsets of
/// `{0, ..., n-1}` in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerVector<T> {
    pub k: usize,
    pub n: usize,
    pub coords: Vec<T>,
}

impl<T> PluckerVector<T> {
    pub fn subsets(&self) -> Vec<Vec<usize>> {
        ksubsets(self.n, self.k)
    }

    /// Position of a sorted subset in lexicographic order.
    pub fn index_of(&self, subset: &[usize]) -> Option<usize> {
        ksubsets(self.n, self.k).iter().position(|s| s == subset)
    }
}

impl PluckerVector<TropScalar> {
    /// Normalizes by subtracting the first finite coordinate, the tropical
    /// projective representative.  `None` if every coordinate is `-inf`.
    pub fn normalized(&self) -> Option<PluckerVector<TropScalar>> {
        let base = self.coords.iter().find(|c| c.is_finite())?.clone();
        let neg = base.neg().expect("finite");
        Some(PluckerVector {
            k: self.k,
            n: self.n,
            coords: self.coords.iter().map(|c| c.mul(&neg)).collect(),
        })
    }

    /// Tropical projective equality: equal up to one additive constant on
    /// the finite coordinates, with identical `-inf` support.
    pub fn projectively_eq(&self, other: &Self) -> bool {
        self.first_mismatch(other).is_none()
    }

    /// First coordinate (lex order of subsets) where the normalized
    /// vectors differ, with both normalized values.
    pub fn first_mismatch(&self, other: &Self) -> Option<(Vec<usize>, TropScalar, TropScalar)> {
        if self.k != other.k || self.n != other.n {
            return Some((Vec::new(), TropScalar::NegInf, TropScalar::NegInf));
        }
        let subsets = self.subsets();
        match (self.normalized(), other.normalized()) {
            (None, None) => None,
            (Some(a), Some(b)) => {
                for (idx, subset) in subsets.iter().enumerate() {
                    if a.coords[idx] != b.coords[idx] {
                        return Some((
                            subset.clone(),
                            a.coords[idx].clone(),
                            b.coords[idx].clone(),
                        ));
                    }
                }
                None
            }
            (Some(a), None) => {
                let idx = a.coords.iter().position(|c| c.is_finite()).unwrap();
                Some((
                    subsets[idx].clone(),
                    a.coords[idx].clone(),
                    TropScalar::NegInf,
                ))
            }
            (None, Some(b)) => {
                let idx = b.coords.iter().position(|c| c.is_finite()).unwrap();
                Some((
                    subsets[idx].clone(),
                    TropScalar::NegInf,
                    b.coords[idx].clone(),
                ))
            }
        }
    }
}

/// Tropical Pluecker coordinates: the permanents of all maximal minors.
pub fn plucker_trop(a: &TropMatrix) -> Result<PluckerVector<TropScalar>> {
    let (k, n) = (a.rows(), a.cols());
    if k > n {
        return Err(Error::Dimension(format!(
            "Pluecker coordinates of a {k}x{n} matrix need k <= n"
        )));
    }
    let rows: Vec<usize> = (0..k).collect();
    let coords = ksubsets(n, k)
        .iter()
        .map(|cols| permanent_assignment(&a.submatrix(&rows, cols)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(PluckerVector { k, n, coords })
}

/// Series Pluecker coordinates: exact maximal determinants.
pub fn plucker_series(m: &SeriesMatrix) -> Result<PluckerVector<SeriesRat>> {
    let (k, n) = (m.rows(), m.cols());
    if k > n {
        return Err(Error::Dimension(format!(
            "Pluecker coordinates of a {k}x{n} matrix need k <= n"
        )));
    }
    let rows: Vec<usize> = (0..k).collect();
    let coords = ksubsets(n, k)
        .iter()
        .map(|cols| det_series(&m.submatrix(&rows, cols)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(PluckerVector { k, n, coords })
}

/// Tropical block embedding: `[tropical identity | B-tilde]` where row `t`
/// of the right block is row `k - t + 1` of `B` (rows reversed).
pub fn iota_trop(b: &TropMatrix) -> TropMatrix {
    let k = b.rows();
    let w = b.cols();
    TropMatrix::from_fn(k, k + w, |i, j| {
        if j < k {
            if i == j {
                TropScalar::one()
            } else {
                TropScalar::zero()
            }
        } else {
            b.get(k - 1 - i, j - k).clone()
        }
    })
}

/// Signed block embedding over the series field: row `t` of the right
/// block is `(-1)^(k - t)` times row `k - t + 1` of `B`, so that the
/// minors of `B` reappear verbatim as Pluecker coordinates.
pub fn iota_series(b: &SeriesMatrix) -> SeriesMatrix {
    let k = b.rows();
    let w = b.cols();
    SeriesMatrix::from_fn(k, k + w, |i, j| {
        if j < k {
            if i == j {
                SeriesRat::one()
            } else {
                SeriesRat::zero()
            }
        } else {
            // 1-based row t = i + 1 carries sign (-1)^(k - t)
            let entry = b.get(k - 1 - i, j - k);
            if (k - 1 - i) % 2 == 1 {
                entry.neg()
            } else {
                entry.clone()
            }
        }
    })
}

/// The coordinate subset that carries the `(rows, cols)` minor of `B`
/// through the block embedding: `([k] minus reversed rows) union
/// (k + cols)`, all 0-based.
pub fn embedded_subset(k: usize, rows: &[usize], cols: &[usize]) -> Vec<usize> {
    let reversed: Vec<usize> = rows.iter().map(|&t| k - 1 - t).collect();
    let mut subset: Vec<usize> = (0..k).filter(|i| !reversed.contains(i)).collect();
    subset.extend(cols.iter().map(|&j| j + k));
    subset.sort_unstable();
    subset
}

/// The Stiefel map: tropical Pluecker coordinates of the block embedding.
pub fn stiefel_trop(b: &TropMatrix) -> Result<PluckerVector<TropScalar>> {
    plucker_trop(&iota_trop(b))
}

/// Outcome of inverting the Stiefel map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StiefelInversion {
    /// The unique preimage in the tropical totally nonnegative matrices.
    InImage(TropMatrix),
    /// No preimage; the reconstructed candidate (when one exists) and the
    /// first coordinate where its image differs from the input are
    /// attached for inspection.
    NotInImage {
        candidate: Option<TropMatrix>,
        mismatch: Option<(Vec<usize>, TropScalar, TropScalar)>,
        reason: String,
    },
}

/// Inverts the Stiefel map: reads the candidate coefficient matrix off the
/// coordinates indexed by one-row-one-column exchanges, then accepts iff
/// the candidate's image matches projectively and the candidate is a
/// finite tropical totally nonnegative matrix.
pub fn invert_stiefel(p: &PluckerVector<TropScalar>) -> Result<StiefelInversion> {
    let (k, n) = (p.k, p.n);
    if k == 0 || k >= n {
        return Err(Error::MalformedVector(format!(
            "need 0 < k < n, got k = {k}, n = {n}"
        )));
    }
    if p.coords.len() != binomial(n, k) {
        return Err(Error::MalformedVector(format!(
            "expected {} coordinates, got {}",
            binomial(n, k),
            p.coords.len()
        )));
    }
    let subsets = p.subsets();
    let index_of = |subset: &[usize]| subsets.iter().position(|s| s == subset).unwrap();

    // the coordinate of the identity block normalizes the scale
    let base = &p.coords[index_of(&(0..k).collect::<Vec<_>>())];
    let TropScalar::Finite(base) = base.clone() else {
        return Ok(StiefelInversion::NotInImage {
            candidate: None,
            mismatch: None,
            reason: "the identity-block coordinate is -inf".into(),
        });
    };

    let w = n - k;
    let mut finite = true;
    let candidate = TropMatrix::from_fn(k, w, |i, j| {
        let subset = embedded_subset(k, &[i], &[j]);
        match &p.coords[index_of(&subset)] {
            TropScalar::NegInf => {
                finite = false;
                TropScalar::NegInf
            }
            TropScalar::Finite(v) => TropScalar::Finite(v - &base),
        }
    });
    if !finite {
        return Ok(StiefelInversion::NotInImage {
            candidate: Some(candidate),
            mismatch: None,
            reason: "a single-exchange coordinate is -inf, so no finite preimage exists".into(),
        });
    }
    let image = stiefel_trop(&candidate)?;
    if let Some(mismatch) = p.first_mismatch(&image) {
        return Ok(StiefelInversion::NotInImage {
            candidate: Some(candidate),
            mismatch: Some(mismatch),
            reason: "the candidate's image differs from the input".into(),
        });
    }
    if !crate::positivity::is_tn_trop(&candidate).tn_trop {
        return Ok(StiefelInversion::NotInImage {
            candidate: Some(candidate),
            mismatch: None,
            reason: "the candidate is not tropical totally nonnegative".into(),
        });
    }
    Ok(StiefelInversion::InImage(candidate))
}
