//! Tropical characteristic polynomials, tropical eigenvalues with
//! multiplicities, and the valuation correspondence with eigenvalues of
//! series lifts through Newton polygon slopes.

use rand::Rng;

use crate::error::{Error, Result};
use crate::positivity::{is_tn_trop, is_tp_trop};
use crate::rational::{rat_int, Rat};
use crate::series::{det_series, random_positive_lift, SeriesMatrix, SeriesRat};
use crate::subsets::ksubsets;
use crate::trop::{permanent_assignment, TropMatrix, TropScalar};

/// Coefficients `a_0..a_n` of the tropical characteristic polynomial
/// `f_A(x) = max_k (a_{n-k} + k x)`; `a_k` is the best weight of a `k x k`
/// principal minor and `a_0 = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropCharPoly {
    pub coeffs: Vec<TropScalar>,
}

impl TropCharPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Evaluates `f_A(x) = max_k (a_{n-k} + k x)`.
    pub fn eval(&self, x: &TropScalar) -> TropScalar {
        let n = self.degree();
        let mut best = TropScalar::zero();
        for (k, coeff) in self.coeffs.iter().enumerate() {
            // term a_k ⊙ x^(n-k)
            let term = coeff.mul(&x.mul_by_int(n - k));
            best = best.add(&term);
        }
        best
    }
}

/// Tropical eigenvalues with multiplicities, sorted decreasing (so `-inf`,
/// if present, comes last); multiplicities sum to the matrix size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenSpectrum {
    pub eigenvalues: Vec<(TropScalar, usize)>,
}

impl EigenSpectrum {
    pub fn total_multiplicity(&self) -> usize {
        self.eigenvalues.iter().map(|(_, m)| m).sum()
    }

    /// Builds the spectrum from an unsorted list of values (multiplicity 1
    /// each), merging repeats.
    pub fn from_values(mut values: Vec<TropScalar>) -> Self {
        values.sort();
        values.reverse();
        let mut eigenvalues: Vec<(TropScalar, usize)> = Vec::new();
        for v in values {
            match eigenvalues.last_mut() {
                Some((last, m)) if *last == v => *m += 1,
                _ => eigenvalues.push((v, 1)),
            }
        }
        EigenSpectrum { eigenvalues }
    }

    /// Flat list with repetitions, sorted decreasing.
    pub fn expanded(&self) -> Vec<TropScalar> {
        self.eigenvalues
            .iter()
            .flat_map(|(v, m)| std::iter::repeat(v.clone()).take(*m))
            .collect()
    }
}

/// Tropical characteristic polynomial.  Totally nonnegative matrices use
/// the closed form (sorted diagonal products); the general path maximizes
/// the permanent over all principal index sets, capped at `cap`.
pub fn char_poly_trop(a: &TropMatrix, cap: usize) -> Result<TropCharPoly> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "characteristic polynomial of a {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    if is_tn_trop(a).tn_trop {
        // sorted diagonal prefix products
        let mut diag = a.diagonal();
        diag.sort();
        diag.reverse();
        let mut coeffs = vec![TropScalar::one()];
        let mut acc = TropScalar::one();
        for d in &diag {
            acc = acc.mul(d);
            coeffs.push(acc.clone());
        }
        return Ok(TropCharPoly { coeffs });
    }
    if n > cap {
        return Err(Error::CapExceeded { size: n, cap });
    }
    let mut coeffs = vec![TropScalar::one()];
    for k in 1..=n {
        let mut best = TropScalar::zero();
        for subset in ksubsets(n, k) {
            let sub = a.submatrix(&subset, &subset)?;
            best = best.add(&permanent_assignment(&sub)?);
        }
        coeffs.push(best);
    }
    Ok(TropCharPoly { coeffs })
}

/// Slopes of the upper concave hull of the points `(k, values[k])`,
/// with multiplicity the horizontal length of each segment; indices with
/// value `-inf` are absent and any trailing gap contributes a `-inf`
/// eigenvalue.  `values[0]` must be finite.
fn newton_slopes(values: &[TropScalar]) -> EigenSpectrum {
    let n = values.len() - 1;
    assert!(values[0].is_finite(), "leading coefficient must be finite");
    let points: Vec<(usize, &Rat)> = values
        .iter()
        .enumerate()
        .filter_map(|(k, v)| v.as_rat().map(|r| (k, r)))
        .collect();
    // upper hull, scanning left to right; slopes strictly decrease
    let mut hull: Vec<(usize, &Rat)> = Vec::new();
    let slope = |a: &(usize, &Rat), b: &(usize, &Rat)| -> Rat {
        (b.1 - a.1) / rat_int((b.0 - a.0) as i64)
    };
    for p in points {
        while hull.len() >= 2 {
            let s_prev = slope(&hull[hull.len() - 2], &hull[hull.len() - 1]);
            let s_new = slope(&hull[hull.len() - 1], &p);
            if s_prev <= s_new {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let mut eigenvalues: Vec<(TropScalar, usize)> = Vec::new();
    for pair in hull.windows(2) {
        let s = slope(&pair[0], &pair[1]);
        let mult = pair[1].0 - pair[0].0;
        match eigenvalues.last_mut() {
            Some((last, m)) if *last == TropScalar::Finite(s.clone()) => *m += mult,
            _ => eigenvalues.push((TropScalar::Finite(s), mult)),
        }
    }
    let covered = hull.last().map(|(k, _)| *k).unwrap_or(0);
    if covered < n {
        eigenvalues.push((TropScalar::NegInf, n - covered));
    }
    EigenSpectrum { eigenvalues }
}

/// Tropical eigenvalues of a characteristic polynomial: the slopes of the
/// concave majorant of `(k, a_k)`, with multiplicity the segment length;
/// missing trailing coefficients contribute `-inf` eigenvalues.
pub fn tropical_eigenvalues(p: &TropCharPoly) -> EigenSpectrum {
    newton_slopes(&p.coeffs)
}

/// Coefficients `alpha_0..alpha_n` of the characteristic polynomial of a
/// series matrix: `alpha_k` is the sum of all `k x k` principal minors,
/// `alpha_0 = 1`.
pub fn char_poly_series(m: &SeriesMatrix, cap: usize) -> Result<Vec<SeriesRat>> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "characteristic polynomial of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    if n > cap {
        return Err(Error::CapExceeded { size: n, cap });
    }
    let mut alphas = vec![SeriesRat::one()];
    for k in 1..=n {
        let mut acc = SeriesRat::zero();
        for subset in ksubsets(n, k) {
            acc = &acc + &det_series(&m.submatrix(&subset, &subset)?)?;
        }
        alphas.push(acc);
    }
    Ok(alphas)
}

/// Valuations of the roots (in the algebraic closure) of a monic
/// polynomial with the given coefficients, with multiplicity: the Newton
/// polygon slopes of `(k, val(alpha_k))`.
pub fn eigen_valuations_via_newton(alphas: &[SeriesRat]) -> EigenSpectrum {
    assert!(
        !alphas.is_empty() && !alphas[0].is_zero(),
        "leading coefficient must be nonzero"
    );
    let values: Vec<TropScalar> = alphas.iter().map(SeriesRat::valuation).collect();
    newton_slopes(&values)
}

/// Per-coefficient outcome of the valuation correspondence check on one
/// lift of a tropical totally positive matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CcEeReport {
    /// `val(alpha_k) == a_k` for each `k`.
    pub coeff_ok: Vec<bool>,
    /// Newton slopes equal the tropical spectrum.
    pub spectrum_ok: bool,
}

impl CcEeReport {
    pub fn all_ok(&self) -> bool {
        self.spectrum_ok && self.coeff_ok.iter().all(|&b| b)
    }
}

/// Checks the coefficient and eigenvalue valuation correspondence on an
/// explicitly supplied lift (which must be a lift of `a`).
pub fn verify_cc_ee_with_lift(
    a: &TropMatrix,
    lift: &SeriesMatrix,
    cap: usize,
) -> Result<CcEeReport> {
    if !is_tp_trop(a).tp_trop {
        return Err(Error::NotTp);
    }
    if lift.valuation_matrix() != *a {
        return Err(Error::InconsistentData(
            "supplied matrix is not a lift of the tropical input".into(),
        ));
    }
    let trop = char_poly_trop(a, cap)?;
    let alphas = char_poly_series(lift, cap)?;
    let coeff_ok: Vec<bool> = trop
        .coeffs
        .iter()
        .zip(alphas.iter())
        .map(|(a_k, alpha_k)| *a_k == alpha_k.valuation())
        .collect();
    let spectrum_ok = eigen_valuations_via_newton(&alphas) == tropical_eigenvalues(&trop);
    Ok(CcEeReport {
        coeff_ok,
        spectrum_ok,
    })
}

/// The same check on a randomized lift with small positive coefficients.
pub fn verify_cc_ee(a: &TropMatrix, rng: &mut impl Rng, cap: usize) -> Result<CcEeReport> {
    if !is_tp_trop(a).tp_trop {
        return Err(Error::NotTp);
    }
    let lift = random_positive_lift(a, rng);
    verify_cc_ee_with_lift(a, &lift, cap)
}
