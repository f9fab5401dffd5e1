//! Factorization of tropical totally nonnegative matrices with finite
//! permanent into elementary tropical Jacobi factors.
//!
//! Tropical elimination has no subtraction, so the factorization is made
//! constructive through the series field: lift the matrix with controlled
//! Hadamard coefficients (the lift is then invertible and totally
//! nonnegative), run exact Neville elimination there, and take entrywise
//! valuations of the resulting bidiagonal factors.  The valuation is a
//! semifield morphism on nonnegative series, so the tropical product of
//! the valuated factors reproduces the input; the product is verified
//! before returning.

use std::fmt;

use crate::error::{Error, Result};
use crate::positivity::is_tn_trop;
use crate::rational::Rat;
use crate::series::{hadamard_vandermonde_lift, SeriesMatrix, SeriesRat};
use crate::trop::{permanent_assignment, TropMatrix, TropScalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JacobiKind {
    /// Subdiagonal modification at `(index + 1, index)`.
    Lower,
    /// Superdiagonal modification at `(index, index + 1)`.
    Upper,
    /// Diagonal modification at `(index, index)`.
    Diag,
}

impl fmt::Display for JacobiKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JacobiKind::Lower => write!(f, "lower"),
            JacobiKind::Upper => write!(f, "upper"),
            JacobiKind::Diag => write!(f, "diag"),
        }
    }
}

/// One elementary tropical Jacobi factor: the tropical identity with a
/// single finite modified entry on, immediately below, or immediately
/// above the main diagonal.  Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiFactor {
    pub kind: JacobiKind,
    pub index: usize,
    pub value: Rat,
}

/// The analogous factor over the series field, as produced by Neville
/// elimination: identity plus one nonnegative entry (positive on the
/// diagonal).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesJacobiFactor {
    pub kind: JacobiKind,
    pub index: usize,
    pub value: SeriesRat,
}

fn check_index(kind: JacobiKind, index: usize, n: usize) -> Result<()> {
    let ok = match kind {
        JacobiKind::Diag => index < n,
        JacobiKind::Lower | JacobiKind::Upper => index + 1 < n,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Index(format!(
            "{kind} factor at index {index} does not fit into size {n}"
        )))
    }
}

/// The explicit `n x n` tropical matrix of one factor.
pub fn jacobi_to_matrix(f: &JacobiFactor, n: usize) -> Result<TropMatrix> {
    check_index(f.kind, f.index, n)?;
    let mut m = TropMatrix::identity(n);
    let value = TropScalar::Finite(f.value.clone());
    match f.kind {
        JacobiKind::Lower => m.set(f.index + 1, f.index, value),
        JacobiKind::Upper => m.set(f.index, f.index + 1, value),
        JacobiKind::Diag => m.set(f.index, f.index, value),
    }
    Ok(m)
}

/// The explicit matrix of one series factor.
pub fn series_jacobi_to_matrix(f: &SeriesJacobiFactor, n: usize) -> Result<SeriesMatrix> {
    check_index(f.kind, f.index, n)?;
    let mut m = SeriesMatrix::identity(n);
    match f.kind {
        JacobiKind::Lower => m.set(f.index + 1, f.index, f.value.clone()),
        JacobiKind::Upper => m.set(f.index, f.index + 1, f.value.clone()),
        JacobiKind::Diag => m.set(f.index, f.index, f.value.clone()),
    }
    Ok(m)
}

/// Left-to-right max-plus product of the factor matrices; the empty
/// sequence is the tropical identity.
pub fn multiply_factors(factors: &[JacobiFactor], n: usize) -> Result<TropMatrix> {
    let mut acc = TropMatrix::identity(n);
    for f in factors {
        acc = acc.matmul(&jacobi_to_matrix(f, n)?)?;
    }
    Ok(acc)
}

/// Left-to-right product over the series field.
pub fn multiply_series_factors(factors: &[SeriesJacobiFactor], n: usize) -> Result<SeriesMatrix> {
    let mut acc = SeriesMatrix::identity(n);
    for f in factors {
        acc = acc.matmul(&series_jacobi_to_matrix(f, n)?)?;
    }
    Ok(acc)
}

/// Neville elimination of the subdiagonal, bottom-up within each column.
/// Returns the recorded lower factors (in product order) and the remaining
/// upper-triangular matrix, so `input = factors * remainder`.
///
/// For an invertible totally nonnegative input the multipliers are
/// nonnegative and no row exchange is ever needed; either failing proves
/// the precondition false.
fn eliminate_lower(w: &mut SeriesMatrix) -> Result<Vec<(usize, SeriesRat)>> {
    let n = w.rows();
    let mut factors = Vec::new();
    for col in 0..n.saturating_sub(1) {
        for row in (col + 1..n).rev() {
            if w.get(row, col).is_zero() {
                continue;
            }
            if w.get(row - 1, col).is_zero() {
                return Err(Error::NotTn(
                    "Neville elimination requires a row exchange".into(),
                ));
            }
            let g = w.get(row, col).checked_div(w.get(row - 1, col))?;
            if g.is_negative() {
                return Err(Error::NotTn(format!(
                    "negative Neville multiplier at ({}, {})",
                    row + 1,
                    col + 1
                )));
            }
            for j in col..n {
                let updated = w.get(row, j) - &(&g * w.get(row - 1, j));
                w.set(row, j, updated);
            }
            factors.push((row, g));
        }
    }
    Ok(factors)
}

/// Exact Neville elimination of an invertible totally nonnegative matrix
/// over the series field into elementary Jacobi factors: lower factors,
/// then the pivot diagonal, then upper factors.  Total nonnegativity and
/// invertibility are certified during elimination (nonnegative
/// multipliers, no exchanges, positive pivots).
pub fn neville_eliminate(m: &SeriesMatrix) -> Result<Vec<SeriesJacobiFactor>> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "Neville elimination of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let mut work = m.clone();
    let lower = eliminate_lower(&mut work)?;

    // the same sweep on the transpose clears the superdiagonal part
    let mut upper_t = work.transpose();
    let upper = eliminate_lower(&mut upper_t)?;
    let diag_matrix = upper_t.transpose();

    for i in 0..n {
        for j in 0..n {
            if i != j {
                debug_assert!(diag_matrix.get(i, j).is_zero());
            }
        }
    }
    let mut factors: Vec<SeriesJacobiFactor> = lower
        .into_iter()
        .map(|(row, g)| SeriesJacobiFactor {
            kind: JacobiKind::Lower,
            index: row - 1,
            value: g,
        })
        .collect();
    for i in 0..n {
        let d = diag_matrix.get(i, i).clone();
        if d.is_zero() {
            return Err(Error::NotInvertible);
        }
        if d.is_negative() {
            return Err(Error::NotTn(format!("pivot {} is negative", i + 1)));
        }
        if d != SeriesRat::one() {
            factors.push(SeriesJacobiFactor {
                kind: JacobiKind::Diag,
                index: i,
                value: d,
            });
        }
    }
    // transposed lower factors become upper factors, in reverse order
    for (row, g) in upper.into_iter().rev() {
        factors.push(SeriesJacobiFactor {
            kind: JacobiKind::Upper,
            index: row - 1,
            value: g,
        });
    }
    Ok(factors)
}

/// Factors a tropical totally nonnegative matrix with finite permanent
/// into tropical Jacobi factors whose max-plus product is exactly the
/// input.
///
/// Pipeline: Hadamard lift with Vandermonde coefficients (invertible and
/// totally nonnegative over the series field), exact Neville elimination
/// there, entrywise valuation of each factor, then verification of the
/// tropical product.  Factors that valuate to the tropical identity are
/// dropped.
pub fn factor_tn(a: &TropMatrix) -> Result<Vec<JacobiFactor>> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "Jacobi factorization of a {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    if !is_tn_trop(a).tn_trop {
        return Err(Error::NotTn(
            "input is not tropical totally nonnegative".into(),
        ));
    }
    if permanent_assignment(a)?.is_neg_inf() {
        return Err(Error::SingularPermanent);
    }
    let lift = hadamard_vandermonde_lift(a);
    let series_factors = neville_eliminate(&lift)?;

    let mut factors = Vec::new();
    for f in &series_factors {
        match f.value.valuation() {
            TropScalar::NegInf => unreachable!("zero factors are never recorded"),
            TropScalar::Finite(v) => {
                let identity = match f.kind {
                    // a zero tropical parameter on the diagonal is the identity
                    JacobiKind::Diag => v == Rat::from_integer(0.into()),
                    _ => false,
                };
                if !identity {
                    factors.push(JacobiFactor {
                        kind: f.kind,
                        index: f.index,
                        value: v,
                    });
                }
            }
        }
    }

    if multiply_factors(&factors, a.rows())? != *a {
        return Err(Error::FactorizationMismatch);
    }
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;
    use crate::samples::{rand_jacobi_factors, rand_monge, rand_tn_finite_per};
    use crate::series::canonical_lift;
    use rand::{Rng, SeedableRng};

    fn fin(v: i64) -> TropScalar {
        TropScalar::from_int(v)
    }

    fn ninf() -> TropScalar {
        TropScalar::NegInf
    }

    fn mat(rows: Vec<Vec<TropScalar>>) -> TropMatrix {
        TropMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn factor_matrices() {
        let d = JacobiFactor {
            kind: JacobiKind::Diag,
            index: 0,
            value: rat_int(3),
        };
        assert_eq!(
            jacobi_to_matrix(&d, 2).unwrap(),
            mat(vec![vec![fin(3), ninf()], vec![ninf(), fin(0)]])
        );
        let l = JacobiFactor {
            kind: JacobiKind::Lower,
            index: 0,
            value: rat_int(0),
        };
        assert_eq!(
            jacobi_to_matrix(&l, 2).unwrap(),
            mat(vec![vec![fin(0), ninf()], vec![fin(0), fin(0)]])
        );
        let u = JacobiFactor {
            kind: JacobiKind::Upper,
            index: 0,
            value: rat_int(-1),
        };
        assert_eq!(
            jacobi_to_matrix(&u, 2).unwrap(),
            mat(vec![vec![fin(0), fin(-1)], vec![ninf(), fin(0)]])
        );
        assert!(jacobi_to_matrix(&u, 1).is_err());
    }

    #[test]
    fn empty_product_is_identity_and_zero_factors_flatten() {
        assert_eq!(multiply_factors(&[], 3).unwrap(), TropMatrix::identity(3));
        let zeros = [
            JacobiFactor { kind: JacobiKind::Lower, index: 0, value: rat_int(0) },
            JacobiFactor { kind: JacobiKind::Upper, index: 0, value: rat_int(0) },
            JacobiFactor { kind: JacobiKind::Diag, index: 0, value: rat_int(0) },
            JacobiFactor { kind: JacobiKind::Diag, index: 1, value: rat_int(0) },
        ];
        assert_eq!(
            multiply_factors(&zeros, 2).unwrap(),
            mat(vec![vec![fin(0), fin(0)], vec![fin(0), fin(0)]])
        );
    }

    #[test]
    fn neville_elimination_of_constant_example() {
        let m = SeriesMatrix::from_rows(vec![
            vec!["1".parse().unwrap(), "1".parse().unwrap()],
            vec!["1".parse().unwrap(), "2".parse().unwrap()],
        ])
        .unwrap();
        let factors = neville_eliminate(&m).unwrap();
        // L(1) with multiplier 1, then U(1) with multiplier 1; unit pivots
        assert_eq!(factors.len(), 2);
        assert_eq!(factors[0].kind, JacobiKind::Lower);
        assert_eq!(factors[0].value, SeriesRat::one());
        assert_eq!(factors[1].kind, JacobiKind::Upper);
        assert_eq!(factors[1].value, SeriesRat::one());
        assert_eq!(multiply_series_factors(&factors, 2).unwrap(), m);

        assert!(neville_eliminate(&SeriesMatrix::identity(3))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn neville_elimination_of_canonical_lift() {
        let a = mat(vec![vec![fin(2), fin(1)], vec![fin(1), fin(2)]]);
        let lift = canonical_lift(&a);
        let factors = neville_eliminate(&lift).unwrap();
        assert_eq!(multiply_series_factors(&factors, 2).unwrap(), lift);
        assert!(factors
            .iter()
            .all(|f| f.value.is_positive() || f.value.is_zero()));
    }

    #[test]
    fn neville_elimination_rejects_bad_inputs() {
        let not_tn = SeriesMatrix::from_rows(vec![
            vec!["1".parse().unwrap(), "2".parse().unwrap()],
            vec!["2".parse().unwrap(), "1".parse().unwrap()],
        ])
        .unwrap();
        assert!(matches!(neville_eliminate(&not_tn), Err(Error::NotTn(_))));

        let singular = SeriesMatrix::from_rows(vec![
            vec!["1".parse().unwrap(), "1".parse().unwrap()],
            vec!["1".parse().unwrap(), "1".parse().unwrap()],
        ])
        .unwrap();
        assert!(matches!(
            neville_eliminate(&singular),
            Err(Error::NotInvertible)
        ));
    }

    #[test]
    fn factor_tn_worked_example() {
        let a = mat(vec![vec![fin(2), fin(1)], vec![fin(1), fin(2)]]);
        let factors = factor_tn(&a).unwrap();
        let kinds: Vec<JacobiKind> = factors.iter().map(|f| f.kind).collect();
        assert_eq!(
            kinds,
            vec![
                JacobiKind::Lower,
                JacobiKind::Diag,
                JacobiKind::Diag,
                JacobiKind::Upper
            ]
        );
        assert_eq!(multiply_factors(&factors, 2).unwrap(), a);
    }

    #[test]
    fn factor_tn_identity_and_band_matrix() {
        assert!(factor_tn(&TropMatrix::identity(3)).unwrap().is_empty());

        let band = mat(vec![
            vec![fin(0), fin(0), ninf()],
            vec![fin(0), fin(0), fin(0)],
            vec![ninf(), fin(0), fin(0)],
        ]);
        let factors = factor_tn(&band).unwrap();
        assert_eq!(multiply_factors(&factors, 3).unwrap(), band);
    }

    #[test]
    fn factor_tn_rejections() {
        let not_tn = mat(vec![vec![fin(0), fin(1)], vec![fin(1), fin(0)]]);
        assert!(matches!(factor_tn(&not_tn), Err(Error::NotTn(_))));

        let singular = mat(vec![vec![fin(0), ninf()], vec![ninf(), ninf()]]);
        assert!(is_tn_trop(&singular).tn_trop);
        assert!(matches!(
            factor_tn(&singular),
            Err(Error::SingularPermanent)
        ));
    }

    #[test]
    fn round_trip_on_random_inputs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(67);
        for trial in 0..150 {
            let n = rng.gen_range(1..=4);
            let a = rand_tn_finite_per(&mut rng, n);
            let factors = factor_tn(&a).expect("factorization succeeds");
            assert_eq!(
                multiply_factors(&factors, n).unwrap(),
                a,
                "trial {trial}\n{a}"
            );
            for f in &factors {
                assert!(jacobi_to_matrix(f, n).is_ok());
            }
        }
    }

    #[test]
    fn semigroup_closure_and_finite_stratum() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(73);
        for _ in 0..80 {
            let n = rng.gen_range(2..=4);
            let a = rand_tn_finite_per(&mut rng, n);
            let b = rand_tn_finite_per(&mut rng, n);
            let prod = a.matmul(&b).unwrap();
            assert!(is_tn_trop(&prod).tn_trop, "{a}\n{b}\n{prod}");
            assert!(permanent_assignment(&prod).unwrap().is_finite());

            // finite products of Jacobi factors are Monge when finite
            let factors = rand_jacobi_factors(&mut rng, n, rng.gen_range(0..=6));
            let m = multiply_factors(&factors, n).unwrap();
            if m.is_finite() {
                assert!(is_tn_trop(&m).tn_trop);
            }
            // and every finite Monge matrix factors
            let monge = rand_monge(&mut rng, n, n);
            assert!(factor_tn(&monge).is_ok());
        }
    }
}
