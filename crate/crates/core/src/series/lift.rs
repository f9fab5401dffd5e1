//! Lifts of tropical matrices into the series field: canonical monomial
//! lifts, Hadamard lifts, and the Vandermonde coefficient matrices whose
//! 2x2 minor ratios dominate a prescribed constant.

use rand::Rng;

use crate::error::{Error, Result};
use crate::rational::{rat_int, Rat};
use crate::series::matrix::SeriesMatrix;
use crate::series::seriesrat::SeriesRat;
use crate::trop::{TropMatrix, TropScalar};

/// The canonical lift `t^(A_ij)`, sending `-inf` to `0`.
pub fn canonical_lift(a: &TropMatrix) -> SeriesMatrix {
    SeriesMatrix::from_fn(a.rows(), a.cols(), |i, j| match a.get(i, j) {
        TropScalar::NegInf => SeriesRat::zero(),
        TropScalar::Finite(e) => SeriesRat::t_pow(e.clone()),
    })
}

/// The Hadamard (entrywise) product `B * t^A`.
pub fn hadamard_lift(a: &TropMatrix, b: &SeriesMatrix) -> Result<SeriesMatrix> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(Error::Dimension(format!(
            "Hadamard product of {}x{} and {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    Ok(SeriesMatrix::from_fn(a.rows(), a.cols(), |i, j| {
        match a.get(i, j) {
            TropScalar::NegInf => SeriesRat::zero(),
            TropScalar::Finite(e) => b.get(i, j) * &SeriesRat::t_pow(e.clone()),
        }
    }))
}

fn rat_upow(base: &Rat, k: usize) -> Rat {
    let mut acc = rat_int(1);
    for _ in 0..k {
        acc *= base;
    }
    acc
}

/// Vandermonde matrix `V_ij = lambda_i^(j-1)` with `lambda_{i+1}/lambda_i`
/// equal to the given ratio; every 2x2 minor ratio is a positive power of
/// the ratio.
pub fn vandermonde_with_ratio(n: usize, m: usize, ratio: &Rat) -> SeriesMatrix {
    SeriesMatrix::from_fn(n, m, |i, j| SeriesRat::constant(rat_upow(ratio, i * j)))
}

/// A real (degree-0) `n x m` matrix whose 2x2 minor ratios all strictly
/// exceed `C`; the default geometric base is `C + 1` (any ratio above `C`
/// works).
pub fn vandermonde_tp2c(n: usize, m: usize, c: &Rat) -> SeriesMatrix {
    vandermonde_with_ratio(n, m, &(c + rat_int(1)))
}

/// The minor-ratio constant that makes 2x2 control imply full total
/// nonnegativity at the given shape: `max(1, (max(n, m) - 1)^2)`.
pub fn tn2c_constant(n: usize, m: usize) -> Rat {
    let d = n.max(m).saturating_sub(1) as i64;
    rat_int((d * d).max(1))
}

/// Hadamard lift against the Vandermonde matrix with constant
/// `tn2c_constant`: lands in TN over the series field for every tropical
/// totally nonnegative input, and in TP when the input is in addition
/// finite.
pub fn hadamard_vandermonde_lift(a: &TropMatrix) -> SeriesMatrix {
    let b = vandermonde_tp2c(a.rows(), a.cols(), &tn2c_constant(a.rows(), a.cols()));
    hadamard_lift(a, &b).expect("shapes match by construction")
}

/// A lift `b_ij * t^(A_ij)` with coefficients drawn from small positive
/// rationals; every coefficient has valuation 0, so the result is a lift
/// of `A`.
pub fn random_positive_lift(a: &TropMatrix, rng: &mut impl Rng) -> SeriesMatrix {
    let b = SeriesMatrix::from_fn(a.rows(), a.cols(), |_, _| {
        SeriesRat::constant(Rat::new(
            rng.gen_range(1..=9).into(),
            rng.gen_range(1..=9).into(),
        ))
    });
    hadamard_lift(a, &b).expect("shapes match by construction")
}
