//! Exact arithmetic in the nonarchimedean field of generalized Puiseux
//! series, realized as the quotient field of generalized polynomials in `t`
//! with rational coefficients and rational exponents, together with
//! matrices, determinants, lifts and total-nonnegativity tests over it.
//!
//! Every operation the toolkit needs (determinants, Neville elimination,
//! characteristic polynomials of monomial-entry lifts) stays inside this
//! subfield, so arithmetic is exact and order comparisons are decidable.

mod classes;
mod genpoly;
mod lift;
mod matrix;
mod seriesrat;

pub use classes::{is_tn2c, is_tn_series};
pub use genpoly::GenPoly;
pub use lift::{
    canonical_lift, hadamard_lift, hadamard_vandermonde_lift, random_positive_lift, tn2c_constant,
    vandermonde_tp2c, vandermonde_with_ratio,
};
pub use matrix::{det_series, SeriesMatrix};
pub use seriesrat::{SeriesRat, Sign};
