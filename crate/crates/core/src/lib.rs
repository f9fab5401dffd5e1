//! Exact linear algebra over the max-plus (tropical) semiring and over the
//! field of generalized Puiseux series, centered on total positivity.
//!
//! The toolkit decides membership in the tropical totally positive and
//! totally nonnegative matrix classes, factors such matrices into elementary
//! Jacobi factors, lifts them to an exact nonarchimedean series field, and
//! computes tropical characteristic polynomials, eigenvalues, Pluecker
//! vectors and planar-network weight matrices.  All arithmetic is exact:
//! scalars are arbitrary-precision rationals or minus infinity, series are
//! quotients of generalized polynomials with rational coefficients and
//! rational exponents.

pub mod error;
pub mod factorization;
pub mod grassmannian;
pub mod io;
pub mod monge;
pub mod network;
pub mod positivity;
pub mod rational;
pub mod samples;
pub mod series;
pub mod spectral;
pub mod subsets;
pub mod trop;
pub mod verify;

pub use error::{Error, Result};
pub use rational::Rat;
pub use trop::{TropMatrix, TropScalar, DEFAULT_ENUM_CAP};
