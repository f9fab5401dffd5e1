//! The max-plus semiring, matrices over it, tropical permanents,
//! minor sign-classification and cycle-mean primitives.

mod cycles;
mod matrix;
mod permanent;
mod scalar;

pub use cycles::{is_diag_dominant, max_cycle_mean};
pub use matrix::TropMatrix;
pub use permanent::{
    classify_minor, permanent_assignment, permanent_bruteforce, MinorClass, MinorTag, Parity,
    PermanentExpansion, DEFAULT_ENUM_CAP,
};
pub use scalar::TropScalar;
